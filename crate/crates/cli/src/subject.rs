//! Calibration subject: a process whose CPU and memory footprint is known
//! by construction, so the sampler can be checked against ground truth.

use std::hint::black_box;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};

use crate::args::SubjectArgs;

pub fn run(args: &SubjectArgs) -> Result<()> {
    if !args.duration.is_finite() || args.duration < 0.0 {
        bail!("--duration must be a non-negative number of seconds");
    }
    match args.mode.as_str() {
        "duty" => duty_cycle(args.duty, args.period_ms, args.duration),
        "alloc" => hold_memory(args.mib, args.duration),
        other => bail!("unknown subject mode `{other}` (expected duty or alloc)"),
    }
}

/// Spins for `duty` of every period and sleeps the rest. The schedule is
/// absolute — cycle boundaries are computed from the start instant — so
/// rounding never accumulates into drift over the run.
fn duty_cycle(duty: f64, period_ms: u64, duration_secs: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&duty) {
        bail!("--duty must be within [0, 1], got {duty}");
    }
    if period_ms == 0 {
        bail!("--period-ms must be positive");
    }
    let period = Duration::from_millis(period_ms);
    let start = Instant::now();
    let end = start + Duration::from_secs_f64(duration_secs);
    let mut cycle: u32 = 0;
    let mut sink: u64 = 0;
    while Instant::now() < end {
        let cycle_start = start + period * cycle;
        let busy_until = cycle_start + period.mul_f64(duty);
        while Instant::now() < busy_until {
            sink = black_box(sink.wrapping_mul(6364136223846793005).wrapping_add(1));
        }
        let next = cycle_start + period;
        let now = Instant::now();
        if next > now {
            std::thread::sleep(next - now);
        }
        cycle += 1;
    }
    black_box(sink);
    Ok(())
}

/// Allocates one block of `mib` MiB, touches every page so it is resident,
/// and idles until the duration elapses.
fn hold_memory(mib: usize, duration_secs: f64) -> Result<()> {
    const PAGE: usize = 4096;
    let bytes = mib
        .checked_mul(1024 * 1024)
        .ok_or_else(|| anyhow::anyhow!("--mib {mib} overflows"))?;
    let mut block = vec![0u8; bytes];
    for i in (0..block.len()).step_by(PAGE) {
        block[i] = 1;
    }
    let end = Instant::now() + Duration::from_secs_f64(duration_secs);
    while Instant::now() < end {
        std::thread::sleep(Duration::from_millis(25));
        black_box(block.as_ptr());
    }
    Ok(())
}
