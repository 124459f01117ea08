//! Process-level CPU/memory profiling.
//!
//! A subject command is launched fresh for every repetition, pinned to one
//! logical CPU where the platform allows it, and sampled from `/proc` at a
//! fixed interval. CPU% is measured against a single core (consistent with
//! the pinning), resident memory comes from `statm`. Aggregation is two
//! stage: per-run means first, then mean and population standard deviation
//! across runs, so the repetition count is the sample size.
//!
//! Sign convention everywhere downstream: a positive relative change means
//! the resource went DOWN after refactoring (an improvement).

use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProfilerError {
    #[error("cannot launch `{command}`: {reason}")]
    LaunchError { command: String, reason: String },
    #[error("invalid run spec: {0}")]
    BadSpec(String),
    #[error("no runs to summarize")]
    NoRuns,
    #[error("baseline mean is zero; relative change undefined")]
    DegenerateBaseline,
    #[error("zero instances; per-instance normalization undefined")]
    NoInstances,
}

/// How to execute and sample one subject.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunSpec {
    /// Subject argv (program first).
    pub command: Vec<String>,
    /// Extra argv appended to the command (the workload).
    pub workload_args: Vec<String>,
    /// Hard stop, seconds; the subject is killed past this point.
    pub duration_limit: f64,
    pub sample_interval_ms: u64,
    /// Samples earlier than this many seconds are dropped.
    pub warmup_discard: f64,
    pub repetitions: usize,
}

impl RunSpec {
    pub fn new(command: Vec<String>) -> Self {
        RunSpec {
            command,
            workload_args: Vec::new(),
            duration_limit: 30.0,
            sample_interval_ms: 10,
            warmup_discard: 1.0,
            repetitions: 7,
        }
    }

    pub fn validate(&self) -> Result<(), ProfilerError> {
        if self.command.is_empty() {
            return Err(ProfilerError::BadSpec("command must not be empty".into()));
        }
        if self.sample_interval_ms == 0 {
            return Err(ProfilerError::BadSpec("sample_interval_ms must be positive".into()));
        }
        if self.repetitions == 0 {
            return Err(ProfilerError::BadSpec("repetitions must be at least 1".into()));
        }
        if !(self.duration_limit > self.warmup_discard) {
            return Err(ProfilerError::BadSpec(
                "duration_limit must exceed warmup_discard".into(),
            ));
        }
        Ok(())
    }

    fn display_id(&self) -> String {
        self.command
            .iter()
            .chain(self.workload_args.iter())
            .cloned()
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// One sample of the subject's resource usage.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResourceSample {
    /// Milliseconds since subject start; strictly increasing within a series.
    pub t_ms: u64,
    /// Percent of one core over the last sampling interval.
    pub cpu_pct: f64,
    pub rss_bytes: u64,
}

/// All samples from one subject execution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunSeries {
    pub spec_id: String,
    pub samples: Vec<ResourceSample>,
    /// Exit code; -1 when the subject was killed or died on a signal.
    pub exit_status: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementSummary {
    pub mean_cpu_pct: f64,
    /// Population standard deviation over per-run means.
    pub std_cpu_pct: f64,
    pub mean_mem_bytes: f64,
    pub std_mem_bytes: f64,
    pub run_count: usize,
}

/// Relative before/after change in percent; positive = improvement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub dcpu_pct: f64,
    pub dmem_pct: f64,
}

/// A delta divided by how many smell instances produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerSmellImpact {
    pub dcpu_per_instance: f64,
    pub dmem_per_instance: f64,
}

fn pin_to_cpu(cpu: usize) -> std::io::Result<()> {
    unsafe {
        let mut set: libc::cpu_set_t = std::mem::zeroed();
        libc::CPU_ZERO(&mut set);
        libc::CPU_SET(cpu, &mut set);
        if libc::sched_setaffinity(0, std::mem::size_of::<libc::cpu_set_t>(), &set) != 0 {
            return Err(std::io::Error::last_os_error());
        }
    }
    Ok(())
}

/// (cumulative cpu ticks, resident pages) for `pid`, None once it is gone.
fn read_proc(pid: u32) -> Option<(u64, u64)> {
    let stat = std::fs::read_to_string(format!("/proc/{pid}/stat")).ok()?;
    // the comm field is parenthesized and may contain spaces: split after it
    let rest = &stat[stat.rfind(')')? + 2..];
    let fields: Vec<&str> = rest.split_whitespace().collect();
    // fields[0] is state (overall field 3); utime/stime are fields 14/15
    let utime: u64 = fields.get(11)?.parse().ok()?;
    let stime: u64 = fields.get(12)?.parse().ok()?;
    let statm = std::fs::read_to_string(format!("/proc/{pid}/statm")).ok()?;
    let resident: u64 = statm.split_whitespace().nth(1)?.parse().ok()?;
    Some((utime + stime, resident))
}

/// Launches the subject once and samples it until exit or the duration
/// limit. The subject is pinned to CPU 0 when the platform supports it.
pub fn run_measurement(spec: &RunSpec) -> Result<RunSeries, ProfilerError> {
    spec.validate()?;
    let clk_tck = unsafe { libc::sysconf(libc::_SC_CLK_TCK) }.max(1) as f64;
    let page_size = unsafe { libc::sysconf(libc::_SC_PAGESIZE) }.max(1) as u64;

    let mut cmd = Command::new(&spec.command[0]);
    cmd.args(&spec.command[1..])
        .args(&spec.workload_args)
        .stdin(Stdio::null())
        .stdout(Stdio::null())
        .stderr(Stdio::null());
    #[cfg(unix)]
    unsafe {
        use std::os::unix::process::CommandExt;
        cmd.pre_exec(|| {
            let _ = pin_to_cpu(0); // best effort
            Ok(())
        });
    }
    let mut child = cmd.spawn().map_err(|e| ProfilerError::LaunchError {
        command: spec.command.join(" "),
        reason: e.to_string(),
    })?;
    let pid = child.id();
    let start = Instant::now();
    let interval = Duration::from_millis(spec.sample_interval_ms);

    let mut samples: Vec<ResourceSample> = Vec::new();
    let mut prev = read_proc(pid).map(|(ticks, _)| (ticks, start));
    let mut next_sample = start + interval;

    let exit_status = loop {
        if let Ok(Some(status)) = child.try_wait() {
            break status.code().unwrap_or(-1);
        }
        if start.elapsed().as_secs_f64() >= spec.duration_limit {
            let _ = child.kill();
            let _ = child.wait();
            break -1;
        }
        let now = Instant::now();
        if now < next_sample {
            std::thread::sleep(next_sample - now);
        }
        next_sample += interval;
        let Some((ticks, pages)) = read_proc(pid) else {
            continue; // exited between checks; the next try_wait reaps it
        };
        if pages == 0 {
            continue; // zombie: the process is gone, only the entry remains
        }
        let now = Instant::now();
        let cpu_pct = match prev {
            Some((prev_ticks, prev_t)) => {
                let dt = now.duration_since(prev_t).as_secs_f64();
                if dt > 0.0 {
                    (ticks.saturating_sub(prev_ticks) as f64 / clk_tck) / dt * 100.0
                } else {
                    0.0
                }
            }
            None => 0.0,
        };
        prev = Some((ticks, now));
        let mut t_ms = now.duration_since(start).as_millis() as u64;
        if let Some(last) = samples.last() {
            t_ms = t_ms.max(last.t_ms + 1); // keep timestamps strictly increasing
        }
        samples.push(ResourceSample { t_ms, cpu_pct, rss_bytes: pages * page_size });
    };

    let cutoff_ms = (spec.warmup_discard * 1000.0) as u64;
    samples.retain(|s| s.t_ms >= cutoff_ms);
    Ok(RunSeries { spec_id: spec.display_id(), samples, exit_status })
}

/// Runs the subject `spec.repetitions` times, a fresh process each time.
/// Runs are sequential; results of one run are never reused for another.
pub fn measure_repetitions(spec: &RunSpec) -> Result<Vec<RunSeries>, ProfilerError> {
    spec.validate()?;
    (1..=spec.repetitions)
        .map(|rep| {
            run_measurement(spec).map(|mut series| {
                series.spec_id = format!("{}#{rep}", series.spec_id);
                series
            })
        })
        .collect()
}

fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut n) = (0.0, 0usize);
    for v in values {
        sum += v;
        n += 1;
    }
    if n == 0 {
        0.0
    } else {
        sum / n as f64
    }
}

fn population_std(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let mu = mean(values.iter().copied());
    (values.iter().map(|v| (v - mu).powi(2)).sum::<f64>() / values.len() as f64).sqrt()
}

/// Aggregates repeated runs: per-run means first, then mean and population
/// standard deviation across runs. A run with no samples contributes zeros.
/// Per-run means are sorted before accumulation, so the summary is
/// byte-identical no matter how the runs are ordered.
pub fn summarize(series: &[RunSeries]) -> Result<MeasurementSummary, ProfilerError> {
    if series.is_empty() {
        return Err(ProfilerError::NoRuns);
    }
    let mut cpu_means: Vec<f64> = series
        .iter()
        .map(|s| mean(s.samples.iter().map(|x| x.cpu_pct)))
        .collect();
    let mut mem_means: Vec<f64> = series
        .iter()
        .map(|s| mean(s.samples.iter().map(|x| x.rss_bytes as f64)))
        .collect();
    cpu_means.sort_by(f64::total_cmp);
    mem_means.sort_by(f64::total_cmp);
    Ok(MeasurementSummary {
        mean_cpu_pct: mean(cpu_means.iter().copied()),
        std_cpu_pct: population_std(&cpu_means),
        mean_mem_bytes: mean(mem_means.iter().copied()),
        std_mem_bytes: population_std(&mem_means),
        run_count: series.len(),
    })
}

/// dX = 100 × (before − after) / before, so positive = the resource shrank.
pub fn relative_change(
    before: &MeasurementSummary,
    after: &MeasurementSummary,
) -> Result<DeltaReport, ProfilerError> {
    if before.mean_cpu_pct == 0.0 || before.mean_mem_bytes == 0.0 {
        return Err(ProfilerError::DegenerateBaseline);
    }
    Ok(DeltaReport {
        dcpu_pct: 100.0 * (before.mean_cpu_pct - after.mean_cpu_pct) / before.mean_cpu_pct,
        dmem_pct: 100.0 * (before.mean_mem_bytes - after.mean_mem_bytes) / before.mean_mem_bytes,
    })
}

/// Component-wise division of a delta by the number of smell instances.
pub fn normalize_per_instance(
    delta: &DeltaReport,
    instance_count: usize,
) -> Result<PerSmellImpact, ProfilerError> {
    if instance_count == 0 {
        return Err(ProfilerError::NoInstances);
    }
    Ok(PerSmellImpact {
        dcpu_per_instance: delta.dcpu_pct / instance_count as f64,
        dmem_per_instance: delta.dmem_pct / instance_count as f64,
    })
}
