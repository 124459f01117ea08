use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Code-smell detection, resource profiling, and batch-refactoring planning.
#[derive(Debug, Parser)]
#[command(name = "smellwatt", version, about)]
pub struct Cli {
    /// Path to a TOML config file (overrides SMELLWATT_CONFIG).
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Seed for every stochastic step (training, feature selection).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Write the primary output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Output format where a choice exists: json, markdown, csv-plotdata.
    #[arg(long, global = true)]
    pub format: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scan source trees and report smell instances as JSON.
    Detect(DetectArgs),
    /// Run a subject repeatedly, sampling CPU and memory.
    Profile(ProfileArgs),
    /// Run before/after measurement pairs and emit an impact CSV.
    Bench(BenchArgs),
    /// Compare observed batch impacts against summed individual impacts.
    Additivity(AdditivityArgs),
    /// Fit an impact model on a labeled dataset and save it as JSON.
    Train(TrainArgs),
    /// Predict per-app impact deltas from a saved model.
    Predict(PredictArgs),
    /// Score a saved model against a labeled holdout dataset.
    Evaluate(EvaluateArgs),
    /// Turn a smell inventory into an include/exclude refactoring plan.
    Plan(PlanArgs),
    /// Re-render a saved plan, impact dataset, or additivity report.
    Report(ReportArgs),
    /// Inspect the built-in smell catalog.
    Catalog(CatalogArgs),
    /// Calibration subject with a constructed resource profile.
    #[command(hide = true)]
    Subject(SubjectArgs),
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    /// File or directory to scan; repeatable.
    #[arg(long = "path", value_name = "PATH")]
    pub paths: Vec<PathBuf>,

    /// Source language: java or python.
    #[arg(long)]
    pub lang: Option<String>,

    /// What to emit: instances (default) or features.
    #[arg(long)]
    pub emit: Option<String>,

    /// Application category, required when emitting features.
    #[arg(long)]
    pub category: Option<String>,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    /// Subject command line, whitespace-split into argv.
    #[arg(long)]
    pub cmd: Option<String>,

    /// Sampling interval in milliseconds.
    #[arg(long)]
    pub interval_ms: Option<u64>,

    /// Number of repetitions to run and aggregate.
    #[arg(long)]
    pub reps: Option<usize>,

    /// Hard per-run duration limit in seconds.
    #[arg(long)]
    pub duration: Option<f64>,

    /// Discard samples earlier than this many seconds into each run.
    #[arg(long)]
    pub warmup: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// TOML manifest listing before/after measurement pairs.
    #[arg(long, value_name = "FILE")]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AdditivityArgs {
    /// Individual-impact CSV; defaults to the packaged reference dataset.
    #[arg(long, value_name = "FILE")]
    pub individual: Option<PathBuf>,

    /// Batch-impact CSV; defaults to the packaged reference dataset.
    #[arg(long, value_name = "FILE")]
    pub batches: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Model family: linear, polynomial, lasso, random-forest, or ann.
    #[arg(long)]
    pub model: Option<String>,

    /// Labeled training dataset (impact-prediction CSV).
    #[arg(long, value_name = "FILE")]
    pub dataset: Option<PathBuf>,

    /// Resource whose training error is reported: cpu or mem.
    #[arg(long)]
    pub target: Option<String>,

    /// Comma-separated feature names to train on (default: all).
    #[arg(long, value_delimiter = ',')]
    pub features: Option<Vec<String>>,

    /// Pick the feature subset by genetic search before training.
    #[arg(long)]
    pub ga_select: bool,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// Saved model JSON produced by `train`.
    #[arg(long, value_name = "FILE")]
    pub model: Option<PathBuf>,

    /// Feature-vector JSON for the application to predict.
    #[arg(long, value_name = "FILE")]
    pub features: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    /// Saved model JSON produced by `train`.
    #[arg(long, value_name = "FILE")]
    pub model: Option<PathBuf>,

    /// Labeled holdout dataset (impact-prediction CSV).
    #[arg(long, value_name = "FILE")]
    pub dataset: Option<PathBuf>,

    /// Resource to score: cpu or mem.
    #[arg(long)]
    pub target: Option<String>,
}

#[derive(Debug, Args)]
pub struct PlanArgs {
    /// Smell inventory JSON, as produced by `detect`.
    #[arg(long, value_name = "FILE")]
    pub inventory: Option<PathBuf>,

    /// minimize-both, cpu-only, memory-only, or maintainability-first.
    #[arg(long)]
    pub objective: Option<String>,

    /// Memory-worsening cap in percent; cpu-only objective only.
    #[arg(long)]
    pub budget: Option<f64>,

    /// Impact CSV supplying per-instance additive estimates.
    #[arg(long, value_name = "FILE")]
    pub dataset: Option<PathBuf>,

    /// Restrict additive estimates to this application category.
    #[arg(long)]
    pub category: Option<String>,

    /// Saved model JSON supplying whole-app estimates.
    #[arg(long, value_name = "FILE")]
    pub model: Option<PathBuf>,

    /// Baseline feature-vector JSON for the app; required with --model.
    #[arg(long, value_name = "FILE")]
    pub features: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// File to render.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// What the input holds: plan, dataset, or additivity.
    #[arg(long)]
    pub input_type: Option<String>,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[command(subcommand)]
    pub action: CatalogAction,
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Dump the 16-kind catalog (json or markdown).
    Export,
}

#[derive(Debug, Args)]
pub struct SubjectArgs {
    /// duty: spin/sleep at a fixed CPU duty cycle. alloc: hold memory.
    #[arg(long)]
    pub mode: String,

    /// Fraction of each period spent busy (duty mode).
    #[arg(long, default_value_t = 0.5)]
    pub duty: f64,

    /// Duty-cycle period in milliseconds.
    #[arg(long, default_value_t = 20)]
    pub period_ms: u64,

    /// Resident block size in MiB (alloc mode).
    #[arg(long, default_value_t = 100)]
    pub mib: usize,

    /// How long to run, in seconds.
    #[arg(long, default_value_t = 5.0)]
    pub duration: f64,
}
