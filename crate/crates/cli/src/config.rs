//! Optional TOML configuration. Every value a flag can set may also come
//! from a config file; flags win, the file fills gaps, built-in defaults
//! cover the rest.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Deserialize;
use smellwatt::detector::RuleConfig;
use smellwatt::predictor::{GaConfig, TrainingConfig};

pub const CONFIG_ENV_VAR: &str = "SMELLWATT_CONFIG";

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub detect: DetectSection,
    pub profile: ProfileSection,
    pub bench: BenchSection,
    pub additivity: AdditivitySection,
    pub train: TrainSection,
    pub predict: PredictSection,
    pub evaluate: EvaluateSection,
    pub plan: PlanSection,
    pub report: ReportSection,
    /// Detector thresholds; unset fields keep their defaults.
    pub rules: Option<RuleConfig>,
    pub training: Option<TrainingConfig>,
    pub ga: Option<GaConfig>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DetectSection {
    pub path: Vec<PathBuf>,
    pub lang: Option<String>,
    pub emit: Option<String>,
    pub category: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ProfileSection {
    pub cmd: Option<String>,
    pub interval_ms: Option<u64>,
    pub reps: Option<usize>,
    pub duration: Option<f64>,
    pub warmup: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BenchSection {
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AdditivitySection {
    pub individual: Option<PathBuf>,
    pub batches: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrainSection {
    pub model: Option<String>,
    pub dataset: Option<PathBuf>,
    pub target: Option<String>,
    pub features: Option<Vec<String>>,
    pub ga_select: Option<bool>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PredictSection {
    pub model: Option<PathBuf>,
    pub features: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EvaluateSection {
    pub model: Option<PathBuf>,
    pub dataset: Option<PathBuf>,
    pub target: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PlanSection {
    pub inventory: Option<PathBuf>,
    pub objective: Option<String>,
    pub budget: Option<f64>,
    pub dataset: Option<PathBuf>,
    pub category: Option<String>,
    pub model: Option<PathBuf>,
    pub features: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReportSection {
    pub input: Option<PathBuf>,
    pub input_type: Option<String>,
}

/// Loads the config named on the command line, else the one named by
/// `SMELLWATT_CONFIG`, else an empty default.
pub fn load(cli_path: Option<&Path>) -> Result<FileConfig> {
    let path = match cli_path {
        Some(p) => Some(p.to_path_buf()),
        None => std::env::var_os(CONFIG_ENV_VAR).map(PathBuf::from),
    };
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(&path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("invalid config file {}", path.display()))
}

/// Flag value if given, else the config-file value.
pub fn pick<T>(cli: Option<T>, file: Option<T>) -> Option<T> {
    cli.or(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_string_is_all_defaults() {
        let cfg: FileConfig = toml::from_str("").unwrap();
        assert!(cfg.seed.is_none());
        assert!(cfg.detect.path.is_empty());
        assert!(cfg.rules.is_none());
    }

    #[test]
    fn sections_parse_and_unknown_keys_are_rejected() {
        let cfg: FileConfig = toml::from_str(
            r#"
seed = 42
format = "markdown"

[profile]
cmd = "sleep 1"
reps = 3

[plan]
objective = "cpu-only"
budget = 10.0

[rules]
god_method_min_nloc = 60

[training.ann]
epochs = 500
"#,
        )
        .unwrap();
        assert_eq!(cfg.seed, Some(42));
        assert_eq!(cfg.profile.reps, Some(3));
        assert_eq!(cfg.plan.budget, Some(10.0));
        assert_eq!(cfg.rules.as_ref().unwrap().god_method_min_nloc, 60);
        assert_eq!(cfg.training.as_ref().unwrap().ann.epochs, 500);

        let err = toml::from_str::<FileConfig>("[profile]\nrepz = 3\n").unwrap_err();
        assert!(err.to_string().contains("repz"), "{err}");
    }

    #[test]
    fn pick_prefers_the_flag() {
        assert_eq!(pick(Some(1), Some(2)), Some(1));
        assert_eq!(pick(None, Some(2)), Some(2));
        assert_eq!(pick::<u64>(None, None), None);
    }
}
