//! Regression models over detector-derived features.
//!
//! A [`FeatureVector`] summarizes one application: how many instances of
//! each smell kind it has, how big it is, its mean class metrics, and its
//! category as a one-hot block. [`train`] fits one of five model families to
//! labeled examples — every family trains one head for the CPU delta and one
//! for the memory delta, independently, from the same features — and
//! [`TrainedModel::predict`] returns both deltas at once.
//!
//! Everything is deterministic: the only randomness is a caller-supplied
//! seed, expanded through a counter-based generator, so the same data,
//! config, and seed give bit-identical parameters and predictions.

mod ann;
mod forest;
mod ga;
mod linalg;
mod linear;

pub use ann::AnnConfig;
pub use forest::ForestConfig;
pub use ga::{cv_subset_fitness, ga_select, FeatureSubset, GaConfig};
pub use linear::LassoConfig;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::SmellKind;
use crate::detector::{MetricsTable, SmellInstance};
use crate::impact::AppCategory;

/// Which resource a series of numbers refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Resource {
    Cpu,
    Mem,
}

impl fmt::Display for Resource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Resource::Cpu => "cpu",
            Resource::Mem => "mem",
        })
    }
}

/// Error for a resource name other than `cpu`/`mem`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown resource `{0}` (expected cpu or mem)")]
pub struct UnknownResource(pub String);

impl FromStr for Resource {
    type Err = UnknownResource;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cpu" => Ok(Resource::Cpu),
            "mem" | "memory" => Ok(Resource::Mem),
            other => Err(UnknownResource(other.to_string())),
        }
    }
}

/// The five regression families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    Linear,
    Polynomial,
    Lasso,
    RandomForest,
    Ann,
}

impl ModelKind {
    pub const ALL: [ModelKind; 5] = [
        ModelKind::Linear,
        ModelKind::Polynomial,
        ModelKind::Lasso,
        ModelKind::RandomForest,
        ModelKind::Ann,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Linear => "linear",
            ModelKind::Polynomial => "polynomial",
            ModelKind::Lasso => "lasso",
            ModelKind::RandomForest => "random-forest",
            ModelKind::Ann => "ann",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for a model name outside the five families.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown model kind `{0}`")]
pub struct UnknownModelKind(pub String);

impl FromStr for ModelKind {
    type Err = UnknownModelKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelKind::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| UnknownModelKind(s.to_string()))
    }
}

/// Prefix of the one-hot category feature names.
const CATEGORY_PREFIX: &str = "category:";

/// One application's feature summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    /// Detected instances per kind; kinds absent from the map count zero.
    pub smell_counts: BTreeMap<SmellKind, u64>,
    /// Total non-comment lines across the corpus.
    pub loc: u64,
    /// Distinct source lines covered by at least one smell instance.
    pub smelly_loc: u64,
    pub wmc_mean: f64,
    pub fan_in_mean: f64,
    pub fan_out_mean: f64,
    pub category: AppCategory,
}

impl FeatureVector {
    /// A vector with all counts and metrics zero.
    pub fn empty(category: AppCategory) -> FeatureVector {
        FeatureVector {
            smell_counts: BTreeMap::new(),
            loc: 0,
            smelly_loc: 0,
            wmc_mean: 0.0,
            fan_in_mean: 0.0,
            fan_out_mean: 0.0,
            category,
        }
    }

    /// Canonical feature names: the sixteen kind counts, the five size and
    /// structure metrics, then the twelve category indicators.
    pub fn feature_names() -> Vec<String> {
        let mut names: Vec<String> = SmellKind::ALL.iter().map(|k| k.name().to_string()).collect();
        for metric in ["loc", "smelly_loc", "wmc_mean", "fan_in_mean", "fan_out_mean"] {
            names.push(metric.to_string());
        }
        for category in AppCategory::ALL {
            names.push(format!("{CATEGORY_PREFIX}{}", category.name()));
        }
        names
    }

    /// Value of one named feature, or `None` for a name outside the canon.
    pub fn get(&self, name: &str) -> Option<f64> {
        if let Ok(kind) = name.parse::<SmellKind>() {
            return Some(self.smell_counts.get(&kind).copied().unwrap_or(0) as f64);
        }
        match name {
            "loc" => return Some(self.loc as f64),
            "smelly_loc" => return Some(self.smelly_loc as f64),
            "wmc_mean" => return Some(self.wmc_mean),
            "fan_in_mean" => return Some(self.fan_in_mean),
            "fan_out_mean" => return Some(self.fan_out_mean),
            _ => {}
        }
        let category = name.strip_prefix(CATEGORY_PREFIX)?.parse::<AppCategory>().ok()?;
        Some(if category == self.category { 1.0 } else { 0.0 })
    }

    /// All canonical features as a dense row.
    pub fn to_dense(&self) -> Vec<f64> {
        Self::feature_names()
            .iter()
            .map(|name| self.get(name).expect("canonical name"))
            .collect()
    }
}

/// One application with its measured targets: per-instance-normalized CPU
/// and memory deltas.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledExample {
    pub app: String,
    pub features: FeatureVector,
    pub target_dcpu_pct: f64,
    pub target_dmem_pct: f64,
}

impl LabeledExample {
    fn target(&self, resource: Resource) -> f64 {
        match resource {
            Resource::Cpu => self.target_dcpu_pct,
            Resource::Mem => self.target_dmem_pct,
        }
    }
}

/// Summarizes detector output into a [`FeatureVector`]. A corpus with no
/// entities yields all-zero counts and metrics.
pub fn build_feature_vector(
    metrics: &MetricsTable,
    smells: &[SmellInstance],
    category: AppCategory,
) -> FeatureVector {
    let mut smell_counts: BTreeMap<SmellKind, u64> = BTreeMap::new();
    let mut covered: BTreeMap<&str, BTreeSet<usize>> = BTreeMap::new();
    for instance in smells {
        *smell_counts.entry(instance.kind).or_insert(0) += 1;
        let (start, end) = instance.line_span;
        covered
            .entry(instance.unit_path.as_str())
            .or_default()
            .extend(start..=end);
    }
    let smelly_loc = covered.values().map(|lines| lines.len() as u64).sum();
    let loc = metrics.unit_nloc.values().map(|n| *n as u64).sum();

    let class_mean = |f: &dyn Fn(&crate::detector::ClassMetrics) -> f64| {
        if metrics.classes.is_empty() {
            0.0
        } else {
            metrics.classes.values().map(|c| f(c)).sum::<f64>() / metrics.classes.len() as f64
        }
    };
    FeatureVector {
        smell_counts,
        loc,
        smelly_loc,
        wmc_mean: class_mean(&|c| c.wmc as f64),
        fan_in_mean: class_mean(&|c| c.fan_in as f64),
        fan_out_mean: class_mean(&|c| c.fan_out as f64),
        category,
    }
}

/// Errors from feature building, training, and evaluation.
#[derive(Debug, Error)]
pub enum PredictError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("CSV header mismatch: expected `{expected}`, found `{found}`")]
    SchemaMismatch { expected: String, found: String },
    /// `row` is the 1-based data-row index; the header is row 0.
    #[error("row {row}: {reason}")]
    Malformed { row: usize, reason: String },
    /// The design matrix has linearly dependent columns after
    /// standardization (note that the full one-hot category block plus an
    /// intercept is always dependent — select features first).
    #[error("design matrix is rank deficient")]
    RankDeficient,
    #[error("need at least {needed} examples, got {got}")]
    TooFewExamples { needed: usize, got: usize },
    #[error("example {index} has a non-finite target")]
    NonFiniteTarget { index: usize },
    #[error("feature `{name}` is not provided by the feature vector")]
    MissingFeature { name: String },
    #[error("length mismatch: {predictions} predictions vs {truths} truths")]
    LengthMismatch { predictions: usize, truths: usize },
    #[error("cannot evaluate an empty series")]
    EmptyEval,
    #[error("leave-one-out prediction needs at least two examples")]
    SingleExample,
    #[error("no candidate features")]
    NoFeatures,
    #[error("{folds}-fold cross-validation needs at least {folds} examples, got {examples}")]
    TooFewExamplesForCV { folds: usize, examples: usize },
    #[error("model produced a non-finite prediction")]
    NonFinitePrediction,
}

// --- Labeled-example CSV ------------------------------------------------------

/// Header of the labeled-example CSV: identity, the canonical feature
/// columns (minus the one-hot block, which the category column encodes),
/// and the two targets.
pub fn examples_csv_header() -> String {
    let mut columns = vec!["app".to_string(), "category".to_string()];
    columns.extend(SmellKind::ALL.iter().map(|k| k.name().to_string()));
    for metric in ["loc", "smelly_loc", "wmc_mean", "fan_in_mean", "fan_out_mean"] {
        columns.push(metric.to_string());
    }
    columns.push("target_dcpu_per_instance".to_string());
    columns.push("target_dmem_per_instance".to_string());
    columns.join(",")
}

/// Parses labeled-example CSV text.
pub fn parse_examples_csv(text: &str) -> Result<Vec<LabeledExample>, PredictError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| PredictError::Malformed {
            row: 0,
            reason: e.to_string(),
        })?
        .clone();
    let expected = examples_csv_header();
    let found = headers.iter().collect::<Vec<_>>().join(",");
    if found != expected {
        return Err(PredictError::SchemaMismatch { expected, found });
    }

    let mut examples = Vec::new();
    for (idx, result) in reader.records().enumerate() {
        let row = idx + 1;
        let malformed = |reason: String| PredictError::Malformed { row, reason };
        let record = result.map_err(|e| malformed(e.to_string()))?;
        let field = |i: usize| record.get(i).unwrap_or("");

        let app = field(0).to_string();
        let category = field(1)
            .parse::<AppCategory>()
            .map_err(|e| malformed(e.to_string()))?;
        let mut smell_counts = BTreeMap::new();
        for (offset, kind) in SmellKind::ALL.iter().enumerate() {
            let count: u64 = field(2 + offset)
                .parse()
                .map_err(|e| malformed(format!("bad count for {kind}: {e}")))?;
            smell_counts.insert(*kind, count);
        }
        let number = |i: usize, what: &str| -> Result<f64, PredictError> {
            let v: f64 = field(i)
                .parse()
                .map_err(|e| malformed(format!("bad {what}: {e}")))?;
            if !v.is_finite() {
                return Err(malformed(format!("non-finite {what}")));
            }
            Ok(v)
        };
        let loc: u64 = field(18)
            .parse()
            .map_err(|e| malformed(format!("bad loc: {e}")))?;
        let smelly_loc: u64 = field(19)
            .parse()
            .map_err(|e| malformed(format!("bad smelly_loc: {e}")))?;
        let wmc_mean = number(20, "wmc_mean")?;
        let fan_in_mean = number(21, "fan_in_mean")?;
        let fan_out_mean = number(22, "fan_out_mean")?;
        for (value, name) in [
            (wmc_mean, "wmc_mean"),
            (fan_in_mean, "fan_in_mean"),
            (fan_out_mean, "fan_out_mean"),
        ] {
            if value < 0.0 {
                return Err(malformed(format!("negative {name}")));
            }
        }
        examples.push(LabeledExample {
            app,
            features: FeatureVector {
                smell_counts,
                loc,
                smelly_loc,
                wmc_mean,
                fan_in_mean,
                fan_out_mean,
                category,
            },
            target_dcpu_pct: number(23, "target_dcpu_per_instance")?,
            target_dmem_pct: number(24, "target_dmem_per_instance")?,
        });
    }
    Ok(examples)
}

/// Reads and parses a labeled-example CSV file.
pub fn ingest_examples_csv(path: &Path) -> Result<Vec<LabeledExample>, PredictError> {
    let text = std::fs::read_to_string(path).map_err(|source| PredictError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_examples_csv(&text)
}

// --- Training ------------------------------------------------------------------

/// Hyperparameters for all five families; each sub-config has sensible
/// defaults, so `TrainingConfig::default()` is the reference configuration.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct TrainingConfig {
    pub lasso: LassoConfig,
    pub forest: ForestConfig,
    pub ann: AnnConfig,
}

/// Fitted parameters of one head (one resource).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
enum Params {
    Linear(linear::LinearParams),
    Polynomial(linear::PolyParams),
    Lasso(linear::LassoParams),
    RandomForest(forest::ForestParams),
    Ann(ann::AnnParams),
}

impl Params {
    fn predict(&self, row: &[f64]) -> f64 {
        match self {
            Params::Linear(p) => p.predict(row),
            Params::Polynomial(p) => p.predict(row),
            Params::Lasso(p) => p.predict(row),
            Params::RandomForest(p) => p.predict(row),
            Params::Ann(p) => p.predict(row),
        }
    }
}

/// Predicted per-instance-normalized deltas, positive = improvement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImpactPrediction {
    pub dcpu_pct: f64,
    pub dmem_pct: f64,
}

/// A fully trained model: one parameter set per resource, plus everything
/// needed to reproduce the fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainedModel {
    pub kind: ModelKind,
    /// Feature names the model consumes, in design-matrix column order.
    pub selected_features: Vec<String>,
    pub seed: u64,
    pub config: TrainingConfig,
    cpu: Params,
    mem: Params,
}

impl TrainedModel {
    /// Predicts both resource deltas for one feature vector.
    pub fn predict(&self, features: &FeatureVector) -> Result<ImpactPrediction, PredictError> {
        let row = design_row(features, &self.selected_features)?;
        let prediction = ImpactPrediction {
            dcpu_pct: self.cpu.predict(&row),
            dmem_pct: self.mem.predict(&row),
        };
        if !prediction.dcpu_pct.is_finite() || !prediction.dmem_pct.is_finite() {
            return Err(PredictError::NonFinitePrediction);
        }
        Ok(prediction)
    }
}

/// Free-function form of [`TrainedModel::predict`].
pub fn predict(
    model: &TrainedModel,
    features: &FeatureVector,
) -> Result<ImpactPrediction, PredictError> {
    model.predict(features)
}

fn design_row(features: &FeatureVector, names: &[String]) -> Result<Vec<f64>, PredictError> {
    names
        .iter()
        .map(|name| {
            features.get(name).ok_or_else(|| PredictError::MissingFeature {
                name: name.clone(),
            })
        })
        .collect()
}

/// Trains on the full canonical feature set.
///
/// Note that for the least-squares families this errors rank-deficient on
/// any dataset where every example has a category (the one-hot block sums
/// to the intercept); pick a feature subset first, e.g. with [`ga_select`].
pub fn train(
    data: &[LabeledExample],
    kind: ModelKind,
    config: &TrainingConfig,
    seed: u64,
) -> Result<TrainedModel, PredictError> {
    train_with_features(data, &FeatureVector::feature_names(), kind, config, seed)
}

/// Trains on an explicit feature subset. Both resource heads are fitted
/// independently; the result is a pure function of the arguments.
pub fn train_with_features(
    data: &[LabeledExample],
    features: &[String],
    kind: ModelKind,
    config: &TrainingConfig,
    seed: u64,
) -> Result<TrainedModel, PredictError> {
    if data.len() < 2 {
        return Err(PredictError::TooFewExamples {
            needed: 2,
            got: data.len(),
        });
    }
    if features.is_empty() {
        return Err(PredictError::NoFeatures);
    }
    for (index, example) in data.iter().enumerate() {
        if !example.target_dcpu_pct.is_finite() || !example.target_dmem_pct.is_finite() {
            return Err(PredictError::NonFiniteTarget { index });
        }
    }
    let rows: Vec<Vec<f64>> = data
        .iter()
        .map(|e| design_row(&e.features, features))
        .collect::<Result<_, _>>()?;
    let y_cpu: Vec<f64> = data.iter().map(|e| e.target_dcpu_pct).collect();
    let y_mem: Vec<f64> = data.iter().map(|e| e.target_dmem_pct).collect();

    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let cpu_seed = master.gen::<u64>();
    let mem_seed = master.gen::<u64>();
    let cpu = fit_head(kind, &rows, &y_cpu, config, cpu_seed)?;
    let mem = fit_head(kind, &rows, &y_mem, config, mem_seed)?;
    Ok(TrainedModel {
        kind,
        selected_features: features.to_vec(),
        seed,
        config: config.clone(),
        cpu,
        mem,
    })
}

fn fit_head(
    kind: ModelKind,
    rows: &[Vec<f64>],
    y: &[f64],
    config: &TrainingConfig,
    seed: u64,
) -> Result<Params, PredictError> {
    match kind {
        ModelKind::Linear => linear::fit_linear(rows, y)
            .map(Params::Linear)
            .map_err(|_| PredictError::RankDeficient),
        ModelKind::Polynomial => linear::fit_polynomial(rows, y)
            .map(Params::Polynomial)
            .map_err(|_| PredictError::RankDeficient),
        ModelKind::Lasso => {
            let folds = if config.lasso.lambda.is_none() {
                let k = config.lasso.folds.clamp(2, rows.len());
                kfold_indices(rows.len(), k, seed)
            } else {
                Vec::new()
            };
            linear::fit_lasso(rows, y, &config.lasso, &folds)
                .map(Params::Lasso)
                .map_err(|_| PredictError::RankDeficient)
        }
        ModelKind::RandomForest => Ok(Params::RandomForest(forest::fit_forest(
            rows,
            y,
            &config.forest,
            seed,
        ))),
        ModelKind::Ann => Ok(Params::Ann(ann::fit_ann(rows, y, &config.ann, seed))),
    }
}

// --- Evaluation ------------------------------------------------------------------

/// Accuracy summary of a prediction series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalMetrics {
    pub mse: f64,
    pub rmse: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub adjusted_r_squared: Option<f64>,
}

/// Mean squared error and its root over paired series.
pub fn evaluate(predictions: &[f64], truths: &[f64]) -> Result<EvalMetrics, PredictError> {
    if predictions.len() != truths.len() {
        return Err(PredictError::LengthMismatch {
            predictions: predictions.len(),
            truths: truths.len(),
        });
    }
    if predictions.is_empty() {
        return Err(PredictError::EmptyEval);
    }
    let mse = predictions
        .iter()
        .zip(truths)
        .map(|(p, t)| (p - t).powi(2))
        .sum::<f64>()
        / predictions.len() as f64;
    Ok(EvalMetrics {
        mse,
        rmse: mse.sqrt(),
        adjusted_r_squared: None,
    })
}

/// Leave-one-out mean of the targets: the floor any real model must beat.
pub fn naive_baseline(
    data: &[LabeledExample],
    target_index: usize,
) -> Result<ImpactPrediction, PredictError> {
    if data.len() < 2 {
        return Err(PredictError::SingleExample);
    }
    assert!(target_index < data.len(), "target index out of range");
    let mut cpu = 0.0;
    let mut mem = 0.0;
    for (i, example) in data.iter().enumerate() {
        if i != target_index {
            cpu += example.target_dcpu_pct;
            mem += example.target_dmem_pct;
        }
    }
    let n = (data.len() - 1) as f64;
    Ok(ImpactPrediction {
        dcpu_pct: cpu / n,
        dmem_pct: mem / n,
    })
}

// --- Fit statistics ----------------------------------------------------------------

/// One coefficient with its uncertainty.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeatureStat {
    pub feature: String,
    pub estimate: f64,
    pub standard_error: f64,
    /// `estimate / standard_error`; absent when the standard error is zero
    /// (an exact fit has no sampling noise to scale by).
    pub t_value: Option<f64>,
}

/// Raw-space OLS inference for a feature subset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitStatistics {
    /// Intercept first, then the requested features in order.
    pub coefficients: Vec<FeatureStat>,
    pub adjusted_r_squared: f64,
}

/// Fits OLS on the raw (unstandardized) features and reports estimates,
/// standard errors, t-values, and adjusted R². A feature list of length
/// zero fits the intercept alone, whose adjusted R² is 0 by definition.
pub fn fit_statistics(
    data: &[LabeledExample],
    features: &[String],
    resource: Resource,
) -> Result<FitStatistics, PredictError> {
    let n = data.len();
    let p = features.len();
    if n < p + 1 || n == 0 {
        return Err(PredictError::RankDeficient);
    }
    let mut rows = Vec::with_capacity(n);
    for example in data {
        let mut row = Vec::with_capacity(p + 1);
        row.push(1.0);
        row.extend(design_row(&example.features, features)?);
        rows.push(row);
    }
    let y: Vec<f64> = data.iter().map(|e| e.target(resource)).collect();
    let design = {
        let mut m = linalg::Matrix::zeros(n, p + 1);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, *v);
            }
        }
        m
    };
    let fit = linalg::least_squares(&design, &y).map_err(|_| PredictError::RankDeficient)?;

    let y_mean = y.iter().sum::<f64>() / n as f64;
    let tss: f64 = y.iter().map(|v| (v - y_mean).powi(2)).sum();
    let df = n as f64 - (p as f64 + 1.0);
    // An interpolating fit, or one whose residual is pure rounding noise,
    // has no estimable error variance: report zero standard errors (and
    // therefore no t-values) rather than artifacts of the last few ulps.
    let exact = fit.rss <= 1e-12 * tss.max(1.0);
    let sigma_sq = if df > 0.0 && !exact { fit.rss / df } else { 0.0 };

    let adjusted_r_squared = if p == 0 {
        0.0
    } else if exact || df <= 0.0 {
        1.0
    } else {
        let r_squared = 1.0 - fit.rss / tss;
        1.0 - (1.0 - r_squared) * (n as f64 - 1.0) / df
    };

    let r_inv = linalg::invert_upper_triangular(&fit.r);
    let mut coefficients = Vec::with_capacity(p + 1);
    for j in 0..=p {
        // diag of (XᵀX)⁻¹ = R⁻¹ R⁻ᵀ.
        let diag: f64 = (j..=p).map(|k| r_inv.at(j, k).powi(2)).sum();
        let standard_error = (sigma_sq * diag).sqrt();
        let estimate = fit.coefficients[j];
        let name = if j == 0 {
            "intercept".to_string()
        } else {
            features[j - 1].clone()
        };
        coefficients.push(FeatureStat {
            feature: name,
            estimate,
            standard_error,
            t_value: if standard_error > 0.0 {
                Some(estimate / standard_error)
            } else {
                None
            },
        });
    }
    Ok(FitStatistics {
        coefficients,
        adjusted_r_squared,
    })
}

// --- Cross-validation folds -----------------------------------------------------------

/// Splits `0..n` into `k` disjoint folds by seeded shuffle and round-robin
/// deal; folds are sorted internally and differ in size by at most one.
pub fn kfold_indices(n: usize, k: usize, seed: u64) -> Vec<Vec<usize>> {
    assert!(k >= 1 && k <= n, "need 1 <= k <= n");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut folds = vec![Vec::new(); k];
    for (i, index) in order.into_iter().enumerate() {
        folds[i % k].push(index);
    }
    for fold in &mut folds {
        fold.sort_unstable();
    }
    folds
}

// --- Recorded-score fixtures -------------------------------------------------------------

/// One recorded (smell kind, model family) accuracy row.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelScore {
    pub kind: SmellKind,
    pub model: ModelKind,
    pub mse: f64,
    pub rmse: f64,
}

/// Parses the recorded per-kind model comparison table
/// (`kind,model,mse,rmse`). These are recorded scores for ordering checks,
/// not numbers this artifact recomputes.
pub fn parse_model_scores_csv(text: &str) -> Result<Vec<ModelScore>, PredictError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let expected = "kind,model,mse,rmse";
    let headers = reader
        .headers()
        .map_err(|e| PredictError::Malformed {
            row: 0,
            reason: e.to_string(),
        })?
        .clone();
    let found = headers.iter().collect::<Vec<_>>().join(",");
    if found != expected {
        return Err(PredictError::SchemaMismatch {
            expected: expected.to_string(),
            found,
        });
    }
    let mut scores = Vec::new();
    for (idx, result) in reader.records().enumerate() {
        let row = idx + 1;
        let malformed = |reason: String| PredictError::Malformed { row, reason };
        let record = result.map_err(|e| malformed(e.to_string()))?;
        let field = |i: usize| record.get(i).unwrap_or("");
        scores.push(ModelScore {
            kind: field(0).parse().map_err(|e: crate::catalog::UnknownSmellKind| {
                malformed(e.to_string())
            })?,
            model: field(1)
                .parse()
                .map_err(|e: UnknownModelKind| malformed(e.to_string()))?,
            mse: field(2).parse().map_err(|e| malformed(format!("bad mse: {e}")))?,
            rmse: field(3)
                .parse()
                .map_err(|e| malformed(format!("bad rmse: {e}")))?,
        });
    }
    Ok(scores)
}

/// Recorded MSE pair for one approach.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize, Serialize)]
pub struct RecordedAccuracy {
    pub mse_cpu: f64,
    pub mse_mem: f64,
}

/// Recorded adjusted R² per resource.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize, Serialize)]
pub struct RecordedRSquared {
    pub cpu: f64,
    pub mem: f64,
}

/// Recorded accuracy of the reference multivariate regression versus the
/// naive leave-one-out baseline, as shipped with the benchmark dataset.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize, Serialize)]
pub struct RecordedBaselines {
    pub naive: RecordedAccuracy,
    pub multivariate_linear: RecordedAccuracy,
    pub adjusted_r_squared: RecordedRSquared,
}

/// Parses the recorded baseline-comparison JSON.
pub fn parse_recorded_baselines(text: &str) -> Result<RecordedBaselines, PredictError> {
    serde_json::from_str(text).map_err(|e| PredictError::Malformed {
        row: 0,
        reason: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    /// Feature vector with chosen values in two numeric slots; everything
    /// else zero, so tests can express small synthetic regressions.
    pub(super) fn xy_features(x1: f64, x2: f64) -> FeatureVector {
        FeatureVector {
            wmc_mean: x1,
            fan_in_mean: x2,
            ..FeatureVector::empty(AppCategory::Testing)
        }
    }

    pub(super) fn xy_example(x1: f64, x2: f64, y: f64) -> LabeledExample {
        LabeledExample {
            app: format!("synth-{x1}-{x2}"),
            features: xy_features(x1, x2),
            target_dcpu_pct: y,
            target_dmem_pct: y,
        }
    }

    pub(super) fn xy_names() -> Vec<String> {
        vec!["wmc_mean".to_string(), "fan_in_mean".to_string()]
    }

    fn linear_training_set() -> Vec<LabeledExample> {
        // y = 3*x1 - 2*x2 + 1 on a spread of points.
        [
            (0.0, 0.0),
            (1.0, 0.0),
            (0.0, 1.0),
            (2.0, 3.0),
            (1.5, 1.0),
            (3.0, 0.5),
            (0.25, 2.0),
        ]
        .iter()
        .map(|&(x1, x2)| xy_example(x1, x2, 3.0 * x1 - 2.0 * x2 + 1.0))
        .collect()
    }

    #[test]
    fn canonical_feature_names_cover_the_domain() {
        let names = FeatureVector::feature_names();
        assert_eq!(names.len(), 16 + 5 + 12);
        let fv = FeatureVector::empty(AppCategory::Parser);
        let dense = fv.to_dense();
        assert_eq!(dense.len(), 33);
        // One-hot block has exactly one 1.
        let hot: f64 = dense[21..].iter().sum();
        assert_eq!(hot, 1.0);
        assert_eq!(fv.get("category:parser"), Some(1.0));
        assert_eq!(fv.get("category:editor"), Some(0.0));
        assert_eq!(fv.get("no-such-feature"), None);
    }

    #[test]
    fn fixture_corpus_features_match_the_labeled_manifest() {
        let corpus = fixtures::labeled_corpus();
        let metrics = crate::detector::compute_metrics(&corpus);
        let smells =
            crate::detector::detect_smells(&corpus, &crate::detector::RuleConfig::default())
                .expect("fixture corpus detects cleanly");
        let fv = build_feature_vector(&metrics, &smells, AppCategory::Testing);

        let manifest: serde_json::Value =
            serde_json::from_str(fixtures::corpus_manifest_json()).unwrap();
        let expected = &manifest["feature_vector"];
        assert_eq!(fv.loc, expected["loc"].as_u64().unwrap());
        assert_eq!(fv.smelly_loc, expected["smelly_loc"].as_u64().unwrap());
        assert!((fv.wmc_mean - expected["wmc_mean"].as_f64().unwrap()).abs() < 1e-12);
        assert!((fv.fan_in_mean - expected["fan_in_mean"].as_f64().unwrap()).abs() < 1e-12);
        assert!((fv.fan_out_mean - expected["fan_out_mean"].as_f64().unwrap()).abs() < 1e-12);
        for (name, count) in expected["smell_counts"].as_object().unwrap() {
            let kind: SmellKind = name.parse().unwrap();
            assert_eq!(
                fv.smell_counts.get(&kind).copied().unwrap_or(0),
                count.as_u64().unwrap(),
                "count for {kind}"
            );
        }
    }

    #[test]
    fn smelly_loc_counts_distinct_lines_once() {
        let instance = |span: (usize, usize)| SmellInstance {
            kind: SmellKind::DeadCode,
            unit_path: "a.java".to_string(),
            entity_name: "X".to_string(),
            line_span: span,
            evidence: BTreeMap::new(),
        };
        let fv = build_feature_vector(
            &MetricsTable::default(),
            &[instance((10, 20)), instance((15, 25))],
            AppCategory::Testing,
        );
        assert_eq!(fv.smelly_loc, 16);
        assert_eq!(fv.loc, 0);
        assert_eq!(fv.smell_counts[&SmellKind::DeadCode], 2);
    }

    #[test]
    fn bench_fixture_parses_with_expected_shape() {
        let examples = parse_examples_csv(fixtures::bench_table_csv()).unwrap();
        assert_eq!(examples.len(), 31);
        let ant = examples.iter().find(|e| e.app == "ant").unwrap();
        assert_eq!(ant.features.category, AppCategory::Parser);
        assert_eq!(ant.features.smell_counts[&SmellKind::CyclicDependency], 14);
        assert_eq!(ant.target_dcpu_pct, 0.1089);
        assert_eq!(ant.target_dmem_pct, 0.0455);
        // All twelve categories are represented.
        let categories: std::collections::BTreeSet<AppCategory> =
            examples.iter().map(|e| e.features.category).collect();
        assert_eq!(categories.len(), 12);
    }

    #[test]
    fn linear_model_recovers_exact_coefficients() {
        let data = linear_training_set();
        let model = train_with_features(
            &data,
            &xy_names(),
            ModelKind::Linear,
            &TrainingConfig::default(),
            1,
        )
        .unwrap();
        let prediction = model.predict(&xy_features(1.0, 1.0)).unwrap();
        assert!((prediction.dcpu_pct - 2.0).abs() < 1e-8);
        assert!((prediction.dmem_pct - 2.0).abs() < 1e-8);
        let prediction = model.predict(&xy_features(-1.0, 2.0)).unwrap();
        assert!((prediction.dcpu_pct - -6.0).abs() < 1e-8);
    }

    #[test]
    fn lasso_at_zero_penalty_matches_linear() {
        let data = linear_training_set();
        let mut config = TrainingConfig::default();
        config.lasso.lambda = Some(0.0);
        let lasso =
            train_with_features(&data, &xy_names(), ModelKind::Lasso, &config, 1).unwrap();
        let ols = train_with_features(
            &data,
            &xy_names(),
            ModelKind::Linear,
            &TrainingConfig::default(),
            1,
        )
        .unwrap();
        for point in [(0.0, 0.0), (1.0, 1.0), (2.0, -1.0)] {
            let a = lasso.predict(&xy_features(point.0, point.1)).unwrap();
            let b = ols.predict(&xy_features(point.0, point.1)).unwrap();
            assert!((a.dcpu_pct - b.dcpu_pct).abs() < 1e-6);
        }
    }

    #[test]
    fn training_on_all_features_with_onehots_is_rank_deficient() {
        let examples = parse_examples_csv(fixtures::bench_table_csv()).unwrap();
        match train(&examples, ModelKind::Linear, &TrainingConfig::default(), 1) {
            Err(PredictError::RankDeficient) => {}
            other => panic!("expected RankDeficient, got {other:?}"),
        }
    }

    #[test]
    fn training_is_deterministic_per_seed() {
        let examples = parse_examples_csv(fixtures::bench_table_csv()).unwrap();
        let features: Vec<String> = ["loc", "smelly_loc", "wmc_mean", "fan_in_mean"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        for kind in [ModelKind::RandomForest, ModelKind::Ann, ModelKind::Lasso] {
            let a = train_with_features(&examples, &features, kind, &TrainingConfig::default(), 9)
                .unwrap();
            let b = train_with_features(&examples, &features, kind, &TrainingConfig::default(), 9)
                .unwrap();
            assert_eq!(a, b, "{kind} retrain differs");
            let pa = a.predict(&examples[0].features).unwrap();
            let pb = b.predict(&examples[0].features).unwrap();
            assert_eq!(pa.dcpu_pct.to_bits(), pb.dcpu_pct.to_bits());
            assert_eq!(
                serde_json::to_string(&a).unwrap(),
                serde_json::to_string(&b).unwrap()
            );
        }
    }

    #[test]
    fn model_json_round_trips() {
        let data = linear_training_set();
        let model = train_with_features(
            &data,
            &xy_names(),
            ModelKind::Ann,
            &TrainingConfig::default(),
            4,
        )
        .unwrap();
        let json = serde_json::to_string(&model).unwrap();
        let back: TrainedModel = serde_json::from_str(&json).unwrap();
        assert_eq!(model, back);
        let a = model.predict(&xy_features(0.3, 0.7)).unwrap();
        let b = back.predict(&xy_features(0.3, 0.7)).unwrap();
        assert_eq!(a.dcpu_pct.to_bits(), b.dcpu_pct.to_bits());
    }

    #[test]
    fn constant_target_model_predicts_the_constant_everywhere() {
        let data: Vec<LabeledExample> = [(0.0, 1.0), (1.0, 0.5), (2.0, -1.0), (3.0, 2.0)]
            .iter()
            .map(|&(x1, x2)| xy_example(x1, x2, 7.25))
            .collect();
        let model = train_with_features(
            &data,
            &xy_names(),
            ModelKind::Linear,
            &TrainingConfig::default(),
            1,
        )
        .unwrap();
        let prediction = model.predict(&xy_features(10.0, -3.0)).unwrap();
        assert!((prediction.dcpu_pct - 7.25).abs() < 1e-9);
        assert!((prediction.dmem_pct - 7.25).abs() < 1e-9);
    }

    #[test]
    fn depth_zero_single_tree_predicts_training_mean() {
        let data = linear_training_set();
        let mut config = TrainingConfig::default();
        config.forest = ForestConfig {
            trees: 1,
            max_depth: 0,
            bootstrap: false,
        };
        let model =
            train_with_features(&data, &xy_names(), ModelKind::RandomForest, &config, 1).unwrap();
        let mean = data.iter().map(|e| e.target_dcpu_pct).sum::<f64>() / data.len() as f64;
        let prediction = model.predict(&xy_features(100.0, 100.0)).unwrap();
        assert_eq!(prediction.dcpu_pct, mean);
    }

    #[test]
    fn evaluate_basics() {
        let perfect = evaluate(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(perfect.mse, 0.0);
        assert_eq!(perfect.rmse, 0.0);

        let unit = evaluate(&[1.0, -1.0], &[0.0, 0.0]).unwrap();
        assert_eq!(unit.mse, 1.0);
        assert_eq!(unit.rmse, 1.0);

        assert!(matches!(
            evaluate(&[1.0], &[1.0, 2.0]),
            Err(PredictError::LengthMismatch { .. })
        ));
        assert!(matches!(evaluate(&[], &[]), Err(PredictError::EmptyEval)));
    }

    #[test]
    fn naive_baseline_is_the_leave_one_out_mean() {
        let data: Vec<LabeledExample> = [2.0, 4.0, 6.0]
            .iter()
            .enumerate()
            .map(|(i, &t)| xy_example(i as f64, 0.0, t))
            .collect();
        let out = naive_baseline(&data, 0).unwrap();
        assert_eq!(out.dcpu_pct, 5.0);
        assert_eq!(out.dmem_pct, 5.0);

        let constant: Vec<LabeledExample> = (0..4)
            .map(|i| xy_example(i as f64, 0.0, 3.25))
            .collect();
        for i in 0..4 {
            assert_eq!(naive_baseline(&constant, i).unwrap().dcpu_pct, 3.25);
        }
        assert!(matches!(
            naive_baseline(&data[..1], 0),
            Err(PredictError::SingleExample)
        ));
    }

    #[test]
    fn naive_baseline_matches_recorded_leave_one_out_value() {
        let examples = parse_examples_csv(fixtures::bench_table_csv()).unwrap();
        let ant = examples.iter().position(|e| e.app == "ant").unwrap();
        let out = naive_baseline(&examples, ant).unwrap();
        assert!((out.dcpu_pct - 0.10865666666666665).abs() < 1e-12, "{}", out.dcpu_pct);
        assert!((out.dmem_pct - 0.07687333333333334).abs() < 1e-12, "{}", out.dmem_pct);
    }

    #[test]
    fn fit_statistics_matches_normal_equation_oracle() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let data: Vec<LabeledExample> = (0..20)
            .map(|_| {
                let x1 = rng.gen_range(-2.0..2.0);
                let x2 = rng.gen_range(-2.0..2.0);
                let y = 1.5 * x1 - 0.7 * x2 + 0.3 + rng.gen_range(-0.5..0.5);
                xy_example(x1, x2, y)
            })
            .collect();
        let stats = fit_statistics(&data, &xy_names(), Resource::Cpu).unwrap();

        // Independent oracle: explicit normal equations with Gauss-Jordan
        // inversion of XᵀX.
        let n = data.len();
        let x: Vec<Vec<f64>> = data
            .iter()
            .map(|e| vec![1.0, e.features.wmc_mean, e.features.fan_in_mean])
            .collect();
        let y: Vec<f64> = data.iter().map(|e| e.target_dcpu_pct).collect();
        let p = 3;
        let mut xtx = vec![vec![0.0; p]; p];
        let mut xty = vec![0.0; p];
        for r in 0..n {
            for i in 0..p {
                xty[i] += x[r][i] * y[r];
                for j in 0..p {
                    xtx[i][j] += x[r][i] * x[r][j];
                }
            }
        }
        // Invert xtx by Gauss-Jordan on [xtx | I].
        let mut aug = vec![vec![0.0; 2 * p]; p];
        for i in 0..p {
            aug[i][..p].copy_from_slice(&xtx[i]);
            aug[i][p + i] = 1.0;
        }
        for col in 0..p {
            let pivot = (col..p)
                .max_by(|&a, &b| aug[a][col].abs().total_cmp(&aug[b][col].abs()))
                .unwrap();
            aug.swap(col, pivot);
            let lead = aug[col][col];
            for v in aug[col].iter_mut() {
                *v /= lead;
            }
            for i in 0..p {
                if i != col {
                    let factor = aug[i][col];
                    for j in 0..2 * p {
                        aug[i][j] -= factor * aug[col][j];
                    }
                }
            }
        }
        let inv: Vec<Vec<f64>> = aug.iter().map(|r| r[p..].to_vec()).collect();
        let beta: Vec<f64> = (0..p)
            .map(|i| (0..p).map(|j| inv[i][j] * xty[j]).sum())
            .collect();
        let rss: f64 = (0..n)
            .map(|r| {
                let pred: f64 = (0..p).map(|i| x[r][i] * beta[i]).sum();
                (y[r] - pred).powi(2)
            })
            .sum();
        let sigma_sq = rss / (n as f64 - p as f64);
        for (i, stat) in stats.coefficients.iter().enumerate() {
            assert!((stat.estimate - beta[i]).abs() < 1e-8, "beta {i}");
            let se = (sigma_sq * inv[i][i]).sqrt();
            assert!((stat.standard_error - se).abs() < 1e-8, "se {i}");
            let t = stat.t_value.unwrap();
            assert!((t - beta[i] / se).abs() < 1e-6, "t {i}");
            assert!((t * stat.standard_error - stat.estimate).abs() < 1e-9);
        }
        let y_mean = y.iter().sum::<f64>() / n as f64;
        let tss: f64 = y.iter().map(|v| (v - y_mean).powi(2)).sum();
        let adj = 1.0 - (rss / tss) * (n as f64 - 1.0) / (n as f64 - p as f64);
        assert!((stats.adjusted_r_squared - adj).abs() < 1e-10);
    }

    #[test]
    fn fit_statistics_conventions() {
        // Noiseless fit: adjusted R² is 1, standard errors 0, t undefined.
        let data = linear_training_set();
        let stats = fit_statistics(&data, &xy_names(), Resource::Cpu).unwrap();
        assert_eq!(stats.adjusted_r_squared, 1.0);
        for stat in &stats.coefficients {
            assert_eq!(stat.standard_error, 0.0);
            assert_eq!(stat.t_value, None);
        }
        // Intercept-only model: adjusted R² is 0 by definition.
        let stats = fit_statistics(&data, &[], Resource::Cpu).unwrap();
        assert_eq!(stats.adjusted_r_squared, 0.0);
        assert_eq!(stats.coefficients.len(), 1);
        assert_eq!(stats.coefficients[0].feature, "intercept");
    }

    #[test]
    fn kfold_partitions_the_index_range() {
        let folds = kfold_indices(23, 5, 3);
        assert_eq!(folds.len(), 5);
        let mut seen: Vec<usize> = folds.iter().flatten().copied().collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..23).collect::<Vec<_>>());
        for fold in &folds {
            assert!(fold.len() == 4 || fold.len() == 5);
        }
        assert_eq!(folds, kfold_indices(23, 5, 3));
        assert_ne!(folds, kfold_indices(23, 5, 4));
    }

    #[test]
    fn recorded_model_table_ranks_ann_first_everywhere() {
        let scores = parse_model_scores_csv(fixtures::memory_model_scores_csv()).unwrap();
        assert_eq!(scores.len(), 30);
        let kinds: BTreeSet<SmellKind> = scores.iter().map(|s| s.kind).collect();
        assert_eq!(kinds.len(), 6);
        for kind in kinds {
            let rows: Vec<&ModelScore> = scores.iter().filter(|s| s.kind == kind).collect();
            assert_eq!(rows.len(), 5);
            let ann = rows.iter().find(|s| s.model == ModelKind::Ann).unwrap();
            for row in &rows {
                if row.model != ModelKind::Ann {
                    assert!(
                        ann.mse < row.mse,
                        "{kind}: ann {} should beat {} {}",
                        ann.mse,
                        row.model,
                        row.mse
                    );
                }
            }
        }
    }

    #[test]
    fn recorded_baselines_rank_regression_above_naive() {
        let recorded = parse_recorded_baselines(fixtures::baseline_metrics_json()).unwrap();
        assert!(recorded.multivariate_linear.mse_cpu < recorded.naive.mse_cpu);
        assert!(recorded.multivariate_linear.mse_mem < recorded.naive.mse_mem);
        assert_eq!(recorded.naive.mse_cpu, 0.02216);
        assert_eq!(recorded.naive.mse_mem, 0.03165);
        assert_eq!(recorded.multivariate_linear.mse_cpu, 0.01161);
        assert_eq!(recorded.multivariate_linear.mse_mem, 0.02011);
        assert_eq!(recorded.adjusted_r_squared.cpu, 0.891);
        assert_eq!(recorded.adjusted_r_squared.mem, 0.833);
    }

    proptest! {
        #[test]
        fn rmse_squared_equals_mse(
            pairs in proptest::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 1..40)
        ) {
            let predictions: Vec<f64> = pairs.iter().map(|p| p.0).collect();
            let truths: Vec<f64> = pairs.iter().map(|p| p.1).collect();
            let metrics = evaluate(&predictions, &truths).unwrap();
            prop_assert!((metrics.rmse * metrics.rmse - metrics.mse).abs() < 1e-9);
            prop_assert!(metrics.mse >= 0.0);
        }

        #[test]
        fn kfold_always_partitions(n in 1usize..40, k_raw in 1usize..10, seed in 0u64..500) {
            let k = k_raw.min(n);
            let folds = kfold_indices(n, k, seed);
            let mut seen: Vec<usize> = folds.iter().flatten().copied().collect();
            seen.sort_unstable();
            prop_assert_eq!(seen, (0..n).collect::<Vec<_>>());
        }
    }
}
