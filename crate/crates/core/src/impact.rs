//! Storage and analytics for measured refactoring impacts.
//!
//! An [`ImpactDataset`] holds one row per `(application, smell kind)` pair:
//! how many instances were refactored and what that did to CPU and memory
//! use, both in total and per instance. Batch measurements (several kinds
//! refactored together) live in [`BatchRecord`]s. The analytics answer two
//! questions: do individual impacts add up to batch impacts
//! ([`additivity_report`]), and do applications of the same category respond
//! similarly ([`category_profile`]).
//!
//! Datasets are immutable once built — every constructor validates, and all
//! queries take `&self` — so sharing one across threads is safe.
//!
//! Measurement cells that were never observed are `None`. Nulls are excluded
//! from aggregates rather than treated as zero, and nothing here back-fills a
//! missing cell from its neighbours (a per-instance value is never
//! reconstituted as `total / count`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{improves_both, worsens_both, SmellKind};

/// Column header of the per-kind impact CSV, in canonical order.
pub const IMPACT_CSV_HEADER: &str =
    "app,category,kind,instance_count,dcpu_total_pct,dmem_total_pct,dcpu_per_instance,dmem_per_instance";

/// Column header of the batch impact CSV.
pub const BATCH_CSV_HEADER: &str = "app,mode,kinds,dcpu_total_pct,dmem_total_pct";

/// Functional category of an application under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AppCategory {
    EmailClient,
    Testing,
    Editor,
    ProjectManagement,
    Parser,
    Cloud,
    ErrorLogging,
    MachineLearning,
    ApiIntegrator,
    WebServer,
    CodeAnalyzer,
    WebFramework,
}

impl AppCategory {
    /// All categories, in declaration order.
    pub const ALL: [AppCategory; 12] = [
        AppCategory::EmailClient,
        AppCategory::Testing,
        AppCategory::Editor,
        AppCategory::ProjectManagement,
        AppCategory::Parser,
        AppCategory::Cloud,
        AppCategory::ErrorLogging,
        AppCategory::MachineLearning,
        AppCategory::ApiIntegrator,
        AppCategory::WebServer,
        AppCategory::CodeAnalyzer,
        AppCategory::WebFramework,
    ];

    /// Kebab-case name as used in CSV files and reports.
    pub fn name(self) -> &'static str {
        match self {
            AppCategory::EmailClient => "email-client",
            AppCategory::Testing => "testing",
            AppCategory::Editor => "editor",
            AppCategory::ProjectManagement => "project-management",
            AppCategory::Parser => "parser",
            AppCategory::Cloud => "cloud",
            AppCategory::ErrorLogging => "error-logging",
            AppCategory::MachineLearning => "machine-learning",
            AppCategory::ApiIntegrator => "api-integrator",
            AppCategory::WebServer => "web-server",
            AppCategory::CodeAnalyzer => "code-analyzer",
            AppCategory::WebFramework => "web-framework",
        }
    }

    /// Stable position in [`AppCategory::ALL`]; used for one-hot encodings.
    pub fn ordinal(self) -> usize {
        Self::ALL.iter().position(|c| *c == self).expect("listed")
    }
}

impl fmt::Display for AppCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for a category name outside the twelve known ones.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown application category `{0}`")]
pub struct UnknownCategory(pub String);

impl FromStr for AppCategory {
    type Err = UnknownCategory;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AppCategory::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownCategory(s.to_string()))
    }
}

/// Which kinds a batch refactoring covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BatchMode {
    /// Every detected kind, regardless of expected direction.
    All,
    /// Only kinds whose removal is expected to improve both resources.
    Improving,
    /// Only kinds whose removal is expected to worsen both resources.
    Worsening,
}

impl BatchMode {
    pub fn name(self) -> &'static str {
        match self {
            BatchMode::All => "all",
            BatchMode::Improving => "improving",
            BatchMode::Worsening => "worsening",
        }
    }
}

impl fmt::Display for BatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for a batch-mode name other than `all`/`improving`/`worsening`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown batch mode `{0}`")]
pub struct UnknownBatchMode(pub String);

impl FromStr for BatchMode {
    type Err = UnknownBatchMode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(BatchMode::All),
            "improving" => Ok(BatchMode::Improving),
            "worsening" => Ok(BatchMode::Worsening),
            other => Err(UnknownBatchMode(other.to_string())),
        }
    }
}

/// Measured impact of refactoring every instance of one smell kind in one
/// application.
///
/// Deltas are percentages relative to the unrefactored build, with the sign
/// convention that positive means improvement (resource use went down).
/// Cells that were never measured are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImpactRecord {
    pub app: String,
    pub category: AppCategory,
    pub kind: SmellKind,
    pub instance_count: Option<u64>,
    pub dcpu_total_pct: Option<f64>,
    pub dmem_total_pct: Option<f64>,
    pub dcpu_per_instance: Option<f64>,
    pub dmem_per_instance: Option<f64>,
}

/// Measured impact of refactoring a set of smell kinds together in one
/// application. Same sign convention as [`ImpactRecord`].
#[derive(Debug, Clone, PartialEq)]
pub struct BatchRecord {
    pub app: String,
    pub mode: BatchMode,
    /// The kinds refactored together, deduplicated and in catalog order.
    pub kinds: Vec<SmellKind>,
    pub dcpu_total_pct: Option<f64>,
    pub dmem_total_pct: Option<f64>,
}

/// Errors from building or querying impact data.
#[derive(Debug, Error)]
pub enum ImpactError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    /// The CSV header differs from the expected schema (column names and
    /// order are both fixed).
    #[error("CSV header mismatch: expected `{expected}`, found `{found}`")]
    SchemaMismatch { expected: String, found: String },
    /// A data row could not be parsed at all (bad number, unknown kind or
    /// category, wrong field count). `row` is the 1-based data-row index;
    /// the header is row 0.
    #[error("row {row}: {reason}")]
    Malformed { row: usize, reason: String },
    /// A row parsed but contradicts a record invariant (per-instance times
    /// count diverging from the total, an app appearing under two
    /// categories, an inconsistent batch mode, an empty kind set). `row` is
    /// the 1-based data-row index; the header is row 0.
    #[error("row {row} violates an invariant: {reason}")]
    InvariantViolation { row: usize, reason: String },
    /// Two rows share a key. For per-kind data the key is `(app, kind)`;
    /// for batch data `kind` carries the duplicated mode name.
    #[error("duplicate record for app `{app}`, `{kind}`")]
    DuplicateKey { app: String, kind: String },
    /// A batch names a kind with no usable individual measurement for the
    /// same app (row absent, or its total for a needed resource is null).
    #[error("no individual record for app `{app}`, kind `{kind}`")]
    MissingIndividualRecord { app: String, kind: SmellKind },
    /// A batch row lacks the observed total for a resource the additivity
    /// check needs.
    #[error("batch record for app `{app}` has no observed {resource} total")]
    MissingObservation { app: String, resource: &'static str },
    /// Additivity was requested over an empty batch list.
    #[error("no batch records supplied")]
    EmptyBatchList,
    /// No per-instance measurements exist for the requested slice.
    #[error("no data for category `{category}`, kind `{kind}`")]
    NoData {
        category: AppCategory,
        kind: SmellKind,
    },
}

/// Absolute tolerance for the `per_instance × count = total` cross-check.
const TOTAL_TOLERANCE: f64 = 1e-9;

/// A validated, immutable collection of [`ImpactRecord`]s.
///
/// Invariants established at construction and preserved thereafter:
/// `(app, kind)` keys are unique; each app has exactly one category; and
/// wherever a count, a total, and a per-instance value are all present for
/// the same resource, they agree to within `1e-9`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ImpactDataset {
    records: Vec<ImpactRecord>,
}

impl ImpactDataset {
    /// Validates and wraps a list of records, preserving their order.
    pub fn from_records(records: Vec<ImpactRecord>) -> Result<Self, ImpactError> {
        let mut seen: BTreeSet<(String, SmellKind)> = BTreeSet::new();
        let mut categories: BTreeMap<String, AppCategory> = BTreeMap::new();
        for (idx, record) in records.iter().enumerate() {
            let row = idx + 1;
            validate_record(record, row)?;
            if !seen.insert((record.app.clone(), record.kind)) {
                return Err(ImpactError::DuplicateKey {
                    app: record.app.clone(),
                    kind: record.kind.name().to_string(),
                });
            }
            match categories.get(&record.app) {
                Some(prev) if *prev != record.category => {
                    return Err(ImpactError::InvariantViolation {
                        row,
                        reason: format!(
                            "app `{}` appears as both `{prev}` and `{}`",
                            record.app, record.category
                        ),
                    });
                }
                Some(_) => {}
                None => {
                    categories.insert(record.app.clone(), record.category);
                }
            }
        }
        Ok(ImpactDataset { records })
    }

    /// All records in their original order.
    pub fn records(&self) -> &[ImpactRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// The record for one `(app, kind)` pair, if measured.
    pub fn get(&self, app: &str, kind: SmellKind) -> Option<&ImpactRecord> {
        self.records
            .iter()
            .find(|r| r.app == app && r.kind == kind)
    }

    /// Distinct application names, sorted.
    pub fn apps(&self) -> Vec<&str> {
        let set: BTreeSet<&str> = self.records.iter().map(|r| r.app.as_str()).collect();
        set.into_iter().collect()
    }

    /// The category an app is filed under, if the app is present at all.
    pub fn category_of(&self, app: &str) -> Option<AppCategory> {
        self.records
            .iter()
            .find(|r| r.app == app)
            .map(|r| r.category)
    }

    /// Every record of one kind, across all apps, in dataset order.
    pub fn rows_for_kind(&self, kind: SmellKind) -> Vec<&ImpactRecord> {
        self.records.iter().filter(|r| r.kind == kind).collect()
    }

    /// Every record matching both a category and a kind, in dataset order.
    pub fn rows_matching(&self, category: AppCategory, kind: SmellKind) -> Vec<&ImpactRecord> {
        self.records
            .iter()
            .filter(|r| r.category == category && r.kind == kind)
            .collect()
    }
}

fn validate_record(record: &ImpactRecord, row: usize) -> Result<(), ImpactError> {
    let checks = [
        ("CPU", record.dcpu_total_pct, record.dcpu_per_instance),
        ("memory", record.dmem_total_pct, record.dmem_per_instance),
    ];
    for (resource, total, per_instance) in checks {
        if let (Some(count), Some(total), Some(per)) =
            (record.instance_count, total, per_instance)
        {
            if count >= 1 {
                let product = per * count as f64;
                if (product - total).abs() > TOTAL_TOLERANCE {
                    return Err(ImpactError::InvariantViolation {
                        row,
                        reason: format!(
                            "{resource} per-instance {per} x count {count} = {product}, \
                             but total is {total}"
                        ),
                    });
                }
            }
        }
    }
    Ok(())
}

fn validate_batch(record: &BatchRecord, row: usize) -> Result<(), ImpactError> {
    if record.kinds.is_empty() {
        return Err(ImpactError::InvariantViolation {
            row,
            reason: format!("batch for app `{}` has an empty kind set", record.app),
        });
    }
    let offender = match record.mode {
        BatchMode::All => None,
        BatchMode::Improving => record.kinds.iter().find(|k| !improves_both(**k)),
        BatchMode::Worsening => record.kinds.iter().find(|k| !worsens_both(**k)),
    };
    if let Some(kind) = offender {
        return Err(ImpactError::InvariantViolation {
            row,
            reason: format!(
                "kind `{kind}` is not expected to {} both resources, so it cannot \
                 appear in a {} batch",
                match record.mode {
                    BatchMode::Improving => "improve",
                    _ => "worsen",
                },
                record.mode
            ),
        });
    }
    Ok(())
}

/// Canonicalizes a batch kind list: deduplicated, catalog order.
fn canonical_kinds(kinds: &[SmellKind]) -> Vec<SmellKind> {
    let set: BTreeSet<usize> = kinds.iter().map(|k| k.ordinal()).collect();
    set.into_iter().map(|i| SmellKind::ALL[i]).collect()
}

/// Validates a list of batch records (nonempty kind sets, modes consistent
/// with the catalog, `(app, mode)` keys unique) and canonicalizes each kind
/// list. Row numbers in errors are 1-based list positions.
pub fn validate_batches(batches: Vec<BatchRecord>) -> Result<Vec<BatchRecord>, ImpactError> {
    let mut seen: BTreeSet<(String, BatchMode)> = BTreeSet::new();
    let mut out = Vec::with_capacity(batches.len());
    for (idx, mut record) in batches.into_iter().enumerate() {
        record.kinds = canonical_kinds(&record.kinds);
        validate_batch(&record, idx + 1)?;
        if !seen.insert((record.app.clone(), record.mode)) {
            return Err(ImpactError::DuplicateKey {
                app: record.app,
                kind: record.mode.name().to_string(),
            });
        }
        out.push(record);
    }
    Ok(out)
}

// --- CSV ingest and export -------------------------------------------------

fn check_header(
    headers: &csv::StringRecord,
    expected: &str,
) -> Result<(), ImpactError> {
    let found = headers.iter().collect::<Vec<_>>().join(",");
    if found != expected {
        return Err(ImpactError::SchemaMismatch {
            expected: expected.to_string(),
            found,
        });
    }
    Ok(())
}

/// Parses per-kind impact CSV text into a validated dataset.
pub fn parse_impact_csv(text: &str) -> Result<ImpactDataset, ImpactError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| ImpactError::Malformed {
            row: 0,
            reason: e.to_string(),
        })?
        .clone();
    check_header(&headers, IMPACT_CSV_HEADER)?;
    let mut records = Vec::new();
    for (idx, result) in reader.deserialize::<ImpactRecord>().enumerate() {
        let record = result.map_err(|e| ImpactError::Malformed {
            row: idx + 1,
            reason: e.to_string(),
        })?;
        records.push(record);
    }
    ImpactDataset::from_records(records)
}

/// Reads and parses a per-kind impact CSV file.
pub fn ingest_impact_csv(path: &Path) -> Result<ImpactDataset, ImpactError> {
    let text = std::fs::read_to_string(path).map_err(|source| ImpactError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_impact_csv(&text)
}

/// Serializes a dataset back to CSV. Null cells become empty fields; floats
/// use the shortest representation that parses back to the same value, so
/// `parse_impact_csv(export_impact_csv(d)) == d` for every valid dataset.
pub fn export_impact_csv(dataset: &ImpactDataset) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in dataset.records() {
        writer.serialize(record).expect("in-memory CSV write");
    }
    let bytes = writer.into_inner().expect("in-memory CSV flush");
    let mut text = String::from_utf8(bytes).expect("CSV output is UTF-8");
    if text.is_empty() {
        // An empty dataset still round-trips: emit the bare header.
        text = format!("{IMPACT_CSV_HEADER}\n");
    }
    text
}

/// Wire form of one batch CSV row; `kinds` is the semicolon-joined list.
#[derive(Serialize, Deserialize)]
struct BatchCsvRow {
    app: String,
    mode: BatchMode,
    kinds: String,
    dcpu_total_pct: Option<f64>,
    dmem_total_pct: Option<f64>,
}

/// Parses batch impact CSV text into validated records.
pub fn parse_batch_csv(text: &str) -> Result<Vec<BatchRecord>, ImpactError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| ImpactError::Malformed {
            row: 0,
            reason: e.to_string(),
        })?
        .clone();
    check_header(&headers, BATCH_CSV_HEADER)?;
    let mut batches = Vec::new();
    for (idx, result) in reader.deserialize::<BatchCsvRow>().enumerate() {
        let row = idx + 1;
        let raw = result.map_err(|e| ImpactError::Malformed {
            row,
            reason: e.to_string(),
        })?;
        let mut kinds = Vec::new();
        for name in raw.kinds.split(';').filter(|s| !s.is_empty()) {
            let kind = name.parse::<SmellKind>().map_err(|e| ImpactError::Malformed {
                row,
                reason: e.to_string(),
            })?;
            kinds.push(kind);
        }
        batches.push(BatchRecord {
            app: raw.app,
            mode: raw.mode,
            kinds,
            dcpu_total_pct: raw.dcpu_total_pct,
            dmem_total_pct: raw.dmem_total_pct,
        });
    }
    validate_batches(batches)
}

/// Reads and parses a batch impact CSV file.
pub fn ingest_batch_csv(path: &Path) -> Result<Vec<BatchRecord>, ImpactError> {
    let text = std::fs::read_to_string(path).map_err(|source| ImpactError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_batch_csv(&text)
}

/// Serializes batch records back to CSV; the inverse of [`parse_batch_csv`]
/// up to kind-list canonicalization.
pub fn export_batch_csv(batches: &[BatchRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in batches {
        let kinds = record
            .kinds
            .iter()
            .map(|k| k.name())
            .collect::<Vec<_>>()
            .join(";");
        let row = BatchCsvRow {
            app: record.app.clone(),
            mode: record.mode,
            kinds,
            dcpu_total_pct: record.dcpu_total_pct,
            dmem_total_pct: record.dmem_total_pct,
        };
        writer.serialize(row).expect("in-memory CSV write");
    }
    let bytes = writer.into_inner().expect("in-memory CSV flush");
    let mut text = String::from_utf8(bytes).expect("CSV output is UTF-8");
    if text.is_empty() {
        text = format!("{BATCH_CSV_HEADER}\n");
    }
    text
}

// --- Additivity ------------------------------------------------------------

/// One application's additivity check: the sum of its individual impacts
/// against the observed batch impact, per resource.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdditivityRow {
    pub app: String,
    pub mode: BatchMode,
    pub predicted_cpu_pct: f64,
    pub observed_cpu_pct: f64,
    /// `|predicted - observed|` for CPU.
    pub cpu_deviation: f64,
    pub predicted_mem_pct: f64,
    pub observed_mem_pct: f64,
    /// `|predicted - observed|` for memory.
    pub mem_deviation: f64,
}

/// Mean, minimum, and maximum of the per-app deviations for one resource.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeviationSummary {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

impl DeviationSummary {
    fn over(values: impl Iterator<Item = f64> + Clone) -> DeviationSummary {
        let mut n = 0usize;
        let mut sum = 0.0;
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for v in values {
            n += 1;
            sum += v;
            min = min.min(v);
            max = max.max(v);
        }
        debug_assert!(n > 0, "summaries are only built over nonempty rows");
        DeviationSummary {
            mean: sum / n as f64,
            min,
            max,
        }
    }
}

/// Result of checking whether individual impacts add up to batch impacts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdditivityReport {
    /// One row per supplied batch, sorted by app name then mode.
    pub rows: Vec<AdditivityRow>,
    pub cpu: DeviationSummary,
    pub mem: DeviationSummary,
}

/// Checks the supplied batches against the sum of the dataset's individual
/// impacts.
///
/// For each batch, the predicted total per resource is the sum of the app's
/// individual totals over the batch's kinds; the deviation is the absolute
/// difference from the observed batch total. Aggregates are the exact
/// arithmetic mean, minimum, and maximum of the per-app deviations.
///
/// Every batch kind must have an individual record with a non-null total for
/// both resources, and every batch must carry both observed totals.
pub fn additivity_report(
    dataset: &ImpactDataset,
    batches: &[BatchRecord],
) -> Result<AdditivityReport, ImpactError> {
    if batches.is_empty() {
        return Err(ImpactError::EmptyBatchList);
    }
    let mut rows = Vec::with_capacity(batches.len());
    for batch in batches {
        let observed_cpu = batch
            .dcpu_total_pct
            .ok_or_else(|| ImpactError::MissingObservation {
                app: batch.app.clone(),
                resource: "CPU",
            })?;
        let observed_mem = batch
            .dmem_total_pct
            .ok_or_else(|| ImpactError::MissingObservation {
                app: batch.app.clone(),
                resource: "memory",
            })?;
        let mut predicted_cpu = 0.0;
        let mut predicted_mem = 0.0;
        for &kind in &batch.kinds {
            let record = dataset.get(&batch.app, kind).ok_or_else(|| {
                ImpactError::MissingIndividualRecord {
                    app: batch.app.clone(),
                    kind,
                }
            })?;
            let missing = || ImpactError::MissingIndividualRecord {
                app: batch.app.clone(),
                kind,
            };
            predicted_cpu += record.dcpu_total_pct.ok_or_else(missing)?;
            predicted_mem += record.dmem_total_pct.ok_or_else(missing)?;
        }
        rows.push(AdditivityRow {
            app: batch.app.clone(),
            mode: batch.mode,
            predicted_cpu_pct: predicted_cpu,
            observed_cpu_pct: observed_cpu,
            cpu_deviation: (predicted_cpu - observed_cpu).abs(),
            predicted_mem_pct: predicted_mem,
            observed_mem_pct: observed_mem,
            mem_deviation: (predicted_mem - observed_mem).abs(),
        });
    }
    rows.sort_by(|a, b| a.app.cmp(&b.app).then(a.mode.cmp(&b.mode)));
    let cpu = DeviationSummary::over(rows.iter().map(|r| r.cpu_deviation));
    let mem = DeviationSummary::over(rows.iter().map(|r| r.mem_deviation));
    Ok(AdditivityReport { rows, cpu, mem })
}

// --- Category aggregation ---------------------------------------------------

/// Mean per-instance impact of one kind across the apps of one category.
///
/// A resource's mean is `None` when no matching row measured it; `app_count`
/// counts the rows that contributed to at least one resource.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CategoryImpact {
    pub category: AppCategory,
    pub kind: SmellKind,
    pub mean_dcpu_per_instance: Option<f64>,
    pub mean_dmem_per_instance: Option<f64>,
    pub app_count: usize,
}

/// Averages the per-instance impact of `kind` across the apps of `category`.
///
/// Null cells are excluded per resource. Errors with
/// [`ImpactError::NoData`] when no row in the slice carries a per-instance
/// value for either resource.
pub fn category_profile(
    dataset: &ImpactDataset,
    category: AppCategory,
    kind: SmellKind,
) -> Result<CategoryImpact, ImpactError> {
    let mut cpu = Vec::new();
    let mut mem = Vec::new();
    let mut contributing = 0usize;
    for record in dataset.rows_matching(category, kind) {
        let mut used = false;
        if let Some(v) = record.dcpu_per_instance {
            cpu.push(v);
            used = true;
        }
        if let Some(v) = record.dmem_per_instance {
            mem.push(v);
            used = true;
        }
        if used {
            contributing += 1;
        }
    }
    if contributing == 0 {
        return Err(ImpactError::NoData { category, kind });
    }
    let mean = |values: &[f64]| {
        if values.is_empty() {
            None
        } else {
            Some(values.iter().sum::<f64>() / values.len() as f64)
        }
    };
    Ok(CategoryImpact {
        category,
        kind,
        mean_dcpu_per_instance: mean(&cpu),
        mean_dmem_per_instance: mean(&mem),
        app_count: contributing,
    })
}

/// Mean per-instance deltas for one kind across every app that records
/// them, regardless of category, with per-resource null exclusion. Returns
/// `(cpu, mem)`; a component is `None` when no app records it.
pub fn kind_mean_per_instance(dataset: &ImpactDataset, kind: SmellKind) -> (Option<f64>, Option<f64>) {
    let mut cpu = Vec::new();
    let mut mem = Vec::new();
    for record in dataset.rows_for_kind(kind) {
        if let Some(v) = record.dcpu_per_instance {
            cpu.push(v);
        }
        if let Some(v) = record.dmem_per_instance {
            mem.push(v);
        }
    }
    let mean = |values: &[f64]| {
        if values.is_empty() {
            None
        } else {
            Some(values.iter().sum::<f64>() / values.len() as f64)
        }
    };
    (mean(&cpu), mean(&mem))
}

// --- Batch extremes ----------------------------------------------------------

/// An app paired with its batch total for one resource.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchExtreme {
    pub app: String,
    pub value_pct: f64,
}

/// Largest and smallest batch totals for one resource.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResourceExtremes {
    pub max: BatchExtreme,
    pub min: BatchExtreme,
}

/// Per-resource extremes over the batches of one mode.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchExtremes {
    pub cpu: Option<ResourceExtremes>,
    pub mem: Option<ResourceExtremes>,
}

/// Finds the apps with the largest and smallest batch totals for `mode`.
/// Rows with a null total are skipped per resource; ties go to the
/// lexicographically smaller app name.
pub fn batch_extremes(batches: &[BatchRecord], mode: BatchMode) -> BatchExtremes {
    fn extremes<'a>(
        rows: impl Iterator<Item = (&'a str, f64)>,
    ) -> Option<ResourceExtremes> {
        let mut max: Option<(&str, f64)> = None;
        let mut min: Option<(&str, f64)> = None;
        for (app, value) in rows {
            let better_max = match max {
                None => true,
                Some((best_app, best)) => {
                    value > best || (value == best && app < best_app)
                }
            };
            if better_max {
                max = Some((app, value));
            }
            let better_min = match min {
                None => true,
                Some((best_app, best)) => {
                    value < best || (value == best && app < best_app)
                }
            };
            if better_min {
                min = Some((app, value));
            }
        }
        match (max, min) {
            (Some((max_app, max_v)), Some((min_app, min_v))) => Some(ResourceExtremes {
                max: BatchExtreme {
                    app: max_app.to_string(),
                    value_pct: max_v,
                },
                min: BatchExtreme {
                    app: min_app.to_string(),
                    value_pct: min_v,
                },
            }),
            _ => None,
        }
    }

    let of_mode = || batches.iter().filter(move |b| b.mode == mode);
    BatchExtremes {
        cpu: extremes(
            of_mode().filter_map(|b| b.dcpu_total_pct.map(|v| (b.app.as_str(), v))),
        ),
        mem: extremes(
            of_mode().filter_map(|b| b.dmem_total_pct.map(|v| (b.app.as_str(), v))),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn fixture_dataset() -> ImpactDataset {
        parse_impact_csv(fixtures::individual_impacts_csv()).expect("packaged impact CSV")
    }

    fn fixture_batches() -> Vec<BatchRecord> {
        parse_batch_csv(fixtures::batch_impacts_csv()).expect("packaged batch CSV")
    }

    fn of_mode(batches: &[BatchRecord], mode: BatchMode) -> Vec<BatchRecord> {
        batches.iter().filter(|b| b.mode == mode).cloned().collect()
    }

    fn record(app: &str, kind: SmellKind, totals: (f64, f64)) -> ImpactRecord {
        ImpactRecord {
            app: app.to_string(),
            category: AppCategory::Testing,
            kind,
            instance_count: None,
            dcpu_total_pct: Some(totals.0),
            dmem_total_pct: Some(totals.1),
            dcpu_per_instance: None,
            dmem_per_instance: None,
        }
    }

    #[test]
    fn packaged_individual_fixture_parses() {
        let dataset = fixture_dataset();
        assert_eq!(dataset.len(), 391);
        assert_eq!(dataset.apps().len(), 31);

        let jstock = dataset
            .get("jstock", SmellKind::CyclicDependency)
            .expect("jstock row");
        assert_eq!(jstock.category, AppCategory::Testing);
        assert_eq!(jstock.instance_count, Some(42));
        assert_eq!(jstock.dcpu_total_pct, Some(5.89));
        assert_eq!(jstock.dmem_total_pct, Some(6.16));

        // Partially observed rows keep their nulls rather than zeros.
        let openstack = dataset
            .get("openstack", SmellKind::LongParameter)
            .expect("openstack row");
        assert_eq!(openstack.instance_count, Some(40));
        assert_eq!(openstack.dcpu_total_pct, Some(7.9));
        assert_eq!(openstack.dcpu_per_instance, Some(0.1975));
        assert_eq!(openstack.dmem_total_pct, None);
        assert_eq!(openstack.dmem_per_instance, None);

        let tensorflow = dataset
            .get("tensorflow", SmellKind::CyclicDependency)
            .expect("tensorflow row");
        assert_eq!(tensorflow.instance_count, None);
        assert_eq!(tensorflow.dcpu_per_instance, Some(0.33));
        assert_eq!(tensorflow.dmem_per_instance, Some(0.21));
    }

    #[test]
    fn empty_csv_with_header_is_empty_dataset() {
        let dataset = parse_impact_csv(&format!("{IMPACT_CSV_HEADER}\n")).unwrap();
        assert!(dataset.is_empty());
        // And exports back to just the header.
        let exported = export_impact_csv(&dataset);
        assert_eq!(exported, format!("{IMPACT_CSV_HEADER}\n"));
    }

    #[test]
    fn reordered_header_is_a_schema_mismatch() {
        let text = "app,kind,category,instance_count,dcpu_total_pct,dmem_total_pct,dcpu_per_instance,dmem_per_instance\n";
        match parse_impact_csv(text) {
            Err(ImpactError::SchemaMismatch { expected, .. }) => {
                assert_eq!(expected, IMPACT_CSV_HEADER);
            }
            other => panic!("expected SchemaMismatch, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_total_is_an_invariant_violation() {
        let text = format!(
            "{IMPACT_CSV_HEADER}\nant,parser,god-method,5,-4.27,-2.56,-0.9,-0.512\n"
        );
        match parse_impact_csv(&text) {
            Err(ImpactError::InvariantViolation { row, .. }) => assert_eq!(row, 1),
            other => panic!("expected InvariantViolation, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_app_kind_is_rejected() {
        let text = format!(
            "{IMPACT_CSV_HEADER}\nant,parser,god-method,,,,,\nant,parser,god-method,,,,,\n"
        );
        match parse_impact_csv(&text) {
            Err(ImpactError::DuplicateKey { app, kind }) => {
                assert_eq!(app, "ant");
                assert_eq!(kind, "god-method");
            }
            other => panic!("expected DuplicateKey, got {other:?}"),
        }
    }

    #[test]
    fn conflicting_category_is_rejected() {
        let text = format!(
            "{IMPACT_CSV_HEADER}\nant,parser,god-method,,,,,\nant,editor,lazy-class,,,,,\n"
        );
        match parse_impact_csv(&text) {
            Err(ImpactError::InvariantViolation { row, .. }) => assert_eq!(row, 2),
            other => panic!("expected InvariantViolation, got {other:?}"),
        }
    }

    #[test]
    fn unknown_kind_is_malformed() {
        let text = format!("{IMPACT_CSV_HEADER}\nant,parser,mystery-smell,,,,,\n");
        match parse_impact_csv(&text) {
            Err(ImpactError::Malformed { row, .. }) => assert_eq!(row, 1),
            other => panic!("expected Malformed, got {other:?}"),
        }
    }

    #[test]
    fn packaged_batch_fixture_parses() {
        let batches = fixture_batches();
        assert_eq!(batches.len(), 69);
        let count = |mode| batches.iter().filter(|b| b.mode == mode).count();
        assert_eq!(count(BatchMode::All), 24);
        assert_eq!(count(BatchMode::Improving), 21);
        assert_eq!(count(BatchMode::Worsening), 24);

        for batch in &batches {
            let expected_len = match batch.mode {
                BatchMode::All => 16,
                BatchMode::Improving => 13,
                BatchMode::Worsening => 2,
            };
            assert_eq!(batch.kinds.len(), expected_len, "app {}", batch.app);
            // Canonical order: strictly increasing catalog ordinals.
            assert!(batch
                .kinds
                .windows(2)
                .all(|w| w[0].ordinal() < w[1].ordinal()));
        }
        let worsening = batches
            .iter()
            .find(|b| b.mode == BatchMode::Worsening)
            .unwrap();
        assert_eq!(
            worsening.kinds,
            vec![SmellKind::GodMethod, SmellKind::GodClass]
        );
    }

    #[test]
    fn improving_batches_match_individual_sums_within_published_spread() {
        let dataset = fixture_dataset();
        let improving = of_mode(&fixture_batches(), BatchMode::Improving);
        let report = additivity_report(&dataset, &improving).unwrap();
        assert_eq!(report.rows.len(), 21);

        assert!((report.cpu.min - 0.26).abs() < 1e-9, "cpu min {}", report.cpu.min);
        assert!((report.cpu.max - 1.46).abs() < 1e-9, "cpu max {}", report.cpu.max);
        assert!((report.cpu.mean - 0.61).abs() < 1e-9, "cpu mean {}", report.cpu.mean);
        assert!((report.mem.mean - 0.64).abs() < 5e-3, "mem mean {}", report.mem.mean);

        let min_row = report
            .rows
            .iter()
            .find(|r| r.cpu_deviation == report.cpu.min)
            .unwrap();
        assert_eq!(min_row.app, "jparse");
        let max_row = report
            .rows
            .iter()
            .find(|r| r.cpu_deviation == report.cpu.max)
            .unwrap();
        assert_eq!(max_row.app, "emf");

        // Improving batches improve: observed totals are positive.
        assert!(report.rows.iter().all(|r| r.observed_cpu_pct > 0.0));
    }

    #[test]
    fn worsening_batches_match_individual_sums() {
        let dataset = fixture_dataset();
        let worsening = of_mode(&fixture_batches(), BatchMode::Worsening);
        let report = additivity_report(&dataset, &worsening).unwrap();
        assert_eq!(report.rows.len(), 24);

        assert!((report.cpu.mean - 0.64).abs() < 1e-9, "cpu mean {}", report.cpu.mean);
        assert!((report.mem.mean - 1.47).abs() < 1e-9, "mem mean {}", report.mem.mean);

        let log4j = report.rows.iter().find(|r| r.app == "log4j").unwrap();
        assert!((log4j.predicted_mem_pct - -20.01).abs() < 1e-9);
        assert!((log4j.observed_mem_pct - -19.50).abs() < 1e-9);
        assert!((log4j.mem_deviation - 0.51).abs() < 1e-9);

        // Worsening batches worsen: observed totals are negative.
        assert!(report.rows.iter().all(|r| r.observed_cpu_pct < 0.0));
        assert!(report.rows.iter().all(|r| r.observed_mem_pct < 0.0));
    }

    #[test]
    fn singleton_batch_with_matching_observation_deviates_by_zero() {
        let dataset = ImpactDataset::from_records(vec![record(
            "one",
            SmellKind::DeadCode,
            (2.0, 3.5),
        )])
        .unwrap();
        let batches = vec![BatchRecord {
            app: "one".to_string(),
            mode: BatchMode::Improving,
            kinds: vec![SmellKind::DeadCode],
            dcpu_total_pct: Some(2.0),
            dmem_total_pct: Some(3.5),
        }];
        let report = additivity_report(&dataset, &batches).unwrap();
        assert_eq!(report.rows[0].cpu_deviation, 0.0);
        assert_eq!(report.rows[0].mem_deviation, 0.0);
        assert_eq!(report.cpu.mean, 0.0);
        assert_eq!(report.mem.max, 0.0);
    }

    #[test]
    fn missing_individual_record_is_reported() {
        let dataset = ImpactDataset::from_records(vec![record(
            "one",
            SmellKind::DeadCode,
            (2.0, 3.5),
        )])
        .unwrap();
        let batches = vec![BatchRecord {
            app: "one".to_string(),
            mode: BatchMode::Improving,
            kinds: vec![SmellKind::DeadCode, SmellKind::LazyClass],
            dcpu_total_pct: Some(2.0),
            dmem_total_pct: Some(3.5),
        }];
        match additivity_report(&dataset, &batches) {
            Err(ImpactError::MissingIndividualRecord { app, kind }) => {
                assert_eq!(app, "one");
                assert_eq!(kind, SmellKind::LazyClass);
            }
            other => panic!("expected MissingIndividualRecord, got {other:?}"),
        }
    }

    #[test]
    fn improving_batch_rejects_worsening_kind() {
        let text = format!(
            "{BATCH_CSV_HEADER}\nant,improving,dead-code;god-method,1.0,1.0\n"
        );
        match parse_batch_csv(&text) {
            Err(ImpactError::InvariantViolation { row, reason }) => {
                assert_eq!(row, 1);
                assert!(reason.contains("god-method"), "{reason}");
            }
            other => panic!("expected InvariantViolation, got {other:?}"),
        }
    }

    #[test]
    fn category_profile_averages_email_client_middleman_rows() {
        let dataset = fixture_dataset();
        let profile =
            category_profile(&dataset, AppCategory::EmailClient, SmellKind::Middleman)
                .unwrap();
        assert_eq!(profile.app_count, 2);
        let cpu = profile.mean_dcpu_per_instance.unwrap();
        let mem = profile.mean_dmem_per_instance.unwrap();
        assert!((cpu - 0.08967391304347827).abs() < 1e-12, "cpu {cpu}");
        assert!((mem - 0.19605434782608694).abs() < 1e-12, "mem {mem}");

        // The hand mean of the two underlying rows.
        let emf = dataset.get("emf", SmellKind::Middleman).unwrap();
        let columba = dataset.get("columba", SmellKind::Middleman).unwrap();
        let by_hand =
            (emf.dcpu_per_instance.unwrap() + columba.dcpu_per_instance.unwrap()) / 2.0;
        assert_eq!(cpu, by_hand);
    }

    #[test]
    fn category_profile_of_single_app_equals_that_record() {
        let dataset = fixture_dataset();
        let profile =
            category_profile(&dataset, AppCategory::Cloud, SmellKind::LongParameter)
                .unwrap();
        assert_eq!(profile.app_count, 1);
        assert_eq!(profile.mean_dcpu_per_instance, Some(0.1975));
        // The memory cell was never observed, so the mean stays null.
        assert_eq!(profile.mean_dmem_per_instance, None);
    }

    #[test]
    fn category_profile_without_data_errors() {
        let dataset = fixture_dataset();
        match category_profile(&dataset, AppCategory::Cloud, SmellKind::GodMethod) {
            Err(ImpactError::NoData { category, kind }) => {
                assert_eq!(category, AppCategory::Cloud);
                assert_eq!(kind, SmellKind::GodMethod);
            }
            other => panic!("expected NoData, got {other:?}"),
        }
        // A row that exists but carries no numeric cells is still "no data".
        match category_profile(&dataset, AppCategory::ApiIntegrator, SmellKind::DeadCode) {
            Err(ImpactError::NoData { .. }) => {}
            other => panic!("expected NoData, got {other:?}"),
        }
    }

    #[test]
    fn parser_speculative_generality_rows_sum_to_published_totals() {
        let dataset = fixture_dataset();
        let rows = dataset.rows_matching(AppCategory::Parser, SmellKind::SpeculativeGenerality);
        assert_eq!(rows.len(), 3);
        let cpu: f64 = rows.iter().filter_map(|r| r.dcpu_total_pct).sum();
        let mem: f64 = rows.iter().filter_map(|r| r.dmem_total_pct).sum();
        let instances: u64 = rows.iter().filter_map(|r| r.instance_count).sum();
        assert!((cpu - 4.63).abs() < 1e-9, "cpu {cpu}");
        assert!((mem - 1.47).abs() < 1e-9, "mem {mem}");
        assert_eq!(instances, 76);
    }

    #[test]
    fn all_mode_extremes_match_fixture() {
        let batches = fixture_batches();
        let extremes = batch_extremes(&batches, BatchMode::All);
        let cpu = extremes.cpu.unwrap();
        let mem = extremes.mem.unwrap();
        assert_eq!(cpu.max.app, "ant");
        assert_eq!(cpu.max.value_pct, 30.01);
        assert_eq!(cpu.min.app, "javacc");
        assert_eq!(cpu.min.value_pct, 8.10);
        assert_eq!(mem.max.app, "ant");
        assert_eq!(mem.max.value_pct, 39.70);
        assert_eq!(mem.min.app, "jparse");
        assert_eq!(mem.min.value_pct, 3.50);
    }

    #[test]
    fn fixture_round_trips_through_export() {
        let dataset = fixture_dataset();
        let reparsed = parse_impact_csv(&export_impact_csv(&dataset)).unwrap();
        assert_eq!(dataset, reparsed);

        let batches = fixture_batches();
        let reparsed = parse_batch_csv(&export_batch_csv(&batches)).unwrap();
        assert_eq!(batches, reparsed);
    }

    // --- property tests -----------------------------------------------------

    fn cell() -> impl Strategy<Value = Option<f64>> {
        proptest::option::of((-1000i64..=1000i64).prop_map(|v| v as f64 / 8.0))
    }

    fn arbitrary_records() -> impl Strategy<Value = Vec<ImpactRecord>> {
        // Keys are made unique by construction: one app per index, cycling
        // kinds and categories.
        (proptest::collection::vec((cell(), cell(), 0u64..50), 1..20)).prop_map(|cells| {
            cells
                .into_iter()
                .enumerate()
                .map(|(i, (cpu_total, mem_total, count))| {
                    let kind = SmellKind::ALL[i % 16];
                    let category = AppCategory::ALL[i % 12];
                    // Derive per-instance cells from the totals so the
                    // cross-check invariant holds exactly.
                    let per = |total: Option<f64>| match (total, count) {
                        (Some(t), c) if c >= 1 => Some(t / c as f64),
                        _ => None,
                    };
                    let mut record = ImpactRecord {
                        app: format!("app{i}"),
                        category,
                        kind,
                        instance_count: Some(count),
                        dcpu_total_pct: cpu_total,
                        dmem_total_pct: mem_total,
                        dcpu_per_instance: per(cpu_total),
                        dmem_per_instance: per(mem_total),
                    };
                    if count == 0 {
                        record.instance_count = None;
                    }
                    record
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn export_then_ingest_preserves_every_record(records in arbitrary_records()) {
            // Division keeps the product within one ulp of the total, well
            // inside the 1e-9 gate, so construction always succeeds.
            let dataset = ImpactDataset::from_records(records).unwrap();
            let reparsed = parse_impact_csv(&export_impact_csv(&dataset)).unwrap();
            prop_assert_eq!(dataset, reparsed);
        }

        #[test]
        fn additivity_aggregates_are_exact_functions_of_rows(
            totals in proptest::collection::vec((-100i64..=100i64, -100i64..=100i64), 1..10),
            observed_shift in -5i64..=5i64,
        ) {
            let mut records = Vec::new();
            let mut batches = Vec::new();
            for (i, (cpu, mem)) in totals.iter().enumerate() {
                let app = format!("app{i}");
                records.push(record(&app, SmellKind::DeadCode, (*cpu as f64, *mem as f64)));
                batches.push(BatchRecord {
                    app,
                    mode: BatchMode::Improving,
                    kinds: vec![SmellKind::DeadCode],
                    dcpu_total_pct: Some(*cpu as f64 + observed_shift as f64),
                    dmem_total_pct: Some(*mem as f64),
                });
            }
            let dataset = ImpactDataset::from_records(records).unwrap();
            let report = additivity_report(&dataset, &batches).unwrap();

            let n = report.rows.len() as f64;
            let mean: f64 = report.rows.iter().map(|r| r.cpu_deviation).sum::<f64>() / n;
            prop_assert!((report.cpu.mean - mean).abs() < 1e-12);
            let min = report.rows.iter().map(|r| r.cpu_deviation).fold(f64::INFINITY, f64::min);
            let max = report.rows.iter().map(|r| r.cpu_deviation).fold(f64::NEG_INFINITY, f64::max);
            prop_assert_eq!(report.cpu.min, min);
            prop_assert_eq!(report.cpu.max, max);
            prop_assert!(report.rows.iter().all(|r| r.cpu_deviation >= 0.0));
            prop_assert!(report.rows.iter().all(|r| r.mem_deviation == 0.0));
        }
    }
}
