//! Structural code-smell detection.
//!
//! The detector parses a source tree at declaration/reference depth (no type
//! checking, no full grammar): packages, imports, classes with inheritance,
//! methods with parameter lists, fields, and name-resolved references between
//! them. Sixteen rule-based detectors run over that model plus the token
//! stream and emit [`SmellInstance`]s in a canonical order, so two runs over
//! the same tree are byte-identical.
//!
//! Unresolved names (library types, dynamic calls) are ignored rather than
//! guessed, which makes every rule conservatively under-approximate.

mod graph;
mod parse;
mod refs;
mod rules;
mod source;

pub use graph::{build_dependency_graph, find_cycles, Cycle, DependencyGraph};
pub use source::{tokenize, Token};

use crate::catalog::SmellKind;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Which comment/block syntax the corpus uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LanguageFlavor {
    JavaLike,
    PythonLike,
}

impl fmt::Display for LanguageFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LanguageFlavor::JavaLike => "java",
            LanguageFlavor::PythonLike => "python",
        })
    }
}

impl std::str::FromStr for LanguageFlavor {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "java" | "java-like" => Ok(LanguageFlavor::JavaLike),
            "python" | "python-like" => Ok(LanguageFlavor::PythonLike),
            other => Err(format!("unknown language flavor `{other}` (expected java or python)")),
        }
    }
}

#[derive(Debug, Error)]
pub enum DetectorError {
    #[error("no source units found in the given paths")]
    EmptyCorpus,
    #[error("cannot read {path}: {reason}")]
    IoFailure { path: String, reason: String },
    #[error("invalid rule configuration: {0}")]
    BadRuleConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Visibility {
    Public,
    Protected,
    Package,
    Private,
}

#[derive(Debug, Clone)]
pub struct ParamRecord {
    pub name: String,
    /// Best-effort declared type (simple name); only used to resolve
    /// receivers of member calls, so unknown types are harmless.
    pub type_name: String,
}

#[derive(Debug, Clone)]
pub struct MethodRecord {
    pub name: String,
    pub params: Vec<ParamRecord>,
    pub visibility: Visibility,
    pub is_static: bool,
    pub is_constructor: bool,
    /// False for abstract/interface methods.
    pub has_body: bool,
    pub line_span: (usize, usize),
    /// Half-open token range of the body (inside the braces / the suite).
    pub(crate) body_tokens: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct FieldRecord {
    pub name: String,
    pub type_name: String,
    pub visibility: Visibility,
    pub is_static: bool,
    pub is_final: bool,
    pub line: usize,
    /// Half-open token range of the initializer expression, empty if none.
    pub(crate) init_tokens: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct ClassRecord {
    pub name: String,
    pub is_interface: bool,
    pub is_abstract: bool,
    /// True for the synthetic holder of module-level functions in
    /// python-like units; exempt from class-level rules.
    pub is_module_scope: bool,
    pub extends: Option<String>,
    pub implements: Vec<String>,
    pub line_span: (usize, usize),
    pub methods: Vec<MethodRecord>,
    pub fields: Vec<FieldRecord>,
}

#[derive(Debug, Clone)]
pub struct SourceUnit {
    /// Path relative to the ingest root, forward slashes.
    pub path: String,
    pub package: String,
    pub imports: Vec<String>,
    pub classes: Vec<ClassRecord>,
    /// Total physical lines.
    pub line_count: usize,
    /// Lines carrying at least one token (non-blank, non-comment-only).
    pub nloc: usize,
    pub(crate) tokens: Vec<Token>,
    pub(crate) code_lines: BTreeSet<usize>,
}

#[derive(Debug, Clone)]
pub struct SkippedUnit {
    pub path: String,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    /// Sorted by path; paths are unique.
    pub units: Vec<SourceUnit>,
    pub flavor: LanguageFlavor,
    pub skipped: Vec<SkippedUnit>,
}

/// One detected smell occurrence with the metric values the rule consulted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmellInstance {
    pub kind: SmellKind,
    pub unit_path: String,
    pub entity_name: String,
    /// Inclusive 1-based line range.
    pub line_span: (usize, usize),
    pub evidence: BTreeMap<String, i64>,
}

/// Thresholds for the rule-based detectors. Comparison directions are fixed
/// (documented per field); only the boundary values are configurable.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RuleConfig {
    /// long-parameter fires when parameter_count > this.
    pub long_parameter_max_params: usize,
    /// god-method fires when method nloc > this.
    pub god_method_min_nloc: usize,
    /// god-class fires when class nloc > this.
    pub god_class_min_nloc: usize,
    /// lazy-class fires when class nloc < this AND wmc < lazy_class_max_wmc.
    pub lazy_class_max_nloc: usize,
    pub lazy_class_max_wmc: usize,
    /// duplicate-code compares sliding windows of exactly this many tokens.
    pub duplicate_window_tokens: usize,
    /// shotgun-surgery fires when >= this many distinct other classes
    /// reference one method.
    pub shotgun_min_referencing_classes: usize,
    /// long-statement fires when a statement exceeds this many tokens...
    pub long_statement_max_tokens: usize,
    /// ...or a switch exceeds this many cases.
    pub long_statement_max_cases: usize,
    /// spaghetti-code fires when method nloc AND complexity both exceed.
    pub spaghetti_min_nloc: usize,
    pub spaghetti_min_complexity: usize,
    /// refused-bequest fires when used/inherited < this ratio.
    pub refused_bequest_usage_ratio: f64,
    /// middleman fires when delegations/methods > this ratio.
    pub middleman_delegation_ratio: f64,
    /// primitive-obsession fires on >= this many same-prefix primitive fields.
    pub primitive_obsession_min_prefix_fields: usize,
    /// orphan-variable fires when >= this many other classes use a constant
    /// its own class never touches.
    pub orphan_min_external_classes: usize,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig {
            long_parameter_max_params: 5,
            god_method_min_nloc: 100,
            god_class_min_nloc: 1000,
            lazy_class_max_nloc: 20,
            lazy_class_max_wmc: 3,
            duplicate_window_tokens: 25,
            shotgun_min_referencing_classes: 7,
            long_statement_max_tokens: 120,
            long_statement_max_cases: 10,
            spaghetti_min_nloc: 40,
            spaghetti_min_complexity: 15,
            refused_bequest_usage_ratio: 1.0 / 3.0,
            middleman_delegation_ratio: 0.5,
            primitive_obsession_min_prefix_fields: 3,
            orphan_min_external_classes: 2,
        }
    }
}

impl RuleConfig {
    pub fn validate(&self) -> Result<(), DetectorError> {
        let counts = [
            ("long_parameter_max_params", self.long_parameter_max_params),
            ("god_method_min_nloc", self.god_method_min_nloc),
            ("god_class_min_nloc", self.god_class_min_nloc),
            ("lazy_class_max_nloc", self.lazy_class_max_nloc),
            ("lazy_class_max_wmc", self.lazy_class_max_wmc),
            ("duplicate_window_tokens", self.duplicate_window_tokens),
            ("shotgun_min_referencing_classes", self.shotgun_min_referencing_classes),
            ("long_statement_max_tokens", self.long_statement_max_tokens),
            ("long_statement_max_cases", self.long_statement_max_cases),
            ("spaghetti_min_nloc", self.spaghetti_min_nloc),
            ("spaghetti_min_complexity", self.spaghetti_min_complexity),
            ("primitive_obsession_min_prefix_fields", self.primitive_obsession_min_prefix_fields),
            ("orphan_min_external_classes", self.orphan_min_external_classes),
        ];
        for (name, v) in counts {
            if v == 0 {
                return Err(DetectorError::BadRuleConfig(format!("{name} must be positive")));
            }
        }
        for (name, v) in [
            ("refused_bequest_usage_ratio", self.refused_bequest_usage_ratio),
            ("middleman_delegation_ratio", self.middleman_delegation_ratio),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(DetectorError::BadRuleConfig(format!("{name} must be a positive number")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MethodMetrics {
    pub nloc: usize,
    pub parameter_count: usize,
    /// 1 + branch keywords in the body (a bodiless method counts 1).
    pub complexity: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassMetrics {
    pub nloc: usize,
    /// Sum of method complexities, so wmc >= method_count.
    pub wmc: usize,
    pub fan_in: usize,
    pub fan_out: usize,
    pub method_count: usize,
}

/// Per-entity metrics keyed by `unit_path::Class` / `unit_path::Class.method`.
#[derive(Debug, Clone, Default)]
pub struct MetricsTable {
    pub classes: BTreeMap<String, ClassMetrics>,
    pub methods: BTreeMap<String, MethodMetrics>,
    pub unit_nloc: BTreeMap<String, usize>,
}

impl SourceUnit {
    /// Lines in `span` (inclusive) that carry at least one token.
    pub(crate) fn nloc_in(&self, span: (usize, usize)) -> usize {
        self.code_lines.range(span.0..=span.1).count()
    }
}

impl ClassRecord {
    pub(crate) fn is_abstract_type(&self) -> bool {
        self.is_interface || self.is_abstract
    }
}

/// Reads every matching source file under `paths` into a deterministic
/// [`Corpus`]. Directories are walked recursively collecting `.java` or `.py`
/// files by flavor; files passed directly are ingested regardless of
/// extension. Unit paths are relative to the root they were found under.
pub fn ingest_corpus(paths: &[PathBuf], flavor: LanguageFlavor) -> Result<Corpus, DetectorError> {
    if paths.is_empty() {
        return Err(DetectorError::EmptyCorpus);
    }
    let ext = match flavor {
        LanguageFlavor::JavaLike => "java",
        LanguageFlavor::PythonLike => "py",
    };
    let mut found: Vec<(String, PathBuf)> = Vec::new();
    for root in paths {
        let meta = std::fs::metadata(root).map_err(|e| DetectorError::IoFailure {
            path: root.display().to_string(),
            reason: e.to_string(),
        })?;
        if meta.is_dir() {
            collect_files(root, root, ext, &mut found)?;
        } else {
            let rel = root
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_else(|| root.display().to_string());
            found.push((rel, root.clone()));
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    for pair in found.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(DetectorError::IoFailure {
                path: pair[1].0.clone(),
                reason: "duplicate unit path across ingest roots".into(),
            });
        }
    }
    let mut units = Vec::new();
    let mut skipped = Vec::new();
    for (rel, abs) in found {
        let text = std::fs::read_to_string(&abs).map_err(|e| DetectorError::IoFailure {
            path: abs.display().to_string(),
            reason: e.to_string(),
        })?;
        match parse_unit(&rel, &text, flavor) {
            Ok(unit) => units.push(unit),
            Err(reason) => skipped.push(SkippedUnit { path: rel, reason }),
        }
    }
    if units.is_empty() {
        return Err(DetectorError::EmptyCorpus);
    }
    Ok(Corpus { units, flavor, skipped })
}

fn collect_files(
    root: &Path,
    dir: &Path,
    ext: &str,
    out: &mut Vec<(String, PathBuf)>,
) -> Result<(), DetectorError> {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| DetectorError::IoFailure {
            path: dir.display().to_string(),
            reason: e.to_string(),
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .collect();
    entries.sort();
    for entry in entries {
        if entry.is_dir() {
            collect_files(root, &entry, ext, out)?;
        } else if entry.extension().map(|e| e == ext).unwrap_or(false) {
            let rel = entry
                .strip_prefix(root)
                .unwrap_or(&entry)
                .components()
                .map(|c| c.as_os_str().to_string_lossy())
                .collect::<Vec<_>>()
                .join("/");
            out.push((rel, entry));
        }
    }
    Ok(())
}

/// Parses one file into a [`SourceUnit`]; `Err` carries the skip reason.
pub fn parse_unit(rel_path: &str, text: &str, flavor: LanguageFlavor) -> Result<SourceUnit, String> {
    let tokens = source::tokenize(text, flavor);
    let code_lines: BTreeSet<usize> = tokens.iter().map(|t| t.line).collect();
    let line_count = text.lines().count().max(1);
    let (package, imports, classes) = match flavor {
        LanguageFlavor::JavaLike => parse::parse_java(rel_path, &tokens)?,
        LanguageFlavor::PythonLike => parse::parse_python(rel_path, text, &tokens)?,
    };
    Ok(SourceUnit {
        path: rel_path.to_string(),
        package,
        imports,
        classes,
        line_count,
        nloc: code_lines.len(),
        tokens,
        code_lines,
    })
}

/// Computes nloc/complexity/parameter-count per method and nloc/wmc/fan-in/
/// fan-out per class. Fan metrics count distinct other classes linked by
/// resolved references (inheritance included).
pub fn compute_metrics(corpus: &Corpus) -> MetricsTable {
    let index = refs::build(corpus);
    let mut table = MetricsTable::default();
    for unit in &corpus.units {
        table.unit_nloc.insert(unit.path.clone(), unit.nloc);
        for class in &unit.classes {
            let ckey = format!("{}::{}", unit.path, class.name);
            let mut wmc = 0usize;
            for method in &class.methods {
                let complexity = method_complexity(unit, method, corpus.flavor);
                wmc += complexity;
                let mut mkey = format!("{}.{}", ckey, method.name);
                let mut n = 2;
                while table.methods.contains_key(&mkey) {
                    mkey = format!("{}.{}#{}", ckey, method.name, n);
                    n += 1;
                }
                table.methods.insert(
                    mkey,
                    MethodMetrics {
                        nloc: unit.nloc_in(method.line_span),
                        parameter_count: method.params.len(),
                        complexity,
                    },
                );
            }
            table.classes.insert(
                ckey.clone(),
                ClassMetrics {
                    nloc: unit.nloc_in(class.line_span),
                    wmc,
                    fan_in: index.fan_in(&ckey),
                    fan_out: index.fan_out(&ckey),
                    method_count: class.methods.len(),
                },
            );
        }
    }
    table
}

const JAVA_BRANCH_KEYWORDS: &[&str] = &["if", "for", "while", "case", "catch"];
const PY_BRANCH_KEYWORDS: &[&str] = &["if", "elif", "for", "while", "except"];

pub(crate) fn method_complexity(unit: &SourceUnit, method: &MethodRecord, flavor: LanguageFlavor) -> usize {
    if !method.has_body {
        return 1;
    }
    let keywords = match flavor {
        LanguageFlavor::JavaLike => JAVA_BRANCH_KEYWORDS,
        LanguageFlavor::PythonLike => PY_BRANCH_KEYWORDS,
    };
    let (start, end) = method.body_tokens;
    1 + unit.tokens[start..end]
        .iter()
        .filter(|t| keywords.contains(&t.text.as_str()))
        .count()
}

/// Runs all sixteen detectors and returns instances sorted by
/// (unit_path, line start, kind, entity) — the canonical order.
pub fn detect_smells(corpus: &Corpus, config: &RuleConfig) -> Result<Vec<SmellInstance>, DetectorError> {
    config.validate()?;
    let metrics = compute_metrics(corpus);
    let index = refs::build(corpus);
    let mut instances = rules::run_all(corpus, config, &metrics, &index);
    instances.sort_by(|a, b| {
        (a.unit_path.as_str(), a.line_span.0, a.kind.ordinal(), a.entity_name.as_str()).cmp(&(
            b.unit_path.as_str(),
            b.line_span.0,
            b.kind.ordinal(),
            b.entity_name.as_str(),
        ))
    });
    Ok(instances)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn java_unit(text: &str) -> SourceUnit {
        parse_unit("Test.java", text, LanguageFlavor::JavaLike).unwrap()
    }

    pub(crate) fn java_corpus(files: &[(&str, &str)]) -> Corpus {
        let units = files
            .iter()
            .map(|(p, t)| parse_unit(p, t, LanguageFlavor::JavaLike).unwrap())
            .collect();
        Corpus { units, flavor: LanguageFlavor::JavaLike, skipped: Vec::new() }
    }

    #[test]
    fn single_class_structural_readoff() {
        let unit = java_unit("package p;\npublic class A {\n    public int m(int a, int b) {\n        return a + b;\n    }\n}\n");
        assert_eq!(unit.package, "p");
        assert_eq!(unit.classes.len(), 1);
        let class = &unit.classes[0];
        assert_eq!(class.name, "A");
        assert_eq!(class.methods.len(), 1);
        assert_eq!(class.methods[0].params.len(), 2);
        assert_eq!(class.line_span, (2, 6));
    }

    #[test]
    fn empty_paths_is_empty_corpus() {
        match ingest_corpus(&[], LanguageFlavor::JavaLike) {
            Err(DetectorError::EmptyCorpus) => {}
            other => panic!("expected EmptyCorpus, got {other:?}"),
        }
    }

    #[test]
    fn empty_directory_is_empty_corpus() {
        let dir = tempfile::tempdir().unwrap();
        match ingest_corpus(&[dir.path().to_path_buf()], LanguageFlavor::JavaLike) {
            Err(DetectorError::EmptyCorpus) => {}
            other => panic!("expected EmptyCorpus, got {other:?}"),
        }
    }

    #[test]
    fn complexity_is_one_plus_branch_keywords() {
        let unit = java_unit(
            "package p;\npublic class A {\n    public int m(int a) {\n        if (a > 1) { a = 2; }\n        if (a > 3) { a = 4; }\n        for (int i = 0; i < 2; i = i + 1) { a = a + i; }\n        return a;\n    }\n}\n",
        );
        let corpus = Corpus { units: vec![unit], flavor: LanguageFlavor::JavaLike, skipped: vec![] };
        let table = compute_metrics(&corpus);
        assert_eq!(table.methods["Test.java::A.m"].complexity, 4);
    }

    #[test]
    fn wmc_is_sum_of_method_complexities() {
        let unit = java_unit(
            "package p;\npublic class A {\n    public void a() { int x = 0; }\n    public void b() { if (1 > 0) { int x = 0; } }\n    public void c(int k) {\n        if (k > 0) { k = 1; }\n        while (k > 2) { k = k - 1; }\n        if (k > 4) { k = 5; }\n    }\n}\n",
        );
        let corpus = Corpus { units: vec![unit], flavor: LanguageFlavor::JavaLike, skipped: vec![] };
        let table = compute_metrics(&corpus);
        // complexities 1, 2, 4
        assert_eq!(table.classes["Test.java::A"].wmc, 7);
        let class = &table.classes["Test.java::A"];
        assert!(class.wmc >= class.method_count);
    }

    #[test]
    fn entity_spans_stay_within_line_count() {
        let unit = java_unit("package p;\npublic class A {\n    public void m() { int x = 0; }\n}\n");
        for class in &unit.classes {
            assert!(class.line_span.0 >= 1 && class.line_span.1 <= unit.line_count);
            for m in &class.methods {
                assert!(m.line_span.0 >= class.line_span.0 && m.line_span.1 <= class.line_span.1);
            }
        }
    }

    #[test]
    fn bad_rule_config_rejected() {
        let corpus = java_corpus(&[("A.java", "package p;\npublic class A {\n}\n")]);
        let config = RuleConfig { duplicate_window_tokens: 0, ..RuleConfig::default() };
        match detect_smells(&corpus, &config) {
            Err(DetectorError::BadRuleConfig(msg)) => assert!(msg.contains("duplicate_window_tokens")),
            other => panic!("expected BadRuleConfig, got {other:?}"),
        }
    }

    #[test]
    fn rules_toml_round_trip_with_defaults() {
        let config: RuleConfig = toml::from_str("god_method_min_nloc = 50\n").unwrap();
        assert_eq!(config.god_method_min_nloc, 50);
        assert_eq!(config.long_parameter_max_params, 5);
        assert!(toml::from_str::<RuleConfig>("no_such_threshold = 1\n").is_err());
    }
}
