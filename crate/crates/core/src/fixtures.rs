//! Data packaged with the crate: a small hand-labeled source corpus for
//! exercising the detector end to end, and the reference measurement dataset
//! (per-kind refactoring impacts, batch observations, and app-level metrics
//! for 31 applications) used to fit and evaluate the predictors.

use crate::detector::{parse_unit, Corpus, LanguageFlavor};

/// The labeled corpus: sixteen java-like files, one smell kind each, written
/// so every detector fires exactly where the manifest says it does.
pub const CORPUS_FILES: &[(&str, &str)] = &[
    ("CycleHub.java", include_str!("../fixtures/corpus/CycleHub.java")),
    ("DeadCode.java", include_str!("../fixtures/corpus/DeadCode.java")),
    ("DupBlocks.java", include_str!("../fixtures/corpus/DupBlocks.java")),
    ("GodClass.java", include_str!("../fixtures/corpus/GodClass.java")),
    ("GodMethod.java", include_str!("../fixtures/corpus/GodMethod.java")),
    ("LazyClass.java", include_str!("../fixtures/corpus/LazyClass.java")),
    ("LongParams.java", include_str!("../fixtures/corpus/LongParams.java")),
    ("LongStatement.java", include_str!("../fixtures/corpus/LongStatement.java")),
    ("Middleman.java", include_str!("../fixtures/corpus/Middleman.java")),
    ("Orphan.java", include_str!("../fixtures/corpus/Orphan.java")),
    ("Primitives.java", include_str!("../fixtures/corpus/Primitives.java")),
    ("RefusedBequest.java", include_str!("../fixtures/corpus/RefusedBequest.java")),
    ("Shotgun.java", include_str!("../fixtures/corpus/Shotgun.java")),
    ("Spaghetti.java", include_str!("../fixtures/corpus/Spaghetti.java")),
    ("Speculative.java", include_str!("../fixtures/corpus/Speculative.java")),
    ("TempField.java", include_str!("../fixtures/corpus/TempField.java")),
];

/// Hand-built ground truth for [`CORPUS_FILES`]: units, dependency edges,
/// the full expected instance list, and the aggregate feature vector.
pub fn corpus_manifest_json() -> &'static str {
    include_str!("../fixtures/corpus_manifest.json")
}

/// Parses the labeled corpus into a [`Corpus`]. Infallible by construction.
pub fn labeled_corpus() -> Corpus {
    let mut units: Vec<_> = CORPUS_FILES
        .iter()
        .map(|(path, text)| {
            parse_unit(path, text, LanguageFlavor::JavaLike)
                .unwrap_or_else(|e| panic!("packaged corpus file {path} must parse: {e}"))
        })
        .collect();
    units.sort_by(|a, b| a.path.cmp(&b.path));
    Corpus { units, flavor: LanguageFlavor::JavaLike, skipped: Vec::new() }
}

/// Per-app, per-kind refactoring impact records (CSV, individual schema).
pub fn individual_impacts_csv() -> &'static str {
    include_str!("../fixtures/measurements/individual.csv")
}

/// Batch refactoring observations (CSV, batch schema).
pub fn batch_impacts_csv() -> &'static str {
    include_str!("../fixtures/measurements/batches.csv")
}

/// Per-app smell counts, size metrics, and observed per-instance deltas —
/// the training table for the predictors (CSV).
pub fn bench_table_csv() -> &'static str {
    include_str!("../fixtures/measurements/bench.csv")
}

/// Reference per-kind memory-model scores for five model families (CSV).
pub fn memory_model_scores_csv() -> &'static str {
    include_str!("../fixtures/measurements/memory_model_scores.csv")
}

/// Reference opaque-predictor mean differences per kind (CSV).
pub fn mean_difference_csv() -> &'static str {
    include_str!("../fixtures/measurements/mean_difference.csv")
}

/// Reference model-comparison baselines (naive vs multivariate fits, JSON).
pub fn baseline_metrics_json() -> &'static str {
    include_str!("../fixtures/measurements/baseline_metrics.json")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_parses_into_sixteen_units() {
        let corpus = labeled_corpus();
        assert_eq!(corpus.units.len(), 16);
        assert!(corpus.skipped.is_empty());
        assert!(corpus.units.windows(2).all(|w| w[0].path < w[1].path));
    }

    #[test]
    fn manifest_is_valid_json() {
        let v: serde_json::Value = serde_json::from_str(corpus_manifest_json()).unwrap();
        assert_eq!(v["units"].as_array().unwrap().len(), 16);
        assert_eq!(v["instances"].as_array().unwrap().len(), 21);
    }

    #[test]
    fn measurement_tables_have_expected_shape() {
        assert_eq!(individual_impacts_csv().lines().count(), 392);
        assert_eq!(batch_impacts_csv().lines().count(), 70);
        assert_eq!(bench_table_csv().lines().count(), 32);
        assert_eq!(memory_model_scores_csv().lines().count(), 31);
    }
}
