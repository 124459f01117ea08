//! Genetic feature-subset selection.
//!
//! The full canonical feature set is wider than most measurement campaigns
//! are tall, and its category one-hots are collinear with an intercept, so
//! least-squares families need a subset. The selector here scores a subset
//! by k-fold cross-validated error (mean of the CPU and memory MSEs) and
//! searches subsets with a small generational GA: tournament selection,
//! one-point crossover, per-bit mutation, and single-chromosome elitism.
//!
//! Everything is seeded. The fold assignment is `kfold_indices(n, folds,
//! seed)` and every candidate subset is trained with the same model seed
//! (the GA seed), so an exhaustive search using [`cv_subset_fitness`] with
//! those folds scores subsets exactly as the GA does.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{
    kfold_indices, train_with_features, LabeledExample, ModelKind, PredictError, TrainingConfig,
};

/// Search hyperparameters; the defaults suit feature pools up to a few
/// dozen candidates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct GaConfig {
    pub population: usize,
    pub generations: usize,
    pub mutation_rate: f64,
    pub tournament: usize,
    pub folds: usize,
}

impl Default for GaConfig {
    fn default() -> GaConfig {
        GaConfig {
            population: 30,
            generations: 50,
            mutation_rate: 0.05,
            tournament: 3,
            folds: 5,
        }
    }
}

/// A selected subset with its cross-validated score (lower is better).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureSubset {
    /// Chosen feature names, in candidate-list order.
    pub features: Vec<String>,
    /// Mean over folds of the averaged CPU/memory MSE.
    pub fitness: f64,
}

/// Cross-validated fitness of one explicit subset: for each fold, train on
/// the complement and average the squared errors of both resource heads on
/// the held-out rows; subsets that cannot be trained (or that predict
/// non-finite values) score infinitely bad rather than erroring.
pub fn cv_subset_fitness(
    data: &[LabeledExample],
    features: &[String],
    kind: ModelKind,
    config: &TrainingConfig,
    folds: &[Vec<usize>],
    model_seed: u64,
) -> f64 {
    if features.is_empty() || folds.is_empty() {
        return f64::INFINITY;
    }
    let mut total = 0.0;
    for fold in folds {
        if fold.is_empty() {
            return f64::INFINITY;
        }
        let held: BTreeSet<usize> = fold.iter().copied().collect();
        let train_rows: Vec<LabeledExample> = data
            .iter()
            .enumerate()
            .filter(|(i, _)| !held.contains(i))
            .map(|(_, e)| e.clone())
            .collect();
        let model = match train_with_features(&train_rows, features, kind, config, model_seed) {
            Ok(model) => model,
            Err(_) => return f64::INFINITY,
        };
        let mut sse_cpu = 0.0;
        let mut sse_mem = 0.0;
        for &i in fold {
            match model.predict(&data[i].features) {
                Ok(p) => {
                    sse_cpu += (p.dcpu_pct - data[i].target_dcpu_pct).powi(2);
                    sse_mem += (p.dmem_pct - data[i].target_dmem_pct).powi(2);
                }
                Err(_) => return f64::INFINITY,
            }
        }
        let held_n = fold.len() as f64;
        total += (sse_cpu / held_n + sse_mem / held_n) / 2.0;
    }
    let score = total / folds.len() as f64;
    if score.is_finite() {
        score
    } else {
        f64::INFINITY
    }
}

fn selected_names(candidates: &[String], mask: &[bool]) -> Vec<String> {
    candidates
        .iter()
        .zip(mask)
        .filter(|(_, &on)| on)
        .map(|(name, _)| name.clone())
        .collect()
}

/// Searches subsets of `candidates` minimizing [`cv_subset_fitness`].
///
/// Deterministic in its arguments; the best chromosome ever evaluated wins,
/// even if a later generation drifts away from it.
pub fn ga_select(
    data: &[LabeledExample],
    candidates: &[String],
    kind: ModelKind,
    train_config: &TrainingConfig,
    ga_config: &GaConfig,
    seed: u64,
) -> Result<FeatureSubset, PredictError> {
    if candidates.is_empty() {
        return Err(PredictError::NoFeatures);
    }
    let k = ga_config.folds.max(2);
    if data.len() < k {
        return Err(PredictError::TooFewExamplesForCV {
            folds: k,
            examples: data.len(),
        });
    }
    let folds = kfold_indices(data.len(), k, seed);
    let width = candidates.len();
    let population = ga_config.population.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cache: BTreeMap<Vec<bool>, f64> = BTreeMap::new();
    let score = |mask: &Vec<bool>, cache: &mut BTreeMap<Vec<bool>, f64>| -> f64 {
        if let Some(&known) = cache.get(mask) {
            return known;
        }
        let fitness = cv_subset_fitness(
            data,
            &selected_names(candidates, mask),
            kind,
            train_config,
            &folds,
            seed,
        );
        cache.insert(mask.clone(), fitness);
        fitness
    };

    let repair = |mask: &mut Vec<bool>, rng: &mut ChaCha8Rng| {
        if mask.iter().all(|&b| !b) {
            let bit = rng.gen_range(0..mask.len());
            mask[bit] = true;
        }
    };

    let mut current: Vec<Vec<bool>> = (0..population)
        .map(|_| {
            let mut mask: Vec<bool> = (0..width).map(|_| rng.gen_bool(0.5)).collect();
            repair(&mut mask, &mut rng);
            mask
        })
        .collect();

    let mut best_mask: Option<Vec<bool>> = None;
    let mut best_fitness = f64::INFINITY;
    for _generation in 0..=ga_config.generations {
        let fitnesses: Vec<f64> = current.iter().map(|m| score(m, &mut cache)).collect();
        for (mask, &fitness) in current.iter().zip(&fitnesses) {
            if fitness < best_fitness || best_mask.is_none() {
                best_fitness = fitness;
                best_mask = Some(mask.clone());
            }
        }
        if _generation == ga_config.generations {
            break;
        }

        let elite = fitnesses
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let mut next = Vec::with_capacity(population);
        next.push(current[elite].clone());
        let tournament = |rng: &mut ChaCha8Rng| -> usize {
            let mut winner = rng.gen_range(0..population);
            for _ in 1..ga_config.tournament.max(1) {
                let rival = rng.gen_range(0..population);
                if fitnesses[rival] < fitnesses[winner] {
                    winner = rival;
                }
            }
            winner
        };
        while next.len() < population {
            let mother = tournament(&mut rng);
            let father = tournament(&mut rng);
            let mut child: Vec<bool> = if width >= 2 {
                let cut = rng.gen_range(1..width);
                current[mother][..cut]
                    .iter()
                    .chain(&current[father][cut..])
                    .copied()
                    .collect()
            } else {
                current[mother].clone()
            };
            for bit in child.iter_mut() {
                if rng.gen_bool(ga_config.mutation_rate) {
                    *bit = !*bit;
                }
            }
            repair(&mut child, &mut rng);
            next.push(child);
        }
        current = next;
    }

    let mask = best_mask.expect("population is nonempty");
    Ok(FeatureSubset {
        features: selected_names(candidates, &mask),
        fitness: best_fitness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::SmellKind;
    use crate::impact::AppCategory;
    use crate::predictor::FeatureVector;

    /// Synthetic examples whose targets depend linearly on a few smell
    /// counts, with seeded noise, so the best subset is knowable.
    fn count_dataset(
        seed: u64,
        n: usize,
        coefficients: &[(SmellKind, f64)],
        pool: &[SmellKind],
        noise: f64,
    ) -> Vec<LabeledExample> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|i| {
                let mut features = FeatureVector::empty(AppCategory::Testing);
                for kind in pool {
                    features.smell_counts.insert(*kind, rng.gen_range(0..10));
                }
                let signal: f64 = coefficients
                    .iter()
                    .map(|(kind, c)| c * features.smell_counts[kind] as f64)
                    .sum();
                let y = signal + noise * rng.gen_range(-1.0..1.0);
                LabeledExample {
                    app: format!("synthetic-{i}"),
                    features,
                    target_dcpu_pct: y,
                    target_dmem_pct: y + noise * rng.gen_range(-1.0..1.0),
                }
            })
            .collect()
    }

    fn names(pool: &[SmellKind]) -> Vec<String> {
        pool.iter().map(|k| k.name().to_string()).collect()
    }

    const POOL: [SmellKind; 6] = [
        SmellKind::CyclicDependency,
        SmellKind::GodMethod,
        SmellKind::GodClass,
        SmellKind::DeadCode,
        SmellKind::LongParameter,
        SmellKind::Middleman,
    ];

    #[test]
    fn sole_candidate_is_selected() {
        let data = count_dataset(1, 12, &[(SmellKind::DeadCode, 2.0)], &POOL, 0.1);
        let chosen = ga_select(
            &data,
            &names(&POOL[3..4]),
            ModelKind::Linear,
            &TrainingConfig::default(),
            &GaConfig::default(),
            7,
        )
        .unwrap();
        assert_eq!(chosen.features, vec!["dead-code".to_string()]);
        assert!(chosen.fitness.is_finite());
    }

    #[test]
    fn signal_feature_is_kept_and_scores_better_than_a_noise_feature() {
        let data = count_dataset(2, 25, &[(SmellKind::DeadCode, 3.0)], &POOL, 0.05);
        let chosen = ga_select(
            &data,
            &names(&POOL),
            ModelKind::Linear,
            &TrainingConfig::default(),
            &GaConfig::default(),
            11,
        )
        .unwrap();
        assert!(
            chosen.features.contains(&"dead-code".to_string()),
            "selected {:?}",
            chosen.features
        );
        let folds = kfold_indices(data.len(), 5, 11);
        let noise_only = cv_subset_fitness(
            &data,
            &names(&POOL[..1]),
            ModelKind::Linear,
            &TrainingConfig::default(),
            &folds,
            11,
        );
        assert!(chosen.fitness < noise_only);
    }

    #[test]
    fn matches_exhaustive_enumeration_over_a_small_pool() {
        let data = count_dataset(
            3,
            18,
            &[(SmellKind::GodMethod, 1.5), (SmellKind::Middleman, -0.75)],
            &POOL,
            0.2,
        );
        let candidates = names(&POOL);
        let config = GaConfig::default();
        let seed = 19;
        let chosen = ga_select(
            &data,
            &candidates,
            ModelKind::Linear,
            &TrainingConfig::default(),
            &config,
            seed,
        )
        .unwrap();

        let folds = kfold_indices(data.len(), config.folds, seed);
        let mut best: Option<(Vec<String>, f64)> = None;
        for mask_bits in 1u32..(1 << candidates.len()) {
            let subset: Vec<String> = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask_bits >> i & 1 == 1)
                .map(|(_, name)| name.clone())
                .collect();
            let fitness = cv_subset_fitness(
                &data,
                &subset,
                ModelKind::Linear,
                &TrainingConfig::default(),
                &folds,
                seed,
            );
            if best.as_ref().map_or(true, |(_, f)| fitness < *f) {
                best = Some((subset, fitness));
            }
        }
        let (best_subset, best_fitness) = best.unwrap();
        assert_eq!(chosen.fitness.to_bits(), best_fitness.to_bits());
        assert_eq!(chosen.features, best_subset);
    }

    #[test]
    fn selection_is_deterministic_per_seed() {
        let data = count_dataset(4, 20, &[(SmellKind::GodClass, 2.5)], &POOL, 0.3);
        let run = || {
            ga_select(
                &data,
                &names(&POOL),
                ModelKind::Linear,
                &TrainingConfig::default(),
                &GaConfig::default(),
                23,
            )
            .unwrap()
        };
        let a = run();
        let b = run();
        assert_eq!(a.features, b.features);
        assert_eq!(a.fitness.to_bits(), b.fitness.to_bits());
    }

    #[test]
    fn input_guards() {
        let data = count_dataset(5, 10, &[(SmellKind::DeadCode, 1.0)], &POOL, 0.1);
        assert!(matches!(
            ga_select(
                &data,
                &[],
                ModelKind::Linear,
                &TrainingConfig::default(),
                &GaConfig::default(),
                1,
            ),
            Err(PredictError::NoFeatures)
        ));
        assert!(matches!(
            ga_select(
                &data[..3],
                &names(&POOL),
                ModelKind::Linear,
                &TrainingConfig::default(),
                &GaConfig::default(),
                1,
            ),
            Err(PredictError::TooFewExamplesForCV {
                folds: 5,
                examples: 3
            })
        ));
    }
}
