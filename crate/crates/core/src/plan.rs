//! Batch-refactoring planning.
//!
//! Given a smell inventory (what a codebase actually contains) and at least
//! one impact source — a measured per-instance impact dataset, a trained
//! model, or both — [`plan_batch`] splits the inventory's kinds into an
//! include list and an exclude list under a stated resource objective, and
//! attaches per-kind and whole-plan impact estimates.
//!
//! Sign convention throughout: positive deltas are improvements (resource
//! usage went down), negative deltas are regressions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{improves_both, worsens_both, SmellKind};
use crate::detector::SmellInstance;
use crate::impact::{category_profile, kind_mean_per_instance, AppCategory, ImpactDataset};
use crate::predictor::{FeatureVector, ImpactPrediction, PredictError, TrainedModel};

/// What the batch should optimize for.
///
/// The budget is a cap, in percent, on predicted memory worsening and is
/// only consulted for [`Objective::CpuOnly`] (the one mode that trades
/// memory away for CPU).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum Objective {
    /// Only kinds that improve both resources.
    MinimizeBoth,
    /// CPU improvements, accepting bounded memory cost.
    CpuOnly {
        #[serde(default)]
        budget: Option<f64>,
    },
    /// Only kinds that improve memory.
    MemoryOnly,
    /// Refactor everything; the plan reports the resource cost.
    MaintainabilityFirst,
}

impl Objective {
    pub fn mode_name(&self) -> &'static str {
        match self {
            Objective::MinimizeBoth => "minimize-both",
            Objective::CpuOnly { .. } => "cpu-only",
            Objective::MemoryOnly => "memory-only",
            Objective::MaintainabilityFirst => "maintainability-first",
        }
    }
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.mode_name())
    }
}

/// Error for an objective name outside the four modes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown objective `{0}` (expected minimize-both, cpu-only, memory-only, or maintainability-first)")]
pub struct UnknownObjective(pub String);

impl std::str::FromStr for Objective {
    type Err = UnknownObjective;

    /// Parses the mode name; a budget, if any, is attached separately.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "minimize-both" => Ok(Objective::MinimizeBoth),
            "cpu-only" => Ok(Objective::CpuOnly { budget: None }),
            "memory-only" => Ok(Objective::MemoryOnly),
            "maintainability-first" => Ok(Objective::MaintainabilityFirst),
            other => Err(UnknownObjective(other.to_string())),
        }
    }
}

/// Measured impact data to plan from: per-instance means are taken from the
/// app's own category when known (falling back to the kind-wide mean when
/// the category has no data for a kind).
#[derive(Debug, Clone, Copy)]
pub struct DatasetSource<'a> {
    pub dataset: &'a ImpactDataset,
    pub category: Option<AppCategory>,
}

/// A trained model plus the feature vector of the app being planned.
#[derive(Debug, Clone, Copy)]
pub struct ModelSource<'a> {
    pub model: &'a TrainedModel,
    pub base: &'a FeatureVector,
}

/// At least one of the two must be present.
#[derive(Debug, Clone, Copy, Default)]
pub struct ImpactSource<'a> {
    pub dataset: Option<DatasetSource<'a>>,
    pub model: Option<ModelSource<'a>>,
}

/// Additive (dataset-derived) total estimate; a component is `None` when no
/// measured per-instance figure exists for it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdditiveEstimate {
    pub dcpu_total_pct: Option<f64>,
    pub dmem_total_pct: Option<f64>,
}

/// One inventory kind with everything the planner worked out about it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KindAssessment {
    pub kind: SmellKind,
    pub instance_count: u64,
    /// Per-instance mean × count, when the dataset knows the kind.
    pub additive: Option<AdditiveEstimate>,
    /// Model attribution: prediction with the kind's instances present
    /// minus prediction with them absent, when a model is supplied.
    pub model_delta: Option<ImpactPrediction>,
    /// Set when the model attribution and additive estimate disagree in
    /// sign for either resource. Such kinds stay excluded under every
    /// minimizing objective.
    pub mixed_unknown: bool,
    pub rationale: String,
}

/// Whole-plan estimates over the included kinds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanPrediction {
    /// Sum of the included kinds' additive estimates (`None` without a
    /// dataset; a component is `None` when no included kind records it).
    pub additive: Option<AdditiveEstimate>,
    /// Whole-app model prediction (per-instance-normalized deltas) with the
    /// inventory counts overlaid on the base features.
    pub model: Option<ImpactPrediction>,
}

/// The planner's output: a disjoint include/exclude split covering every
/// kind in the inventory, in catalog order, plus impact estimates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RefactoringPlan {
    pub objective: Objective,
    pub include: Vec<KindAssessment>,
    pub exclude: Vec<KindAssessment>,
    pub predicted: PlanPrediction,
}

impl RefactoringPlan {
    /// Kinds slated for refactoring, in catalog order.
    pub fn included_kinds(&self) -> Vec<SmellKind> {
        self.include.iter().map(|a| a.kind).collect()
    }

    /// Kinds held back, in catalog order.
    pub fn excluded_kinds(&self) -> Vec<SmellKind> {
        self.exclude.iter().map(|a| a.kind).collect()
    }
}

/// Planning failures.
#[derive(Debug, Error)]
pub enum PlanError {
    #[error("inventory is empty: nothing to plan")]
    EmptyInventory,
    #[error("no impact source: supply an impact dataset, a trained model, or both")]
    NoImpactSource,
    #[error("budget must be a nonnegative number, got {0}")]
    InvalidBudget(f64),
    #[error("model prediction failed: {0}")]
    Model(#[from] PredictError),
}

/// Reason string attached to kinds that regress both resources.
pub const WORSENS_BOTH_REASON: &str = "worsens CPU and memory";

fn overlay_counts(base: &FeatureVector, counts: &BTreeMap<SmellKind, u64>) -> FeatureVector {
    let mut overlaid = base.clone();
    for (kind, count) in counts {
        overlaid.smell_counts.insert(*kind, *count);
    }
    overlaid
}

fn signs_disagree(a: f64, b: f64) -> bool {
    const EPSILON: f64 = 1e-12;
    (a > EPSILON && b < -EPSILON) || (a < -EPSILON && b > EPSILON)
}

/// Splits the inventory into refactor-now and hold-back lists under the
/// objective. Deterministic: identical inputs give identical plans, and
/// both lists are in catalog order.
pub fn plan_batch(
    inventory: &[SmellInstance],
    source: &ImpactSource<'_>,
    objective: Objective,
) -> Result<RefactoringPlan, PlanError> {
    if inventory.is_empty() {
        return Err(PlanError::EmptyInventory);
    }
    if source.dataset.is_none() && source.model.is_none() {
        return Err(PlanError::NoImpactSource);
    }
    if let Objective::CpuOnly { budget: Some(budget) } = objective {
        if !budget.is_finite() || budget < 0.0 {
            return Err(PlanError::InvalidBudget(budget));
        }
    }

    let mut counts: BTreeMap<SmellKind, u64> = BTreeMap::new();
    for instance in inventory {
        *counts.entry(instance.kind).or_insert(0) += 1;
    }

    let mut include = Vec::new();
    let mut exclude = Vec::new();
    for (&kind, &count) in &counts {
        let additive = source.dataset.map(|ds| {
            let per_instance = match ds.category {
                Some(category) => match category_profile(ds.dataset, category, kind) {
                    Ok(profile) => (
                        profile.mean_dcpu_per_instance,
                        profile.mean_dmem_per_instance,
                    ),
                    Err(_) => kind_mean_per_instance(ds.dataset, kind),
                },
                None => kind_mean_per_instance(ds.dataset, kind),
            };
            AdditiveEstimate {
                dcpu_total_pct: per_instance.0.map(|v| v * count as f64),
                dmem_total_pct: per_instance.1.map(|v| v * count as f64),
            }
        });
        let model_delta = match source.model {
            Some(ms) => {
                let mut with = ms.base.clone();
                with.smell_counts.insert(kind, count);
                let mut without = ms.base.clone();
                without.smell_counts.remove(&kind);
                let present = ms.model.predict(&with)?;
                let absent = ms.model.predict(&without)?;
                Some(ImpactPrediction {
                    dcpu_pct: present.dcpu_pct - absent.dcpu_pct,
                    dmem_pct: present.dmem_pct - absent.dmem_pct,
                })
            }
            None => None,
        };

        let mixed_unknown = match (&additive, &model_delta) {
            (Some(add), Some(delta)) => {
                add.dcpu_total_pct
                    .map_or(false, |a| signs_disagree(a, delta.dcpu_pct))
                    || add
                        .dmem_total_pct
                        .map_or(false, |a| signs_disagree(a, delta.dmem_pct))
            }
            _ => false,
        };

        // Estimated memory worsening in percent (positive = that much
        // memory lost), for the CPU-only budget gate.
        let memory_worsening = additive
            .and_then(|a| a.dmem_total_pct)
            .or(model_delta.map(|d| d.dmem_pct))
            .map(|dmem| (-dmem).max(0.0));

        let decision: Result<String, String> = match objective {
            Objective::MinimizeBoth => {
                if worsens_both(kind) {
                    Err(WORSENS_BOTH_REASON.to_string())
                } else if !improves_both(kind) {
                    Err("improves CPU but worsens memory".to_string())
                } else if mixed_unknown {
                    Err("model and additive estimates disagree in sign (MIXED-UNKNOWN)".to_string())
                } else {
                    Ok("improves CPU and memory".to_string())
                }
            }
            Objective::CpuOnly { budget } => {
                if worsens_both(kind) {
                    Err(WORSENS_BOTH_REASON.to_string())
                } else if !improves_both(kind) {
                    match (budget, memory_worsening) {
                        (Some(cap), Some(worsening)) if worsening > cap => Err(format!(
                            "predicted memory worsening {worsening:.2}% exceeds budget {cap:.2}%"
                        )),
                        _ => Ok("improves CPU; memory cost within budget".to_string()),
                    }
                } else if mixed_unknown {
                    Err("model and additive estimates disagree in sign (MIXED-UNKNOWN)".to_string())
                } else {
                    Ok("improves CPU and memory".to_string())
                }
            }
            Objective::MemoryOnly => {
                if worsens_both(kind) {
                    Err(WORSENS_BOTH_REASON.to_string())
                } else if !improves_both(kind) {
                    Err("worsens memory".to_string())
                } else if mixed_unknown {
                    Err("model and additive estimates disagree in sign (MIXED-UNKNOWN)".to_string())
                } else {
                    Ok("improves CPU and memory".to_string())
                }
            }
            Objective::MaintainabilityFirst => Ok(if worsens_both(kind) {
                "included for maintainability despite worsening CPU and memory".to_string()
            } else if !improves_both(kind) {
                "included for maintainability despite worsening memory".to_string()
            } else if mixed_unknown {
                "included for maintainability; impact estimates disagree (MIXED-UNKNOWN)"
                    .to_string()
            } else {
                "improves CPU and memory".to_string()
            }),
        };

        let assessment = |rationale: String| KindAssessment {
            kind,
            instance_count: count,
            additive,
            model_delta,
            mixed_unknown,
            rationale,
        };
        match decision {
            Ok(rationale) => include.push(assessment(rationale)),
            Err(reason) => exclude.push(assessment(reason)),
        }
    }

    let additive_total = source.dataset.map(|_| {
        let sum = |component: &dyn Fn(&AdditiveEstimate) -> Option<f64>| {
            let known: Vec<f64> = include
                .iter()
                .filter_map(|a| a.additive.as_ref().and_then(|e| component(e)))
                .collect();
            if known.is_empty() {
                None
            } else {
                Some(known.iter().sum())
            }
        };
        AdditiveEstimate {
            dcpu_total_pct: sum(&|e| e.dcpu_total_pct),
            dmem_total_pct: sum(&|e| e.dmem_total_pct),
        }
    });
    let model_total = match source.model {
        Some(ms) => Some(ms.model.predict(&overlay_counts(ms.base, &counts))?),
        None => None,
    };

    Ok(RefactoringPlan {
        objective,
        include,
        exclude,
        predicted: PlanPrediction {
            additive: additive_total,
            model: model_total,
        },
    })
}
