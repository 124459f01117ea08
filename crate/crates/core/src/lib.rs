//! Toolchain for studying how batch refactoring of code smells moves CPU and
//! memory usage: detect smells in a source tree, profile workloads before and
//! after refactoring, store per-smell impact records, check whether individual
//! impacts add up to batch impacts, and train predictive models on the result.

pub mod catalog;
pub mod detector;
pub mod fixtures;
pub mod impact;
pub mod plan;
pub mod predictor;
pub mod profiler;
pub mod report;
