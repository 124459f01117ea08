//! Seeded random-forest regression: bagged variance-reduction trees with
//! per-split feature subsampling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Forest hyperparameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ForestConfig {
    pub trees: usize,
    pub max_depth: usize,
    /// Draw a bootstrap sample per tree; with `false` every tree sees the
    /// full training set.
    pub bootstrap: bool,
}

impl Default for ForestConfig {
    fn default() -> Self {
        ForestConfig {
            trees: 100,
            max_depth: 8,
            bootstrap: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
enum Node {
    Leaf {
        value: f64,
    },
    Split {
        feature: usize,
        threshold: f64,
        left: usize,
        right: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct Tree {
    nodes: Vec<Node>,
}

impl Tree {
    fn predict(&self, row: &[f64]) -> f64 {
        let mut index = 0;
        loop {
            match &self.nodes[index] {
                Node::Leaf { value } => return *value,
                Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => {
                    index = if row[*feature] <= *threshold {
                        *left
                    } else {
                        *right
                    };
                }
            }
        }
    }
}

/// A trained forest. Prediction is the mean of the tree predictions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub(crate) struct ForestParams {
    trees: Vec<Tree>,
}

impl ForestParams {
    pub fn predict(&self, row: &[f64]) -> f64 {
        let sum: f64 = self.trees.iter().map(|t| t.predict(row)).sum();
        sum / self.trees.len() as f64
    }
}

fn mean_of(indices: &[usize], y: &[f64]) -> f64 {
    indices.iter().map(|&i| y[i]).sum::<f64>() / indices.len() as f64
}

/// Sum of squared deviations from the mean over `indices`.
fn sse_of(indices: &[usize], y: &[f64]) -> f64 {
    let m = mean_of(indices, y);
    indices.iter().map(|&i| (y[i] - m).powi(2)).sum()
}

struct TreeBuilder<'a> {
    rows: &'a [Vec<f64>],
    y: &'a [f64],
    max_depth: usize,
    features_per_split: usize,
    nodes: Vec<Node>,
}

impl TreeBuilder<'_> {
    /// Builds the subtree over `indices`, returning its node id.
    fn build(&mut self, indices: &[usize], depth: usize, rng: &mut ChaCha8Rng) -> usize {
        let leaf = |nodes: &mut Vec<Node>, value: f64| {
            nodes.push(Node::Leaf { value });
            nodes.len() - 1
        };
        if depth >= self.max_depth || indices.len() < 2 || sse_of(indices, self.y) == 0.0 {
            return leaf(&mut self.nodes, mean_of(indices, self.y));
        }

        let p = self.rows[0].len();
        let mut candidates: Vec<usize> = (0..p).collect();
        candidates.shuffle(rng);
        candidates.truncate(self.features_per_split);
        candidates.sort_unstable();

        // Exhaustive midpoint search over the sampled features; strict
        // improvement keeps the first (lowest feature, lowest threshold)
        // optimum, so the tree is a pure function of the RNG stream.
        let mut best: Option<(f64, usize, f64)> = None;
        for &feature in &candidates {
            let mut order: Vec<usize> = indices.to_vec();
            order.sort_by(|&a, &b| {
                self.rows[a][feature]
                    .total_cmp(&self.rows[b][feature])
                    .then(a.cmp(&b))
            });
            // Prefix sums over the sorted order for O(1) split scoring.
            let values: Vec<f64> = order.iter().map(|&i| self.y[i]).collect();
            let mut prefix_sum = vec![0.0];
            let mut prefix_sq = vec![0.0];
            for v in &values {
                prefix_sum.push(prefix_sum.last().unwrap() + v);
                prefix_sq.push(prefix_sq.last().unwrap() + v * v);
            }
            let total = order.len();
            for cut in 1..total {
                let here = self.rows[order[cut - 1]][feature];
                let next = self.rows[order[cut]][feature];
                if here == next {
                    continue;
                }
                let left_n = cut as f64;
                let right_n = (total - cut) as f64;
                let left_sum = prefix_sum[cut];
                let right_sum = prefix_sum[total] - left_sum;
                let left_sq = prefix_sq[cut];
                let right_sq = prefix_sq[total] - left_sq;
                let sse = (left_sq - left_sum * left_sum / left_n)
                    + (right_sq - right_sum * right_sum / right_n);
                let threshold = (here + next) / 2.0;
                if best.map_or(true, |(best_sse, _, _)| sse < best_sse) {
                    best = Some((sse, feature, threshold));
                }
            }
        }

        let Some((_, feature, threshold)) = best else {
            // Sampled features are constant over this node.
            return leaf(&mut self.nodes, mean_of(indices, self.y));
        };

        let (left_idx, right_idx): (Vec<usize>, Vec<usize>) = indices
            .iter()
            .partition(|&&i| self.rows[i][feature] <= threshold);
        // Reserve the slot before recursing so ids are stable.
        self.nodes.push(Node::Leaf { value: 0.0 });
        let slot = self.nodes.len() - 1;
        let left = self.build(&left_idx, depth + 1, rng);
        let right = self.build(&right_idx, depth + 1, rng);
        self.nodes[slot] = Node::Split {
            feature,
            threshold,
            left,
            right,
        };
        slot
    }
}

/// Trains a forest; fully deterministic for a given seed.
pub(crate) fn fit_forest(
    rows: &[Vec<f64>],
    y: &[f64],
    config: &ForestConfig,
    seed: u64,
) -> ForestParams {
    let n = rows.len();
    let p = rows.first().map_or(0, Vec::len);
    let features_per_split = (p as f64).sqrt().ceil() as usize;
    let features_per_split = features_per_split.clamp(1, p.max(1));
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut trees = Vec::with_capacity(config.trees);
    for _ in 0..config.trees.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(master.gen());
        let indices: Vec<usize> = if config.bootstrap {
            (0..n).map(|_| rng.gen_range(0..n)).collect()
        } else {
            (0..n).collect()
        };
        let mut builder = TreeBuilder {
            rows,
            y,
            max_depth: config.max_depth,
            features_per_split,
            nodes: Vec::new(),
        };
        let root = builder.build(&indices, 0, &mut rng);
        debug_assert_eq!(root, 0);
        trees.push(Tree {
            nodes: builder.nodes,
        });
    }
    ForestParams { trees }
}
