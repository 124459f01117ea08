//! Single-hidden-layer neural-network regression trained by full-batch
//! gradient descent. Inputs and target are standardized for training; the
//! prediction is mapped back to target units.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::linear::Standardizer;

/// Network hyperparameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AnnConfig {
    pub hidden_units: usize,
    pub epochs: usize,
    pub learning_rate: f64,
}

impl Default for AnnConfig {
    fn default() -> Self {
        AnnConfig {
            hidden_units: 16,
            epochs: 2000,
            learning_rate: 0.01,
        }
    }
}

/// Trained network: `y = w2 · tanh(W1 z + b1) + b2`, in standardized space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub(crate) struct AnnParams {
    standardizer: Standardizer,
    /// Hidden weights, one row per hidden unit.
    w1: Vec<Vec<f64>>,
    b1: Vec<f64>,
    w2: Vec<f64>,
    b2: f64,
    target_mean: f64,
    target_std: f64,
}

impl AnnParams {
    pub fn predict(&self, raw: &[f64]) -> f64 {
        let z = self.standardizer.transform_row(raw);
        self.target_mean + self.target_std * self.forward(&z).0
    }

    /// Network output and hidden activations for a standardized input.
    fn forward(&self, z: &[f64]) -> (f64, Vec<f64>) {
        let hidden: Vec<f64> = self
            .w1
            .iter()
            .zip(&self.b1)
            .map(|(weights, bias)| {
                let pre: f64 = weights.iter().zip(z).map(|(w, x)| w * x).sum::<f64>() + bias;
                pre.tanh()
            })
            .collect();
        let out: f64 = self.w2.iter().zip(&hidden).map(|(w, h)| w * h).sum::<f64>() + self.b2;
        (out, hidden)
    }
}

/// Trains the network; deterministic for a given seed. Weights start
/// uniform in `±1/√fan_in`, biases at zero.
pub(crate) fn fit_ann(rows: &[Vec<f64>], y: &[f64], config: &AnnConfig, seed: u64) -> AnnParams {
    let n = rows.len();
    let p = rows.first().map_or(0, Vec::len);
    let h = config.hidden_units.max(1);

    let standardizer = Standardizer::fit(rows);
    let z: Vec<Vec<f64>> = rows.iter().map(|r| standardizer.transform_row(r)).collect();
    let target_mean = y.iter().sum::<f64>() / n as f64;
    let target_var = y.iter().map(|v| (v - target_mean).powi(2)).sum::<f64>() / n as f64;
    let target_std = if target_var > 0.0 { target_var.sqrt() } else { 1.0 };
    let ys: Vec<f64> = y.iter().map(|v| (v - target_mean) / target_std).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut uniform = |bound: f64| bound * (2.0 * rng.gen::<f64>() - 1.0);
    let input_bound = 1.0 / (p.max(1) as f64).sqrt();
    let hidden_bound = 1.0 / (h as f64).sqrt();
    let mut params = AnnParams {
        standardizer,
        w1: (0..h)
            .map(|_| (0..p).map(|_| uniform(input_bound)).collect())
            .collect(),
        b1: vec![0.0; h],
        w2: (0..h).map(|_| uniform(hidden_bound)).collect(),
        b2: 0.0,
        target_mean,
        target_std,
    };

    // A zero-variance target needs no training: zeroing the output layer
    // makes the network emit the mean exactly, everywhere.
    if target_var == 0.0 {
        params.w2 = vec![0.0; h];
        return params;
    }

    let lr = config.learning_rate;
    let inv_n = 1.0 / n as f64;
    for _ in 0..config.epochs {
        // Gradients of L = (1/2n) Σ (out − y)².
        let mut g_w1 = vec![vec![0.0; p]; h];
        let mut g_b1 = vec![0.0; h];
        let mut g_w2 = vec![0.0; h];
        let mut g_b2 = 0.0;
        for (zi, target) in z.iter().zip(&ys) {
            let (out, hidden) = params.forward(zi);
            let d_out = (out - target) * inv_n;
            g_b2 += d_out;
            for (unit, h_act) in hidden.iter().enumerate() {
                g_w2[unit] += d_out * h_act;
                let d_hidden = d_out * params.w2[unit] * (1.0 - h_act * h_act);
                g_b1[unit] += d_hidden;
                for (slot, x) in zi.iter().enumerate() {
                    g_w1[unit][slot] += d_hidden * x;
                }
            }
        }
        for (row, grad_row) in params.w1.iter_mut().zip(&g_w1) {
            for (w, g) in row.iter_mut().zip(grad_row) {
                *w -= lr * g;
            }
        }
        for (b, g) in params.b1.iter_mut().zip(&g_b1) {
            *b -= lr * g;
        }
        for (w, g) in params.w2.iter_mut().zip(&g_w2) {
            *w -= lr * g;
        }
        params.b2 -= lr * g_b2;
    }
    params
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nonlinear_data(seed: u64, n: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|_| vec![rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
            .collect();
        let y: Vec<f64> = rows
            .iter()
            .map(|r| (3.0 * r[0]).sin() + r[1] * r[1])
            .collect();
        (rows, y)
    }

    #[test]
    fn training_is_deterministic_per_seed() {
        let (rows, y) = nonlinear_data(30, 40);
        let a = fit_ann(&rows, &y, &AnnConfig::default(), 7);
        let b = fit_ann(&rows, &y, &AnnConfig::default(), 7);
        assert_eq!(a, b);
        assert_eq!(a.predict(&rows[0]).to_bits(), b.predict(&rows[0]).to_bits());
    }

    #[test]
    fn fits_a_linear_target_closely()
    {
        let rows: Vec<Vec<f64>> = (0..30).map(|i| vec![i as f64 / 10.0]).collect();
        let y: Vec<f64> = rows.iter().map(|r| 2.0 * r[0] - 1.0).collect();
        let params = fit_ann(&rows, &y, &AnnConfig::default(), 3);
        let mse: f64 = rows
            .iter()
            .zip(&y)
            .map(|(r, t)| (params.predict(r) - t).powi(2))
            .sum::<f64>()
            / y.len() as f64;
        assert!(mse < 0.05, "mse {mse}");
    }

    #[test]
    fn beats_linear_on_a_nonlinear_surface() {
        use super::super::linear::fit_linear;
        let (train_rows, train_y) = nonlinear_data(100, 200);
        let (test_rows, test_y) = nonlinear_data(101, 100);

        let ann = fit_ann(&train_rows, &train_y, &AnnConfig::default(), 0);
        let linear = fit_linear(&train_rows, &train_y).unwrap();
        let mse = |f: &dyn Fn(&[f64]) -> f64| {
            test_rows
                .iter()
                .zip(&test_y)
                .map(|(r, t)| (f(r) - t).powi(2))
                .sum::<f64>()
                / test_y.len() as f64
        };
        let ann_mse = mse(&|r| ann.predict(r));
        let linear_mse = mse(&|r| linear.predict(r));
        assert!(
            ann_mse < linear_mse,
            "ann {ann_mse} should beat linear {linear_mse}"
        );
    }

    #[test]
    fn constant_target_predicts_the_constant() {
        let rows: Vec<Vec<f64>> = (0..10).map(|i| vec![i as f64]).collect();
        let y = vec![4.0; 10];
        let params = fit_ann(&rows, &y, &AnnConfig::default(), 5);
        assert!((params.predict(&[3.0]) - 4.0).abs() < 1e-6);
    }
}
