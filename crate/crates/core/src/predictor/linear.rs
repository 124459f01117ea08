//! The three least-squares family models: ordinary, degree-2 polynomial,
//! and L1-penalized (coordinate descent with a cross-validated penalty).
//!
//! All three standardize features to zero mean and unit (population)
//! variance before fitting; a column that is constant — or otherwise a
//! linear combination of the others — makes the problem rank-deficient,
//! which is reported rather than worked around.

use serde::{Deserialize, Serialize};

use super::linalg::{least_squares, Matrix, RankDeficient};

/// Per-feature affine transform to zero mean / unit variance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub(crate) struct Standardizer {
    means: Vec<f64>,
    stds: Vec<f64>,
}

impl Standardizer {
    /// Fits means and population standard deviations per column. Constant
    /// columns get standard deviation 1 so the transform stays finite; they
    /// standardize to all-zero columns, which the rank check then rejects.
    pub fn fit(rows: &[Vec<f64>]) -> Standardizer {
        let n = rows.len() as f64;
        let p = rows.first().map_or(0, Vec::len);
        let mut means = vec![0.0; p];
        for row in rows {
            for (m, v) in means.iter_mut().zip(row) {
                *m += v;
            }
        }
        for m in &mut means {
            *m /= n;
        }
        let mut stds = vec![0.0; p];
        for row in rows {
            for (s, (v, m)) in stds.iter_mut().zip(row.iter().zip(&means)) {
                *s += (v - m).powi(2);
            }
        }
        for s in &mut stds {
            *s = (*s / n).sqrt();
            if *s == 0.0 {
                *s = 1.0;
            }
        }
        Standardizer { means, stds }
    }

    pub fn transform_row(&self, row: &[f64]) -> Vec<f64> {
        row.iter()
            .zip(self.means.iter().zip(&self.stds))
            .map(|(v, (m, s))| (v - m) / s)
            .collect()
    }

    fn transform_all(&self, rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
        rows.iter().map(|r| self.transform_row(r)).collect()
    }
}

/// Ordinary least squares on standardized features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub(crate) struct LinearParams {
    standardizer: Standardizer,
    /// Coefficients in standardized feature space.
    coefficients: Vec<f64>,
    intercept: f64,
}

impl LinearParams {
    pub fn predict(&self, raw: &[f64]) -> f64 {
        let z = self.standardizer.transform_row(raw);
        self.intercept + dot(&self.coefficients, &z)
    }

    #[cfg(test)]
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Fits OLS on standardized features plus an intercept column.
pub(crate) fn fit_linear(rows: &[Vec<f64>], y: &[f64]) -> Result<LinearParams, RankDeficient> {
    let n = rows.len();
    let p = rows.first().map_or(0, Vec::len);
    if p == 0 || n < p + 1 {
        return Err(RankDeficient);
    }
    let standardizer = Standardizer::fit(rows);
    let z = standardizer.transform_all(rows);
    let design: Vec<Vec<f64>> = z
        .iter()
        .map(|row| {
            let mut d = Vec::with_capacity(p + 1);
            d.push(1.0);
            d.extend_from_slice(row);
            d
        })
        .collect();
    let fit = least_squares(&Matrix::from_rows(&design), y)?;
    Ok(LinearParams {
        standardizer,
        intercept: fit.coefficients[0],
        coefficients: fit.coefficients[1..].to_vec(),
    })
}

/// One term of the degree-2 expansion: a bare feature (`j == None`), a
/// square (`j == Some(i)`), or a pairwise product. Indices refer to the
/// model's selected-feature list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub(crate) struct PolyTerm {
    pub i: usize,
    pub j: Option<usize>,
}

impl PolyTerm {
    fn eval(self, raw: &[f64]) -> f64 {
        match self.j {
            None => raw[self.i],
            Some(j) => raw[self.i] * raw[j],
        }
    }
}

/// OLS on the degree-2 expansion of the features.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub(crate) struct PolyParams {
    /// Expansion terms that survived degeneracy pruning, in canonical order.
    terms: Vec<PolyTerm>,
    inner: LinearParams,
}

impl PolyParams {
    pub fn predict(&self, raw: &[f64]) -> f64 {
        let expanded: Vec<f64> = self.terms.iter().map(|t| t.eval(raw)).collect();
        self.inner.predict(&expanded)
    }
}

/// Fits degree-2 polynomial regression: all features, their squares, and
/// pairwise products. Expanded columns that are constant, or exact
/// duplicates of an earlier kept column, are dropped before the rank check
/// (one-hot features square to themselves, and disjoint one-hots multiply
/// to zero).
pub(crate) fn fit_polynomial(rows: &[Vec<f64>], y: &[f64]) -> Result<PolyParams, RankDeficient> {
    let p = rows.first().map_or(0, Vec::len);
    if p == 0 {
        return Err(RankDeficient);
    }
    let mut candidates = Vec::new();
    for i in 0..p {
        candidates.push(PolyTerm { i, j: None });
    }
    for i in 0..p {
        candidates.push(PolyTerm { i, j: Some(i) });
    }
    for i in 0..p {
        for j in i + 1..p {
            candidates.push(PolyTerm { i, j: Some(j) });
        }
    }

    let mut terms: Vec<PolyTerm> = Vec::new();
    let mut kept_columns: Vec<Vec<f64>> = Vec::new();
    for term in candidates {
        let column: Vec<f64> = rows.iter().map(|r| term.eval(r)).collect();
        let constant = column.windows(2).all(|w| w[0] == w[1]);
        if constant {
            continue;
        }
        if kept_columns.iter().any(|kept| kept == &column) {
            continue;
        }
        kept_columns.push(column);
        terms.push(term);
    }
    if terms.is_empty() {
        return Err(RankDeficient);
    }

    let expanded: Vec<Vec<f64>> = rows
        .iter()
        .enumerate()
        .map(|(r, _)| kept_columns.iter().map(|col| col[r]).collect())
        .collect();
    let inner = fit_linear(&expanded, y)?;
    Ok(PolyParams { terms, inner })
}

/// Hyperparameters for the L1-penalized fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LassoConfig {
    /// Fixed penalty; when unset the penalty is chosen by cross-validation
    /// over the grid below.
    pub lambda: Option<f64>,
    /// Number of grid points, spaced log-uniformly over `grid_decades`
    /// decades below the smallest all-zero penalty.
    pub grid_size: usize,
    pub grid_decades: f64,
    /// Convergence threshold on the largest coefficient change per sweep.
    pub tolerance: f64,
    pub max_sweeps: usize,
    /// Cross-validation folds; clamped to the example count when larger.
    pub folds: usize,
}

impl Default for LassoConfig {
    fn default() -> Self {
        LassoConfig {
            lambda: None,
            grid_size: 20,
            grid_decades: 3.0,
            tolerance: 1e-10,
            max_sweeps: 10_000,
            folds: 5,
        }
    }
}

/// L1-penalized linear model in standardized space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub(crate) struct LassoParams {
    standardizer: Standardizer,
    coefficients: Vec<f64>,
    intercept: f64,
    /// The penalty the model was fit at (chosen or fixed).
    pub lambda: f64,
}

impl LassoParams {
    pub fn predict(&self, raw: &[f64]) -> f64 {
        let z = self.standardizer.transform_row(raw);
        self.intercept + dot(&self.coefficients, &z)
    }

    #[cfg(test)]
    pub fn nonzero_count(&self) -> usize {
        self.coefficients.iter().filter(|c| **c != 0.0).count()
    }
}

fn soft_threshold(value: f64, threshold: f64) -> f64 {
    if value > threshold {
        value - threshold
    } else if value < -threshold {
        value + threshold
    } else {
        0.0
    }
}

/// One coordinate-descent solve at a fixed penalty, warm-started from
/// `beta`. `z` is standardized and `yc` centered; the objective is
/// `(1/2n)‖yc − z·beta‖² + lambda·‖beta‖₁`.
fn coordinate_descent(
    z: &[Vec<f64>],
    yc: &[f64],
    lambda: f64,
    beta: &mut [f64],
    config: &LassoConfig,
) {
    let n = z.len();
    let p = beta.len();
    let inv_n = 1.0 / n as f64;
    // Column second moments; 1.0 for standardized columns, but computed
    // anyway so warm starts stay correct on fold subsets.
    let col_sq: Vec<f64> = (0..p)
        .map(|j| z.iter().map(|row| row[j] * row[j]).sum::<f64>() * inv_n)
        .collect();
    let mut residual: Vec<f64> = (0..n)
        .map(|i| yc[i] - dot(&z[i], beta))
        .collect();
    for _ in 0..config.max_sweeps {
        let mut largest_change = 0.0f64;
        for j in 0..p {
            if col_sq[j] == 0.0 {
                continue;
            }
            let old = beta[j];
            let rho = inv_n
                * z.iter()
                    .zip(&residual)
                    .map(|(row, r)| row[j] * (r + row[j] * old))
                    .sum::<f64>();
            let new = soft_threshold(rho, lambda) / col_sq[j];
            if new != old {
                let delta = new - old;
                for (r, row) in residual.iter_mut().zip(z) {
                    *r -= row[j] * delta;
                }
                beta[j] = new;
                largest_change = largest_change.max(delta.abs());
            }
        }
        if largest_change <= config.tolerance {
            break;
        }
    }
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// The smallest penalty at which every coefficient is zero.
fn lambda_max(z: &[Vec<f64>], yc: &[f64]) -> f64 {
    let n = z.len() as f64;
    let p = z.first().map_or(0, Vec::len);
    (0..p)
        .map(|j| {
            (z.iter()
                .zip(yc)
                .map(|(row, y)| row[j] * y)
                .sum::<f64>()
                / n)
                .abs()
        })
        .fold(0.0, f64::max)
}

/// Descending penalty grid from `lambda_max` down `grid_decades` decades.
fn penalty_grid(lambda_max: f64, config: &LassoConfig) -> Vec<f64> {
    let k = config.grid_size.max(1);
    (0..k)
        .map(|i| {
            let exponent = if k == 1 {
                0.0
            } else {
                -config.grid_decades * i as f64 / (k - 1) as f64
            };
            lambda_max * 10f64.powf(exponent)
        })
        .collect()
}

/// Fits the lasso. With `config.lambda` set the penalty is used as given;
/// otherwise it is chosen as the grid value with the smallest mean
/// cross-validated MSE (ties favor the larger, sparser penalty). `folds`
/// are index sets into `rows`, used only for the CV path.
pub(crate) fn fit_lasso(
    rows: &[Vec<f64>],
    y: &[f64],
    config: &LassoConfig,
    folds: &[Vec<usize>],
) -> Result<LassoParams, RankDeficient> {
    let n = rows.len();
    let p = rows.first().map_or(0, Vec::len);
    if p == 0 || n < p + 1 {
        return Err(RankDeficient);
    }
    let standardizer = Standardizer::fit(rows);
    let z = standardizer.transform_all(rows);
    // The rank precondition is shared with plain least squares.
    least_squares(&Matrix::from_rows(&z), y)?;

    let y_mean = mean(y);
    let yc: Vec<f64> = y.iter().map(|v| v - y_mean).collect();

    let lambda = match config.lambda {
        Some(fixed) => fixed,
        None => {
            let full_max = lambda_max(&z, &yc);
            if full_max == 0.0 {
                // Target is constant: every penalty gives the zero model.
                0.0
            } else {
                choose_penalty_by_cv(rows, y, config, folds, full_max)
            }
        }
    };

    let mut beta = vec![0.0; p];
    if config.lambda.is_none() && lambda > 0.0 {
        // Warm-start down the path for the final fit as well.
        for grid_lambda in penalty_grid(lambda_max(&z, &yc), config) {
            coordinate_descent(&z, &yc, grid_lambda, &mut beta, config);
            if grid_lambda <= lambda {
                break;
            }
        }
    } else {
        coordinate_descent(&z, &yc, lambda, &mut beta, config);
    }

    Ok(LassoParams {
        standardizer,
        coefficients: beta,
        intercept: y_mean,
        lambda,
    })
}

/// Mean CV MSE per grid penalty; returns the winning penalty.
fn choose_penalty_by_cv(
    rows: &[Vec<f64>],
    y: &[f64],
    config: &LassoConfig,
    folds: &[Vec<usize>],
    full_lambda_max: f64,
) -> f64 {
    let grid = penalty_grid(full_lambda_max, config);
    let mut scores = vec![0.0f64; grid.len()];
    for fold in folds {
        let in_fold: Vec<bool> = {
            let mut mask = vec![false; rows.len()];
            for &i in fold {
                mask[i] = true;
            }
            mask
        };
        let train_rows: Vec<Vec<f64>> = rows
            .iter()
            .enumerate()
            .filter(|(i, _)| !in_fold[*i])
            .map(|(_, r)| r.clone())
            .collect();
        let train_y: Vec<f64> = y
            .iter()
            .enumerate()
            .filter(|(i, _)| !in_fold[*i])
            .map(|(_, v)| *v)
            .collect();
        if train_rows.is_empty() || fold.is_empty() {
            continue;
        }
        let standardizer = Standardizer::fit(&train_rows);
        let z = standardizer.transform_all(&train_rows);
        let y_mean = mean(&train_y);
        let yc: Vec<f64> = train_y.iter().map(|v| v - y_mean).collect();
        let mut beta = vec![0.0; rows[0].len()];
        for (slot, lambda) in grid.iter().enumerate() {
            coordinate_descent(&z, &yc, *lambda, &mut beta, config);
            let mut se = 0.0;
            for &i in fold {
                let zi = standardizer.transform_row(&rows[i]);
                let pred = y_mean + dot(&beta, &zi);
                se += (pred - y[i]).powi(2);
            }
            scores[slot] += se / fold.len() as f64;
        }
    }
    // Grid is descending, so strict improvement keeps the sparser penalty
    // on ties.
    let mut best = 0;
    for i in 1..grid.len() {
        if scores[i] < scores[best] {
            best = i;
        }
    }
    grid[best]
}
