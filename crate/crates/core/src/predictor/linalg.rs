//! Dense least squares via Householder QR.
//!
//! Just enough linear algebra for the regression models: a row-major matrix,
//! a QR least-squares solve that detects rank deficiency, and an
//! upper-triangular inverse for coefficient covariance. No pivoting — the
//! design matrices here are tiny, and deficiency is reported, not repaired.

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }
}

/// The design matrix has (numerically) dependent columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct RankDeficient;

/// Least-squares solution of `x · beta ≈ y` with byproducts needed for
/// inference.
#[derive(Debug, Clone)]
pub(crate) struct LeastSquares {
    pub coefficients: Vec<f64>,
    /// The `p × p` upper-triangular factor of `x` (so `xᵀx = rᵀr`).
    pub r: Matrix,
    /// Residual sum of squares, computed from the orthogonal remainder.
    pub rss: f64,
}

/// Relative threshold under which a diagonal of `R` counts as zero.
const RANK_TOLERANCE: f64 = 1e-10;

/// Solves `min ‖x·beta − y‖₂` by Householder QR.
///
/// Requires `x.rows >= x.cols >= 1`; errors when a column is (numerically) a
/// combination of the ones before it.
pub(crate) fn least_squares(x: &Matrix, y: &[f64]) -> Result<LeastSquares, RankDeficient> {
    let n = x.rows;
    let p = x.cols;
    assert!(p >= 1 && n >= p, "least_squares needs n >= p >= 1");
    assert_eq!(y.len(), n);

    let mut a = x.clone();
    let mut qty = y.to_vec();

    // The deficiency threshold is relative to the largest initial column
    // norm, so uniformly scaling the problem cannot change the verdict.
    let mut scale = 0.0f64;
    for c in 0..p {
        let norm = (0..n).map(|r| a.at(r, c).powi(2)).sum::<f64>().sqrt();
        scale = scale.max(norm);
    }
    if scale == 0.0 {
        return Err(RankDeficient);
    }

    for k in 0..p {
        // Householder vector for column k, rows k..n.
        let mut norm = 0.0;
        for r in k..n {
            norm += a.at(r, k).powi(2);
        }
        let norm = norm.sqrt();
        if norm <= RANK_TOLERANCE * scale {
            return Err(RankDeficient);
        }
        let alpha = if a.at(k, k) >= 0.0 { -norm } else { norm };
        // v = column - alpha*e_k, normalized so v[k] = 1.
        let v_k = a.at(k, k) - alpha;
        let mut v = vec![0.0; n - k];
        v[0] = 1.0;
        for r in k + 1..n {
            v[r - k] = a.at(r, k) / v_k;
        }
        // beta = -v_k / alpha makes H = I - beta v vᵀ the reflector.
        let beta = -v_k / alpha;

        a.set(k, k, alpha);
        for r in k + 1..n {
            a.set(r, k, 0.0);
        }
        for c in k + 1..p {
            let mut dot = 0.0;
            for r in k..n {
                dot += v[r - k] * a.at(r, c);
            }
            let dot = dot * beta;
            for r in k..n {
                a.set(r, c, a.at(r, c) - dot * v[r - k]);
            }
        }
        let mut dot = 0.0;
        for r in k..n {
            dot += v[r - k] * qty[r];
        }
        let dot = dot * beta;
        for r in k..n {
            qty[r] -= dot * v[r - k];
        }
    }

    // Back-substitute R beta = (Qᵀy)[..p].
    let mut coefficients = vec![0.0; p];
    for k in (0..p).rev() {
        let mut sum = qty[k];
        for c in k + 1..p {
            sum -= a.at(k, c) * coefficients[c];
        }
        coefficients[k] = sum / a.at(k, k);
    }

    let mut r = Matrix::zeros(p, p);
    for row in 0..p {
        for c in row..p {
            r.set(row, c, a.at(row, c));
        }
    }
    let rss = qty[p..].iter().map(|v| v * v).sum();
    Ok(LeastSquares {
        coefficients,
        r,
        rss,
    })
}

/// Inverts an upper-triangular matrix by back-substitution per column.
pub(crate) fn invert_upper_triangular(r: &Matrix) -> Matrix {
    let p = r.rows;
    debug_assert_eq!(p, r.cols);
    let mut inv = Matrix::zeros(p, p);
    for col in 0..p {
        // Solve R x = e_col.
        for k in (0..=col).rev() {
            let mut sum = if k == col { 1.0 } else { 0.0 };
            for c in k + 1..=col {
                sum -= r.at(k, c) * inv.at(c, col);
            }
            inv.set(k, col, sum / r.at(k, k));
        }
    }
    inv
}
