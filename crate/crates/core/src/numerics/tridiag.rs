//! Symmetric tridiagonal eigenpairs by Sturm bisection and inverse iteration.

use super::NumericsError;

pub(crate) struct SymTridiag {
    pub diag: Vec<f64>,
    /// `off[i]` couples `i` and `i + 1`.
    pub off: Vec<f64>,
}

impl SymTridiag {
    fn len(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x`.
    fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0f64;
        for i in 0..self.len() {
            let b2 = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            q = self.diag[i] - x - if i == 0 { 0.0 } else { b2 / q };
            if q == 0.0 {
                q = f64::EPSILON * (self.diag[i].abs() + x.abs() + 1.0);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 } + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// The `k`-th smallest eigenvalue (0-based).
    pub fn eigenvalue(&self, k: usize) -> Result<f64, NumericsError> {
        let (mut lo, mut hi) = self.gershgorin();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                return Ok(mid);
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 4.0 * f64::EPSILON * (lo.abs() + hi.abs()) {
                return Ok(0.5 * (lo + hi));
            }
        }
        Err(NumericsError::NonConvergence(format!("bisection for eigenvalue {k}")))
    }

    /// Solves `(T − λ)x = rhs` by Gaussian elimination with partial pivoting.
    fn solve_shifted(&self, lambda: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        let mut d: Vec<f64> = self.diag.iter().map(|x| x - lambda).collect();
        let dl = self.off.clone();
        let mut du = self.off.clone();
        // second superdiagonal created by row swaps
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut b = rhs.to_vec();
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == 0.0 {
                    d[i] = f64::EPSILON;
                }
                let f = dl[i] / d[i];
                d[i + 1] -= f * du[i];
                b[i + 1] -= f * b[i];
            } else {
                let f = d[i] / dl[i];
                d[i] = dl[i];
                let t = d[i + 1];
                d[i + 1] = du[i] - f * t;
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -f * du2[i];
                }
                du[i] = t;
                let bt = b[i];
                b[i] = b[i + 1];
                b[i + 1] = bt - f * b[i + 1];
            }
        }
        if d[n - 1] == 0.0 {
            d[n - 1] = f64::EPSILON;
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = b[i];
            if i + 1 < n {
                s -= du[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= du2[i] * x[i + 2];
            }
            x[i] = s / d[i];
        }
        x
    }

    /// Unit eigenvector for an isolated eigenvalue `lambda`.
    pub fn eigenvector(&self, lambda: f64) -> Result<Vec<f64>, NumericsError> {
        let n = self.len();
        let shift = lambda + 1e-10 * (lambda.abs() + 1.0);
        let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i * 7919) % 13) as f64).collect();
        for _ in 0..4 {
            let w = self.solve_shifted(shift, &v);
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            if !norm.is_finite() || norm == 0.0 {
                return Err(NumericsError::NonConvergence("inverse iteration".into()));
            }
            v = w.into_iter().map(|x| x / norm).collect();
        }
        Ok(v)
    }
}
