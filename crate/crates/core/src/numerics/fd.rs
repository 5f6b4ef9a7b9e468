use std::collections::HashMap;

use num_complex::Complex64;

use crate::opalg::{NumericTerm, Operator, Param};

use super::grid::RadialGrid;
use super::states::RadialState;
use super::NumericsError;

/// Fornberg's weights for derivatives `0..=order` at `z` from nodes `x`.
pub fn fornberg(z: f64, x: &[f64], order: usize) -> Vec<Vec<f64>> {
    let n = x.len();
    let mut c = vec![vec![0.0; n]; order + 1];
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] *= c4 / c3;
        }
        c1 = c2;
    }
    c
}

/// Extra stencil points beyond the minimum `d + 1`.
const STENCIL_EXTRA: usize = 6;

/// `d`-th derivative of uniformly sampled `f`; centred stencils in the
/// interior, one-sided near both ends.
pub fn derivative(f: &[Complex64], spacing: f64, d: usize) -> Vec<Complex64> {
    let n = f.len();
    if d == 0 {
        return f.to_vec();
    }
    let width = (d + 1 + STENCIL_EXTRA).min(n);
    let mut cache: HashMap<usize, Vec<f64>> = HashMap::new();
    (0..n)
        .map(|i| {
            let start = i.saturating_sub(width / 2).min(n - width);
            let offset = i - start;
            let w = cache.entry(offset).or_insert_with(|| {
                let nodes: Vec<f64> = (0..width).map(|j| j as f64 - offset as f64).collect();
                let scale = spacing.powi(d as i32);
                fornberg(0.0, &nodes, d)[d].iter().map(|x| x / scale).collect()
            });
            w.iter().zip(&f[start..start + width]).map(|(wj, fj)| fj * *wj).sum()
        })
        .collect()
}

fn check_radial(terms: &[NumericTerm]) -> Result<(), NumericsError> {
    for t in terms {
        if t.phase != 0.0 || t.lz != 0 {
            return Err(NumericsError::Unsupported(
                "operator still has phase or L_z factors; reduce it first".into(),
            ));
        }
    }
    Ok(())
}

/// Applies a radial operator to `u` samples. Derivatives are taken of the
/// smooth `R = ρ^{-1/2}u`, i.e. `op ∘ ρ^{1/2}` acts on `R`.
pub fn apply_radial(
    op: &Operator,
    values: &impl Fn(Param) -> Option<f64>,
    u: &[Complex64],
    grid: &RadialGrid,
) -> Result<Vec<Complex64>, NumericsError> {
    let r_form = op.compose(&Operator::rho(crate::opalg::Expo::frac(1, 2)));
    let terms = r_form.evaluate(values)?;
    check_radial(&terms)?;
    let rs: Vec<f64> = grid.points().collect();
    let big_r: Vec<Complex64> = u.iter().zip(&rs).map(|(x, r)| x / r.sqrt()).collect();
    let max_d = terms.iter().map(|t| t.d).max().unwrap_or(0) as usize;
    let derivs: Vec<Vec<Complex64>> = (0..=max_d).map(|d| derivative(&big_r, grid.spacing, d)).collect();
    let mut out = vec![Complex64::new(0.0, 0.0); u.len()];
    for t in &terms {
        let dv = &derivs[t.d as usize];
        for (i, r) in rs.iter().enumerate() {
            out[i] += t.coeff * r.powf(t.rho) * dv[i];
        }
    }
    Ok(out)
}

/// Applies a fully numeric radial operator to a state's samples.
pub fn apply_operator(op: &Operator, state: &RadialState, grid: &RadialGrid) -> Result<Vec<Complex64>, NumericsError> {
    let u: Vec<Complex64> = state.samples.iter().map(|x| Complex64::new(*x, 0.0)).collect();
    apply_radial(op, &|_| None, &u, grid)
}
