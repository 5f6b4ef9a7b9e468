use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::systems::SystemId;

use super::grid::RadialGrid;
use super::tridiag::SymTridiag;
use super::NumericsError;

/// Radial potential; the centrifugal term is added by the discretization.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PotentialSpec {
    /// `½ρ²`
    Oscillator,
    /// `−1/ρ`
    Coulomb,
    /// `Aρ^{2ζ−2} − Bρ^{ζ−2}`
    Power { zeta: f64, a: f64, b: f64 },
}

impl PotentialSpec {
    pub fn for_system(sys: &SystemId) -> Self {
        match sys {
            SystemId::Oscillator => PotentialSpec::Oscillator,
            SystemId::Hydrogen => PotentialSpec::Coulomb,
            SystemId::Generalized(p) => {
                PotentialSpec::Power { zeta: p.zeta.to_f64(), a: p.a.to_f64(), b: p.b.to_f64() }
            }
        }
    }

    pub fn value(&self, r: f64) -> f64 {
        match self {
            PotentialSpec::Oscillator => 0.5 * r * r,
            PotentialSpec::Coulomb => -1.0 / r,
            PotentialSpec::Power { zeta, a, b } => a * r.powf(2.0 * zeta - 2.0) - b * r.powf(zeta - 2.0),
        }
    }

    /// Principal label of the `index`-th radial state at angular number `m`.
    pub fn label(&self, index: usize, m: i64) -> i64 {
        match self {
            PotentialSpec::Coulomb => index as i64 + m.abs() + 1,
            _ => 2 * index as i64 + m.abs(),
        }
    }
}

/// Samples of `u = ρ^{1/2}R` with `Σ|u|²·spacing = 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadialState {
    pub n: i64,
    pub m: i64,
    pub energy: f64,
    pub grid: RadialGrid,
    pub samples: Vec<f64>,
}

impl RadialState {
    pub fn norm(&self) -> f64 {
        (self.samples.iter().map(|u| u * u).sum::<f64>() * self.grid.spacing).sqrt()
    }

    /// `u(ρ)` by cubic Lagrange interpolation of the smooth `R = u/√ρ`;
    /// zero outside the grid.
    pub fn interpolate(&self, r: f64) -> f64 {
        let g = &self.grid;
        if r <= 0.0 || r > g.r_max + 1e-12 * g.r_max {
            return 0.0;
        }
        let n = g.n_points;
        let pos = (r - g.r_min) / g.spacing;
        let start = (pos.floor() as i64 - 1).clamp(0, n as i64 - 4) as usize;
        let mut acc = 0.0;
        for j in start..start + 4 {
            let xj = g.point(j);
            let mut w = 1.0;
            for k in start..start + 4 {
                if k != j {
                    w *= (r - g.point(k)) / (xj - g.point(k));
                }
            }
            acc += w * self.samples[j] / xj.sqrt();
        }
        acc * r.sqrt()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("rho,u\n");
        for (r, u) in self.grid.points().zip(&self.samples) {
            out.push_str(&format!("{r:.12e},{u:.12e}\n"));
        }
        out
    }
}

/// Unit-normalises and fixes the sign so the first sizeable sample is positive.
pub(crate) fn normalise(samples: &mut [f64], spacing: f64) {
    let norm = (samples.iter().map(|u| u * u).sum::<f64>() * spacing).sqrt();
    let peak = samples.iter().fold(0.0f64, |a, u| a.max(u.abs()));
    let first = samples.iter().find(|u| u.abs() > 1e-3 * peak).copied().unwrap_or(1.0);
    let s = first.signum() / norm;
    samples.iter_mut().for_each(|u| *u *= s);
}

/// Finite-volume discretization of `−½R'' − R'/(2ρ) + (m²/(2ρ²) + V)R` on a
/// cell-centred grid, symmetrised in `u = ρ^{1/2}R`.
fn hamiltonian(pot: &PotentialSpec, m: i64, grid: &RadialGrid) -> SymTridiag {
    let n = grid.n_points;
    let h = grid.spacing;
    let h2 = h * h;
    let m2 = (m * m) as f64;
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n - 1);
    for i in 0..n {
        let r = grid.point(i);
        let face_lo = (r - h / 2.0).max(0.0);
        let face_hi = r + h / 2.0;
        diag.push((face_lo + face_hi) / (2.0 * r * h2) + m2 / (2.0 * r * r) + pot.value(r));
        if i + 1 < n {
            let rn = grid.point(i + 1);
            off.push(-face_hi / (2.0 * h2 * (r * rn).sqrt()));
        }
    }
    SymTridiag { diag, off }
}

fn solve_raw(pot: &PotentialSpec, m: i64, grid: &RadialGrid, count: usize) -> Result<Vec<RadialState>, NumericsError> {
    let t = hamiltonian(pot, m, grid);
    (0..count)
        .into_par_iter()
        .map(|k| {
            let e = t.eigenvalue(k)?;
            let mut v = t.eigenvector(e)?;
            normalise(&mut v, grid.spacing);
            Ok(RadialState { n: pot.label(k, m), m, energy: e, grid: grid.clone(), samples: v })
        })
        .collect()
}

/// Energy change allowed between the grid and its half-resolution probe.
pub const PROBE_TOLERANCE: f64 = 1e-3;

/// Lowest `count` eigenstates at angular number `m`, ascending in energy.
///
/// The same problem is re-solved on a grid with half the nodes; a shift
/// larger than [`PROBE_TOLERANCE`] is reported as `GridTooCoarse`.
pub fn eigensolve(pot: &PotentialSpec, m: i64, grid: &RadialGrid, count: usize) -> Result<Vec<RadialState>, NumericsError> {
    let states = eigensolve_unprobed(pot, m, grid, count)?;
    let coarse = solve_raw(pot, m, &grid.coarsened()?, count)?;
    for (f, c) in states.iter().zip(&coarse) {
        let delta = (f.energy - c.energy).abs();
        if delta > PROBE_TOLERANCE * f.energy.abs().max(1.0) {
            return Err(NumericsError::GridTooCoarse { n: f.n, m, delta });
        }
    }
    Ok(states)
}

pub fn eigensolve_unprobed(
    pot: &PotentialSpec,
    m: i64,
    grid: &RadialGrid,
    count: usize,
) -> Result<Vec<RadialState>, NumericsError> {
    if count == 0 || count >= grid.n_points {
        return Err(NumericsError::InvalidGrid(format!("cannot extract {count} states from {} points", grid.n_points)));
    }
    solve_raw(pot, m, grid, count)
}

/// The eigenstate with principal label `n` at angular number `m`.
pub fn eigenstate(pot: &PotentialSpec, n: i64, m: i64, grid: &RadialGrid) -> Result<RadialState, NumericsError> {
    let index = match pot {
        PotentialSpec::Coulomb => n - m.abs() - 1,
        _ if (n - m.abs()) % 2 != 0 => -1,
        _ => (n - m.abs()) / 2,
    };
    if index < 0 {
        return Err(NumericsError::InvalidLabels { n, m });
    }
    let states = eigensolve_unprobed(pot, m, grid, index as usize + 1)?;
    Ok(states.into_iter().last().unwrap())
}

/// Generalized Laguerre polynomial `L_k^α(x)`.
pub fn laguerre(k: usize, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for j in 1..k {
        let j = j as f64;
        let next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Whether `(n, m)` labels a bound state of the system.
pub fn valid_labels(sys: &SystemId, n: i64, m: i64) -> bool {
    match sys {
        SystemId::Hydrogen => n > m.abs(),
        _ => n >= m.abs() && (n - m.abs()) % 2 == 0,
    }
}

/// Closed-form `u(ρ)` without normalisation.
pub fn analytic_u(sys: &SystemId, n: i64, m: i64, r: f64) -> f64 {
    let am = m.unsigned_abs() as f64;
    match sys {
        SystemId::Hydrogen => {
            let k = n as f64 - 0.5;
            let x = 2.0 * r / k;
            r.sqrt() * x.powf(am) * (-r / k).exp() * laguerre((n - m.abs() - 1) as usize, 2.0 * am, x)
        }
        _ => {
            let nr = ((n - m.abs()) / 2) as usize;
            r.powf(am + 0.5) * (-r * r / 2.0).exp() * laguerre(nr, am, r * r)
        }
    }
}

pub fn analytic_energy(sys: &SystemId, n: i64) -> f64 {
    match sys {
        SystemId::Hydrogen => -1.0 / (2.0 * (n as f64 - 0.5).powi(2)),
        _ => n as f64 + 1.0,
    }
}

/// Samples of the closed-form eigenfunction (oscillator or hydrogen).
pub fn analytic_state(sys: &SystemId, n: i64, m: i64, grid: &RadialGrid) -> Result<RadialState, NumericsError> {
    if matches!(sys, SystemId::Generalized(_)) {
        return Err(NumericsError::Unsupported("no closed form for the generalized system".into()));
    }
    if !valid_labels(sys, n, m) {
        return Err(NumericsError::InvalidLabels { n, m });
    }
    let mut samples: Vec<f64> = grid.points().map(|r| analytic_u(sys, n, m, r)).collect();
    normalise(&mut samples, grid.spacing);
    Ok(RadialState { n, m, energy: analytic_energy(sys, n), grid: grid.clone(), samples })
}

/// `|⟨a, b⟩| / (‖a‖‖b‖)` for real sample vectors.
pub fn overlap(a: &[f64], b: &[f64]) -> f64 {
    let ab: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let aa: f64 = a.iter().map(|x| x * x).sum();
    let bb: f64 = b.iter().map(|x| x * x).sum();
    ab.abs() / (aa * bb).sqrt()
}
