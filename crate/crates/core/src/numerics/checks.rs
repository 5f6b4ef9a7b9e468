use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::opalg::{Expo, Operator, Param, Rational};
use crate::systems::{build, ladder_semantics, parameter_offset, OperatorName, SystemId};

use super::fd::{apply_radial, derivative};
use super::grid::RadialGrid;
use super::states::{analytic_u, eigensolve, eigenstate, normalise, valid_labels, PotentialSpec, RadialState};
use super::NumericsError;

/// Applied norm below this fraction of the source norm counts as annihilation.
pub const ANNIHILATION_THRESHOLD: f64 = 1e-8;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Tolerances {
    pub overlap: f64,
    pub constant: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { overlap: 1e-6, constant: 1e-6 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LadderOutcome {
    Shift,
    Annihilation,
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderReport {
    pub system: String,
    pub operator: OperatorName,
    pub source: (i64, i64),
    pub target: (i64, i64),
    pub outcome: LadderOutcome,
    /// `|⟨applied, target⟩| / (‖applied‖‖target‖)`, zero on annihilation.
    pub overlap: f64,
    /// Least-squares `c` in `applied ≈ c·target` as `[re, im]`.
    pub constant: [f64; 2],
    /// Closed-form `|c|` where one is known (the a family).
    pub expected_modulus: Option<f64>,
    pub applied_norm_ratio: f64,
    pub pass: bool,
}

fn hydrogen_k(n: i64) -> f64 {
    n as f64 - 0.5
}

fn is_t_family(name: OperatorName) -> bool {
    matches!(name, OperatorName::TnPlus | OperatorName::TnMinus | OperatorName::TPlus | OperatorName::TMinus)
}

/// Known `|c|` in `a ψ_{n,m} = c ψ_target`.
fn a_constant(name: OperatorName, n: i64, m: i64) -> Option<f64> {
    let v = match name {
        OperatorName::A1 => (n - m) as f64 / 2.0,
        OperatorName::A2 => (n + m) as f64 / 2.0,
        OperatorName::A1Dag => (n - m + 2) as f64 / 2.0,
        OperatorName::A2Dag => (n + m + 2) as f64 / 2.0,
        _ => return None,
    };
    Some(v.max(0.0).sqrt())
}

/// The single radial block of an operator acting on `ψ = ρ^{-1/2}u e^{imφ}`,
/// or the operator itself when it already acts on `u`.
fn radial_block(op: &Operator, dm: i64) -> Result<Operator, NumericsError> {
    if op.phases().iter().all(Expo::is_zero) && op.terms().all(|(k, _)| k.lz == 0) {
        return Ok(op.clone());
    }
    let blocks = op.radial_reduction();
    if blocks.len() != 1 {
        return Err(NumericsError::Unsupported("operator mixes several phase sectors".into()));
    }
    let (k, block) = blocks.into_iter().next().unwrap();
    if k != Expo::int(dm) {
        return Err(NumericsError::Unsupported(format!("phase {k} does not match the m shift {dm}")));
    }
    Ok(block)
}

fn to_complex(v: &[f64]) -> Vec<Complex64> {
    v.iter().map(|x| Complex64::new(*x, 0.0)).collect()
}

/// `∫u²dρ` from samples on a cell-centred grid: the midpoint sum minus its
/// leading endpoint error `h²/24·(u²)'(0) = h²/24·R(0)²`.
fn continuum_norm2(u: &[f64], grid: &RadialGrid) -> f64 {
    let h = grid.spacing;
    let sum: f64 = u.iter().map(|x| x * x).sum::<f64>() * h;
    if !grid.is_cell_centred() || u.len() < 2 {
        return sum;
    }
    let r0 = u[0] / grid.point(0).sqrt();
    let r1 = u[1] / grid.point(1).sqrt();
    let at_origin = 1.5 * r0 - 0.5 * r1;
    sum - h * h / 24.0 * at_origin * at_origin
}

fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// Applies a ladder operator to the closed-form source state and compares the
/// result with the eigensolver's target state.
pub fn ladder_check(
    sys: &SystemId,
    name: OperatorName,
    source: (i64, i64),
    grid: &RadialGrid,
    tol: &Tolerances,
) -> Result<LadderReport, NumericsError> {
    if matches!(sys, SystemId::Generalized(_)) {
        return Err(NumericsError::Unsupported("ladder checks cover the oscillator and hydrogen".into()));
    }
    let (n, m) = source;
    if !valid_labels(sys, n, m) {
        return Err(NumericsError::InvalidLabels { n, m });
    }
    let (dn, dm) = ladder_semantics(sys, name)?;
    let target = (n + dn, m + dm);
    let target_valid = valid_labels(sys, target.0, target.1);
    let op = radial_block(&build(sys, name)?, dm)?;

    let m_param = (m + parameter_offset(name)) as f64;
    let (energy, k_n) = match sys {
        SystemId::Hydrogen => {
            let k = hydrogen_k(n);
            (-1.0 / (2.0 * k * k), k)
        }
        _ => (n as f64 + 1.0, 0.0),
    };
    let values = move |p: Param| match p {
        Param::M => Some(m_param),
        Param::E => Some(energy),
        Param::K => Some(k_n),
        Param::N => Some(n as f64),
        _ => None,
    };

    // T operators act in x = ρ/K; sample both states on one x grid.
    let (work_grid, src_scale, tgt_scale) = if is_t_family(name) {
        let kt = hydrogen_k(target.0).max(0.5);
        let s = k_n.max(kt);
        (grid.scaled(1.0 / s), k_n, kt)
    } else {
        (grid.clone(), 1.0, 1.0)
    };
    let xs: Vec<f64> = work_grid.points().collect();
    let mut src: Vec<f64> = xs.iter().map(|x| analytic_u(sys, n, m, src_scale * x)).collect();
    normalise(&mut src, work_grid.spacing);
    let src_c = to_complex(&src);
    let applied = apply_radial(&op, &values, &src_c, &work_grid)?;
    let ratio = (norm2(&applied) / norm2(&src_c)).sqrt();

    let mut report = LadderReport {
        system: sys.short_name().into(),
        operator: name,
        source,
        target,
        outcome: LadderOutcome::Shift,
        overlap: 0.0,
        constant: [0.0, 0.0],
        expected_modulus: a_constant(name, n, m),
        applied_norm_ratio: ratio,
        pass: false,
    };
    if ratio < ANNIHILATION_THRESHOLD {
        report.outcome = LadderOutcome::Annihilation;
        report.pass = !target_valid || report.expected_modulus == Some(0.0);
        return Ok(report);
    }
    if !target_valid {
        return Ok(report);
    }

    let pot = PotentialSpec::for_system(sys);
    let eig = eigenstate(&pot, target.0, target.1, grid)?;
    let eig_samples: Vec<f64> = if is_t_family(name) {
        xs.iter().map(|x| eig.interpolate(tgt_scale * x)).collect()
    } else {
        eig.samples.clone()
    };
    let dot: Complex64 = eig_samples.iter().zip(&applied).map(|(t, a)| a * *t).sum();
    let eig_norm2: f64 = eig_samples.iter().map(|t| t * t).sum();
    report.overlap = dot.norm() / (eig_norm2 * norm2(&applied)).sqrt();

    // Constants refer to continuum-normalised states.
    let exact: Vec<f64> = xs.iter().map(|x| analytic_u(sys, target.0, target.1, tgt_scale * x)).collect();
    let t_scale = continuum_norm2(&exact, &work_grid).sqrt().recip();
    let s_scale = continuum_norm2(&src, &work_grid).sqrt().recip();
    let c: Complex64 = exact.iter().zip(&applied).map(|(t, a)| a * (*t * t_scale * s_scale)).sum::<Complex64>()
        / exact.iter().map(|t| (t * t_scale).powi(2)).sum::<f64>();
    report.constant = [c.re, c.im];

    let overlap_ok = report.overlap >= 1.0 - tol.overlap;
    let constant_ok = report.expected_modulus.is_none_or(|e| (c.norm() - e).abs() <= tol.constant);
    report.pass = overlap_ok && constant_ok;
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundTripReport {
    pub n: i64,
    pub m: i64,
    pub measured: f64,
    pub expected: f64,
    pub relative_error: f64,
    pub overlap: f64,
    pub pass: bool,
}

/// Applies `D₊ⁿ` and then `D₋` at level `n+2` to `u_{nm}` and measures the
/// scalar the round trip returns.
pub fn round_trip_check(n: i64, m: i64, grid: &RadialGrid, rel_tol: f64) -> Result<RoundTripReport, NumericsError> {
    let sys = SystemId::Oscillator;
    if !valid_labels(&sys, n, m) {
        return Err(NumericsError::InvalidLabels { n, m });
    }
    let e = n as f64 + 1.0;
    let at = |energy: f64| {
        move |p: Param| match p {
            Param::M => Some(m as f64),
            Param::E => Some(energy),
            _ => None,
        }
    };
    let mut u: Vec<f64> = grid.points().map(|r| analytic_u(&sys, n, m, r)).collect();
    normalise(&mut u, grid.spacing);
    let u_c = to_complex(&u);
    let up = apply_radial(&build(&sys, OperatorName::DnPlus)?, &at(e), &u_c, grid)?;
    let back = apply_radial(&build(&sys, OperatorName::DnMinus)?, &at(e + 2.0), &up, grid)?;
    let dot: Complex64 = u.iter().zip(&back).map(|(a, b)| b * *a).sum();
    let measured = (dot / u.iter().map(|x| x * x).sum::<f64>()).re;
    let expected = 0.25 * ((e + 0.5) * (e + 1.5) - ((m * m) as f64 - 0.25));
    let overlap = dot.norm() / (norm2(&back) * u.iter().map(|x| x * x).sum::<f64>()).sqrt();
    let relative_error = (measured - expected).abs() / expected.abs();
    Ok(RoundTripReport { n, m, measured, expected, relative_error, overlap, pass: relative_error <= rel_tol })
}

/// `max ‖op ψ‖/‖ψ‖` over states `ψ = ρ^{-1/2}u e^{imφ}`; `E`, `K`, `m`, `n` are
/// bound per state.
pub fn on_shell_check(op: &Operator, states: &[RadialState]) -> Result<f64, NumericsError> {
    if op.mentions(Param::E) || op.mentions(Param::K) {
        if let Some(first) = states.first() {
            let e0 = first.energy;
            if states.iter().any(|s| (s.energy - e0).abs() > 1e-4 * e0.abs().max(1.0)) {
                return Err(NumericsError::MixedEnergies);
            }
        }
    }
    let blocks: Vec<Operator> = if op.phases().iter().all(Expo::is_zero) && op.terms().all(|(k, _)| k.lz == 0) {
        vec![op.clone()]
    } else {
        op.radial_reduction().into_values().collect()
    };
    let mut worst = 0.0f64;
    for s in states {
        let values = |p: Param| match p {
            Param::M => Some(s.m as f64),
            Param::E => Some(s.energy),
            Param::K => Some(1.0 / (2.0 * s.energy.abs()).sqrt()),
            Param::N => Some(s.n as f64),
            _ => None,
        };
        let u = to_complex(&s.samples);
        let mut total = 0.0;
        for b in &blocks {
            total += norm2(&apply_radial(b, &values, &u, &s.grid)?);
        }
        worst = worst.max((total / norm2(&u)).sqrt());
    }
    Ok(worst)
}

/// Which oscillator angular numbers give usable zero-energy states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum AdmissibleRule {
    /// `m·ζ/2 ∈ ℤ`, so `e^{imθ}` is single valued in `φ`.
    #[default]
    SingleValued,
    Any,
}

impl AdmissibleRule {
    pub fn admits(self, zeta: &Rational, m: i64) -> bool {
        match self {
            AdmissibleRule::Any => true,
            AdmissibleRule::SingleValued => (&Rational::from_int(m) * &(zeta * &Rational::new(1, 2))).is_integer(),
        }
    }
}

/// Oscillator angular numbers at level `n` accepted by `rule`.
pub fn degenerate_set(zeta: &Rational, n: i64, rule: AdmissibleRule) -> Vec<i64> {
    (-n..=n).filter(|m| (n - m.abs()) % 2 == 0 && rule.admits(zeta, *m)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroEnergyReport {
    pub zeta: Rational,
    pub a: f64,
    pub b: f64,
    pub n: i64,
    pub m: i64,
    /// Angular number in `φ`, `m·ζ/2`.
    pub m_phi: f64,
    pub admissible: bool,
    pub residual: f64,
}

/// `B` placing the zero-energy level on oscillator level `n`.
pub fn zero_energy_b(zeta: f64, a: f64, n: i64) -> f64 {
    zeta * (2.0 * a).sqrt() / 2.0 * (n + 1) as f64
}

/// Maps the oscillator state `(n, m)` through `y² = (2√(2A)/ζ)ρ^ζ`,
/// `θ = ζφ/2` and returns `‖𝓗Ψ₀‖/‖Ψ₀‖` for the full Hamiltonian at
/// `B = zero_energy_b(ζ, A, n)`.
///
/// `grid` is a cell-centred grid in the oscillator variable `y`; derivatives
/// are taken on the uniform `t = ρ^{ζ/2}` grid and converted by the chain rule.
pub fn zero_energy_check(
    zeta: &Rational,
    a: f64,
    n: i64,
    m: i64,
    grid: &RadialGrid,
    rule: AdmissibleRule,
) -> Result<ZeroEnergyReport, NumericsError> {
    if !zeta.is_positive() || a <= 0.0 {
        return Err(NumericsError::Unsupported("zeta and A must be positive".into()));
    }
    if !valid_labels(&SystemId::Oscillator, n, m) {
        return Err(NumericsError::InvalidLabels { n, m });
    }
    let z = zeta.to_f64();
    let b = zero_energy_b(z, a, n);
    let c = z / (2.0 * (2.0 * a).sqrt());
    let sc = c.sqrt();
    let am = m.unsigned_abs() as f64;
    let nr = ((n - m.abs()) / 2) as usize;
    let ys: Vec<f64> = grid.points().collect();
    let g: Vec<Complex64> = ys
        .iter()
        .map(|y| Complex64::new(y.powf(am) * (-y * y / 2.0).exp() * super::states::laguerre(nr, am, y * y), 0.0))
        .collect();
    let dt = grid.spacing * sc;
    let g1 = derivative(&g, dt, 1);
    let g2 = derivative(&g, dt, 2);
    let m_phi = m as f64 * z / 2.0;
    let (mut num, mut den) = (0.0, 0.0);
    for (i, y) in ys.iter().enumerate() {
        let t = sc * y;
        let rho = t.powf(2.0 / z);
        let t_r = z / 2.0 * rho.powf(z / 2.0 - 1.0);
        let t_rr = z / 2.0 * (z / 2.0 - 1.0) * rho.powf(z / 2.0 - 2.0);
        let f = g[i].re;
        let f1 = g1[i].re * t_r;
        let f2 = g2[i].re * t_r * t_r + g1[i].re * t_rr;
        let hf = -0.5 * (f2 + f1 / rho - m_phi * m_phi * f / (rho * rho)) + a * rho.powf(2.0 * z - 2.0) * f
            - b * rho.powf(z - 2.0) * f;
        let w = rho / t_r;
        num += hf * hf * w;
        den += f * f * w;
    }
    Ok(ZeroEnergyReport {
        zeta: zeta.clone(),
        a,
        b,
        n,
        m,
        m_phi,
        admissible: rule.admits(zeta, m),
        residual: (num / den).sqrt(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumRow {
    pub n: i64,
    pub m: i64,
    pub numeric: f64,
    pub reference: Option<f64>,
    pub delta: Option<f64>,
}

/// Reference energy where a closed form is known.
pub fn reference_energy(sys: &SystemId, n: i64) -> Option<f64> {
    match sys {
        SystemId::Oscillator => Some(n as f64 + 1.0),
        SystemId::Hydrogen => Some(-1.0 / (2.0 * hydrogen_k(n).powi(2))),
        SystemId::Generalized(p) if p.zeta == Rational::from_int(2) => {
            Some((2.0 * p.a.to_f64()).sqrt() * (n as f64 + 1.0) - p.b.to_f64())
        }
        SystemId::Generalized(_) => None,
    }
}

/// All states with principal label `n ≤ n_max`, ordered by `(n, m)`.
pub fn spectrum(sys: &SystemId, n_max: i64, grid: &RadialGrid) -> Result<Vec<SpectrumRow>, NumericsError> {
    let pot = PotentialSpec::for_system(sys);
    let m_max = if matches!(sys, SystemId::Hydrogen) { n_max - 1 } else { n_max };
    let per_m: Vec<Result<Vec<SpectrumRow>, NumericsError>> = (-m_max..=m_max)
        .into_par_iter()
        .map(|m| {
            let count = match sys {
                SystemId::Hydrogen => n_max - m.abs(),
                _ => (n_max - m.abs()) / 2 + 1,
            };
            if count <= 0 {
                return Ok(Vec::new());
            }
            let states = eigensolve(&pot, m, grid, count as usize)?;
            Ok(states
                .into_iter()
                .map(|s| {
                    let reference = reference_energy(sys, s.n);
                    SpectrumRow { n: s.n, m, numeric: s.energy, reference, delta: reference.map(|r| (s.energy - r).abs()) }
                })
                .collect())
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_m {
        rows.extend(r?);
    }
    rows.sort_by_key(|r| (r.n, r.m));
    Ok(rows)
}

/// `(E_h − E)/(E_{h/2} − E)` for the oscillator ground state at `m`, using
/// cell-centred grids with `n_points` and `2·n_points` nodes.
pub fn richardson_ratio(m: i64, r_max: f64, n_points: usize) -> Result<f64, NumericsError> {
    let pot = PotentialSpec::Oscillator;
    let exact = m.abs() as f64 + 1.0;
    let coarse = eigensolve(&pot, m, &RadialGrid::cell_centred(r_max, n_points)?, 1)?[0].energy;
    let fine = eigensolve(&pot, m, &RadialGrid::cell_centred(r_max, 2 * n_points)?, 1)?[0].energy;
    Ok((coarse - exact) / (fine - exact))
}
