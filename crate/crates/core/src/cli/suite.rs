//! Batches of numeric checks shared by `verify-numeric` and the acceptance tests.

use rayon::prelude::*;
use serde::Serialize;

use crate::numerics::{
    degenerate_set, eigensolve, eigenstate, ladder_check, on_shell_check, round_trip_check, valid_labels,
    zero_energy_b, zero_energy_check, AdmissibleRule, LadderReport, NumericsError, PotentialSpec, RadialGrid,
    RoundTripReport, Tolerances, ZeroEnergyReport,
};
use crate::opalg::{Operator, Rational};
use crate::systems::{build, ladder_semantics, OperatorName, SystemId};

/// Highest principal label used for ladder sources.
pub const SOURCE_N_MAX: i64 = 4;

pub const OSCILLATOR_LADDERS: [OperatorName; 14] = {
    use OperatorName::*;
    [DnPlus, DnMinus, DPlus, DMinus, OPlus, OMinus, A1, A2, A1Dag, A2Dag, B1, B2, B1Dag, B2Dag]
};

pub const HYDROGEN_LADDERS: [OperatorName; 10] = {
    use OperatorName::*;
    [TnPlus, TnMinus, TPlus, TMinus, GPlus, GMinus, F1, F2, F1Dag, F2Dag]
};

/// Operators drawn in the lattice diagrams.
pub fn diagram_operators(sys: &SystemId) -> Vec<OperatorName> {
    use OperatorName::*;
    match sys {
        SystemId::Oscillator => vec![DnPlus, DnMinus, OPlus, OMinus, A1, A2, A1Dag, A2Dag],
        SystemId::Hydrogen => vec![TnPlus, TnMinus, GPlus, GMinus, F1, F2, F1Dag, F2Dag],
        SystemId::Generalized(_) => vec![DeltaPlus, DeltaMinus, ThetaPlus, ThetaMinus],
    }
}

pub fn ladder_operators(sys: &SystemId) -> &'static [OperatorName] {
    match sys {
        SystemId::Oscillator => &OSCILLATOR_LADDERS,
        SystemId::Hydrogen => &HYDROGEN_LADDERS,
        SystemId::Generalized(_) => &[],
    }
}

/// Valid `(n, m)` labels with `n ≤ n_max`, ordered by `(n, m)`.
pub fn lattice(sys: &SystemId, n_max: i64) -> Vec<(i64, i64)> {
    let lo = if matches!(sys, SystemId::Hydrogen) { 1 } else { 0 };
    (lo..=n_max).flat_map(|n| (-n..=n).map(move |m| (n, m))).filter(|&(n, m)| valid_labels(sys, n, m)).collect()
}

/// Every source with `n ≤ SOURCE_N_MAX` for `name`. Targets above the
/// largest hydrogen level the reference grid resolves are skipped.
pub fn ladder_sources(sys: &SystemId, name: OperatorName) -> Vec<(i64, i64)> {
    let Ok((dn, _)) = ladder_semantics(sys, name) else {
        return Vec::new();
    };
    lattice(sys, SOURCE_N_MAX)
        .into_iter()
        .filter(|&(n, _)| !matches!(sys, SystemId::Hydrogen) || n + dn <= SOURCE_N_MAX)
        .collect()
}

pub fn ladder_suite(
    sys: &SystemId,
    ops: &[OperatorName],
    sources: Option<&[(i64, i64)]>,
    grid: &RadialGrid,
    tol: &Tolerances,
) -> Result<Vec<LadderReport>, NumericsError> {
    let cases: Vec<(OperatorName, (i64, i64))> = ops
        .iter()
        .flat_map(|&op| {
            let srcs = sources.map(<[_]>::to_vec).unwrap_or_else(|| ladder_sources(sys, op));
            srcs.into_iter().map(move |s| (op, s))
        })
        .collect();
    cases.par_iter().map(|&(op, src)| ladder_check(sys, op, src, grid, tol)).collect()
}

pub fn round_trip_suite(n_max: i64, grid: &RadialGrid, rel_tol: f64) -> Result<Vec<RoundTripReport>, NumericsError> {
    let labels = lattice(&SystemId::Oscillator, n_max);
    labels.par_iter().map(|&(n, m)| round_trip_check(n, m, grid, rel_tol)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct OnShellReport {
    pub identity: String,
    pub n: i64,
    pub m_values: Vec<i64>,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// `[G₊, G₋] − 2G3` for hydrogen.
pub fn g_su2_residual() -> Result<Operator, NumericsError> {
    let sys = SystemId::Hydrogen;
    let gp = build(&sys, OperatorName::GPlus)?;
    let gm = build(&sys, OperatorName::GMinus)?;
    let g3 = build(&sys, OperatorName::G3)?;
    Ok(&gp.commutator(&gm) - &g3.scale_rational(&Rational::from_int(2)))
}

/// The G commutator residual on every eigenstate of each shell.
pub fn on_shell_suite(shells: &[i64], grid: &RadialGrid, tol: f64) -> Result<Vec<OnShellReport>, NumericsError> {
    let residual = g_su2_residual()?;
    shells
        .iter()
        .map(|&n| {
            let m_values: Vec<i64> = (-(n - 1)..=(n - 1)).collect();
            let states = m_values
                .par_iter()
                .map(|&m| eigenstate(&PotentialSpec::Coulomb, n, m, grid))
                .collect::<Result<Vec<_>, _>>()?;
            let r = on_shell_check(&residual, &states)?;
            Ok(OnShellReport { identity: "ha.g-su2".into(), n, m_values, residual: r, tolerance: tol, pass: r <= tol })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroEnergyRow {
    #[serde(flatten)]
    pub report: ZeroEnergyReport,
    pub tolerance: f64,
    pub pass: bool,
}

/// Admissible `m` sharing one `B` at a given level.
#[derive(Clone, Debug, Serialize)]
pub struct Degeneracy {
    pub zeta: Rational,
    pub a: f64,
    pub n: i64,
    pub b: f64,
    pub m_values: Vec<i64>,
    pub multiplicity: usize,
}

pub fn zero_energy_suite(
    zeta: &Rational,
    a: f64,
    levels: &[i64],
    grid: &RadialGrid,
    rule: AdmissibleRule,
    tol: f64,
) -> Result<(Vec<ZeroEnergyRow>, Vec<Degeneracy>), NumericsError> {
    let mut rows = Vec::new();
    let mut degeneracy = Vec::new();
    for &n in levels {
        let m_values = degenerate_set(zeta, n, rule);
        let level = m_values
            .par_iter()
            .map(|&m| {
                let report = zero_energy_check(zeta, a, n, m, grid, rule)?;
                let pass = report.residual <= tol;
                Ok(ZeroEnergyRow { report, tolerance: tol, pass })
            })
            .collect::<Result<Vec<_>, NumericsError>>()?;
        rows.extend(level);
        degeneracy.push(Degeneracy {
            zeta: zeta.clone(),
            a,
            n,
            b: zero_energy_b(zeta.to_f64(), a, n),
            multiplicity: m_values.len(),
            m_values,
        });
    }
    Ok((rows, degeneracy))
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub system: String,
    pub m: i64,
    pub states: usize,
    pub ok: bool,
    pub message: Option<String>,
}

/// Re-solves each angular sector on a half-resolution grid.
pub fn grid_probe(sys: &SystemId, n_max: i64, grid: &RadialGrid) -> Result<Vec<ProbeReport>, NumericsError> {
    let pot = PotentialSpec::for_system(sys);
    let m_max = if matches!(sys, SystemId::Hydrogen) { n_max - 1 } else { n_max };
    (0..=m_max)
        .into_par_iter()
        .map(|m| {
            let states = match sys {
                SystemId::Hydrogen => n_max - m,
                _ => (n_max - m) / 2 + 1,
            } as usize;
            let (ok, message) = match eigensolve(&pot, m, grid, states) {
                Ok(_) => (true, None),
                Err(e @ NumericsError::GridTooCoarse { .. }) => (false, Some(e.to_string())),
                Err(e) => return Err(e),
            };
            Ok(ProbeReport { system: sys.short_name().into(), m, states, ok, message })
        })
        .collect()
}
