//! Radial eigensolver and finite-difference checks of the symbolic results.

mod checks;
mod fd;
mod grid;
mod states;
mod tridiag;

pub use checks::{
    degenerate_set, ladder_check, on_shell_check, reference_energy, richardson_ratio, round_trip_check, spectrum,
    zero_energy_b, zero_energy_check, AdmissibleRule, LadderOutcome, LadderReport, RoundTripReport, SpectrumRow,
    Tolerances, ZeroEnergyReport, ANNIHILATION_THRESHOLD,
};
pub use fd::{apply_operator, apply_radial, derivative, fornberg};
pub use grid::RadialGrid;
pub use states::{
    analytic_energy, analytic_state, analytic_u, eigensolve, eigensolve_unprobed, eigenstate, laguerre, overlap,
    valid_labels, PotentialSpec, RadialState, PROBE_TOLERANCE,
};

use thiserror::Error;

use crate::opalg::AlgebraError;
use crate::systems::SystemsError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("eigensolver did not converge: {0}")]
    NonConvergence(String),
    #[error("grid too coarse: state (n={n}, m={m}) moved by {delta:e} under refinement")]
    GridTooCoarse { n: i64, m: i64, delta: f64 },
    #[error("invalid labels (n={n}, m={m})")]
    InvalidLabels { n: i64, m: i64 },
    #[error("states do not share one energy")]
    MixedEnergies,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Systems(#[from] SystemsError),
}
