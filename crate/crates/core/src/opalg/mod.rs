//! Exact algebra of normal-ordered radial differential operators.
//!
//! An [`Operator`] is a finite sum of terms `c · e^{ikφ} · ρ^p · ∂ρ^j · L_z^l`
//! kept in canonical form, so structural equality decides operator equality.

mod coeff;
mod expo;
mod operator;
mod param;
mod poly;
mod radical;
mod ratfunc;
mod rational;

pub use coeff::Coeff;
pub use expo::Expo;
pub use operator::{Measure, MonomialAction, NumericTerm, Operator, OperatorJson, TermJson, TermKey};
pub use param::Param;
pub use poly::{Monomial, Poly};
pub use radical::{Radical, RadicalBase};
pub use ratfunc::{LinearFactor, RatFunc};
pub use rational::{GaussianRational, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parameter {0} has no value")]
    Unbound(Param),
    #[error("not invertible in the coefficient ring: {0}")]
    NotInvertible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("zeta must be positive, got {0}")]
    InvalidZeta(Rational),
    #[error("radicand must be positive: {0}")]
    NonPositiveRadicand(String),
}
