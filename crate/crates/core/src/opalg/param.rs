use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Symbolic parameters admitted in coefficients.
///
/// The declaration order is the canonical variable order used when printing
/// polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Param {
    /// Angular quantum number.
    M,
    /// Principal quantum number.
    N,
    /// Energy eigenvalue.
    E,
    /// Hydrogen length scale, `K^2 = -1/(2E)`.
    K,
    Zeta,
    A,
    B,
    /// Trial exponent of `rho^s`.
    S,
    /// Trial phase of `e^{i k phi}`.
    Kphase,
}

impl Param {
    pub const ALL: [Param; 9] = [
        Param::M,
        Param::N,
        Param::E,
        Param::K,
        Param::Zeta,
        Param::A,
        Param::B,
        Param::S,
        Param::Kphase,
    ];

    pub const COUNT: usize = 9;

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::M => "m",
            Param::N => "n",
            Param::E => "E",
            Param::K => "K",
            Param::Zeta => "zeta",
            Param::A => "A",
            Param::B => "B",
            Param::S => "s",
            Param::Kphase => "k",
        }
    }

    /// Sign `σ` such that `σ·p` is the positive quantity whose fractional
    /// powers may appear as radical prefactors. Bound-state energies are
    /// negative, so `|E| = -E`.
    pub fn radicand_sign(self) -> i64 {
        match self {
            Param::E => -1,
            _ => 1,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Param::ALL
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| AlgebraError::Parse(format!("unknown parameter {s:?}")))
    }
}
