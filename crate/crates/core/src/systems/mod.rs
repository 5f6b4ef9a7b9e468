//! Named operators of the oscillator, hydrogen and generalized-power systems,
//! plus a registry of exact identities between them.

mod catalog;
mod identities;
mod transform;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::opalg::{AlgebraError, Operator, Param, Rational};

pub use identities::{identity_ids, verify_all, verify_closures, verify_identity, IdentityInfo, IdentityReport};
pub use transform::{pullback, transform_check};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemsError {
    #[error("operator {name} is not defined for system {system}")]
    UnknownOperator { system: String, name: String },
    #[error("{0} is not a ladder operator")]
    NotLadder(String),
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Generalized power-law system `Aρ^{2ζ−2} − Bρ^{ζ−2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenParams {
    pub zeta: Rational,
    pub a: Rational,
    pub b: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SystemId {
    Oscillator,
    Hydrogen,
    Generalized(GenParams),
}

impl SystemId {
    pub fn generalized(zeta: Rational, a: Rational, b: Rational) -> Result<Self, SystemsError> {
        for (name, v) in [("zeta", &zeta), ("A", &a), ("B", &b)] {
            if !v.is_positive() {
                return Err(SystemsError::InvalidSystem(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(SystemId::Generalized(GenParams { zeta, a, b }))
    }

    pub fn short_name(&self) -> &'static str {
        match self {
            SystemId::Oscillator => "ho",
            SystemId::Hydrogen => "ha",
            SystemId::Generalized(_) => "gen",
        }
    }

    /// Operator names defined for this system, in catalog order.
    pub fn catalog(&self) -> &'static [OperatorName] {
        use OperatorName::*;
        match self {
            SystemId::Oscillator => &[
                H, Hm, DnPlus, DnMinus, D3, DPlus, DMinus, B1, B2, B1Dag, B2Dag, Partner1Plus, Partner2Plus,
                Partner1Minus, Partner2Minus, A1, A2, A1Dag, A2Dag, OPlus, OMinus, O3, CalO1, CalO2, CalO1Dag,
                CalO2Dag,
            ],
            SystemId::Hydrogen => &[
                H, Hm, TnPlus, TnMinus, T3, TPlus, TMinus, F1, F2, F1Dag, F2Dag, Partner1Plus, Partner2Plus,
                Partner1Minus, Partner2Minus, GRadialPlus, GRadialMinus, GPlus, GMinus, G3,
            ],
            SystemId::Generalized(_) => &[
                Hcal, H, HTilde, FPlus, FMinus, F3, KPlus, KMinus, K3, ThetaPlus, ThetaMinus, Theta3, DeltaPlus,
                DeltaMinus, Delta3,
            ],
        }
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemId::Generalized(p) => write!(f, "gen(zeta={}, A={}, B={})", p.zeta, p.a, p.b),
            other => f.write_str(other.short_name()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperatorName {
    H,
    Hm,
    DnPlus,
    DnMinus,
    D3,
    DPlus,
    DMinus,
    B1,
    B2,
    B1Dag,
    B2Dag,
    /// `B₁B₁†` or `F₁F₁†`
    Partner1Plus,
    /// `B₂B₂†` or `F₂F₂†`
    Partner2Plus,
    /// `B₁†B₁` or `F₁†F₁`
    Partner1Minus,
    /// `B₂†B₂` or `F₂†F₂`
    Partner2Minus,
    A1,
    A2,
    A1Dag,
    A2Dag,
    OPlus,
    OMinus,
    O3,
    CalO1,
    CalO2,
    CalO1Dag,
    CalO2Dag,
    TnPlus,
    TnMinus,
    T3,
    TPlus,
    TMinus,
    F1,
    F2,
    F1Dag,
    F2Dag,
    GRadialPlus,
    GRadialMinus,
    GPlus,
    GMinus,
    G3,
    Hcal,
    HTilde,
    FPlus,
    FMinus,
    F3,
    KPlus,
    KMinus,
    K3,
    ThetaPlus,
    ThetaMinus,
    Theta3,
    DeltaPlus,
    DeltaMinus,
    Delta3,
}

const NAMES: &[(OperatorName, &str)] = &[
    (OperatorName::H, "H"),
    (OperatorName::Hm, "Hm"),
    (OperatorName::DnPlus, "D+n"),
    (OperatorName::DnMinus, "D-n"),
    (OperatorName::D3, "D3"),
    (OperatorName::DPlus, "D+"),
    (OperatorName::DMinus, "D-"),
    (OperatorName::B1, "B1"),
    (OperatorName::B2, "B2"),
    (OperatorName::B1Dag, "B1dag"),
    (OperatorName::B2Dag, "B2dag"),
    (OperatorName::Partner1Plus, "H1+"),
    (OperatorName::Partner2Plus, "H2+"),
    (OperatorName::Partner1Minus, "H1-"),
    (OperatorName::Partner2Minus, "H2-"),
    (OperatorName::A1, "a1"),
    (OperatorName::A2, "a2"),
    (OperatorName::A1Dag, "a1dag"),
    (OperatorName::A2Dag, "a2dag"),
    (OperatorName::OPlus, "O+"),
    (OperatorName::OMinus, "O-"),
    (OperatorName::O3, "O3"),
    (OperatorName::CalO1, "calO1"),
    (OperatorName::CalO2, "calO2"),
    (OperatorName::CalO1Dag, "calO1dag"),
    (OperatorName::CalO2Dag, "calO2dag"),
    (OperatorName::TnPlus, "T+n"),
    (OperatorName::TnMinus, "T-n"),
    (OperatorName::T3, "T3"),
    (OperatorName::TPlus, "T+"),
    (OperatorName::TMinus, "T-"),
    (OperatorName::F1, "F1"),
    (OperatorName::F2, "F2"),
    (OperatorName::F1Dag, "F1dag"),
    (OperatorName::F2Dag, "F2dag"),
    (OperatorName::GRadialPlus, "g+"),
    (OperatorName::GRadialMinus, "g-"),
    (OperatorName::GPlus, "G+"),
    (OperatorName::GMinus, "G-"),
    (OperatorName::G3, "G3"),
    (OperatorName::Hcal, "Hcal"),
    (OperatorName::HTilde, "Htilde"),
    (OperatorName::FPlus, "F+"),
    (OperatorName::FMinus, "F-"),
    (OperatorName::F3, "F3"),
    (OperatorName::KPlus, "K+"),
    (OperatorName::KMinus, "K-"),
    (OperatorName::K3, "K3"),
    (OperatorName::ThetaPlus, "Theta+"),
    (OperatorName::ThetaMinus, "Theta-"),
    (OperatorName::Theta3, "Theta3"),
    (OperatorName::DeltaPlus, "Delta+"),
    (OperatorName::DeltaMinus, "Delta-"),
    (OperatorName::Delta3, "Delta3"),
];

impl OperatorName {
    pub fn as_str(self) -> &'static str {
        NAMES.iter().find(|(n, _)| *n == self).map(|(_, s)| *s).unwrap()
    }
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorName {
    type Err = String;
    /// Exact match first: `g+` and `G+` differ only in case.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES
            .iter()
            .find(|(_, n)| *n == s)
            .or_else(|| NAMES.iter().find(|(_, n)| n.eq_ignore_ascii_case(s)))
            .map(|(n, _)| *n)
            .ok_or_else(|| format!("unknown operator name {s:?}"))
    }
}

impl Serialize for OperatorName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for OperatorName {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The operator with `zeta`, `A`, `B` left symbolic for the generalized system.
pub fn build_symbolic(sys: &SystemId, name: OperatorName) -> Result<Operator, SystemsError> {
    use catalog::{gen, ha, ho};
    use OperatorName::*;
    if !sys.catalog().contains(&name) {
        return Err(SystemsError::UnknownOperator { system: sys.short_name().into(), name: name.as_str().into() });
    }
    let op = match sys {
        SystemId::Oscillator => match name {
            H => ho::h(),
            Hm => ho::hm(),
            DnPlus => ho::dn(1),
            DnMinus => ho::dn(-1),
            D3 => ho::d3(),
            DPlus => ho::d(1),
            DMinus => ho::d(-1),
            B1 => ho::b(1, false),
            B2 => ho::b(2, false),
            B1Dag => ho::b(1, true),
            B2Dag => ho::b(2, true),
            Partner1Plus => ho::b(1, false).compose(&ho::b(1, true)),
            Partner2Plus => ho::b(2, false).compose(&ho::b(2, true)),
            Partner1Minus => ho::b(1, true).compose(&ho::b(1, false)),
            Partner2Minus => ho::b(2, true).compose(&ho::b(2, false)),
            A1 => ho::a(1, false),
            A2 => ho::a(2, false),
            A1Dag => ho::a(1, true),
            A2Dag => ho::a(2, true),
            OPlus => ho::o(1),
            OMinus => ho::o(-1),
            O3 => ho::o3(),
            CalO1 => ho::cal_o(1, false),
            CalO2 => ho::cal_o(2, false),
            CalO1Dag => ho::cal_o(1, true),
            _ => ho::cal_o(2, true),
        },
        SystemId::Hydrogen => match name {
            H => ha::h(),
            Hm => ha::hm(),
            TnPlus => ha::tn(1),
            TnMinus => ha::tn(-1),
            T3 => ha::t3(),
            TPlus => ha::t(1),
            TMinus => ha::t(-1),
            F1 => ha::f(1, false),
            F2 => ha::f(2, false),
            F1Dag => ha::f(1, true),
            F2Dag => ha::f(2, true),
            Partner1Plus => ha::f(1, false).compose(&ha::f(1, true)),
            Partner2Plus => ha::f(2, false).compose(&ha::f(2, true)),
            Partner1Minus => ha::f(1, true).compose(&ha::f(1, false)),
            Partner2Minus => ha::f(2, true).compose(&ha::f(2, false)),
            GRadialPlus => ha::g_radial(1),
            GRadialMinus => ha::g_radial(-1),
            GPlus => ha::g(1),
            GMinus => ha::g(-1),
            _ => ha::g3(),
        },
        SystemId::Generalized(_) => match name {
            Hcal => gen::hcal(),
            H => gen::h(),
            HTilde => gen::htilde(),
            FPlus => gen::f(1),
            FMinus => gen::f(-1),
            F3 => gen::f3(),
            KPlus => gen::k(1),
            KMinus => gen::k(-1),
            K3 => gen::k3(),
            ThetaPlus => gen::theta(1),
            ThetaMinus => gen::theta(-1),
            Theta3 => gen::theta3(),
            DeltaPlus => gen::delta(1),
            DeltaMinus => gen::delta(-1),
            _ => gen::delta3(),
        },
    };
    Ok(op)
}

/// The named operator; for the generalized system `zeta`, `A`, `B` are
/// replaced by the system's values.
pub fn build(sys: &SystemId, name: OperatorName) -> Result<Operator, SystemsError> {
    let op = build_symbolic(sys, name)?;
    match sys {
        SystemId::Generalized(p) => Ok(op
            .substitute(Param::Zeta, &p.zeta)?
            .substitute(Param::A, &p.a)?
            .substitute(Param::B, &p.b)?),
        _ => Ok(op),
    }
}

/// Shift `(Δn, Δm)` a ladder operator produces on the eigenstate lattice.
///
/// The B family follows the operators as defined here: `B₁†` takes
/// `(n, m)` to `(n−1, m+1)` and `B₁` undoes it.
pub fn ladder_semantics(sys: &SystemId, name: OperatorName) -> Result<(i64, i64), SystemsError> {
    use OperatorName::*;
    let shift = match (sys, name) {
        (SystemId::Oscillator, DnPlus | DPlus) => (2, 0),
        (SystemId::Oscillator, DnMinus | DMinus) => (-2, 0),
        (SystemId::Oscillator, OPlus) => (0, 2),
        (SystemId::Oscillator, OMinus) => (0, -2),
        (SystemId::Oscillator, A1) => (-1, 1),
        (SystemId::Oscillator, A2) => (-1, -1),
        (SystemId::Oscillator, A1Dag) => (1, -1),
        (SystemId::Oscillator, A2Dag) => (1, 1),
        (SystemId::Oscillator, B1) => (1, -1),
        (SystemId::Oscillator, B1Dag) => (-1, 1),
        (SystemId::Oscillator, B2) => (1, 1),
        (SystemId::Oscillator, B2Dag) => (-1, -1),
        (SystemId::Hydrogen, TnPlus | TPlus) => (1, 0),
        (SystemId::Hydrogen, TnMinus | TMinus) => (-1, 0),
        (SystemId::Hydrogen, GPlus) => (0, 1),
        (SystemId::Hydrogen, GMinus) => (0, -1),
        (SystemId::Hydrogen, F1 | F2Dag) => (0, -1),
        (SystemId::Hydrogen, F2 | F1Dag) => (0, 1),
        (SystemId::Generalized(_), ThetaPlus) => (0, 2),
        (SystemId::Generalized(_), ThetaMinus) => (0, -2),
        (SystemId::Generalized(_), DeltaPlus) => (2, 0),
        (SystemId::Generalized(_), DeltaMinus) => (-2, 0),
        _ => return Err(SystemsError::NotLadder(name.as_str().into())),
    };
    Ok(shift)
}

/// Offset between the operator's `m` parameter and the source state's `m`.
///
/// `B₁`/`F₁` are defined on the `m+1` sector, `B₂`/`F₂` on `m−1`.
pub fn parameter_offset(name: OperatorName) -> i64 {
    use OperatorName::*;
    match name {
        B1 | F1 => -1,
        B2 | F2 => 1,
        _ => 0,
    }
}

/// True for operators carrying a phase factor (acting on `ψ = ρ^{-1/2}u e^{imφ}`).
pub fn is_full_2d(name: OperatorName) -> bool {
    use OperatorName::*;
    matches!(
        name,
        H | A1 | A2 | A1Dag | A2Dag | OPlus | OMinus | O3 | GPlus | GMinus | G3 | Hcal | HTilde | FPlus | FMinus
            | F3 | ThetaPlus | ThetaMinus | Theta3 | DeltaPlus | DeltaMinus | Delta3
    )
}
