//! Change of variables `ρ^ζ = c·y²`, `θ = (ζ/2)φ` with `c = ζ/(2√(2A))`.

use crate::opalg::{Coeff, Expo, Operator, Param, Rational};

use super::catalog::gen;
use super::identities::IdentityReport;
use super::SystemsError;

/// `c^q` with `c = ζ/(2√(2A)) = ζ·2^{-3/2}·A^{-1/2}`.
fn c_power(q: &Rational) -> Coeff {
    let two = Coeff::rational_power(&Rational::from_int(2), &(q * &Rational::new(-3, 2))).expect("positive radicand");
    let a = Coeff::param_power(Param::A, &(q * &Rational::new(-1, 2)));
    &(&Coeff::param_power(Param::Zeta, q) * &two) * &a
}

/// Rewrites an operator written in `(y, θ)` (stored with `ρ, φ, L_z`) as an
/// operator in the physical `(ρ, φ)`, keeping `zeta` and `A` symbolic.
pub fn pullback(op_y: &Operator) -> Result<Operator, SystemsError> {
    let half = Rational::new(1, 2);
    // y = c^{-1/2} ρ^{ζ/2}
    let y_of = |p: &Rational| Operator::monomial(c_power(&(-&(p * &half))), 0, Expo::new(Rational::zero(), p * &half), 0, 0);
    // ∂y = (2/ζ) c^{1/2} ρ^{1−ζ/2} ∂ρ
    let two_over_zeta = Coeff::param_power(Param::Zeta, &Rational::from_int(-1)).scale(&Rational::from_int(2));
    let dy = Operator::monomial(&two_over_zeta * &c_power(&half), 0, Expo::new(Rational::one(), -&half), 1, 0);
    // L' = −i∂θ = (2/ζ) L
    let ly = Operator::lz(1).scale(&two_over_zeta);
    let mut out = Operator::zero();
    for (k, coeff) in op_y.terms() {
        if !k.rho.is_constant() || !k.phase.is_constant() {
            return Err(SystemsError::InvalidSystem("pullback expects zeta-free y exponents".into()));
        }
        let phase = Operator::phase(Expo::new(Rational::zero(), &k.phase.c * &half));
        let t = phase.compose(&y_of(&k.rho.c)).compose(&dy.pow(k.d)).compose(&ly.pow(k.lz));
        out = &out + &t.scale(coeff);
    }
    Ok(out)
}

/// Checks that the oscillator equation `(H̃ − Λ)Φ = 0` in `(y, θ)` pulls back to
/// `(2/(ζ√(2A)))(H − B)`, with `Λ = 2B/(ζ√(2A))`.
pub fn transform_check(zeta: &Rational, a: &Rational) -> Result<IdentityReport, SystemsError> {
    if !zeta.is_positive() || !a.is_positive() {
        return Err(SystemsError::InvalidSystem(format!("zeta and A must be positive, got {zeta}, {a}")));
    }
    let scale = &Coeff::param_power(Param::Zeta, &Rational::from_int(-1)).scale(&Rational::from_int(2))
        * &(&Coeff::sqrt(2) * &Coeff::param_power(Param::A, &Rational::new(1, 2))).inverse()?;
    let lambda = &scale * &Coeff::param(Param::B);
    let lhs_sym = pullback(&(&gen::htilde() - &Operator::scalar(lambda)))?;
    let rhs_sym = (&gen::h() - &Operator::scalar(Coeff::param(Param::B))).scale(&scale);
    let fix = |op: Operator| -> Result<Operator, SystemsError> {
        Ok(op.substitute(Param::Zeta, zeta)?.substitute(Param::A, a)?)
    };
    Ok(IdentityReport::new(
        format!("gen.transform[zeta={zeta},A={a}]"),
        "oscillator equation in (y, theta) pulls back to the zero-energy equation".into(),
        fix(lhs_sym)?,
        fix(rhs_sym)?,
        None,
        true,
    )?)
}
