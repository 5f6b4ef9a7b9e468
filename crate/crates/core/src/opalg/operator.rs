use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::coeff::Coeff;
use super::expo::Expo;
use super::param::Param;
use super::poly::Poly;
use super::radical::Radical;
use super::rational::Rational;
use super::AlgebraError;

/// Position of a term in normal order `e^{ikφ} · ρ^p · ∂ρ^d · L_z^lz`.
///
/// Field order fixes the canonical ordering: phase, then ρ power, then
/// derivative order, then `L_z` order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TermKey {
    pub phase: Expo,
    pub rho: Expo,
    pub d: u32,
    pub lz: u32,
}

impl TermKey {
    pub fn new(phase: Expo, rho: Expo, d: u32, lz: u32) -> Self {
        TermKey { phase, rho, d, lz }
    }

    pub fn identity() -> Self {
        TermKey::new(Expo::zero(), Expo::zero(), 0, 0)
    }
}

/// Inner product used by [`Operator::adjoint`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    /// `ρ dρ dφ`: `∂ρ† = -∂ρ - 1/ρ`.
    Radial2D,
    /// `dρ` on reduced radial functions: `∂ρ† = -∂ρ`.
    Line,
}

/// Result of acting on `ρ^s e^{ikφ}`: coefficients keyed by the shifts
/// `(Δρ, Δphase)` of the output monomial `ρ^{s+Δρ} e^{i(k+Δphase)φ}`.
pub type MonomialAction = BTreeMap<(Expo, Expo), Coeff>;

/// A term with every parameter replaced by a number.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericTerm {
    pub phase: f64,
    pub rho: f64,
    pub d: u32,
    pub lz: u32,
    pub coeff: Complex64,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Operator {
    terms: BTreeMap<TermKey, Coeff>,
}

fn binom(n: u32, k: u32) -> i64 {
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

impl Operator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::scalar(Coeff::one())
    }

    pub fn scalar(c: impl Into<Coeff>) -> Self {
        Self::term(c, TermKey::identity())
    }

    pub fn term(c: impl Into<Coeff>, key: TermKey) -> Self {
        let mut op = Operator::zero();
        op.add_term(key, c.into());
        op
    }

    pub fn monomial(c: impl Into<Coeff>, phase: impl Into<Expo>, rho: impl Into<Expo>, d: u32, lz: u32) -> Self {
        Self::term(c, TermKey::new(phase.into(), rho.into(), d, lz))
    }

    /// Multiplication by `ρ^p`.
    pub fn rho(p: impl Into<Expo>) -> Self {
        Self::monomial(1, 0, p, 0, 0)
    }

    /// `∂ρ^j`
    pub fn drho(j: u32) -> Self {
        Self::monomial(1, 0, 0, j, 0)
    }

    /// `L_z^l`
    pub fn lz(l: u32) -> Self {
        Self::monomial(1, 0, 0, 0, l)
    }

    /// Multiplication by `e^{ikφ}`.
    pub fn phase(k: impl Into<Expo>) -> Self {
        Self::monomial(1, k, 0, 0, 0)
    }

    fn add_term(&mut self, key: TermKey, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(existing) => {
                let sum = &existing + &c;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (TermKey, Coeff)>) -> Self {
        let mut op = Operator::zero();
        for (k, c) in iter {
            op.add_term(k, c);
        }
        op
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &TermKey) -> Option<&Coeff> {
        self.terms.get(key)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_drho(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.d).max()
    }

    pub fn phases(&self) -> Vec<Expo> {
        let mut out: Vec<Expo> = self.terms.keys().map(|k| k.phase.clone()).collect();
        out.dedup();
        out.sort();
        out.dedup();
        out
    }

    pub fn mentions(&self, p: Param) -> bool {
        self.terms
            .iter()
            .any(|(k, c)| c.mentions(p) || (p == Param::Zeta && (!k.phase.is_constant() || !k.rho.is_constant())))
    }

    /// Left multiplication by a coefficient.
    pub fn scale(&self, c: &Coeff) -> Self {
        Operator::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), c * v)))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Operator::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v.scale(r))))
    }

    pub fn compose(&self, rhs: &Operator) -> Operator {
        let mut out = Operator::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                compose_terms(&mut out, ka, ca, kb, cb);
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Operator) -> Operator {
        &self.compose(rhs) - &rhs.compose(self)
    }

    pub fn pow(&self, n: u32) -> Operator {
        let mut acc = Operator::identity();
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    /// Replaces `p` by the rational `v` everywhere, including exponents.
    pub fn substitute(&self, p: Param, v: &Rational) -> Result<Operator, AlgebraError> {
        if p == Param::Zeta && !v.is_positive() {
            return Err(AlgebraError::InvalidZeta(v.clone()));
        }
        let mut out = Operator::zero();
        for (k, c) in &self.terms {
            let key = if p == Param::Zeta {
                TermKey::new(k.phase.substitute_zeta(v), k.rho.substitute_zeta(v), k.d, k.lz)
            } else {
                k.clone()
            };
            out.add_term(key, c.substitute_value(p, v)?);
        }
        Ok(out)
    }

    /// Replaces `p` by a polynomial in the coefficients, e.g. `m -> m + 1`.
    pub fn substitute_poly(&self, p: Param, value: &Poly) -> Result<Operator, AlgebraError> {
        if let Some(v) = value.as_rational() {
            return self.substitute(p, &v);
        }
        if p == Param::Zeta {
            return Err(AlgebraError::Unsupported("zeta may only be replaced by a number".into()));
        }
        let mut out = Operator::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.substitute_poly(p, value)?);
        }
        Ok(out)
    }

    /// Exact action on the trial function `ρ^s e^{ikφ}` with `s`, `k`
    /// polynomials in the parameters (typically `Param::S` and `Param::Kphase`).
    pub fn apply_to_monomial(&self, s: &Poly, k: &Poly) -> MonomialAction {
        let mut out: MonomialAction = BTreeMap::new();
        for (key, c) in &self.terms {
            let factor = &Poly::falling_factorial(s, key.d) * &k.pow(key.lz);
            let value = c.mul_poly(&factor);
            let shift = (&key.rho - &Expo::int(key.d as i64), key.phase.clone());
            let slot = out.entry(shift.clone()).or_default();
            let sum = &*slot + &value;
            if sum.is_zero() {
                out.remove(&shift);
            } else {
                *slot = sum;
            }
        }
        out
    }

    /// Formal adjoint: order reversed, `i -> -i`, `e^{ikφ} -> e^{-ikφ}`,
    /// `L_z` self-adjoint, and `∂ρ†` according to `measure`.
    pub fn adjoint(&self, measure: Measure) -> Operator {
        let d_adj = match measure {
            Measure::Line => -&Operator::drho(1),
            Measure::Radial2D => &(-&Operator::drho(1)) - &Operator::rho(-1),
        };
        let mut out = Operator::zero();
        for (k, c) in &self.terms {
            let t = Operator::lz(k.lz)
                .compose(&d_adj.pow(k.d))
                .compose(&Operator::rho(k.rho.clone()))
                .compose(&Operator::phase(-&k.phase));
            out = &out + &t.scale(&c.conj());
        }
        out
    }

    /// Action on `ρ^{-1/2} u(ρ) e^{imφ}` expressed as radial operators on `u`,
    /// one per outgoing phase: `ρ^{1/2} ∘ op_k|_{L_z -> m} ∘ ρ^{-1/2}`.
    pub fn radial_reduction(&self) -> BTreeMap<Expo, Operator> {
        let mut blocks: BTreeMap<Expo, Operator> = BTreeMap::new();
        let m = Poly::param(Param::M);
        for (k, c) in &self.terms {
            let radial = Operator::monomial(c.mul_poly(&m.pow(k.lz)), 0, k.rho.clone(), k.d, 0);
            let slot = blocks.entry(k.phase.clone()).or_default();
            *slot = &*slot + &radial;
        }
        let half = Operator::rho(Expo::frac(1, 2));
        let inv_half = Operator::rho(Expo::frac(-1, 2));
        blocks
            .into_iter()
            .map(|(phase, op)| (phase, half.compose(&op).compose(&inv_half)))
            .filter(|(_, op)| !op.is_zero())
            .collect()
    }

    /// Right division `self = Q ∘ s + R` where `R` has lower ∂ρ order than
    /// `s`. `s` must be phase-free with a unique top-order term free of `L_z`.
    pub fn right_divide(&self, s: &Operator) -> Result<(Operator, Operator), AlgebraError> {
        let top = s.max_drho().ok_or(AlgebraError::DivisionByZero)?;
        let leading: Vec<_> = s.terms.iter().filter(|(k, _)| k.d == top).collect();
        if leading.len() != 1 || s.terms.keys().any(|k| !k.phase.is_zero()) {
            return Err(AlgebraError::Unsupported(
                "divisor needs a unique leading term and no phase factors".into(),
            ));
        }
        let (lk, lc) = leading[0];
        if lk.lz != 0 {
            return Err(AlgebraError::Unsupported("divisor leading term contains L_z".into()));
        }
        let lc_inv = lc.inverse()?;
        let mut rem = self.clone();
        let mut quotient = Operator::zero();
        loop {
            let pick = rem
                .terms
                .iter()
                .filter(|(k, _)| k.d >= top)
                .max_by(|(a, _), (b, _)| (a.d, a.lz, a).cmp(&(b.d, b.lz, b)))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = pick else { break };
            let q = Operator::monomial(&c * &lc_inv, k.phase.clone(), &k.rho - &lk.rho, k.d - top, 0);
            let step = q.compose(s).compose(&Operator::lz(k.lz));
            quotient = &quotient + &q.compose(&Operator::lz(k.lz));
            rem = &rem - &step;
        }
        Ok((quotient, rem))
    }

    /// Replaces every parameter by a number.
    pub fn evaluate(&self, value_of: &impl Fn(Param) -> Option<f64>) -> Result<Vec<NumericTerm>, AlgebraError> {
        self.terms
            .iter()
            .map(|(k, c)| {
                Ok(NumericTerm {
                    phase: k.phase.eval(value_of)?,
                    rho: k.rho.eval(value_of)?,
                    d: k.d,
                    lz: k.lz,
                    coeff: c.eval(value_of)?,
                })
            })
            .collect()
    }

    /// The radical shared by every coefficient, if any single one is.
    fn common_radical(&self) -> Option<Radical> {
        let mut common: Option<&Radical> = None;
        for c in self.terms.values() {
            let r = c.single_radical()?;
            match common {
                None => common = Some(r),
                Some(x) if x == r => {}
                Some(_) => return None,
            }
        }
        common.cloned()
    }

    pub fn to_json(&self) -> OperatorJson {
        let prefactor = self.common_radical().filter(|r| !r.is_one());
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let coeff = match &prefactor {
                    Some(_) => c.parts().next().map(|(_, r)| r.to_string()).unwrap_or_default(),
                    None => c.to_string(),
                };
                TermJson {
                    coeff,
                    k: [k.phase.c.to_string(), k.phase.z.to_string()],
                    p: [k.rho.c.to_string(), k.rho.z.to_string()],
                    d: k.d,
                    lz: k.lz,
                }
            })
            .collect();
        OperatorJson { prefactor: prefactor.map(|r| r.to_string()).unwrap_or_else(|| "1".into()), terms }
    }
}

fn compose_terms(out: &mut Operator, ka: &TermKey, ca: &Coeff, kb: &TermKey, cb: &Coeff) {
    let c = ca * cb;
    let phase = &ka.phase + &kb.phase;
    // (L + k_b)^{l_a} L^{l_b}
    let kb_poly = kb.phase.to_poly();
    let l_terms: Vec<(u32, Poly)> = (0..=ka.lz)
        .map(|a| (a + kb.lz, kb_poly.pow(ka.lz - a).scale(&Rational::from_int(binom(ka.lz, a)))))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let pb = kb.rho.to_poly();
    for i in 0..=ka.d {
        let ff = Poly::falling_factorial(&pb, i).scale(&Rational::from_int(binom(ka.d, i)));
        if ff.is_zero() {
            continue;
        }
        let rho = &(&ka.rho + &kb.rho) - &Expo::int(i as i64);
        let d = ka.d - i + kb.d;
        for (l, lp) in &l_terms {
            let key = TermKey::new(phase.clone(), rho.clone(), d, *l);
            out.add_term(key, c.mul_poly(&(&ff * lp)));
        }
    }
}

impl Add<&Operator> for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Operator> for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl Mul<&Operator> for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        self.compose(rhs)
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        Operator { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut factors = vec![format!("({c})")];
            if !k.phase.is_zero() {
                factors.push(format!("e^(i*({})*phi)", k.phase));
            }
            if !k.rho.is_zero() {
                factors.push(format!("rho^({})", k.rho));
            }
            match k.d {
                0 => {}
                1 => factors.push("d".into()),
                j => factors.push(format!("d^{j}")),
            }
            match k.lz {
                0 => {}
                1 => factors.push("Lz".into()),
                l => factors.push(format!("Lz^{l}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator[{self}]")
    }
}

/// Stable JSON form of an operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub prefactor: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    /// Phase exponent `[c, z]` of `e^{i(c + z·zeta)φ}`.
    pub k: [String; 2],
    /// Radial exponent `[c, z]` of `ρ^{c + z·zeta}`.
    pub p: [String; 2],
    pub d: u32,
    pub lz: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leibniz() {
        let lhs = Operator::drho(1).compose(&Operator::rho(1));
        let rhs = &Operator::monomial(1, 0, 1, 1, 0) + &Operator::identity();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn angular_momentum_through_phase() {
        let lhs = Operator::lz(1).compose(&Operator::phase(2));
        let rhs = &Operator::monomial(1, 2, 0, 0, 1) + &Operator::monomial(2, 2, 0, 0, 0);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn symbolic_zeta_falling_factorial() {
        // ∂ ∘ ρ^zeta = ρ^zeta ∂ + zeta ρ^{zeta-1}
        let lhs = Operator::drho(1).compose(&Operator::rho(Expo::zeta()));
        let rhs = &Operator::monomial(1, 0, Expo::zeta(), 1, 0)
            + &Operator::monomial(Coeff::param(Param::Zeta), 0, Expo::affine(-1, 1), 0, 0);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zeta_must_be_positive() {
        let op = Operator::rho(Expo::zeta());
        assert!(matches!(op.substitute(Param::Zeta, &Rational::zero()), Err(AlgebraError::InvalidZeta(_))));
        assert_eq!(op.substitute(Param::Zeta, &Rational::from_int(2)).unwrap(), Operator::rho(2));
    }

    #[test]
    fn monomial_action() {
        // ρ ∂ on ρ^s gives s ρ^s
        let op = Operator::monomial(1, 0, 1, 1, 0);
        let s = Poly::param(Param::S);
        let k = Poly::param(Param::Kphase);
        let act = op.apply_to_monomial(&s, &k);
        assert_eq!(act.len(), 1);
        assert_eq!(act[&(Expo::zero(), Expo::zero())], Coeff::from_poly(s));
    }

    #[test]
    fn adjoint_measures() {
        let d = Operator::drho(1);
        assert_eq!(d.adjoint(Measure::Line), -&d);
        assert_eq!(d.adjoint(Measure::Radial2D), &(-&d) - &Operator::rho(-1));
        let i_phase = Operator::monomial(Coeff::i(), 1, 0, 0, 0);
        assert_eq!(i_phase.adjoint(Measure::Line), Operator::monomial(-&Coeff::i(), -1, 0, 0, 0));
    }

    #[test]
    fn radial_reduction_of_derivative() {
        // ρ^{1/2} ∂ ρ^{-1/2} = ∂ - 1/(2ρ)
        let red = Operator::drho(1).radial_reduction();
        let expect = &Operator::drho(1) - &Operator::monomial(Coeff::frac(1, 2), 0, -1, 0, 0);
        assert_eq!(red[&Expo::zero()], expect);
    }

    #[test]
    fn right_division_recovers_multiple() {
        let s = &(&Operator::drho(2) - &Operator::rho(2)) + &Operator::scalar(Coeff::param(Param::E));
        let q = Operator::monomial(3, 0, 1, 1, 0);
        let r = Operator::rho(-1);
        let x = &q.compose(&s) + &r;
        let (q2, r2) = x.right_divide(&s).unwrap();
        assert_eq!(q2, q);
        assert_eq!(r2, r);
    }
}
