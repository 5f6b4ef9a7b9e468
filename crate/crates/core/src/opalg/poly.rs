//! Sparse multivariate polynomials over ℚ(i) in the fixed parameter registry.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::param::Param;
use super::rational::{GaussianRational, Rational};
use super::AlgebraError;

/// Exponent vector indexed by [`Param::index`].
pub type Monomial = [u16; Param::COUNT];

const ONE: Monomial = [0; Param::COUNT];

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ONE, c);
        }
        Poly { terms }
    }

    pub fn rational(r: Rational) -> Self {
        Self::constant(GaussianRational::real(r))
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_int(n))
    }

    pub fn param(p: Param) -> Self {
        let mut mono = ONE;
        mono[p.index()] = 1;
        Poly { terms: BTreeMap::from([(mono, GaussianRational::one())]) }
    }

    /// `c + z·zeta`
    pub fn affine_zeta(c: &Rational, z: &Rational) -> Self {
        &Self::rational(c.clone()) + &Self::param(Param::Zeta).scale(z)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&ONE).cloned(),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_constant().filter(|c| c.im.is_zero()).map(|c| c.re)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.scale(r))).collect() }
    }

    pub fn scale_gauss(&self, g: &GaussianRational) -> Self {
        if g.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c * g)).collect() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn conj(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect() }
    }

    pub fn degree_in(&self, p: Param) -> u16 {
        self.terms.keys().map(|m| m[p.index()]).max().unwrap_or(0)
    }

    pub fn mentions(&self, p: Param) -> bool {
        self.degree_in(p) > 0
    }

    pub fn params(&self) -> Vec<Param> {
        Param::ALL.into_iter().filter(|&p| self.mentions(p)).collect()
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `p`,
    /// lowest degree first.
    pub fn coefficients_in(&self, p: Param) -> Vec<Poly> {
        let deg = self.degree_in(p) as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let d = rest[p.index()] as usize;
            rest[p.index()] = 0;
            out[d].add_term(rest, c.clone());
        }
        out
    }

    /// Replaces `p` by the polynomial `value`.
    pub fn substitute(&self, p: Param, value: &Poly) -> Self {
        if !self.mentions(p) {
            return self.clone();
        }
        let coeffs = self.coefficients_in(p);
        // Horner in p.
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Exact division by the monic linear factor `(p + shift)`. Returns
    /// `None` when the division leaves a remainder.
    pub fn div_linear(&self, p: Param, shift: &Rational) -> Option<Poly> {
        let coeffs = self.coefficients_in(p);
        if coeffs.len() < 2 {
            return if self.is_zero() { Some(Poly::zero()) } else { None };
        }
        let deg = coeffs.len() - 1;
        let mut quotient = vec![Poly::zero(); deg];
        quotient[deg - 1] = coeffs[deg].clone();
        for k in (1..deg).rev() {
            quotient[k - 1] = &coeffs[k] - &quotient[k].scale(shift);
        }
        let remainder = &coeffs[0] - &quotient[0].scale(shift);
        if !remainder.is_zero() {
            return None;
        }
        let x = Poly::param(p);
        let mut acc = Poly::zero();
        for q in quotient.iter().rev() {
            acc = &(&acc * &x) + q;
        }
        Some(acc)
    }

    /// Numeric value under a full assignment of the parameters it mentions.
    pub fn eval(&self, value_of: &impl Fn(Param) -> Option<f64>) -> Result<Complex64, AlgebraError> {
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = c.to_c64();
            for p in Param::ALL {
                let e = m[p.index()];
                if e > 0 {
                    let x = value_of(p).ok_or(AlgebraError::Unbound(p))?;
                    v *= x.powi(e as i32);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// `x (x-1) ··· (x-i+1)`
    pub fn falling_factorial(x: &Poly, i: u32) -> Poly {
        let mut acc = Poly::one();
        for t in 0..i {
            acc = &acc * &(x - &Poly::int(t as i64));
        }
        acc
    }

    /// Leading coefficient in the canonical monomial order, used to
    /// normalise signs deterministically.
    pub fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }
}

impl From<Rational> for Poly {
    fn from(r: Rational) -> Self {
        Poly::rational(r)
    }
}

impl From<GaussianRational> for Poly {
    fn from(g: GaussianRational) -> Self {
        Poly::constant(g)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut m = *ma;
                for (e, eb) in m.iter_mut().zip(mb.iter()) {
                    *e += *eb;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for p in Param::ALL {
        match m[p.index()] {
            0 => {}
            1 => parts.push(p.name().to_string()),
            e => parts.push(format!("{}^{}", p.name(), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono = fmt_monomial(m);
            // Pull a real negative sign out front for readability.
            let (neg, mag) = if c.im.is_zero() && c.re.is_negative() {
                (true, GaussianRational::real(c.re.abs()))
            } else {
                (false, c.clone())
            };
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> Poly {
        Poly::param(Param::M)
    }

    #[test]
    fn ring_basics() {
        let a = &m() + &Poly::int(1);
        let b = &m() - &Poly::int(1);
        let prod = &a * &b;
        assert_eq!(prod, &m().pow(2) - &Poly::int(1));
        assert!((&prod - &prod).is_zero());
    }

    #[test]
    fn substitution_composes() {
        let p = &m().pow(2) + &m();
        let shifted = p.substitute(Param::M, &(&m() + &Poly::int(1)));
        // (m+1)^2 + (m+1) = m^2 + 3m + 2
        let expected = &(&m().pow(2) + &m().scale(&Rational::from_int(3))) + &Poly::int(2);
        assert_eq!(shifted, expected);
    }

    #[test]
    fn linear_division() {
        let half = Rational::new(1, 2);
        let factor = &m() + &Poly::rational(half.clone());
        let p = &factor * &(&m() - &Poly::param(Param::Zeta));
        let q = p.div_linear(Param::M, &half).unwrap();
        assert_eq!(q, &m() - &Poly::param(Param::Zeta));
        assert!((&p + &Poly::int(1)).div_linear(Param::M, &half).is_none());
    }

    #[test]
    fn falling_factorial_values() {
        let s = Poly::param(Param::S);
        let ff = Poly::falling_factorial(&s, 3);
        let at5 = ff.substitute(Param::S, &Poly::int(5));
        assert_eq!(at5, Poly::int(60));
        assert!(Poly::falling_factorial(&s, 0).is_one());
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&m().pow(2).scale(&Rational::new(-1, 2)) + &Poly::rational(Rational::new(1, 4)))
            + &Poly::i();
        assert_eq!(p.to_string(), "-1/2*m^2 + (1/4 + i)");
    }
}
