//! Rational functions whose denominators are products of linear factors
//! `(p + c)` in a single parameter.
//!
//! Coefficients such as `1/(m + 1/2)` or `1/zeta` appear in the catalog of
//! operators; restricting denominators to monic linear factors keeps the
//! canonical form decidable without multivariate gcds: a numerator is reduced
//! against each factor by exact synthetic division.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::param::Param;
use super::poly::Poly;
use super::rational::{GaussianRational, Rational};
use super::AlgebraError;

/// The monic linear factor `param + shift`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearFactor {
    pub param: Param,
    pub shift: Rational,
}

impl LinearFactor {
    pub fn new(param: Param, shift: Rational) -> Self {
        LinearFactor { param, shift }
    }

    pub fn as_poly(&self) -> Poly {
        &Poly::param(self.param) + &Poly::rational(self.shift.clone())
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift.is_zero() {
            write!(f, "{}", self.param)
        } else if self.shift.is_negative() {
            write!(f, "({} - {})", self.param, self.shift.abs())
        } else {
            write!(f, "({} + {})", self.param, self.shift)
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RatFunc {
    num: Poly,
    den: BTreeMap<LinearFactor, u32>,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        RatFunc { num, den: BTreeMap::new() }
    }

    pub fn rational(r: Rational) -> Self {
        Self::from_poly(Poly::rational(r))
    }

    pub fn int(n: i64) -> Self {
        Self::from_poly(Poly::int(n))
    }

    /// `1 / (param + shift)^power`
    pub fn inv_linear(param: Param, shift: Rational, power: u32) -> Self {
        let mut den = BTreeMap::new();
        if power > 0 {
            den.insert(LinearFactor::new(param, shift), power);
        }
        RatFunc { num: Poly::one(), den }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> impl Iterator<Item = (&LinearFactor, u32)> {
        self.den.iter().map(|(f, e)| (f, *e))
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        self.as_poly().and_then(Poly::as_constant)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    pub fn mentions(&self, p: Param) -> bool {
        self.num.mentions(p) || self.den.keys().any(|f| f.param == p)
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let factors: Vec<LinearFactor> = self.den.keys().cloned().collect();
        for f in factors {
            let mut exp = self.den[&f];
            while exp > 0 {
                match self.num.div_linear(f.param, &f.shift) {
                    Some(q) => {
                        self.num = q;
                        exp -= 1;
                    }
                    None => break,
                }
            }
            if exp == 0 {
                self.den.remove(&f);
            } else {
                self.den.insert(f, exp);
            }
        }
        self
    }

    pub fn scale(&self, r: &Rational) -> Self {
        RatFunc { num: self.num.scale(r), den: self.den.clone() }.normalize()
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        RatFunc { num: &self.num * p, den: self.den.clone() }.normalize()
    }

    pub fn conj(&self) -> Self {
        RatFunc { num: self.num.conj(), den: self.den.clone() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = RatFunc::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        // Only monomial-like numerators (a constant times linear factors) are
        // invertible inside this ring.
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut num = self.num.clone();
        let mut inv_den: BTreeMap<LinearFactor, u32> = BTreeMap::new();
        'outer: loop {
            if let Some(c) = num.as_constant() {
                let mut out = RatFunc::from_poly(Poly::constant(c.inverse()?));
                for (f, e) in &self.den {
                    out = out.mul_poly(&f.as_poly().pow(*e));
                }
                out.den = inv_den;
                return Ok(out.normalize());
            }
            for p in num.params() {
                let coeffs = num.coefficients_in(p);
                if coeffs.len() == 2 && coeffs[1].as_constant().is_some() {
                    let lead = coeffs[1].as_constant().unwrap();
                    let shift_g = &coeffs[0].as_constant().unwrap_or_default() * &lead.inverse()?;
                    if coeffs[0].as_constant().is_some() && shift_g.im.is_zero() {
                        *inv_den.entry(LinearFactor::new(p, shift_g.re.clone())).or_insert(0) += 1;
                        num = Poly::constant(lead);
                        continue 'outer;
                    }
                }
                if let Some(q) = num.div_linear(p, &Rational::zero()) {
                    *inv_den.entry(LinearFactor::new(p, Rational::zero())).or_insert(0) += 1;
                    num = q;
                    continue 'outer;
                }
            }
            return Err(AlgebraError::NotInvertible(self.to_string()));
        }
    }

    /// Substitutes a rational value for `p`.
    pub fn substitute_value(&self, p: Param, v: &Rational) -> Result<Self, AlgebraError> {
        self.substitute_poly(p, &Poly::rational(v.clone()))
    }

    /// Substitutes a polynomial for `p`. Denominator factors in `p` require
    /// the replacement to be affine in at most one parameter.
    pub fn substitute_poly(&self, p: Param, value: &Poly) -> Result<Self, AlgebraError> {
        if !self.mentions(p) {
            return Ok(self.clone());
        }
        let mut out = RatFunc::from_poly(self.num.substitute(p, value));
        for (f, e) in &self.den {
            let replaced = if f.param == p {
                &f.as_poly().substitute(p, value) + &Poly::zero()
            } else {
                f.as_poly()
            };
            let factor = RatFunc::from_affine(&replaced)?;
            let inv = factor.inverse()?;
            out = &out * &inv.pow(*e);
        }
        Ok(out.normalize())
    }

    fn from_affine(p: &Poly) -> Result<Self, AlgebraError> {
        if let Some(c) = p.as_constant() {
            if c.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            return Ok(RatFunc::from_poly(p.clone()));
        }
        let params = p.params();
        if params.len() == 1 && p.degree_in(params[0]) == 1 {
            return Ok(RatFunc::from_poly(p.clone()));
        }
        Err(AlgebraError::Unsupported(format!("denominator {p} is not affine in one parameter")))
    }

    pub fn eval(&self, value_of: &impl Fn(Param) -> Option<f64>) -> Result<Complex64, AlgebraError> {
        let mut v = self.num.eval(value_of)?;
        for (f, e) in &self.den {
            let x = value_of(f.param).ok_or(AlgebraError::Unbound(f.param))? + f.shift.to_f64();
            if x == 0.0 {
                return Err(AlgebraError::DivisionByZero);
            }
            v /= x.powi(*e as i32);
        }
        Ok(v)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Rational> for RatFunc {
    fn from(r: Rational) -> Self {
        RatFunc::rational(r)
    }
}

fn lift(a: &RatFunc, target: &BTreeMap<LinearFactor, u32>) -> Poly {
    let mut num = a.num.clone();
    for (f, e) in target {
        let have = a.den.get(f).copied().unwrap_or(0);
        if *e > have {
            num = &num * &f.as_poly().pow(*e - have);
        }
    }
    num
}

fn combine(a: &RatFunc, b: &RatFunc, subtract: bool) -> RatFunc {
    if a.den == b.den {
        let num = if subtract { &a.num - &b.num } else { &a.num + &b.num };
        return RatFunc { num, den: a.den.clone() }.normalize();
    }
    let mut lcm = a.den.clone();
    for (f, e) in &b.den {
        let slot = lcm.entry(f.clone()).or_insert(0);
        *slot = (*slot).max(*e);
    }
    let na = lift(a, &lcm);
    let nb = lift(b, &lcm);
    let num = if subtract { &na - &nb } else { &na + &nb };
    RatFunc { num, den: lcm }.normalize()
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        combine(self, rhs, false)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        combine(self, rhs, true)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let mut den = self.den.clone();
        for (f, e) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += *e;
        }
        RatFunc { num: &self.num * &rhs.num, den }.normalize()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(fac, e)| if *e == 1 { fac.to_string() } else { format!("{fac}^{e}") })
            .collect();
        let num = if self.num.term_count() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        if den.len() == 1 {
            write!(f, "{num}/{}", den[0])
        } else {
            write!(f, "{num}/({})", den.join("*"))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m() -> Poly {
        Poly::param(Param::M)
    }

    #[test]
    fn cancels_common_linear_factor() {
        let half = Rational::new(1, 2);
        let c = &m() + &Poly::rational(half.clone());
        let r = &RatFunc::from_poly(c.clone()) * &RatFunc::inv_linear(Param::M, half, 1);
        assert!(r.is_one());
    }

    #[test]
    fn sums_over_common_denominator() {
        // 1/m + 1/(m+1) = (2m+1)/(m(m+1))
        let a = RatFunc::inv_linear(Param::M, Rational::zero(), 1);
        let b = RatFunc::inv_linear(Param::M, Rational::one(), 1);
        let s = &a + &b;
        let back = &(&s - &a) - &b;
        assert!(back.is_zero());
        assert_eq!(s.numerator(), &(&m().scale(&Rational::from_int(2)) + &Poly::one()));
    }

    #[test]
    fn substitution_into_denominator() {
        let r = RatFunc::inv_linear(Param::M, Rational::new(1, 2), 2);
        let shifted = r.substitute_poly(Param::M, &(&m() + &Poly::one())).unwrap();
        assert_eq!(shifted, RatFunc::inv_linear(Param::M, Rational::new(3, 2), 2));
        let at = r.substitute_value(Param::M, &Rational::new(1, 2)).unwrap();
        assert_eq!(at, RatFunc::one());
        assert!(r.substitute_value(Param::M, &Rational::new(-1, 2)).is_err());
    }

    #[test]
    fn inverse_of_linear_and_monomials() {
        let zeta = Poly::param(Param::Zeta);
        let r = RatFunc::from_poly(zeta.scale(&Rational::from_int(3)));
        let inv = r.inverse().unwrap();
        assert!((&inv * &r).is_one());
        let quad = RatFunc::from_poly(&m().pow(2) + &Poly::one());
        assert!(quad.inverse().is_err());
    }
}
