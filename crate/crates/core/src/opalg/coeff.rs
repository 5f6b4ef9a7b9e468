//! Operator coefficients: sums `Σ radical · ratfunc` over distinct radical
//! classes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::param::Param;
use super::poly::Poly;
use super::radical::Radical;
use super::ratfunc::RatFunc;
use super::rational::{GaussianRational, Rational};
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coeff {
    parts: BTreeMap<Radical, RatFunc>,
}

impl Coeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ratfunc(RatFunc::one())
    }

    pub fn i() -> Self {
        Self::from_poly(Poly::i())
    }

    pub fn int(n: i64) -> Self {
        Self::from_ratfunc(RatFunc::int(n))
    }

    pub fn rational(r: Rational) -> Self {
        Self::from_ratfunc(RatFunc::rational(r))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(Rational::new(n, d))
    }

    pub fn gauss(g: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(g))
    }

    pub fn param(p: Param) -> Self {
        Self::from_poly(Poly::param(p))
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_ratfunc(RatFunc::from_poly(p))
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        Self::from_part(Radical::one(), r)
    }

    fn from_part(rad: Radical, r: RatFunc) -> Self {
        let mut parts = BTreeMap::new();
        if !r.is_zero() {
            parts.insert(rad, r);
        }
        Coeff { parts }
    }

    /// `r^q` for positive rational `r`, e.g. `sqrt(2)`.
    pub fn rational_power(r: &Rational, q: &Rational) -> Result<Self, AlgebraError> {
        let (s, rad) = Radical::of_rational(r, q)?;
        Ok(Self::from_part(rad, s))
    }

    pub fn sqrt(r: i64) -> Self {
        Self::rational_power(&Rational::from_int(r), &Rational::new(1, 2)).expect("positive radicand")
    }

    /// `(σ·p)^q`, e.g. `A^{1/2}` or `|E|^{-1/2}`.
    pub fn param_power(p: Param, q: &Rational) -> Self {
        let (s, rad) = Radical::of_param(p, q);
        Self::from_part(rad, s)
    }

    pub fn parts(&self) -> impl Iterator<Item = (&Radical, &RatFunc)> {
        self.parts.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_ratfunc().is_some_and(RatFunc::is_one)
    }

    /// The coefficient as a plain rational function when it carries no radical.
    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match self.parts.len() {
            1 => self.parts.get(&Radical::one()),
            _ => None,
        }
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        self.as_ratfunc().and_then(RatFunc::as_constant)
    }

    /// The single radical class of the coefficient, if there is exactly one.
    pub fn single_radical(&self) -> Option<&Radical> {
        (self.parts.len() == 1).then(|| self.parts.keys().next().unwrap())
    }

    pub fn mentions(&self, p: Param) -> bool {
        self.parts.iter().any(|(r, f)| r.mentions(p) || f.mentions(p))
    }

    fn insert_part(&mut self, rad: Radical, r: RatFunc) {
        if r.is_zero() {
            return;
        }
        match self.parts.remove(&rad) {
            Some(existing) => {
                let sum = &existing + &r;
                if !sum.is_zero() {
                    self.parts.insert(rad, sum);
                }
            }
            None => {
                self.parts.insert(rad, r);
            }
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Coeff::zero();
        }
        Coeff { parts: self.parts.iter().map(|(k, v)| (k.clone(), v.scale(r))).collect() }
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        let mut out = Coeff::zero();
        for (rad, r) in &self.parts {
            out.insert_part(rad.clone(), r.mul_poly(p));
        }
        out
    }

    pub fn conj(&self) -> Self {
        Coeff { parts: self.parts.iter().map(|(k, v)| (k.clone(), v.conj())).collect() }
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let (rad, r) = match self.parts.len() {
            0 => return Err(AlgebraError::DivisionByZero),
            1 => self.parts.iter().next().unwrap(),
            _ => return Err(AlgebraError::NotInvertible(self.to_string())),
        };
        let (s, inv_rad) = rad.inverse();
        Ok(Self::from_part(inv_rad, &s * &r.inverse()?))
    }

    pub fn substitute_value(&self, p: Param, v: &Rational) -> Result<Self, AlgebraError> {
        let mut out = Coeff::zero();
        for (rad, r) in &self.parts {
            let r = r.substitute_value(p, v)?;
            let (s, rad) = rad.substitute_value(p, v)?;
            out.insert_part(rad, &s * &r);
        }
        Ok(out)
    }

    pub fn substitute_poly(&self, p: Param, value: &Poly) -> Result<Self, AlgebraError> {
        if let Some(v) = value.as_rational() {
            return self.substitute_value(p, &v);
        }
        let mut out = Coeff::zero();
        for (rad, r) in &self.parts {
            if rad.mentions(p) {
                return Err(AlgebraError::Unsupported(format!(
                    "substituting a polynomial for {p} inside radical {rad}"
                )));
            }
            out.insert_part(rad.clone(), r.substitute_poly(p, value)?);
        }
        Ok(out)
    }

    pub fn eval(&self, value_of: &impl Fn(Param) -> Option<f64>) -> Result<Complex64, AlgebraError> {
        let mut total = Complex64::new(0.0, 0.0);
        for (rad, r) in &self.parts {
            total += r.eval(value_of)? * rad.eval(value_of)?;
        }
        Ok(total)
    }
}

impl From<RatFunc> for Coeff {
    fn from(r: RatFunc) -> Self {
        Coeff::from_ratfunc(r)
    }
}

impl From<Poly> for Coeff {
    fn from(p: Poly) -> Self {
        Coeff::from_poly(p)
    }
}

impl From<Rational> for Coeff {
    fn from(r: Rational) -> Self {
        Coeff::rational(r)
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::int(n)
    }
}

impl Add<&Coeff> for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        let mut out = self.clone();
        for (rad, r) in &rhs.parts {
            out.insert_part(rad.clone(), r.clone());
        }
        out
    }
}

impl Sub<&Coeff> for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        let mut out = self.clone();
        for (rad, r) in &rhs.parts {
            out.insert_part(rad.clone(), -r);
        }
        out
    }
}

impl Mul<&Coeff> for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        let mut out = Coeff::zero();
        for (ra, fa) in &self.parts {
            for (rb, fb) in &rhs.parts {
                let (s, rad) = ra.mul(rb);
                out.insert_part(rad, &(&s * fa) * fb);
            }
        }
        out
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff { parts: self.parts.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (rad, r) in &self.parts {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if rad.is_one() {
                write!(f, "{r}")?;
            } else if r.is_one() {
                write!(f, "{rad}")?;
            } else {
                write!(f, "{rad}*({r})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coeff({self})")
    }
}
