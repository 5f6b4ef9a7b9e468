//! Products of fractional powers `Π b^{f_b}` with every `f_b ∈ (0, 1)`.
//!
//! Bases are primes or positive parameters (`|E| = -E`, see
//! [`Param::radicand_sign`]). Integer parts of exponents are always folded
//! into the rational-function coefficient, which keeps the representation of
//! a radical class unique.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;

use super::param::Param;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::AlgebraError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RadicalBase {
    Prime(u64),
    Param(Param),
}

impl RadicalBase {
    fn integer_power(self, k: i64) -> RatFunc {
        match self {
            RadicalBase::Prime(p) => RatFunc::rational(Rational::from_int(p as i64).pow(k as i32)),
            RadicalBase::Param(p) => signed_param_power(p, k),
        }
    }
}

/// `(σ·p)^k` for integer `k`.
fn signed_param_power(p: Param, k: i64) -> RatFunc {
    let sign = if p.radicand_sign() < 0 && k.rem_euclid(2) == 1 { -1 } else { 1 };
    let mag = if k >= 0 {
        RatFunc::from_poly(Poly::param(p).pow(k as u32))
    } else {
        RatFunc::inv_linear(p, Rational::zero(), (-k) as u32)
    };
    mag.scale(&Rational::from_int(sign))
}

fn factorize(mut n: u64) -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Radical {
    exps: BTreeMap<RadicalBase, Rational>,
}

impl Radical {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (&RadicalBase, &Rational)> {
        self.exps.iter()
    }

    pub fn mentions(&self, p: Param) -> bool {
        self.exps.contains_key(&RadicalBase::Param(p))
    }

    /// Accumulates `base^q` into `self`, returning the integer-part scalar.
    fn absorb(&mut self, base: RadicalBase, q: &Rational) -> RatFunc {
        let total = match self.exps.get(&base) {
            Some(f) => f + q,
            None => q.clone(),
        };
        let (k, frac) = total.split_floor();
        if frac.is_zero() {
            self.exps.remove(&base);
        } else {
            self.exps.insert(base, frac);
        }
        if k == 0 {
            RatFunc::one()
        } else {
            base.integer_power(k)
        }
    }

    /// `r^q` for a positive rational `r`, split as `(scalar, radical)`.
    pub fn of_rational(r: &Rational, q: &Rational) -> Result<(RatFunc, Radical), AlgebraError> {
        if !r.is_positive() {
            return Err(AlgebraError::NonPositiveRadicand(r.to_string()));
        }
        let to_u64 = |b: &num_bigint::BigInt| {
            b.to_u64().ok_or_else(|| AlgebraError::Unsupported(format!("radicand {b} too large")))
        };
        let mut primes: BTreeMap<u64, i64> = BTreeMap::new();
        for (p, e) in factorize(to_u64(r.numer())?) {
            *primes.entry(p).or_insert(0) += e;
        }
        for (p, e) in factorize(to_u64(r.denom())?) {
            *primes.entry(p).or_insert(0) -= e;
        }
        let mut rad = Radical::one();
        let mut scalar = RatFunc::one();
        for (p, e) in primes {
            let s = rad.absorb(RadicalBase::Prime(p), &(&Rational::from_int(e) * q));
            scalar = &scalar * &s;
        }
        Ok((scalar, rad))
    }

    /// `(σ·p)^q` split as `(scalar, radical)`.
    pub fn of_param(p: Param, q: &Rational) -> (RatFunc, Radical) {
        let mut rad = Radical::one();
        let scalar = rad.absorb(RadicalBase::Param(p), q);
        (scalar, rad)
    }

    pub fn mul(&self, other: &Radical) -> (RatFunc, Radical) {
        let mut rad = self.clone();
        let mut scalar = RatFunc::one();
        for (b, f) in &other.exps {
            scalar = &scalar * &rad.absorb(*b, f);
        }
        (scalar, rad)
    }

    /// `self^{-1}` split as `(scalar, radical)`.
    pub fn inverse(&self) -> (RatFunc, Radical) {
        let mut rad = Radical::one();
        let mut scalar = RatFunc::one();
        for (b, f) in &self.exps {
            scalar = &scalar * &rad.absorb(*b, &-f);
        }
        (scalar, rad)
    }

    pub fn substitute_value(&self, p: Param, v: &Rational) -> Result<(RatFunc, Radical), AlgebraError> {
        let Some(f) = self.exps.get(&RadicalBase::Param(p)) else {
            return Ok((RatFunc::one(), self.clone()));
        };
        let radicand = v * &Rational::from_int(p.radicand_sign());
        if !radicand.is_positive() {
            return Err(AlgebraError::NonPositiveRadicand(format!("{p} = {v}")));
        }
        let (s1, r1) = Radical::of_rational(&radicand, f)?;
        let mut rest = self.clone();
        rest.exps.remove(&RadicalBase::Param(p));
        let (s2, r2) = rest.mul(&r1);
        Ok((&s1 * &s2, r2))
    }

    pub fn eval(&self, value_of: &impl Fn(Param) -> Option<f64>) -> Result<f64, AlgebraError> {
        let mut v = 1.0;
        for (b, f) in &self.exps {
            let base = match b {
                RadicalBase::Prime(p) => *p as f64,
                RadicalBase::Param(p) => {
                    let x = value_of(*p).ok_or(AlgebraError::Unbound(*p))? * p.radicand_sign() as f64;
                    if x <= 0.0 {
                        return Err(AlgebraError::NonPositiveRadicand(format!("{p} = {}", x)));
                    }
                    x
                }
            };
            v *= base.powf(f.to_f64());
        }
        Ok(v)
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(b, e)| {
                let base = match b {
                    RadicalBase::Prime(p) => p.to_string(),
                    RadicalBase::Param(p) if p.radicand_sign() < 0 => format!("|{p}|"),
                    RadicalBase::Param(p) => p.to_string(),
                };
                format!("{base}^({e})")
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}
