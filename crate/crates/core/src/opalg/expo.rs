use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::param::Param;
use super::poly::Poly;
use super::rational::Rational;
use super::AlgebraError;

/// Exponent affine in zeta: `c + z·zeta`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Expo {
    pub c: Rational,
    pub z: Rational,
}

impl Expo {
    pub fn new(c: Rational, z: Rational) -> Self {
        Expo { c, z }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn int(n: i64) -> Self {
        Expo::constant(Rational::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Expo::constant(Rational::new(n, d))
    }

    pub fn constant(c: Rational) -> Self {
        Expo { c, z: Rational::zero() }
    }

    /// `c + z·zeta` from integer parts.
    pub fn affine(c: i64, z: i64) -> Self {
        Expo { c: Rational::from_int(c), z: Rational::from_int(z) }
    }

    pub fn zeta() -> Self {
        Expo::affine(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero() && self.z.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.z.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Expo { c: &self.c * r, z: &self.z * r }
    }

    pub fn to_poly(&self) -> Poly {
        Poly::affine_zeta(&self.c, &self.z)
    }

    pub fn substitute_zeta(&self, zeta: &Rational) -> Self {
        Expo::constant(&self.c + &(&self.z * zeta))
    }

    pub fn eval(&self, value_of: &impl Fn(Param) -> Option<f64>) -> Result<f64, AlgebraError> {
        if self.z.is_zero() {
            return Ok(self.c.to_f64());
        }
        let zeta = value_of(Param::Zeta).ok_or(AlgebraError::Unbound(Param::Zeta))?;
        Ok(self.c.to_f64() + self.z.to_f64() * zeta)
    }
}

impl From<i64> for Expo {
    fn from(n: i64) -> Self {
        Expo::int(n)
    }
}

impl From<Rational> for Expo {
    fn from(r: Rational) -> Self {
        Expo::constant(r)
    }
}

/// Ordered as `(z, c)`.
impl Ord for Expo {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.z, &self.c).cmp(&(&other.z, &other.c))
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Expo> for &Expo {
    type Output = Expo;
    fn add(self, rhs: &Expo) -> Expo {
        Expo { c: &self.c + &rhs.c, z: &self.z + &rhs.z }
    }
}

impl Sub<&Expo> for &Expo {
    type Output = Expo;
    fn sub(self, rhs: &Expo) -> Expo {
        Expo { c: &self.c - &rhs.c, z: &self.z - &rhs.z }
    }
}

impl Neg for &Expo {
    type Output = Expo;
    fn neg(self) -> Expo {
        Expo { c: -&self.c, z: -&self.z }
    }
}

impl fmt::Display for Expo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.z.is_zero() {
            return write!(f, "{}", self.c);
        }
        let zpart = if self.z.is_one() {
            "zeta".to_string()
        } else if (-&self.z).is_one() {
            "-zeta".to_string()
        } else {
            format!("{}*zeta", self.z)
        };
        if self.c.is_zero() {
            f.write_str(&zpart)
        } else if self.c.is_negative() {
            write!(f, "{zpart} - {}", self.c.abs())
        } else {
            write!(f, "{zpart} + {}", self.c)
        }
    }
}

impl fmt::Debug for Expo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expo({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let a = Expo::affine(-2, 2);
        let b = Expo::affine(-2, 1);
        assert_eq!((&a - &b).to_string(), "zeta");
        assert_eq!(a.to_string(), "2*zeta - 2");
        assert_eq!(Expo::frac(1, 2).to_string(), "1/2");
        assert_eq!(a.substitute_zeta(&Rational::new(3, 2)), Expo::int(1));
    }

    #[test]
    fn ordering_is_zeta_first() {
        assert!(Expo::affine(5, 0) < Expo::affine(-5, 1));
        assert!(Expo::affine(1, 1) < Expo::affine(2, 1));
    }
}
