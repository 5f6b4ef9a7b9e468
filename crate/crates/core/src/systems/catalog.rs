//! Operator builders. Everything is symbolic in `m`, `E`, `K`, `zeta`, `A`, `B`.

use crate::opalg::{Coeff, Expo, Operator, Param, RatFunc, Rational};

fn c(n: i64, d: i64) -> Coeff {
    Coeff::frac(n, d)
}

fn m() -> Coeff {
    Coeff::param(Param::M)
}

fn m_shift(n: i64, d: i64) -> Coeff {
    &m() + &c(n, d)
}

/// `1/(m + n/d)`
fn inv_m_shift(n: i64, d: i64) -> Coeff {
    RatFunc::inv_linear(Param::M, Rational::new(n, d), 1).into()
}

fn inv_zeta() -> Coeff {
    RatFunc::inv_linear(Param::Zeta, Rational::zero(), 1).into()
}

fn sc(k: impl Into<Coeff>, op: &Operator) -> Operator {
    op.scale(&k.into())
}

fn sum(ops: &[Operator]) -> Operator {
    ops.iter().fold(Operator::zero(), |acc, o| &acc + o)
}

fn rho(p: i64) -> Operator {
    Operator::rho(p)
}

fn d1() -> Operator {
    Operator::drho(1)
}

fn centrifugal() -> Coeff {
    &(&m() * &m()) - &c(1, 4)
}

/// `∂² + ρ⁻¹∂ − ρ⁻²L²`
pub(crate) fn laplacian() -> Operator {
    sum(&[Operator::drho(2), Operator::monomial(1, 0, -1, 1, 0), Operator::monomial(-1, 0, -2, 0, 2)])
}

/// `(s ± L)(ρ⁻¹∂ ∓ ρ⁻²L)` with sign `sg = ±1`.
fn angular_block(s: Coeff, sg: i64) -> Operator {
    let left = &Operator::scalar(s) + &sc(sg, &Operator::lz(1));
    let right = &Operator::monomial(1, 0, -1, 1, 0) - &Operator::monomial(sg, 0, -2, 0, 1);
    left.compose(&right)
}

pub(crate) mod ho {
    use super::*;

    pub fn h() -> Operator {
        &sc(c(-1, 2), &laplacian()) + &sc(c(1, 2), &rho(2))
    }

    pub fn hm() -> Operator {
        sum(&[sc(c(-1, 2), &Operator::drho(2)), sc(c(1, 2), &rho(2)), sc(&centrifugal() * &c(1, 2), &rho(-2))])
    }

    /// `½(∓ρ∂ + ρ² − E ∓ ½)`
    pub fn dn(sg: i64) -> Operator {
        let inner = sum(&[
            Operator::monomial(-sg, 0, 1, 1, 0),
            rho(2),
            Operator::scalar(&(-&Coeff::param(Param::E)) - &c(sg, 2)),
        ]);
        sc(c(1, 2), &inner)
    }

    pub fn d3() -> Operator {
        sc(c(1, 4), &sum(&[sc(-1, &Operator::drho(2)), rho(2), sc(centrifugal(), &rho(-2))]))
    }

    /// `½(∓ρ∂ + ρ² − 2D3 ∓ ½)`
    pub fn d(sg: i64) -> Operator {
        let inner = sum(&[
            Operator::monomial(-sg, 0, 1, 1, 0),
            rho(2),
            sc(-2, &d3()),
            Operator::scalar(c(-sg, 2)),
        ]);
        sc(c(1, 2), &inner)
    }

    /// `B₁ = (∂ + (m+½)/ρ − ρ)/√2`, `B₂ = (∂ − (m−½)/ρ − ρ)/√2`; `dag` flips ∂.
    pub fn b(which: u8, dag: bool) -> Operator {
        let cent = if which == 1 { m_shift(1, 2) } else { -&m_shift(-1, 2) };
        let ds = if dag { -1 } else { 1 };
        let inner = sum(&[sc(ds, &d1()), sc(cent, &rho(-1)), sc(-1, &rho(1))]);
        sc(Coeff::sqrt(2).inverse().unwrap(), &inner)
    }

    pub fn a(which: u8, dag: bool) -> Operator {
        // a₁ = ½e^{iφ}(∂ − L/ρ + ρ), a₂ = ½e^{−iφ}(∂ + L/ρ + ρ)
        // a₁† = ½e^{−iφ}(−∂ − L/ρ + ρ), a₂† = ½e^{iφ}(−∂ + L/ρ + ρ)
        let lsign = if which == 1 { -1 } else { 1 };
        let ds = if dag { -1 } else { 1 };
        let phase = if (which == 1) != dag { 1 } else { -1 };
        let inner = sum(&[sc(ds, &d1()), Operator::monomial(lsign, 0, -1, 0, 1), rho(1)]);
        sc(c(1, 2), &Operator::phase(phase).compose(&inner))
    }

    /// `O± = ∓(i/2)e^{±2iφ}[(1 ± L)(ρ⁻¹∂ ∓ ρ⁻²L) + H]`
    pub fn o(sg: i64) -> Operator {
        let inner = &angular_block(Coeff::one(), sg) + &h();
        let pre = Coeff::i().scale(&Rational::new(-sg, 2));
        sc(pre, &Operator::phase(2 * sg).compose(&inner))
    }

    pub fn o3() -> Operator {
        sc(c(1, 2), &Operator::lz(1))
    }

    /// `𝒪₁ = ∂ − (m+½)/ρ + ρ`, `𝒪₂ = ∂ + (m−½)/ρ + ρ`,
    /// `𝒪₁† = −∂ − (m−½)/ρ + ρ`, `𝒪₂† = −∂ + (m+½)/ρ + ρ`.
    pub fn cal_o(which: u8, dag: bool) -> Operator {
        let cent = match (which, dag) {
            (1, false) => -&m_shift(1, 2),
            (2, false) => m_shift(-1, 2),
            (1, true) => -&m_shift(-1, 2),
            _ => m_shift(1, 2),
        };
        let ds = if dag { -1 } else { 1 };
        sum(&[sc(ds, &d1()), sc(cent, &rho(-1)), rho(1)])
    }
}

pub(crate) mod ha {
    use super::*;

    pub fn h() -> Operator {
        &sc(c(-1, 2), &laplacian()) - &rho(-1)
    }

    pub fn hm() -> Operator {
        sum(&[sc(c(-1, 2), &Operator::drho(2)), sc(-1, &rho(-1)), sc(&centrifugal() * &c(1, 2), &rho(-2))])
    }

    /// `∓x∂ + x − K`
    pub fn tn(sg: i64) -> Operator {
        sum(&[Operator::monomial(-sg, 0, 1, 1, 0), rho(1), Operator::scalar(-&Coeff::param(Param::K))])
    }

    pub fn t3() -> Operator {
        sc(c(1, 2), &sum(&[Operator::monomial(-1, 0, 1, 2, 0), rho(1), sc(centrifugal(), &rho(-1))]))
    }

    pub fn t(sg: i64) -> Operator {
        sum(&[Operator::monomial(-sg, 0, 1, 1, 0), rho(1), sc(-1, &t3())])
    }

    /// `F₁ = (∂ + (m+½)/ρ − 1/(m+½))/√2`, `F₂ = (∂ − (m−½)/ρ + 1/(m−½))/√2`.
    pub fn f(which: u8, dag: bool) -> Operator {
        let (cent, konst) = if which == 1 {
            (m_shift(1, 2), -&inv_m_shift(1, 2))
        } else {
            (-&m_shift(-1, 2), inv_m_shift(-1, 2))
        };
        let ds = if dag { -1 } else { 1 };
        let inner = sum(&[sc(ds, &d1()), sc(cent, &rho(-1)), Operator::scalar(konst)]);
        sc(Coeff::sqrt(2).inverse().unwrap(), &inner)
    }

    /// `g±ᵐ = ∓∂ + (m±½)/ρ − 1/(m±½)`
    pub fn g_radial(sg: i64) -> Operator {
        sum(&[sc(-sg, &d1()), sc(m_shift(sg, 2), &rho(-1)), Operator::scalar(-&inv_m_shift(sg, 2))])
    }

    /// `G± = (2|E|)^{-1/2} ρ e^{±iφ}[(½ ± L)(ρ⁻¹∂ ∓ ρ⁻²L) + ρ⁻¹]`
    pub fn g(sg: i64) -> Operator {
        let pre = &Coeff::sqrt(2).inverse().unwrap() * &Coeff::param_power(Param::E, &Rational::new(-1, 2));
        let inner = &angular_block(c(1, 2), sg) + &rho(-1);
        sc(pre, &Operator::phase(sg).compose(&rho(1)).compose(&inner))
    }

    pub fn g3() -> Operator {
        Operator::lz(1)
    }
}

pub(crate) mod gen {
    use super::*;

    fn zeta() -> Coeff {
        Coeff::param(Param::Zeta)
    }

    /// `√(2A)`
    fn sqrt_2a() -> Coeff {
        &Coeff::sqrt(2) * &Coeff::param_power(Param::A, &Rational::new(1, 2))
    }

    /// `−½∇² + Aρ^{2ζ−2} − Bρ^{ζ−2}`
    pub fn hcal() -> Operator {
        sum(&[
            sc(c(-1, 2), &laplacian()),
            Operator::monomial(Coeff::param(Param::A), 0, Expo::affine(-2, 2), 0, 0),
            Operator::monomial(-&Coeff::param(Param::B), 0, Expo::affine(-2, 1), 0, 0),
        ])
    }

    /// `ρ^{2−ζ}(−½∇² + Aρ^{2ζ−2})`, so that `𝓗 = 0` reads `H = B`.
    pub fn h() -> Operator {
        let inner = &sc(c(-1, 2), &laplacian())
            + &Operator::monomial(Coeff::param(Param::A), 0, Expo::affine(-2, 2), 0, 0);
        Operator::rho(Expo::affine(2, -1)).compose(&inner)
    }

    /// Oscillator operator in the `(y, θ)` variables, written with `ρ, φ, L_z`.
    pub fn htilde() -> Operator {
        super::ho::h()
    }

    pub fn f(sg: i64) -> Operator {
        let inner = &angular_block(Coeff::one(), sg) + &htilde();
        sc(Coeff::i().scale(&Rational::from_int(-sg)), &Operator::phase(2 * sg).compose(&inner))
    }

    pub fn f3() -> Operator {
        sc(c(1, 2), &Operator::lz(1))
    }

    pub fn k3() -> Operator {
        sc(c(1, 2), &htilde())
    }

    /// `½(∓y∂ + y² − 2K3 ∓ ½)`
    pub fn k(sg: i64) -> Operator {
        let inner = sum(&[
            Operator::monomial(-sg, 0, 1, 1, 0),
            rho(2),
            sc(-2, &k3()),
            Operator::scalar(c(-sg, 2)),
        ]);
        sc(c(1, 2), &inner)
    }

    /// `Θ± = ∓ i/(ζ√(2A)) ρ^{2−ζ} e^{±iζφ}[(ζ/2 ± L)(ρ⁻¹∂ ∓ ρ⁻²L) + ρ^{ζ−2}H]`
    pub fn theta(sg: i64) -> Operator {
        let pre = &(&inv_zeta() * &sqrt_2a().inverse().unwrap()) * &Coeff::i().scale(&Rational::from_int(-sg));
        let inner = &angular_block(zeta().scale(&Rational::new(1, 2)), sg)
            + &Operator::rho(Expo::affine(-2, 1)).compose(&h());
        let outer = Operator::rho(Expo::affine(2, -1)).compose(&Operator::phase(Expo::affine(0, sg)));
        sc(pre, &outer.compose(&inner))
    }

    pub fn theta3() -> Operator {
        sc(inv_zeta(), &Operator::lz(1))
    }

    /// `H/(ζ√(2A))`
    pub fn delta3() -> Operator {
        sc(&inv_zeta() * &sqrt_2a().inverse().unwrap(), &h())
    }

    /// The half normalisation `H/(2ζ√(2A))`, kept to report its closure defect.
    pub fn delta3_half() -> Operator {
        sc(c(1, 2), &delta3())
    }

    /// `½(∓(2/ζ)ρ∂ + (2√(2A)/ζ)ρ^ζ − 2Δ3 ∓ 1)`
    pub fn delta_with(sg: i64, d3: &Operator) -> Operator {
        let two_over_zeta = inv_zeta().scale(&Rational::from_int(2));
        let inner = sum(&[
            Operator::monomial(two_over_zeta.scale(&Rational::from_int(-sg)), 0, 1, 1, 0),
            Operator::monomial(&two_over_zeta * &sqrt_2a(), 0, Expo::zeta(), 0, 0),
            sc(-2, d3),
            Operator::scalar(-sg),
        ]);
        sc(c(1, 2), &inner)
    }

    pub fn delta(sg: i64) -> Operator {
        delta_with(sg, &delta3())
    }
}
