//! Registry of exact operator identities.

use serde::Serialize;

use crate::opalg::{AlgebraError, Coeff, Measure, Operator, OperatorJson, Param, Poly, Rational};

use super::catalog::{gen, ha, ho};
use super::transform::{pullback, transform_check};
use super::SystemsError;

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub description: String,
    pub lhs: OperatorJson,
    pub rhs: OperatorJson,
    /// `lhs − rhs`, reduced modulo `modulo` when present.
    pub residual: OperatorJson,
    /// Right divisor `S`: the identity is claimed only on the kernel of `S`.
    pub modulo: Option<OperatorJson>,
    pub asserted: bool,
    pub pass: bool,
    #[serde(skip)]
    residual_op: Operator,
}

impl IdentityReport {
    pub fn new(
        id: String,
        description: String,
        lhs: Operator,
        rhs: Operator,
        modulo: Option<Operator>,
        asserted: bool,
    ) -> Result<Self, AlgebraError> {
        let diff = &lhs - &rhs;
        let residual = match &modulo {
            Some(s) => diff.right_divide(s)?.1,
            None => diff,
        };
        Ok(IdentityReport {
            id,
            description,
            lhs: lhs.to_json(),
            rhs: rhs.to_json(),
            residual: residual.to_json(),
            modulo: modulo.as_ref().map(Operator::to_json),
            asserted,
            pass: residual.is_zero(),
            residual_op: residual,
        })
    }

    pub fn residual_operator(&self) -> &Operator {
        &self.residual_op
    }

    /// Failing only counts when the identity is asserted.
    pub fn ok(&self) -> bool {
        self.pass || !self.asserted
    }
}

/// Static description of a registered identity.
#[derive(Clone, Copy, Debug)]
pub struct IdentityInfo {
    pub id: &'static str,
    pub description: &'static str,
    pub asserted: bool,
}

type Parts = (Operator, Operator, Option<Operator>);
type Builder = fn() -> Result<Parts, SystemsError>;

struct Entry {
    info: IdentityInfo,
    build: Builder,
}

const fn entry(id: &'static str, description: &'static str, build: Builder) -> Entry {
    Entry { info: IdentityInfo { id, description, asserted: true }, build }
}

const fn reported(id: &'static str, description: &'static str, build: Builder) -> Entry {
    Entry { info: IdentityInfo { id, description, asserted: false }, build }
}

fn exact(lhs: Operator, rhs: Operator) -> Result<Parts, SystemsError> {
    Ok((lhs, rhs, None))
}

fn modulo(lhs: Operator, rhs: Operator, s: Operator) -> Result<Parts, SystemsError> {
    Ok((lhs, rhs, Some(s)))
}

fn scalar(c: Coeff) -> Operator {
    Operator::scalar(c)
}

fn p(x: Param) -> Coeff {
    Coeff::param(x)
}

fn shifted(op: &Operator, x: Param, by: i64) -> Result<Operator, SystemsError> {
    Ok(op.substitute_poly(x, &(&Poly::param(x) + &Poly::int(by)))?)
}

fn centrifugal() -> Coeff {
    &(&p(Param::M) * &p(Param::M)) - &Coeff::frac(1, 4)
}

fn neg_sqrt2() -> Coeff {
    -&Coeff::sqrt(2)
}

fn inv_sqrt2() -> Coeff {
    Coeff::sqrt(2).inverse().unwrap()
}

/// `Hm − E`
fn ho_shell() -> Operator {
    &ho::hm() - &scalar(p(Param::E))
}

/// `x²∂² + 2Kx − x² − (m²−¼)`, the hydrogen radial equation in `x = ρ/K`.
fn ha_shell() -> Operator {
    let k2 = p(Param::K).scale(&Rational::from_int(2));
    let parts = [
        Operator::monomial(1, 0, 2, 2, 0),
        Operator::monomial(k2, 0, 1, 0, 0),
        Operator::monomial(-1, 0, 2, 0, 0),
        scalar(-&centrifugal()),
    ];
    parts.iter().fold(Operator::zero(), |a, b| &a + b)
}

/// `Σ_k e^{ikφ}·block_k` from a radial reduction.
fn reduced(op: &Operator) -> Operator {
    op.radial_reduction()
        .into_iter()
        .fold(Operator::zero(), |acc, (k, block)| &acc + &Operator::phase(k).compose(&block))
}

/// Oscillator `D±ⁿ` with `E = n + 1`.
fn dn_of_n(sg: i64) -> Result<Operator, SystemsError> {
    Ok(ho::dn(sg).substitute_poly(Param::E, &(&Poly::param(Param::N) + &Poly::int(1)))?)
}

fn recursion_d(sg: i64, step: i64) -> Result<Parts, SystemsError> {
    let d = dn_of_n(sg)?;
    exact(shifted(&d, Param::N, step)?, &d - &Operator::scalar(step / 2))
}

fn recursion_t(sg: i64, step: i64) -> Result<Parts, SystemsError> {
    let t = ha::tn(sg);
    exact(shifted(&t, Param::K, step)?, &t - &Operator::scalar(step))
}

fn at(op: Operator, vals: &[(Param, Rational)]) -> Result<Operator, SystemsError> {
    let mut op = op;
    for (x, v) in vals {
        op = op.substitute(*x, v)?;
    }
    Ok(op)
}

fn osc_point() -> Vec<(Param, Rational)> {
    vec![(Param::Zeta, Rational::from_int(2)), (Param::A, Rational::new(1, 2))]
}

fn hyd_point() -> Vec<(Param, Rational)> {
    vec![(Param::Zeta, Rational::one()), (Param::A, Rational::from_int(2)), (Param::B, Rational::one())]
}

fn theta_zeta1(sg: i64) -> Result<Parts, SystemsError> {
    let theta = at(gen::theta(sg), &hyd_point())?;
    let g = ha::g(sg).substitute(Param::E, &Rational::from_int(-2))?;
    let rhs = g.scale(&Coeff::i().scale(&Rational::from_int(-sg)));
    let shell = at(&gen::h() - &scalar(p(Param::B)), &hyd_point())?;
    modulo(theta, rhs, shell)
}

/// Id, `ζ` and `A` as (numerator, denominator).
type TransformPoint = (&'static str, (i64, i64), (i64, i64));

const TRANSFORM_POINTS: &[TransformPoint] = &[
    ("gen.transform.zeta1", (1, 1), (1, 1)),
    ("gen.transform.zeta3-2", (3, 2), (1, 1)),
    ("gen.transform.zeta2", (2, 1), (1, 1)),
    ("gen.transform.zeta3", (3, 1), (1, 1)),
    ("gen.transform.zeta2-unit", (2, 1), (1, 2)),
];

static REGISTRY: &[Entry] = &[
    // Oscillator: factorization and recursions.
    entry("ho.factor.dn-pm", "(D-n - 1) D+n = 1/4[(E+1/2)(E+3/2) - (m^2-1/4)] on the shell", || {
        let lhs = (&ho::dn(-1) - &Operator::identity()).compose(&ho::dn(1));
        let e = p(Param::E);
        let v = &(&(&e + &Coeff::frac(1, 2)) * &(&e + &Coeff::frac(3, 2))) - &centrifugal();
        modulo(lhs, scalar(v.scale(&Rational::new(1, 4))), ho_shell())
    }),
    entry("ho.factor.dn-mp", "(D+n + 1) D-n = 1/4[(E-1/2)(E-3/2) - (m^2-1/4)] on the shell", || {
        let lhs = (&ho::dn(1) + &Operator::identity()).compose(&ho::dn(-1));
        let e = p(Param::E);
        let v = &(&(&e - &Coeff::frac(1, 2)) * &(&e - &Coeff::frac(3, 2))) - &centrifugal();
        modulo(lhs, scalar(v.scale(&Rational::new(1, 4))), ho_shell())
    }),
    entry("ho.recursion.plus-up", "D+ at n+2 equals D+n - 1", || recursion_d(1, 2)),
    entry("ho.recursion.plus-down", "D+ at n-2 equals D+n + 1", || recursion_d(1, -2)),
    entry("ho.recursion.minus-up", "D- at n+2 equals D-n - 1", || recursion_d(-1, 2)),
    entry("ho.recursion.minus-down", "D- at n-2 equals D-n + 1", || recursion_d(-1, -2)),
    entry("ho.d3-eigen", "D3 = E/2 on the shell", || {
        modulo(ho::d3(), scalar(p(Param::E).scale(&Rational::new(1, 2))), ho_shell())
    }),
    entry("ho.d-plus-shell", "D+ agrees with D+n on the shell", || modulo(ho::d(1), ho::dn(1), ho_shell())),
    entry("ho.d-minus-shell", "D- agrees with D-n on the shell", || modulo(ho::d(-1), ho::dn(-1), ho_shell())),
    entry("ho.so21.pm", "[D+, D-] = -2 D3", || exact(ho::d(1).commutator(&ho::d(-1)), ho::d3().scale_rational(&Rational::from_int(-2)))),
    entry("ho.so21.p3", "[D+, D3] = -D+", || exact(ho::d(1).commutator(&ho::d3()), -&ho::d(1))),
    entry("ho.so21.m3", "[D-, D3] = D-", || exact(ho::d(-1).commutator(&ho::d3()), ho::d(-1))),
    // Oscillator: SUSY partners.
    entry("ho.partner.1plus", "B1 B1dag = Hm - (m+1)", || {
        exact(ho::b(1, false).compose(&ho::b(1, true)), &ho::hm() - &scalar(&p(Param::M) + &Coeff::one()))
    }),
    entry("ho.partner.2plus", "B2 B2dag = Hm + (m-1)", || {
        exact(ho::b(2, false).compose(&ho::b(2, true)), &ho::hm() + &scalar(&p(Param::M) - &Coeff::one()))
    }),
    entry("ho.partner.1minus", "B1dag B1 = H(m+1) - m", || {
        exact(ho::b(1, true).compose(&ho::b(1, false)), &shifted(&ho::hm(), Param::M, 1)? - &scalar(p(Param::M)))
    }),
    entry("ho.partner.2minus", "B2dag B2 = H(m-1) + m", || {
        exact(ho::b(2, true).compose(&ho::b(2, false)), &shifted(&ho::hm(), Param::M, -1)? + &scalar(p(Param::M)))
    }),
    // Oscillator: a operators and the su(2) constants of motion.
    entry("ho.o-product.plus", "O+ = -i a2dag a1", || {
        exact(ho::o(1), ho::a(2, true).compose(&ho::a(1, false)).scale(&-&Coeff::i()))
    }),
    entry("ho.o-product.minus", "O- = i a1dag a2", || {
        exact(ho::o(-1), ho::a(1, true).compose(&ho::a(2, false)).scale(&Coeff::i()))
    }),
    entry("ho.su2.pm", "[O+, O-] = 2 O3", || exact(ho::o(1).commutator(&ho::o(-1)), ho::o3().scale_rational(&Rational::from_int(2)))),
    entry("ho.su2.p3", "[O+, O3] = -O+", || exact(ho::o(1).commutator(&ho::o3()), -&ho::o(1))),
    entry("ho.su2.m3", "[O-, O3] = O-", || exact(ho::o(-1).commutator(&ho::o3()), ho::o(-1))),
    entry("ho.o-conserved.plus", "[O+, H] = 0", || exact(ho::o(1).commutator(&ho::h()), Operator::zero())),
    entry("ho.o-conserved.minus", "[O-, H] = 0", || exact(ho::o(-1).commutator(&ho::h()), Operator::zero())),
    entry("ho.intertwine.1", "calO1(m) = -sqrt2 B1dag(m)", || exact(ho::cal_o(1, false), ho::b(1, true).scale(&neg_sqrt2()))),
    entry("ho.intertwine.1dag", "calO1dag(m+1) = -sqrt2 B1(m)", || {
        exact(shifted(&ho::cal_o(1, true), Param::M, 1)?, ho::b(1, false).scale(&neg_sqrt2()))
    }),
    entry("ho.intertwine.2", "calO2(m) = -sqrt2 B2dag(m)", || exact(ho::cal_o(2, false), ho::b(2, true).scale(&neg_sqrt2()))),
    entry("ho.intertwine.2dag", "calO2dag(m-1) = -sqrt2 B2(m)", || {
        exact(shifted(&ho::cal_o(2, true), Param::M, -1)?, ho::b(2, false).scale(&neg_sqrt2()))
    }),
    entry("ho.reduction.a1", "a1 on rho^(-1/2) u e^(im phi) is e^(i phi)/2 calO1(m) u", || {
        exact(reduced(&ho::a(1, false)), Operator::phase(1).compose(&ho::cal_o(1, false)).scale_rational(&Rational::new(1, 2)))
    }),
    entry("ho.reduction.a2", "a2 reduces to e^(-i phi)/2 calO2(m)", || {
        exact(reduced(&ho::a(2, false)), Operator::phase(-1).compose(&ho::cal_o(2, false)).scale_rational(&Rational::new(1, 2)))
    }),
    entry("ho.reduction.a1dag", "a1dag reduces to e^(-i phi)/2 calO1dag(m)", || {
        exact(reduced(&ho::a(1, true)), Operator::phase(-1).compose(&ho::cal_o(1, true)).scale_rational(&Rational::new(1, 2)))
    }),
    entry("ho.reduction.a2dag", "a2dag reduces to e^(i phi)/2 calO2dag(m)", || {
        exact(reduced(&ho::a(2, true)), Operator::phase(1).compose(&ho::cal_o(2, true)).scale_rational(&Rational::new(1, 2)))
    }),
    entry("ho.adjoint.a1", "formal adjoint of a1 under rho drho dphi is a1dag", || {
        exact(ho::a(1, false).adjoint(Measure::Radial2D), ho::a(1, true))
    }),
    entry("ho.adjoint.a2", "formal adjoint of a2 under rho drho dphi is a2dag", || {
        exact(ho::a(2, false).adjoint(Measure::Radial2D), ho::a(2, true))
    }),
    entry("ho.adjoint.b1", "formal adjoint of B1 under drho is B1dag", || exact(ho::b(1, false).adjoint(Measure::Line), ho::b(1, true))),
    entry("ho.adjoint.b2", "formal adjoint of B2 under drho is B2dag", || exact(ho::b(2, false).adjoint(Measure::Line), ho::b(2, true))),
    // Hydrogen: factorization, recursions, so(2,1).
    entry("ha.factor.tn-pm", "(T-n - 1) T+n = K(K+1) - (m^2-1/4) on the shell", || {
        let lhs = (&ha::tn(-1) - &Operator::identity()).compose(&ha::tn(1));
        let k = p(Param::K);
        modulo(lhs, scalar(&(&k * &(&k + &Coeff::one())) - &centrifugal()), ha_shell())
    }),
    entry("ha.factor.tn-mp", "(T+n + 1) T-n = K(K-1) - (m^2-1/4) on the shell", || {
        let lhs = (&ha::tn(1) + &Operator::identity()).compose(&ha::tn(-1));
        let k = p(Param::K);
        modulo(lhs, scalar(&(&k * &(&k - &Coeff::one())) - &centrifugal()), ha_shell())
    }),
    entry("ha.recursion.plus-up", "T+ at K+1 equals T+n - 1", || recursion_t(1, 1)),
    entry("ha.recursion.plus-down", "T+ at K-1 equals T+n + 1", || recursion_t(1, -1)),
    entry("ha.recursion.minus-up", "T- at K+1 equals T-n - 1", || recursion_t(-1, 1)),
    entry("ha.recursion.minus-down", "T- at K-1 equals T-n + 1", || recursion_t(-1, -1)),
    entry("ha.t3-eigen", "T3 = K on the shell", || modulo(ha::t3(), scalar(p(Param::K)), ha_shell())),
    entry("ha.t-plus-shell", "T+ agrees with T+n on the shell", || modulo(ha::t(1), ha::tn(1), ha_shell())),
    entry("ha.t-minus-shell", "T- agrees with T-n on the shell", || modulo(ha::t(-1), ha::tn(-1), ha_shell())),
    entry("ha.so21.pm", "[T+, T-] = -2 T3", || exact(ha::t(1).commutator(&ha::t(-1)), ha::t3().scale_rational(&Rational::from_int(-2)))),
    entry("ha.so21.p3", "[T+, T3] = -T+", || exact(ha::t(1).commutator(&ha::t3()), -&ha::t(1))),
    entry("ha.so21.m3", "[T-, T3] = T-", || exact(ha::t(-1).commutator(&ha::t3()), ha::t(-1))),
    // Hydrogen: SUSY partners.
    entry("ha.partner.1plus", "F1 F1dag = Hm + 1/(2(m+1/2)^2)", || {
        exact(ha::f(1, false).compose(&ha::f(1, true)), &ha::hm() + &scalar(partner_shift(1)))
    }),
    entry("ha.partner.2plus", "F2 F2dag = Hm + 1/(2(m-1/2)^2)", || {
        exact(ha::f(2, false).compose(&ha::f(2, true)), &ha::hm() + &scalar(partner_shift(-1)))
    }),
    entry("ha.partner.1minus", "F1dag F1 = H(m+1) + 1/(2(m+1/2)^2)", || {
        exact(ha::f(1, true).compose(&ha::f(1, false)), &shifted(&ha::hm(), Param::M, 1)? + &scalar(partner_shift(1)))
    }),
    entry("ha.partner.2minus", "F2dag F2 = H(m-1) + 1/(2(m-1/2)^2)", || {
        exact(ha::f(2, true).compose(&ha::f(2, false)), &shifted(&ha::hm(), Param::M, -1)? + &scalar(partner_shift(-1)))
    }),
    entry("ha.adjoint.f1", "formal adjoint of F1 under drho is F1dag", || exact(ha::f(1, false).adjoint(Measure::Line), ha::f(1, true))),
    entry("ha.adjoint.f2", "formal adjoint of F2 under drho is F2dag", || exact(ha::f(2, false).adjoint(Measure::Line), ha::f(2, true))),
    // Hydrogen: G series.
    entry("ha.f1-equals-gminus", "F1 = g-(m+1)/sqrt2", || {
        exact(ha::f(1, false), shifted(&ha::g_radial(-1), Param::M, 1)?.scale(&inv_sqrt2()))
    }),
    entry("ha.f1dag-equals-gplus", "F1dag = g+(m)/sqrt2", || exact(ha::f(1, true), ha::g_radial(1).scale(&inv_sqrt2()))),
    entry("ha.reduction.gplus", "G+ reduces to -(2|E|)^(-1/2) (m+1/2) e^(i phi) g+(m)", || {
        let pre = &(&inv_sqrt2() * &Coeff::param_power(Param::E, &Rational::new(-1, 2))) * &(&p(Param::M) + &Coeff::frac(1, 2));
        exact(reduced(&ha::g(1)), Operator::phase(1).compose(&ha::g_radial(1)).scale(&-&pre))
    }),
    entry("ha.reduction.gminus", "G- reduces to -(2|E|)^(-1/2) (m-1/2) e^(-i phi) g-(m)", || {
        let pre = &(&inv_sqrt2() * &Coeff::param_power(Param::E, &Rational::new(-1, 2))) * &(&p(Param::M) - &Coeff::frac(1, 2));
        exact(reduced(&ha::g(-1)), Operator::phase(-1).compose(&ha::g_radial(-1)).scale(&-&pre))
    }),
    reported("ha.g-su2", "[G+, G-] = 2 G3 as a formal identity (reported, not asserted)", || {
        exact(ha::g(1).commutator(&ha::g(-1)), ha::g3().scale_rational(&Rational::from_int(2)))
    }),
    entry("ha.g-su2.on-shell", "[G+, G-] = 2 G3 on the shell H = E", || {
        modulo(ha::g(1).commutator(&ha::g(-1)), ha::g3().scale_rational(&Rational::from_int(2)), &ha::h() - &scalar(p(Param::E)))
    }),
    entry("ha.g-su2.p3", "[G+, G3] = -G+", || exact(ha::g(1).commutator(&ha::g3()), -&ha::g(1))),
    entry("ha.g-su2.m3", "[G-, G3] = G-", || exact(ha::g(-1).commutator(&ha::g3()), ha::g(-1))),
    entry("ha.g-conserved.plus", "[G+, H] = 0", || exact(ha::g(1).commutator(&ha::h()), Operator::zero())),
    entry("ha.g-conserved.minus", "[G-, H] = 0", || exact(ha::g(-1).commutator(&ha::h()), Operator::zero())),
    // Generalized system, symbolic zeta, A, B.
    entry("gen.su2.pm", "[Theta+, Theta-] = 2 Theta3", || {
        exact(gen::theta(1).commutator(&gen::theta(-1)), gen::theta3().scale_rational(&Rational::from_int(2)))
    }),
    entry("gen.su2.p3", "[Theta+, Theta3] = -Theta+", || exact(gen::theta(1).commutator(&gen::theta3()), -&gen::theta(1))),
    entry("gen.su2.m3", "[Theta-, Theta3] = Theta-", || exact(gen::theta(-1).commutator(&gen::theta3()), gen::theta(-1))),
    entry("gen.theta-conserved.plus", "[Theta+, H] = 0", || exact(gen::theta(1).commutator(&gen::h()), Operator::zero())),
    entry("gen.so21.pm", "[Delta+, Delta-] = -2 Delta3", || {
        exact(gen::delta(1).commutator(&gen::delta(-1)), gen::delta3().scale_rational(&Rational::from_int(-2)))
    }),
    entry("gen.so21.p3", "[Delta+, Delta3] = -Delta+", || exact(gen::delta(1).commutator(&gen::delta3()), -&gen::delta(1))),
    entry("gen.so21.m3", "[Delta-, Delta3] = Delta-", || exact(gen::delta(-1).commutator(&gen::delta3()), gen::delta(-1))),
    reported("gen.so21.pm-half-delta3", "[Delta+, Delta-] = -2 Delta3 with Delta3 = H/(2 zeta sqrt(2A)) (reported)", || {
        let d3 = gen::delta3_half();
        exact(
            gen::delta_with(1, &d3).commutator(&gen::delta_with(-1, &d3)),
            d3.scale_rational(&Rational::from_int(-2)),
        )
    }),
    entry("gen.pullback.k3", "K3 pulled back to rho is Delta3", || exact(pullback(&gen::k3())?, gen::delta3())),
    entry("gen.pullback.f3", "F3 pulled back to rho is Theta3", || exact(pullback(&gen::f3())?, gen::theta3())),
    entry("gen.pullback.f-plus", "F+ pulled back to rho is 2 Theta+", || {
        exact(pullback(&gen::f(1))?, gen::theta(1).scale_rational(&Rational::from_int(2)))
    }),
    entry("gen.pullback.f-minus", "F- pulled back to rho is 2 Theta-", || {
        exact(pullback(&gen::f(-1))?, gen::theta(-1).scale_rational(&Rational::from_int(2)))
    }),
    reported("gen.pullback.k-plus", "K+ pulled back to rho is Delta+ (reported; constants differ by 1/4)", || {
        exact(pullback(&gen::k(1))?, gen::delta(1))
    }),
    entry("gen.zeta2.theta-plus", "Theta+ at zeta=2, A=1/2 is O+", || exact(at(gen::theta(1), &osc_point())?, ho::o(1))),
    entry("gen.zeta2.theta-minus", "Theta- at zeta=2, A=1/2 is O-", || exact(at(gen::theta(-1), &osc_point())?, ho::o(-1))),
    entry("gen.zeta2.theta3", "Theta3 at zeta=2 is O3", || exact(at(gen::theta3(), &osc_point())?, ho::o3())),
    entry("gen.zeta2.delta-plus", "Delta+ at zeta=2, A=1/2 reduces to D+", || {
        exact(reduced(&at(gen::delta(1), &osc_point())?), ho::d(1))
    }),
    entry("gen.zeta2.delta-minus", "Delta- at zeta=2, A=1/2 reduces to D-", || {
        exact(reduced(&at(gen::delta(-1), &osc_point())?), ho::d(-1))
    }),
    entry("gen.zeta2.delta3", "Delta3 at zeta=2, A=1/2 reduces to D3", || exact(reduced(&at(gen::delta3(), &osc_point())?), ho::d3())),
    entry("gen.zeta1.theta3", "Theta3 at zeta=1 is G3", || exact(at(gen::theta3(), &hyd_point())?, ha::g3())),
    entry("gen.zeta1.theta-plus", "Theta+ at zeta=1, A=2, B=1 is -i G+ (E=-2) on the zero-energy shell", || theta_zeta1(1)),
    entry("gen.zeta1.theta-minus", "Theta- at zeta=1, A=2, B=1 is i G- (E=-2) on the zero-energy shell", || theta_zeta1(-1)),
];

fn partner_shift(sg: i64) -> Coeff {
    let inv = crate::opalg::RatFunc::inv_linear(Param::M, Rational::new(sg, 2), 2);
    Coeff::from_ratfunc(inv).scale(&Rational::new(1, 2))
}

/// All registered identity ids, transform checks included, in report order.
pub fn identity_ids() -> Vec<IdentityInfo> {
    let mut out: Vec<IdentityInfo> = REGISTRY.iter().map(|e| e.info).collect();
    for (id, _, _) in TRANSFORM_POINTS {
        out.push(IdentityInfo { id, description: "change of variables to the oscillator", asserted: true });
    }
    out
}

pub fn verify_identity(id: &str) -> Result<IdentityReport, SystemsError> {
    if let Some(e) = REGISTRY.iter().find(|e| e.info.id == id) {
        let (lhs, rhs, s) = (e.build)()?;
        return Ok(IdentityReport::new(e.info.id.into(), e.info.description.into(), lhs, rhs, s, e.info.asserted)?);
    }
    if let Some((id, z, a)) = TRANSFORM_POINTS.iter().find(|(t, _, _)| *t == id) {
        let mut r = transform_check(&Rational::new(z.0, z.1), &Rational::new(a.0, a.1))?;
        r.id = (*id).into();
        return Ok(r);
    }
    Err(SystemsError::UnknownIdentity(id.into()))
}

/// Verifies every registered identity whose id starts with `prefix`.
pub fn verify_all(prefix: &str) -> Vec<Result<IdentityReport, SystemsError>> {
    use rayon::prelude::*;
    identity_ids()
        .par_iter()
        .filter(|i| i.id.starts_with(prefix))
        .map(|i| verify_identity(i.id))
        .collect()
}

/// Closure relations of `{Θ±, Θ3}` and `{Δ±, Δ3}` at the system's `ζ, A, B`.
pub fn verify_closures(sys: &super::SystemId) -> Result<Vec<IdentityReport>, SystemsError> {
    use super::{build, OperatorName as N, SystemId};
    let SystemId::Generalized(gp) = sys else {
        return Err(SystemsError::InvalidSystem("closures at fixed parameters need the generalized system".into()));
    };
    let tag = format!("[zeta={},A={},B={}]", gp.zeta, gp.a, gp.b);
    let op = |n| build(sys, n);
    let two = Rational::from_int(2);
    let cases = [
        ("gen.su2.pm", "[Theta+, Theta-] = 2 Theta3", op(N::ThetaPlus)?.commutator(&op(N::ThetaMinus)?), op(N::Theta3)?.scale_rational(&two)),
        ("gen.su2.p3", "[Theta+, Theta3] = -Theta+", op(N::ThetaPlus)?.commutator(&op(N::Theta3)?), -&op(N::ThetaPlus)?),
        ("gen.su2.m3", "[Theta-, Theta3] = Theta-", op(N::ThetaMinus)?.commutator(&op(N::Theta3)?), op(N::ThetaMinus)?),
        ("gen.so21.pm", "[Delta+, Delta-] = -2 Delta3", op(N::DeltaPlus)?.commutator(&op(N::DeltaMinus)?), op(N::Delta3)?.scale_rational(&-&two)),
        ("gen.so21.p3", "[Delta+, Delta3] = -Delta+", op(N::DeltaPlus)?.commutator(&op(N::Delta3)?), -&op(N::DeltaPlus)?),
        ("gen.so21.m3", "[Delta-, Delta3] = Delta-", op(N::DeltaMinus)?.commutator(&op(N::Delta3)?), op(N::DeltaMinus)?),
    ];
    cases
        .into_iter()
        .map(|(id, desc, lhs, rhs)| Ok(IdentityReport::new(format!("{id}{tag}"), desc.into(), lhs, rhs, None, true)?))
        .collect()
}
