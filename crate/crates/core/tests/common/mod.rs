//! Random operators and the law checks shared by the property and acceptance suites.

#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use radsym::opalg::{Coeff, Expo, MonomialAction, Operator, Param, Poly, RatFunc, Rational, TermKey};

pub const CASES: u32 = 1000;

pub fn coeff() -> impl Strategy<Value = Coeff> {
    let base = (-4i64..=4, 1i64..=3).prop_filter("nonzero", |(n, _)| *n != 0);
    (base, 0usize..6).prop_map(|((n, d), kind)| {
        let r = Coeff::frac(n, d);
        match kind {
            0 | 1 => r,
            2 => &r * &Coeff::param(Param::M),
            3 => &r * &Coeff::sqrt(2),
            4 => &r * &Coeff::i(),
            _ => &r * &Coeff::from_ratfunc(RatFunc::inv_linear(Param::M, Rational::new(1, 2), 1)),
        }
    })
}

pub fn key() -> impl Strategy<Value = TermKey> {
    (-2i64..=2, 0i64..=1, -4i64..=4, 0i64..=1, 0u32..=2, 0u32..=2).prop_map(|(k, kz, p, pz, d, lz)| {
        TermKey::new(
            Expo::new(Rational::from_int(k), Rational::new(kz, 2)),
            Expo::new(Rational::new(p, 2), Rational::from_int(pz)),
            d,
            lz,
        )
    })
}

pub fn operator() -> impl Strategy<Value = Operator> {
    prop::collection::vec((key(), coeff()), 0..=3).prop_map(Operator::from_terms)
}

pub fn config() -> ProptestConfig {
    ProptestConfig { cases: CASES, ..ProptestConfig::default() }
}

/// Applies `b` and then `a` to `ρ^S e^{iKφ}` term by term.
pub fn act_sequentially(a: &Operator, b: &Operator) -> MonomialAction {
    let s = Poly::param(Param::S);
    let k = Poly::param(Param::Kphase);
    let mut out: MonomialAction = BTreeMap::new();
    for ((dr, dp), c) in b.apply_to_monomial(&s, &k) {
        let s2 = &s + &dr.to_poly();
        let k2 = &k + &dp.to_poly();
        for ((dr2, dp2), c2) in a.apply_to_monomial(&s2, &k2) {
            let shift = (&dr + &dr2, &dp + &dp2);
            let term = &c * &c2;
            let slot = out.entry(shift.clone()).or_insert_with(Coeff::zero);
            *slot = &*slot + &term;
            if slot.is_zero() {
                out.remove(&shift);
            }
        }
    }
    out
}

pub fn jacobi_sum(a: &Operator, b: &Operator, c: &Operator) -> Operator {
    &(&a.commutator(&b.commutator(c)) + &b.commutator(&c.commutator(a))) + &c.commutator(&a.commutator(b))
}

/// The operator rebuilt from its terms split in two and inserted in reverse.
pub fn reassembled(a: &Operator, split: i64) -> Operator {
    let mut pieces: Vec<(TermKey, Coeff)> = a
        .terms()
        .flat_map(|(k, c)| {
            let part = c.scale(&Rational::new(1, split + 1));
            let rest = c - &part;
            [(k.clone(), rest), (k.clone(), part)]
        })
        .collect();
    pieces.reverse();
    Operator::from_terms(pieces)
}
