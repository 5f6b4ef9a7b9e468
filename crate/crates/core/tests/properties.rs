//! Randomised algebraic laws for the operator algebra.

mod common;

use common::{act_sequentially, coeff, config, jacobi_sum, operator, reassembled};
use proptest::prelude::*;
use radsym::opalg::{Operator, Param, Poly};

proptest! {
    #![proptest_config(config())]

    #[test]
    fn composition_is_associative(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn composition_distributes(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(a.compose(&(&b + &c)), &a.compose(&b) + &a.compose(&c));
        prop_assert_eq!((&a + &b).compose(&c), &a.compose(&c) + &b.compose(&c));
    }

    #[test]
    fn additive_group_and_unit(a in operator(), b in operator()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&b), &a - &b);
        prop_assert_eq!(a.compose(&Operator::identity()), a.clone());
        prop_assert_eq!(Operator::identity().compose(&a), a.clone());
        prop_assert!(a.compose(&Operator::zero()).is_zero());
    }

    #[test]
    fn scalars_without_phase_or_rho_are_central(a in operator(), c in coeff()) {
        let s = Operator::scalar(c.clone());
        prop_assert_eq!(s.compose(&a), a.scale(&c));
        prop_assert_eq!(a.compose(&s), a.scale(&c));
    }

    #[test]
    fn jacobi_identity(a in operator(), b in operator(), c in operator()) {
        let sum = jacobi_sum(&a, &b, &c);
        prop_assert!(sum.is_zero(), "{}", sum);
    }

    #[test]
    fn reordering_preserves_action(a in operator(), b in operator()) {
        let composed = a.compose(&b).apply_to_monomial(&Poly::param(Param::S), &Poly::param(Param::Kphase));
        prop_assert_eq!(composed, act_sequentially(&a, &b));
    }

    #[test]
    fn canonical_form_is_idempotent(a in operator(), split in 1i64..=3) {
        let again = Operator::from_terms(a.terms().map(|(k, c)| (k.clone(), c.clone())));
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(&reassembled(&a, split), &a);
        prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        prop_assert_eq!(a.to_json(), again.to_json());
    }
}
