use radsym::opalg::{Coeff, Operator, Param, Rational};
use radsym::systems::*;

fn gen(z: Rational) -> SystemId {
    SystemId::generalized(z, Rational::one(), Rational::one()).unwrap()
}

#[test]
fn operator_names_round_trip() {
    for sys in [SystemId::Oscillator, SystemId::Hydrogen, gen(Rational::from_int(2))] {
        for &name in sys.catalog() {
            let parsed: OperatorName = name.as_str().parse().unwrap();
            assert_eq!(parsed, name);
            let json = serde_json::to_string(&name).unwrap();
            assert_eq!(json, format!("\"{}\"", name.as_str()));
            assert!(build(&sys, name).is_ok(), "{sys} {}", name.as_str());
        }
    }
    assert_eq!("a1DAG".parse::<OperatorName>().unwrap(), OperatorName::A1Dag);
    assert!("nonsense".parse::<OperatorName>().is_err());
}

#[test]
fn catalogs_are_disjoint_where_expected() {
    assert!(matches!(build(&SystemId::Oscillator, OperatorName::TnPlus), Err(SystemsError::UnknownOperator { .. })));
    assert!(matches!(build(&SystemId::Hydrogen, OperatorName::A1), Err(SystemsError::UnknownOperator { .. })));
}

#[test]
fn generalized_parameters_are_validated() {
    assert!(SystemId::generalized(Rational::zero(), Rational::one(), Rational::one()).is_err());
    assert!(SystemId::generalized(Rational::one(), Rational::new(-1, 2), Rational::one()).is_err());
    assert_eq!(gen(Rational::new(3, 2)).to_string(), "gen(zeta=3/2, A=1, B=1)");
}

#[test]
fn build_substitutes_parameters() {
    let sys = gen(Rational::new(3, 2));
    let symbolic = build_symbolic(&sys, OperatorName::Hcal).unwrap();
    assert!(symbolic.mentions(Param::Zeta));
    let built = build(&sys, OperatorName::Hcal).unwrap();
    for p in [Param::Zeta, Param::A, Param::B] {
        assert!(!built.mentions(p));
    }
}

#[test]
fn ladder_shifts() {
    use OperatorName::*;
    let ho = SystemId::Oscillator;
    let expected = [(DnPlus, (2, 0)), (OPlus, (0, 2)), (A2Dag, (1, 1)), (A1, (-1, 1)), (B1Dag, (-1, 1)), (B2, (1, 1))];
    for (op, shift) in expected {
        assert_eq!(ladder_semantics(&ho, op).unwrap(), shift, "{}", op.as_str());
    }
    let ha = SystemId::Hydrogen;
    assert_eq!(ladder_semantics(&ha, TnPlus).unwrap(), (1, 0));
    assert_eq!(ladder_semantics(&ha, GPlus).unwrap(), (0, 1));
    assert_eq!(ladder_semantics(&ha, F1Dag).unwrap(), ladder_semantics(&ha, F2).unwrap());
    assert!(matches!(ladder_semantics(&ho, H), Err(SystemsError::NotLadder(_))));
    assert_eq!(parameter_offset(B1), -1);
    assert_eq!(parameter_offset(F2), 1);
    assert_eq!(parameter_offset(A1), 0);
    assert!(is_full_2d(A1) && !is_full_2d(B1));
}

#[test]
fn oscillator_so21_by_hand() {
    // [D₊, D₋] = −2D₃ with D₃ = H/2 on the radial sector.
    let ho = SystemId::Oscillator;
    let dp = build(&ho, OperatorName::DPlus).unwrap();
    let dm = build(&ho, OperatorName::DMinus).unwrap();
    let d3 = build(&ho, OperatorName::D3).unwrap();
    let lhs = dp.commutator(&dm);
    assert_eq!(lhs, d3.scale_rational(&Rational::from_int(-2)));
    assert_eq!(d3.commutator(&dp), dp);
}

#[test]
fn registry_ids_are_unique_and_resolvable() {
    let ids = identity_ids();
    let mut seen = std::collections::BTreeSet::new();
    for i in &ids {
        assert!(seen.insert(i.id), "duplicate {}", i.id);
        assert!(!i.description.is_empty());
    }
    assert!(matches!(verify_identity("ho.nope"), Err(SystemsError::UnknownIdentity(_))));
    let reported: Vec<&str> = ids.iter().filter(|i| !i.asserted).map(|i| i.id).collect();
    assert!(reported.contains(&"ha.g-su2"));
}

#[test]
fn report_json_shape() {
    let r = verify_identity("ha.f1-equals-gminus").unwrap();
    assert!(r.pass && r.asserted && r.ok());
    assert!(r.residual_operator().is_zero());
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in ["id", "description", "lhs", "rhs", "residual", "modulo", "asserted", "pass"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["residual"]["terms"].as_array().unwrap().len(), 0);
}

#[test]
fn formal_g_commutator_is_not_su2_but_holds_on_shell() {
    let formal = verify_identity("ha.g-su2").unwrap();
    assert!(!formal.asserted && !formal.pass && formal.ok());
    assert!(verify_identity("ha.g-su2.on-shell").unwrap().pass);
}

#[test]
fn half_delta3_normalisation_fails_full_one_passes() {
    assert!(!verify_identity("gen.so21.pm-half-delta3").unwrap().pass);
    assert!(verify_identity("gen.so21.pm").unwrap().pass);
    let sys = gen(Rational::from_int(2));
    let d3 = build(&sys, OperatorName::Delta3).unwrap();
    let h = build(&sys, OperatorName::H).unwrap();
    // Δ3 = H/(ζ√(2A)) = H/(2√2) at ζ = 2, A = 1.
    let expected = h.scale(&(&Coeff::sqrt(2) * &Coeff::frac(1, 4)));
    assert_eq!(d3, expected);
}

#[test]
fn transform_and_closures_at_other_exponents() {
    for z in [Rational::new(5, 2), Rational::new(2, 3)] {
        assert!(transform_check(&z, &Rational::new(1, 2)).unwrap().pass, "zeta={z}");
        for r in verify_closures(&gen(z.clone())).unwrap() {
            assert!(r.pass, "{}", r.id);
        }
    }
}

#[test]
fn pullback_maps_derivative_and_phase() {
    // ∂_y → (2/ζ)c^{1/2}ρ^{1−ζ/2}∂_ρ, so ∂_y has a single term at d = 1.
    let p = pullback(&Operator::drho(1)).unwrap();
    assert_eq!(p.terms().count(), 1);
    assert_eq!(p.max_drho(), Some(1));
    let ph = pullback(&Operator::phase(2)).unwrap();
    let (k, _) = ph.terms().next().unwrap();
    assert_eq!(k.phase, radsym::opalg::Expo::zeta());
}
