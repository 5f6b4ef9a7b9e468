use radsym::numerics::*;
use radsym::opalg::{Operator, Rational};
use radsym::systems::{build, OperatorName, SystemId};

fn ho_grid() -> RadialGrid {
    RadialGrid::oscillator_reference()
}

#[test]
fn grid_validation() {
    assert!(RadialGrid::new(0.0, 1.0, 10).is_err());
    assert!(RadialGrid::new(1.0, 0.5, 10).is_err());
    assert!(RadialGrid::new(0.1, 1.0, 2).is_err());
    assert!(RadialGrid::cell_centred(f64::INFINITY, 10).is_err());
    let g = RadialGrid::cell_centred(10.0, 100).unwrap();
    assert!(g.is_cell_centred());
    assert!((g.point(99) - 10.0).abs() < 1e-12);
    assert!((g.r_min - g.spacing / 2.0).abs() < 1e-15);
    let c = g.coarsened().unwrap();
    assert_eq!(c.n_points, 50);
    assert!(c.is_cell_centred());
    assert!(!RadialGrid::new(0.3, 10.0, 100).unwrap().is_cell_centred());
}

#[test]
fn oscillator_energies_match_closed_form() {
    // E = n + 1 with n = 2n_r + |m|.
    for m in -3i64..=3 {
        let states = eigensolve(&PotentialSpec::Oscillator, m, &ho_grid(), 3).unwrap();
        for (k, s) in states.iter().enumerate() {
            let n = 2 * k as i64 + m.abs();
            assert_eq!((s.n, s.m), (n, m));
            assert!((s.energy - (n as f64 + 1.0)).abs() < 1e-4, "{n} {m}: {}", s.energy);
        }
    }
}

#[test]
fn hydrogen_levels_follow_half_integer_k() {
    // Oracle: E_n = −1/(2(n − ½)²), i.e. K_n = n − ½ in two dimensions.
    let grid = RadialGrid::hydrogen_reference();
    for m in 0i64..=2 {
        let states = eigensolve(&PotentialSpec::Coulomb, m, &grid, 3).unwrap();
        for s in states {
            let k = s.n as f64 - 0.5;
            assert!((s.energy + 1.0 / (2.0 * k * k)).abs() < 1e-4, "n={} m={m}: {}", s.n, s.energy);
        }
    }
}

#[test]
fn eigenvectors_agree_with_closed_forms() {
    for (sys, grid) in [(SystemId::Oscillator, ho_grid()), (SystemId::Hydrogen, RadialGrid::hydrogen_reference())] {
        let pot = PotentialSpec::for_system(&sys);
        for (n, m) in [(2, 0), (3, 1), (4, -2)] {
            let num = eigenstate(&pot, n, m, &grid).unwrap();
            let ana = analytic_state(&sys, n, m, &grid).unwrap();
            let gap = 1.0 - overlap(&num.samples, &ana.samples);
            assert!(gap < 1e-7, "{sys} ({n},{m}): {gap:e}");
            assert!((num.norm() - 1.0).abs() < 1e-9);
            // Both normalisations pick the same sign.
            let dot: f64 = num.samples.iter().zip(&ana.samples).map(|(a, b)| a * b).sum();
            assert!(dot > 0.0);
        }
    }
}

#[test]
fn second_order_convergence() {
    for m in 0..3 {
        let r = richardson_ratio(m, 14.0, 800).unwrap();
        assert!((r - 4.0).abs() < 0.2, "m={m}: {r}");
    }
}

#[test]
fn invalid_labels_and_unsupported_systems() {
    let g = ho_grid();
    assert_eq!(
        eigenstate(&PotentialSpec::Oscillator, 1, 0, &g).unwrap_err(),
        NumericsError::InvalidLabels { n: 1, m: 0 }
    );
    assert!(analytic_state(&SystemId::Hydrogen, 1, 1, &g).is_err());
    let gen = SystemId::generalized(Rational::from_int(2), Rational::one(), Rational::one()).unwrap();
    assert!(matches!(analytic_state(&gen, 0, 0, &g), Err(NumericsError::Unsupported(_))));
    assert!(matches!(
        ladder_check(&gen, OperatorName::DeltaPlus, (0, 0), &g, &Tolerances::default()),
        Err(NumericsError::Unsupported(_))
    ));
    assert!(matches!(
        ladder_check(&SystemId::Oscillator, OperatorName::H, (0, 0), &g, &Tolerances::default()),
        Err(NumericsError::Systems(_))
    ));
    assert!(eigensolve(&PotentialSpec::Oscillator, 0, &g, 0).is_err());
}

#[test]
fn coarse_grid_is_detected() {
    let g = RadialGrid::cell_centred(14.0, 40).unwrap();
    assert!(matches!(
        eigensolve(&PotentialSpec::Oscillator, 0, &g, 2),
        Err(NumericsError::GridTooCoarse { .. })
    ));
    assert!(eigensolve_unprobed(&PotentialSpec::Oscillator, 0, &g, 2).is_ok());
}

#[test]
fn hamiltonian_annihilates_its_eigenstates_on_shell() {
    // (H − E) with E bound per state.
    let sys = SystemId::Oscillator;
    let h = build(&sys, OperatorName::H).unwrap();
    let e = Operator::scalar(radsym::opalg::Coeff::param(radsym::opalg::Param::E));
    let states: Vec<_> = [(2, -2), (2, 0), (2, 2)].iter().map(|&(n, m)| analytic_state(&sys, n, m, &ho_grid()).unwrap()).collect();
    assert!(on_shell_check(&(&h - &e), &states).unwrap() < 1e-4);
    let mixed = vec![states[0].clone(), analytic_state(&sys, 0, 0, &ho_grid()).unwrap()];
    assert_eq!(on_shell_check(&(&h - &e), &mixed).unwrap_err(), NumericsError::MixedEnergies);
}

#[test]
fn ladder_check_reports_constants_and_annihilation() {
    let g = ho_grid();
    let tol = Tolerances::default();
    let r = ladder_check(&SystemId::Oscillator, OperatorName::A2, (1, 1), &g, &tol).unwrap();
    assert_eq!(r.target, (0, 0));
    assert_eq!(r.outcome, LadderOutcome::Shift);
    assert!((r.constant[0].hypot(r.constant[1]) - 1.0).abs() < 1e-6);
    let r = ladder_check(&SystemId::Oscillator, OperatorName::A1, (3, 3), &g, &tol).unwrap();
    assert_eq!(r.outcome, LadderOutcome::Annihilation);
    assert!(r.pass);
    // B₁† lowers n and raises m.
    let r = ladder_check(&SystemId::Oscillator, OperatorName::B1Dag, (2, 0), &g, &tol).unwrap();
    assert_eq!(r.target, (1, 1));
    assert!(r.pass && r.overlap > 1.0 - 1e-6);
    let hg = RadialGrid::hydrogen_reference();
    let r = ladder_check(&SystemId::Hydrogen, OperatorName::TnPlus, (2, 1), &hg, &tol).unwrap();
    assert_eq!(r.target, (3, 1));
    assert!(r.pass, "{r:?}");
}

#[test]
fn round_trip_matches_factorization_scalar() {
    for (n, m) in [(0, 0), (2, 2), (3, -1), (4, 0)] {
        let r = round_trip_check(n, m, &ho_grid(), 1e-4).unwrap();
        let e = n as f64 + 1.0;
        let oracle = 0.25 * ((e + 0.5) * (e + 1.5) - ((m * m) as f64 - 0.25));
        assert!((r.measured - oracle).abs() / oracle < 1e-6, "({n},{m}) {}", r.measured);
        assert!(r.overlap > 1.0 - 1e-9);
    }
}

#[test]
fn admissible_angular_numbers() {
    let z = |p, q| Rational::new(p, q);
    assert_eq!(degenerate_set(&z(2, 1), 3, AdmissibleRule::SingleValued), vec![-3, -1, 1, 3]);
    assert_eq!(degenerate_set(&z(1, 1), 2, AdmissibleRule::SingleValued), vec![-2, 0, 2]);
    assert_eq!(degenerate_set(&z(1, 1), 3, AdmissibleRule::SingleValued), Vec::<i64>::new());
    assert_eq!(degenerate_set(&z(3, 2), 4, AdmissibleRule::SingleValued), vec![-4, 0, 4]);
    assert_eq!(degenerate_set(&z(3, 2), 3, AdmissibleRule::Any), vec![-3, -1, 1, 3]);
}

#[test]
fn zero_energy_states_solve_the_generalized_equation() {
    let grid = RadialGrid::cell_centred(14.0, 8000).unwrap();
    for (zeta, a, n, m) in [(Rational::new(3, 2), 1.0, 2, 0), (Rational::from_int(1), 2.0, 2, 2), (Rational::from_int(3), 0.5, 1, 1)] {
        let r = zero_energy_check(&zeta, a, n, m, &grid, AdmissibleRule::Any).unwrap();
        let b = zeta.to_f64() * (2.0 * a).sqrt() / 2.0 * (n as f64 + 1.0);
        assert!((r.b - b).abs() < 1e-12);
        assert!((r.m_phi - m as f64 * zeta.to_f64() / 2.0).abs() < 1e-15);
        assert!(r.residual < 1e-4, "zeta={zeta} n={n} m={m}: {}", r.residual);
    }
    // A B off the quantised value leaves a residual.
    let r = zero_energy_check(&Rational::from_int(2), 1.0, 1, 1, &grid, AdmissibleRule::SingleValued).unwrap();
    assert!(r.admissible);
    let r = zero_energy_check(&Rational::new(3, 2), 1.0, 1, 1, &grid, AdmissibleRule::SingleValued).unwrap();
    assert!(!r.admissible);
    assert!(zero_energy_check(&Rational::from_int(-1), 1.0, 0, 0, &grid, AdmissibleRule::Any).is_err());
}

#[test]
fn generalized_spectrum_at_zeta_two_is_a_shifted_oscillator() {
    let gen = SystemId::generalized(Rational::from_int(2), Rational::new(1, 2), Rational::one()).unwrap();
    let rows = spectrum(&gen, 3, &ho_grid()).unwrap();
    for r in rows {
        assert!((r.numeric - r.n as f64).abs() < 1e-4);
        assert!(r.delta.unwrap() < 1e-4);
    }
    let other = SystemId::generalized(Rational::new(3, 2), Rational::one(), Rational::one()).unwrap();
    assert_eq!(reference_energy(&other, 0), None);
}

#[test]
fn finite_differences_are_exact_on_polynomials() {
    let h = 0.1;
    let f: Vec<num_complex::Complex64> =
        (0..30).map(|i| num_complex::Complex64::new((i as f64 * h).powi(3), 0.0)).collect();
    let d2 = derivative(&f, h, 2);
    for (i, v) in d2.iter().enumerate() {
        assert!((v.re - 6.0 * i as f64 * h).abs() < 1e-8, "{i}");
    }
    let w = fornberg(0.0, &[-1.0, 0.0, 1.0], 2);
    assert!((w[2][0] - 1.0).abs() < 1e-14 && (w[2][1] + 2.0).abs() < 1e-14);
}

#[test]
fn state_csv_and_interpolation() {
    let g = RadialGrid::cell_centred(10.0, 200).unwrap();
    let s = analytic_state(&SystemId::Oscillator, 0, 0, &g).unwrap();
    let csv = s.to_csv();
    assert_eq!(csv.lines().count(), 201);
    assert!(csv.starts_with("rho,u\n"));
    let r = g.point(50);
    assert!((s.interpolate(r) - s.samples[50]).abs() < 1e-12);
    assert_eq!(s.interpolate(-1.0), 0.0);
    assert_eq!(s.interpolate(20.0), 0.0);
}
