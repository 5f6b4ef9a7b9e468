//! Acceptance suite: one verdict line per criterion, tolerances pinned here.

mod common;

use std::time::{Duration, Instant};

use proptest::test_runner::{Config, TestCaseError, TestRunner};
use radsym::cli::suite;
use radsym::numerics::{
    degenerate_set, richardson_ratio, spectrum, AdmissibleRule, LadderOutcome, RadialGrid, Tolerances,
};
use radsym::opalg::{Operator, Param, Poly, Rational};
use radsym::systems::{identity_ids, transform_check, verify_all, verify_closures, OperatorName, SystemId};

const SYMBOLIC_LIMIT: Duration = Duration::from_secs(10);
const SPECTRUM_LIMIT: Duration = Duration::from_secs(20);
const PROPERTY_LIMIT: Duration = Duration::from_secs(30);
const SPECTRUM_TOL: f64 = 1e-4;
const OVERLAP_TOL: f64 = 1e-6;
const CONSTANT_TOL: f64 = 1e-6;
const MIN_SOURCES: usize = 6;
const ROUND_TRIP_TOL: f64 = 1e-4;
const ON_SHELL_TOL: f64 = 1e-4;
const ZERO_ENERGY_TOL: f64 = 1e-4;
/// Window on `(E_h − E)/(E_{h/2} − E)` around 4 for second-order convergence.
const RICHARDSON_WINDOW: (f64, f64) = (3.8, 4.2);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed <= limit
}

fn symbolic_suite() -> Verdict {
    let start = Instant::now();
    let reports: Vec<_> = verify_all("").into_iter().collect::<Result<_, _>>().expect("registry runs");
    let mut failed: Vec<String> = reports.iter().filter(|r| !r.ok()).map(|r| r.id.clone()).collect();
    let mut transforms = 0;
    for zeta in [Rational::from_int(1), Rational::new(3, 2), Rational::from_int(2), Rational::from_int(3)] {
        let r = transform_check(&zeta, &Rational::one()).expect("transform check runs");
        transforms += 1;
        if !r.pass {
            failed.push(r.id.clone());
        }
        let sys = SystemId::generalized(zeta, Rational::one(), Rational::one()).unwrap();
        for c in verify_closures(&sys).expect("closures run") {
            if !c.pass {
                failed.push(c.id);
            }
        }
    }
    // Each family named by the criterion must be registered.
    let ids: Vec<&str> = identity_ids().iter().map(|i| i.id).collect();
    let required = [
        "ho.so21.pm", "ha.so21.pm", "gen.so21.pm", "ho.su2.pm", "gen.su2.pm", "ho.factor.dn-pm", "ha.factor.tn-pm",
        "ho.partner.1plus", "ha.partner.1plus", "ho.o-product.plus", "ho.intertwine.1", "ha.f1-equals-gminus",
    ];
    let missing: Vec<&str> = required.iter().copied().filter(|r| !ids.contains(r)).collect();
    let elapsed = start.elapsed();
    let pass = failed.is_empty() && missing.is_empty() && within(elapsed, SYMBOLIC_LIMIT);
    verdict(
        pass,
        format!(
            "{} identities + {transforms} transform points, failed {:?}, missing {:?}, {:.2?} (limit {:?})",
            reports.len(),
            failed,
            missing,
            elapsed,
            SYMBOLIC_LIMIT
        ),
    )
}

fn oscillator_spectrum() -> Verdict {
    let start = Instant::now();
    let grid = RadialGrid::oscillator_reference();
    let rows = spectrum(&SystemId::Oscillator, 5, &grid).expect("spectrum");
    // Oracle: E = n + 1 with n ≡ |m| (mod 2), |m| ≤ n.
    let expected_count: usize = (0..=5).map(|n| n as usize + 1).sum();
    let worst = rows.iter().map(|r| (r.numeric - (r.n as f64 + 1.0)).abs()).fold(0.0, f64::max);
    let ratios: Vec<f64> = (0..3).map(|m| richardson_ratio(m, 14.0, 1000).expect("richardson")).collect();
    let order_ok = ratios.iter().all(|r| (RICHARDSON_WINDOW.0..=RICHARDSON_WINDOW.1).contains(r));
    let elapsed = start.elapsed();
    verdict(
        rows.len() == expected_count && worst <= SPECTRUM_TOL && order_ok && within(elapsed, SPECTRUM_LIMIT),
        format!(
            "{} states n<=5, max |dE| {worst:.2e} (tol {SPECTRUM_TOL:e}), Richardson ratios {:?}, {:.2?} (limit {:?})",
            rows.len(),
            ratios.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>(),
            elapsed,
            SPECTRUM_LIMIT
        ),
    )
}

fn ladder_actions() -> Verdict {
    let tol = Tolerances { overlap: OVERLAP_TOL, constant: CONSTANT_TOL };
    let mut problems = Vec::new();
    let mut checks = 0;
    let mut worst_overlap: f64 = 0.0;
    let mut worst_constant: f64 = 0.0;
    for (sys, grid) in [
        (SystemId::Oscillator, RadialGrid::oscillator_reference()),
        (SystemId::Hydrogen, RadialGrid::hydrogen_reference()),
    ] {
        let ops = suite::ladder_operators(&sys);
        let reports = suite::ladder_suite(&sys, ops, None, &grid, &tol).expect("ladder suite");
        checks += reports.len();
        for &op in ops {
            let shifts: Vec<_> =
                reports.iter().filter(|r| r.operator == op && r.outcome == LadderOutcome::Shift).collect();
            if shifts.len() < MIN_SOURCES {
                problems.push(format!("{} has {} shift sources", op.as_str(), shifts.len()));
            }
            for r in shifts {
                worst_overlap = worst_overlap.max(1.0 - r.overlap);
                if let Some(e) = r.expected_modulus {
                    worst_constant = worst_constant.max((r.constant[0].hypot(r.constant[1]) - e).abs());
                }
            }
        }
        problems.extend(reports.iter().filter(|r| !r.pass).map(|r| {
            format!("{} {:?}->{:?}", r.operator.as_str(), r.source, r.target)
        }));
    }
    // a₁ψ_{n,n} and a₂ψ_{n,−n} must be classified as annihilated.
    let tol_ho = RadialGrid::oscillator_reference();
    for n in 0..=4 {
        for (op, m) in [(OperatorName::A1, n), (OperatorName::A2, -n)] {
            let r = suite::ladder_suite(&SystemId::Oscillator, &[op], Some(&[(n, m)]), &tol_ho, &tol).unwrap();
            if r[0].outcome != LadderOutcome::Annihilation || !r[0].pass {
                problems.push(format!("{} ({n},{m}) not annihilated", op.as_str()));
            }
        }
    }
    // Independent oracle for the a-operator constants.
    let oracle = |op: OperatorName, n: i64, m: i64| -> f64 {
        let (n, m) = (n as f64, m as f64);
        match op {
            OperatorName::A1 => ((n - m) / 2.0).sqrt(),
            OperatorName::A2 => ((n + m) / 2.0).sqrt(),
            OperatorName::A1Dag => ((n - m + 2.0) / 2.0).sqrt(),
            _ => ((n + m + 2.0) / 2.0).sqrt(),
        }
    };
    let a_ops = [OperatorName::A1, OperatorName::A2, OperatorName::A1Dag, OperatorName::A2Dag];
    let a_reports = suite::ladder_suite(&SystemId::Oscillator, &a_ops, None, &tol_ho, &tol).unwrap();
    let mut a_worst: f64 = 0.0;
    for r in a_reports.iter().filter(|r| r.outcome == LadderOutcome::Shift) {
        let measured = r.constant[0].hypot(r.constant[1]);
        a_worst = a_worst.max((measured - oracle(r.operator, r.source.0, r.source.1)).abs());
    }
    if a_worst > CONSTANT_TOL {
        problems.push(format!("a constants off by {a_worst:.2e}"));
    }
    verdict(
        problems.is_empty(),
        format!(
            "{checks} checks, worst 1-overlap {worst_overlap:.2e} (tol {OVERLAP_TOL:e}), worst constant error \
             {:.2e} (tol {CONSTANT_TOL:e}), problems {problems:?}",
            worst_constant.max(a_worst)
        ),
    )
}

fn factorization_eigenvalue() -> Verdict {
    let grid = RadialGrid::oscillator_reference();
    let reports = suite::round_trip_suite(4, &grid, ROUND_TRIP_TOL).expect("round trips");
    let mut worst: f64 = 0.0;
    for r in &reports {
        let e = r.n as f64 + 1.0;
        let m2 = (r.m * r.m) as f64;
        let oracle = 0.25 * ((e + 0.5) * (e + 1.5) - (m2 - 0.25));
        worst = worst.max((r.measured - oracle).abs() / oracle.abs());
    }
    verdict(
        reports.len() == 15 && worst <= ROUND_TRIP_TOL,
        format!("{} states n<=4, worst relative error {worst:.2e} (tol {ROUND_TRIP_TOL:e})", reports.len()),
    )
}

fn on_shell_su2() -> Verdict {
    let grid = RadialGrid::hydrogen_reference();
    let reports = suite::on_shell_suite(&[2, 3], &grid, ON_SHELL_TOL).expect("on-shell");
    let detail: Vec<String> = reports.iter().map(|r| format!("n={}: {:.2e}", r.n, r.residual)).collect();
    verdict(
        reports.len() == 2 && reports.iter().all(|r| r.pass),
        format!("residuals {detail:?} (tol {ON_SHELL_TOL:e})"),
    )
}

fn zero_energy() -> Verdict {
    let grid = radsym::cli::zero_energy_grid();
    let a = 1.0;
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let mut problems = Vec::new();
    let mut multiplicities = Vec::new();
    for zeta in [Rational::from_int(1), Rational::new(3, 2), Rational::from_int(2)] {
        let mut per_level = Vec::new();
        let levels: Vec<i64> = (0..=3).collect();
        let (rows, deg) =
            suite::zero_energy_suite(&zeta, a, &levels, &grid, AdmissibleRule::SingleValued, ZERO_ENERGY_TOL)
                .expect("zero-energy");
        for r in &rows {
            count += 1;
            worst = worst.max(r.report.residual);
            let z = zeta.to_f64();
            let b_oracle = z * (2.0 * a).sqrt() / 2.0 * (r.report.n as f64 + 1.0);
            if (r.report.b - b_oracle).abs() > 1e-12 || !r.pass {
                problems.push(format!("zeta={zeta} n={} m={}", r.report.n, r.report.m));
            }
        }
        for d in deg {
            if d.m_values != degenerate_set(&zeta, d.n, AdmissibleRule::SingleValued) {
                problems.push(format!("degenerate set zeta={zeta} n={}", d.n));
            }
            per_level.push(d.multiplicity.to_string());
        }
        multiplicities.push(format!("zeta={zeta}: [{}]", per_level.join(",")));
    }
    verdict(
        problems.is_empty() && count > 0,
        format!(
            "{count} states, worst residual {worst:.2e} (tol {ZERO_ENERGY_TOL:e}), admissible m per level n=0..3 {}",
            multiplicities.join("; ")
        ),
    )
}

fn property_suite() -> Verdict {
    let start = Instant::now();
    let config = Config { cases: common::CASES, failure_persistence: None, ..Config::default() };
    let op = common::operator;
    let mut failures = Vec::new();
    let mut run = |name: &str, result: Result<(), String>| {
        if let Err(e) = result {
            failures.push(format!("{name}: {e}"));
        }
    };
    let eq = |a: &Operator, b: &Operator| {
        if a == b {
            Ok(())
        } else {
            Err(TestCaseError::fail(format!("{a} != {b}")))
        }
    };
    run(
        "ring",
        TestRunner::new(config.clone())
            .run(&(op(), op(), op()), |(a, b, c)| {
                eq(&a.compose(&b).compose(&c), &a.compose(&b.compose(&c)))?;
                eq(&a.compose(&(&b + &c)), &(&a.compose(&b) + &a.compose(&c)))?;
                eq(&(&a + &b).compose(&c), &(&a.compose(&c) + &b.compose(&c)))?;
                eq(&(&a + &b), &(&b + &a))?;
                eq(&a.compose(&Operator::identity()), &a)?;
                eq(&Operator::identity().compose(&a), &a)?;
                eq(&(&a + &(-&a)), &Operator::zero())
            })
            .map_err(|e| e.to_string()),
    );
    run(
        "jacobi",
        TestRunner::new(config.clone())
            .run(&(op(), op(), op()), |(a, b, c)| eq(&common::jacobi_sum(&a, &b, &c), &Operator::zero()))
            .map_err(|e| e.to_string()),
    );
    run(
        "reordering",
        TestRunner::new(config.clone())
            .run(&(op(), op()), |(a, b)| {
                let direct = a.compose(&b).apply_to_monomial(&Poly::param(Param::S), &Poly::param(Param::Kphase));
                if direct == common::act_sequentially(&a, &b) {
                    Ok(())
                } else {
                    Err(TestCaseError::fail(format!("action of {a} after {b} differs")))
                }
            })
            .map_err(|e| e.to_string()),
    );
    run(
        "canonical",
        TestRunner::new(config)
            .run(&(op(), 1i64..=3), |(a, split)| {
                eq(&Operator::from_terms(a.terms().map(|(k, c)| (k.clone(), c.clone()))), &a)?;
                eq(&common::reassembled(&a, split), &a)
            })
            .map_err(|e| e.to_string()),
    );
    let elapsed = start.elapsed();
    verdict(
        failures.is_empty() && within(elapsed, PROPERTY_LIMIT),
        format!(
            "4 laws x {} cases, failures {failures:?}, {:.2?} (limit {:?})",
            common::CASES,
            elapsed,
            PROPERTY_LIMIT
        ),
    )
}

fn main() {
    type Criterion = (&'static str, fn() -> Verdict);
    let criteria: [Criterion; 7] = [
        ("symbolic identities", symbolic_suite),
        ("oscillator spectrum", oscillator_spectrum),
        ("ladder actions", ladder_actions),
        ("factorization eigenvalue", factorization_eigenvalue),
        ("hydrogen on-shell su(2)", on_shell_su2),
        ("zero-energy subspace", zero_energy),
        ("property suite", property_suite),
    ];
    let mut all = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        all &= v.pass;
        println!("criterion {} {name}: {} | {}", i + 1, if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    if !all {
        eprintln!("acceptance criteria failed");
        std::process::exit(1);
    }
}
