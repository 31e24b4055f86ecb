use super::*;
use crate::catalog::Mutation;
use crate::means::{PopoviciuConvention, WeightedTuple};

fn ctx() -> PrecisionContext {
    PrecisionContext::with_bits(128).unwrap()
}

fn config(samples: usize) -> SuiteConfig {
    SuiteConfig {
        samples_per_entry: samples,
        ..SuiteConfig::default()
    }
}

#[test]
fn samples_lie_in_validity() {
    let c = ctx();
    let d = lookup("GA2E", &Params::new()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let p = sample_point(&d, &mut rng, 0.2, &c).unwrap();
        assert!(*p.var(0) > 0 && *p.var(1) > 0);
    }
    let b1 = lookup("BERNOULLI_B1", &Params::new()).unwrap();
    for _ in 0..200 {
        let p = sample_point(&b1, &mut rng, 0.2, &c).unwrap();
        assert!(*p.param(0) >= 0 && *p.param(0) <= 1);
    }
}

#[test]
fn sampling_is_deterministic() {
    let c = ctx();
    let d = lookup("HOLDER", &Params::new()).unwrap();
    let draw = || {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        (0..20)
            .map(|_| sample_point(&d, &mut rng, 0.3, &c).unwrap())
            .collect::<Vec<_>>()
    };
    assert_eq!(draw(), draw());
}

#[test]
fn gane_has_no_violations() {
    let d = lookup("GANE", &Params::from([("n", 5.0)])).unwrap();
    let r = run_inequality_check(&d, &config(2000)).unwrap();
    assert_eq!(r.counts.violated, 0);
    assert_eq!(r.counts.total(), 2000);
}

#[test]
fn injected_equality_points_classify_equality() {
    let c = ctx();
    let d = lookup("GA2E", &Params::new()).unwrap();
    for seed in 0..20 {
        let p = d.equality_point(seed, &c).unwrap();
        assert_eq!(classify(&d, &p, &c).unwrap().verdict, Verdict::Equality);
    }
}

#[test]
fn popoviciu_inverse_exponent_is_refuted() {
    let d = lookup("POPOVICIU", &Params::from([("conv", 1.0)])).unwrap();
    let r = run_inequality_check(&d, &config(1000)).unwrap();
    assert!(r.counts.violated >= 1, "{:?}", r.counts);
    assert!(!r.counterexamples.is_empty());
    let ok = lookup("POPOVICIU", &Params::from([("conv", 0.0)])).unwrap();
    assert_eq!(
        run_inequality_check(&ok, &config(1000))
            .unwrap()
            .counts
            .violated,
        0
    );
}

#[test]
fn search_finds_flipped_holder() {
    let c = ctx();
    let d = lookup("HOLDER", &Params::new()).unwrap().flipped();
    assert!(search_violation(&d, 1000, 1, &c).is_some());
}

#[test]
fn search_finds_reversed_bernoulli_inside_unit_interval() {
    let c = ctx();
    let d = lookup("BERNOULLI_B1", &Params::new()).unwrap().flipped();
    let (pt, margin) = search_violation(&d, 1000, 2, &c).unwrap();
    assert!(margin < 0);
    assert!(*pt.param(0) > 0 && *pt.param(0) < 1 || *pt.var(0) != 0);
}

#[test]
fn search_respects_theorem() {
    let c = ctx();
    let d = lookup("GAN", &Params::from([("n", 4.0)])).unwrap();
    assert!(search_violation(&d, 4000, 7, &c).is_none());
}

#[test]
fn greedy_descent_reaches_a_biased_formula() {
    // A tiny bias only shows up close to E; random draws alone rarely get there.
    let c = ctx();
    let d = lookup("GA2E", &Params::new())
        .unwrap()
        .mutated(Mutation::Bias(1e-4));
    assert!(search_violation(&d, 2000, 5, &c).is_some());
}

#[test]
fn limits_of_a_constant_tuple() {
    let c = ctx();
    let t = WeightedTuple::from_f64(&[3.0, 3.0, 3.0], &[1.0, 2.0, 0.5], &c).unwrap();
    let r = check_power_mean_limits(&t, 1e-20, &c).unwrap();
    assert!(r.grid.iter().all(|(_, v)| v.parse::<f64>().unwrap() == 3.0));
    assert!(r.passed && r.within_tolerance);
}

#[test]
fn limit_gap_at_r_1e4_matches_first_order_rate() {
    // 9 (1/2)^(1/r) is the leading term; the relative gap is ln 2 / 10^4.
    let c = ctx();
    let t = WeightedTuple::from_f64(&[4.0, 9.0], &[1.0, 1.0], &c).unwrap();
    let r = check_power_mean_limits(&t, 1e-4, &c).unwrap();
    let expected = 1.0 - 0.5f64.powf(1e-4);
    assert!((r.max_error - expected).abs() < 1e-12, "{}", r.max_error);
    assert!(r.max_error > 1e-6);
    assert!(r.passed && r.monotone);
}

#[test]
fn monotonicity_of_f_and_g() {
    let c = ctx();
    let grid = monotonicity_grid(1.0, &c);
    let f = check_function_monotonicity(FunctionFamily::F, &c.one(), &grid, &c).unwrap();
    assert!(f.passed, "{f:?}");
    assert!(f.tail.1 < 1e-5);
    let g = check_function_monotonicity(FunctionFamily::G, &c.one(), &grid, &c).unwrap();
    assert!(g.passed, "{g:?}");
    let z = check_function_monotonicity(
        FunctionFamily::F,
        &c.zero(),
        &monotonicity_grid(0.0, &c),
        &c,
    )
    .unwrap();
    assert!(z.passed, "{z:?}");
}

#[test]
fn grid_outside_domain_is_rejected() {
    let c = ctx();
    let grid = vec![c.from_f64(-0.5), c.from_f64(2.0)];
    assert!(matches!(
        check_function_monotonicity(FunctionFamily::F, &c.one(), &grid, &c),
        Err(Error::GridOutsideDomain(_))
    ));
}

#[test]
fn chains() {
    let c = ctx();
    assert!(rado_chain(200, 1, &c).passed);
    assert!(popoviciu_chain(200, 1, &c).passed);
    let t = WeightedTuple::from_f64(&[1.0, 4.0, 2.0], &[1.0, 1.0, 1.0], &c).unwrap();
    assert!(popoviciu_nondecreasing(&t, PopoviciuConvention::ExponentWk, &c).unwrap());
}

#[test]
fn mutated_entry_reports_violations() {
    let spec = EntrySpec {
        mutation: Some(Mutation::SwapSides),
        ..EntrySpec::new("GA2E")
    };
    let r = run_inequality_check(&spec.resolve().unwrap(), &config(200)).unwrap();
    assert!(r.counts.violated > 100);
}

#[test]
fn small_suite_passes_and_is_deterministic() {
    let cfg = SuiteConfig {
        samples_per_entry: 50,
        witness_samples: 20,
        limit_tuples: 10,
        chain_trials: 20,
        seed: 42,
        ..SuiteConfig::default()
    };
    let a = run_suite(&cfg).unwrap();
    assert!(
        a.passed(),
        "violations {} witness failures {}",
        a.violations(),
        a.witness_failures()
    );
    let b = run_suite(&cfg).unwrap();
    assert_eq!(
        SuiteReport {
            wall_time: 0.0,
            ..a
        },
        SuiteReport {
            wall_time: 0.0,
            ..b
        }
    );
}

#[test]
fn config_is_validated() {
    assert!(SuiteConfig {
        samples_per_entry: 0,
        ..SuiteConfig::default()
    }
    .validate()
    .is_err());
    assert!(SuiteConfig {
        boundary_fraction: 1.5,
        ..SuiteConfig::default()
    }
    .validate()
    .is_err());
}
