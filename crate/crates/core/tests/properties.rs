use proptest::prelude::*;

use ineq_core::means::{arithmetic_mean, geometric_mean, power_mean};
use ineq_core::numerics::rel_close;
use ineq_core::transforms::{backward_reduce, conjugate};
use ineq_core::{
    classify, lookup, ExtendedReal, Params, Point, PrecisionContext, Verdict, WeightedTuple,
};

fn ctx() -> PrecisionContext {
    PrecisionContext::with_bits(128).unwrap()
}

fn log_uniform() -> impl Strategy<Value = f64> {
    (-3.0f64..3.0).prop_map(|e| 10f64.powf(e))
}

fn tuple(max_len: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (2..=max_len).prop_flat_map(|n| {
        (
            prop::collection::vec(log_uniform(), n),
            prop::collection::vec(log_uniform(), n),
        )
    })
}

fn weighted((v, w): &(Vec<f64>, Vec<f64>)) -> WeightedTuple {
    WeightedTuple::from_f64(v, w, &ctx()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn power_means_are_ordered(t in tuple(8), r in -20.0f64..20.0, s in -20.0f64..20.0) {
        prop_assume!((r - s).abs() > 1e-3);
        let c = ctx();
        let t = weighted(&t);
        let (lo, hi) = if r < s { (r, s) } else { (s, r) };
        let ml = power_mean(&ExtendedReal::from_f64(lo, &c), &t, &c).unwrap();
        let mh = power_mean(&ExtendedReal::from_f64(hi, &c), &t, &c).unwrap();
        prop_assert!(ml <= mh.clone() * (1.0 + 1e-30));
        prop_assert!(*t.min() <= ml.clone() * (1.0 + 1e-30) && mh <= t.max().clone() * (1.0 + 1e-30));
    }

    #[test]
    fn power_means_are_homogeneous(t in tuple(6), r in -5.0f64..5.0, lambda in log_uniform()) {
        let c = ctx();
        let a = weighted(&t);
        let b = WeightedTuple::new(a.values().iter().map(|x| c.val(x * lambda)).collect(), a.weights().to_vec()).unwrap();
        let r = ExtendedReal::from_f64(r, &c);
        let ma = c.val(power_mean(&r, &a, &c).unwrap() * lambda);
        let mb = power_mean(&r, &b, &c).unwrap();
        prop_assert!(rel_close(&ma, &mb, 1e-30, 128));
    }

    #[test]
    fn gan_never_violated(t in tuple(10)) {
        let c = ctx();
        let t = weighted(&t);
        let d = lookup("GAN", &Params::from([("n", t.len() as f64)])).unwrap();
        let pt = Point::new(vec![], vec![], vec![t.values().to_vec(), t.weights().to_vec()]);
        prop_assert_ne!(classify(&d, &pt, &c).unwrap().verdict, Verdict::Violated);
    }

    #[test]
    fn backward_reduce_keeps_the_partial_mean(t in tuple(8), m_seed in 0usize..100) {
        let c = ctx();
        let t = weighted(&t);
        prop_assume!(t.len() >= 3);
        let m = 2 + m_seed % (t.len() - 2);
        let b = backward_reduce(&t, m, &c).unwrap();
        let am = arithmetic_mean(&t.prefix(m).unwrap(), &c);
        prop_assert!(rel_close(&arithmetic_mean(&b, &c), &am, 1e-30, 128));
        prop_assert!(geometric_mean(&b, &c).unwrap() <= am.clone() * (1.0 + 1e-30));
        prop_assert_eq!(&b.values()[..m], &t.values()[..m]);
    }

    #[test]
    fn conjugate_is_an_involution(p in prop_oneof![1.0001f64..100.0, -100.0f64..0.9999]) {
        prop_assume!(p.abs() > 1e-4);
        let c = ctx();
        let p = c.from_f64(p);
        let q = conjugate(&p, &c).unwrap();
        prop_assert!(rel_close(&conjugate(&q, &c).unwrap(), &p, 1e-30, 128));
    }

    #[test]
    fn young_holds_for_any_conjugate_pair(x in log_uniform(), y in log_uniform(), p in 1.01f64..50.0) {
        let c = ctx();
        let d = lookup("YOUNG", &Params::new()).unwrap();
        let pt = Point::new(vec![c.from_f64(x), c.from_f64(y)], vec![c.from_f64(p)], vec![]);
        prop_assert_ne!(classify(&d, &pt, &c).unwrap().verdict, Verdict::Violated);
    }

    #[test]
    fn classification_is_stable_under_more_precision(x in log_uniform(), y in log_uniform()) {
        prop_assume!((x / y - 1.0).abs() > 1e-6);
        let d = lookup("GA2E", &Params::new()).unwrap();
        let lo = ctx();
        let hi = PrecisionContext::with_bits(512).unwrap();
        let at = |c: &PrecisionContext| {
            classify(&d, &Point::new(vec![c.from_f64(x), c.from_f64(y)], vec![], vec![]), c).unwrap().verdict
        };
        prop_assert_eq!(at(&lo), at(&hi));
    }
}
