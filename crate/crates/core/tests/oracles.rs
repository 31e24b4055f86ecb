//! Reference values computed independently with mpmath at 50 digits.

use ineq_core::means::{arithmetic_mean, geometric_mean, harmonic_mean, power_mean, rado_gap};
use ineq_core::numerics::rel_close;
use ineq_core::{
    classify, lookup, ExtendedReal, Params, Point, PrecisionContext, Scalar, Verdict, WeightedTuple,
};

fn ctx() -> PrecisionContext {
    PrecisionContext::with_bits(128).unwrap()
}

fn assert_matches(got: &Scalar, expected: &str) {
    let c = ctx();
    let e = c.parse(expected).unwrap();
    assert!(
        rel_close(got, &e, 1e-30, 256),
        "got {got}, expected {expected}"
    );
}

fn tuple_123() -> WeightedTuple {
    WeightedTuple::from_f64(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0], &ctx()).unwrap()
}

#[test]
fn weighted_means_of_1_2_3() {
    let c = ctx();
    let t = tuple_123();
    let r = |v: f64| ExtendedReal::from_f64(v, &c);
    assert_matches(
        &power_mean(&r(3.0), &t, &c).unwrap(),
        "2.5372208703400816780234017174421248455567412208882",
    );
    assert_matches(
        &power_mean(&r(0.5), &t, &c).unwrap(),
        "2.2623065557862161426316344956206867560979691331181",
    );
    assert_matches(&power_mean(&r(-1.0), &t, &c).unwrap(), "2.0");
    assert_matches(&harmonic_mean(&t, &c).unwrap(), "2.0");
    assert_matches(
        &geometric_mean(&t, &c).unwrap(),
        "2.1822472719434428071201452283796177626517466774806",
    );
    assert_matches(
        &arithmetic_mean(&t, &c),
        "2.3333333333333333333333333333333333333333333333333",
    );
}

#[test]
fn rado_gap_of_1_4_7() {
    let c = ctx();
    let t = WeightedTuple::from_f64(&[1.0, 4.0, 7.0], &[1.0, 1.0, 1.0], &c).unwrap();
    assert_matches(&rado_gap(&t, 2, &c).unwrap(), "1.0");
    assert_matches(
        &rado_gap(&t, 3, &c).unwrap(),
        "2.8902330843730124417375712644829910932556380682557",
    );
}

#[test]
fn young_at_2_3_with_p_3() {
    let c = ctx();
    let d = lookup("YOUNG", &Params::new()).unwrap();
    let pt = Point::new(
        vec![c.from_f64(2.0), c.from_f64(3.0)],
        vec![c.from_f64(3.0)],
        vec![],
    );
    let r = classify(&d, &pt, &c).unwrap();
    assert_eq!(r.verdict, Verdict::StrictlyHolds);
    assert_matches(&r.lhs, "6");
    assert_matches(
        &r.rhs,
        "6.1307682818044212537215593496784114005522771742874",
    );
}

#[test]
fn bernoulli_inside_unit_interval() {
    let c = ctx();
    let d = lookup("BERNOULLI_B1", &Params::new()).unwrap();
    let pt = Point::new(
        vec![c.parse("0.5").unwrap()],
        vec![c.parse("0.3").unwrap()],
        vec![],
    );
    let r = classify(&d, &pt, &c).unwrap();
    assert_eq!(r.verdict, Verdict::StrictlyHolds);
    assert_matches(
        &r.lhs,
        "1.1293469354568554514462957951343802684357036576426",
    );
    assert_matches(&r.rhs, "1.15");
}

#[test]
fn holder_with_p_3() {
    let c = ctx();
    let d = lookup("HOLDER", &Params::new()).unwrap();
    let pt = Point::new(
        vec![],
        vec![c.from_f64(3.0)],
        vec![
            vec![c.from_f64(1.0), c.from_f64(2.0)],
            vec![c.from_f64(3.0), c.from_f64(1.0)],
        ],
    );
    let r = classify(&d, &pt, &c).unwrap();
    assert_eq!(r.verdict, Verdict::StrictlyHolds);
    assert_matches(&r.lhs, "5");
    assert_matches(
        &r.rhs,
        "7.0171737743840353215381901113534683790639519371018",
    );
}

#[test]
fn ga2e_hand_example() {
    // sqrt(4 * 9) = 6 against 6.5.
    let c = ctx();
    let d = lookup("GA2E", &Params::new()).unwrap();
    let pt = Point::new(vec![c.from_f64(4.0), c.from_f64(9.0)], vec![], vec![]);
    let r = classify(&d, &pt, &c).unwrap();
    assert_eq!(r.verdict, Verdict::StrictlyHolds);
    assert_matches(&r.margin, "0.5");
}
