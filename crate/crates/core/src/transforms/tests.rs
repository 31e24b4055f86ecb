use super::*;

fn ctx() -> PrecisionContext {
    PrecisionContext::with_bits(128).unwrap()
}

fn s(c: &PrecisionContext, v: f64) -> Scalar {
    c.from_f64(v)
}

#[test]
fn reflect_maps_one_half() {
    let c = ctx();
    let w = lookup_witness("W_REFLECT").unwrap();
    let pt = Point::new(vec![s(&c, 1.0)], vec![s(&c, 0.5)], vec![]);
    let img = apply_witness(&w, &pt, MapDirection::Forward, &c).unwrap();
    let q = img.point().unwrap();
    assert_eq!(q.var(0).to_f64(), -0.5);
    assert_eq!(q.param(0).to_f64(), 0.5);
}

#[test]
fn young_at_one_half_gives_conjugate_two() {
    let c = ctx();
    let w = lookup_witness("W_YOUNG").unwrap();
    let pt = Point::new(vec![s(&c, 4.0), s(&c, 9.0)], vec![s(&c, 0.5)], vec![]);
    let img = apply_witness(&w, &pt, MapDirection::Forward, &c).unwrap();
    let q = img.point().unwrap();
    assert_eq!(q.param(0).to_f64(), 2.0);
    assert_eq!(q.var(0).to_f64(), 2.0);
    assert_eq!(q.var(1).to_f64(), 3.0);
}

#[test]
fn normalize_divides_by_geometric_mean() {
    let c = ctx();
    let w = lookup_witness("W_NORMALIZE").unwrap();
    let pt = Point::new(vec![], vec![], vec![vec![s(&c, 2.0), s(&c, 0.5)]]);
    let img = apply_witness(&w, &pt, MapDirection::Forward, &c).unwrap();
    let q = img.point().unwrap();
    assert_eq!(q.tuple(0)[0].to_f64(), 2.0);
    assert_eq!(q.tuple(0)[1].to_f64(), 0.5);
}

#[test]
fn outside_validity_is_rejected() {
    let c = ctx();
    let w = lookup_witness("W_RECIP").unwrap();
    let pt = Point::new(vec![s(&c, -0.5)], vec![s(&c, 0.5)], vec![]);
    assert!(matches!(
        apply_witness(&w, &pt, MapDirection::Forward, &c),
        Err(Error::OutsideValidity)
    ));
}

#[test]
fn one_way_witness_has_no_backward() {
    let c = ctx();
    let w = lookup_witness("W_LIAPUNOV_MAP").unwrap();
    let pt = Point::new(vec![], vec![s(&c, 2.0)], vec![vec![s(&c, 1.0); 2]; 3]);
    assert!(matches!(
        apply_witness(&w, &pt, MapDirection::Backward, &c),
        Err(Error::UnsupportedDirection(_))
    ));
}

#[test]
fn backward_reduce_fills_with_mean() {
    let c = ctx();
    let t = WeightedTuple::from_f64(&[1.0, 4.0, 7.0], &[1.0, 1.0, 1.0], &c).unwrap();
    let r = backward_reduce(&t, 2, &c).unwrap();
    let v: Vec<f64> = r.values().iter().map(|x| x.to_f64()).collect();
    assert_eq!(v, vec![1.0, 4.0, 2.5]);

    let k = WeightedTuple::from_f64(&[3.0; 4], &[0.5, 1.0, 2.0, 1.0], &c).unwrap();
    assert_eq!(backward_reduce(&k, 3, &c).unwrap(), k);

    assert!(matches!(
        backward_reduce(&t, 3, &c),
        Err(Error::BadIndex { m: 3, n: 3 })
    ));
    assert!(matches!(
        backward_reduce(&t, 1, &c),
        Err(Error::BadIndex { .. })
    ));
}

#[test]
fn conjugate_is_an_involution() {
    let c = ctx();
    for p in [2.0, 3.0, 0.5, -1.5, 1.25] {
        let q = conjugate(&s(&c, p), &c).unwrap();
        let back = conjugate(&q, &c).unwrap();
        assert!(rel_close(&back, &s(&c, p), 1e-30, c.prec()), "{p}");
    }
    assert!(conjugate(&s(&c, 1.0), &c).is_err());
}

#[test]
fn liapunov_holder_data() {
    let c = ctx();
    let x = vec![s(&c, 2.0), s(&c, 3.0)];
    let w = vec![s(&c, 1.0), s(&c, 1.0)];
    let (p, a, b) = liapunov_to_holder(&s(&c, 2.0), &s(&c, 1.0), &s(&c, 0.0), &x, &w, &c).unwrap();
    assert_eq!(p.to_f64(), 2.0);
    assert!(a.iter().all(|v| v.to_f64() == 1.0));
    assert_eq!(
        b.iter().map(|v| v.to_f64()).collect::<Vec<_>>(),
        vec![2.0, 3.0]
    );
    assert!(matches!(
        liapunov_to_holder(&s(&c, 2.0), &s(&c, 2.0), &s(&c, 0.0), &x, &w, &c),
        Err(Error::DegenerateExponents)
    ));
}

#[test]
fn every_witness_verifies() {
    let c = ctx();
    for w in list_witnesses() {
        let r = verify_witness(&w, 200, 7, &c);
        assert!(r.passed(), "{}: {:#?}", w.name(), r.failures.first());
        assert!(
            r.skipped < r.samples / 4,
            "{}: skipped {}",
            w.name(),
            r.skipped
        );
    }
}

#[test]
fn corrupted_witnesses_fail() {
    let c = ctx();
    for w in list_witnesses() {
        let r = verify_witness(&w.corrupted(0.1), 100, 11, &c);
        assert!(!r.passed(), "{} survived corruption", w.name());
    }
}

#[test]
fn pinned_params_are_checked() {
    let w = lookup_witness("W_BACKWARD").unwrap();
    assert!(w.with_params(&[4.0, 4.0]).is_err());
    assert!(w.with_params(&[4.0]).is_err());
    assert_eq!(w.with_params(&[5.0, 3.0]).unwrap().params(), vec![5.0, 3.0]);
}

#[test]
#[ignore]
fn stress_report() {
    let c = ctx();
    for seed in 1u64..=10 {
        for w in list_witnesses() {
            let r = verify_witness(&w, 1000, seed, &c);
            println!(
                "{seed} {:24} skipped {:4} failures {}",
                w.name(),
                r.skipped,
                r.failures.len()
            );
            if let Some(f) = r.failures.first() {
                println!("   {f:?}");
            }
        }
    }
}
