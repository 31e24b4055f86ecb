use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ineq_core::{classify, lookup, lookup_witness, verify_witness, Params, PrecisionContext};

fn classify_entries(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for bits in [128u32, 512] {
        let ctx = PrecisionContext::with_bits(bits).unwrap();
        for name in ["GA2E", "HOLDER", "BERNOULLI_FULL", "POWERMEAN"] {
            let d = lookup(name, &Params::from([("n", 8.0)]))
                .or_else(|_| lookup(name, &Params::new()))
                .unwrap();
            let pt = d.near_equality_point(1, 1e-3, &ctx).unwrap();
            group.bench_with_input(BenchmarkId::new(name, bits), &pt, |b, pt| {
                b.iter(|| classify(black_box(&d), black_box(pt), &ctx).unwrap())
            });
        }
    }
    group.finish();
}

fn witnesses(c: &mut Criterion) {
    let ctx = PrecisionContext::default();
    let mut group = c.benchmark_group("verify_witness");
    group.sample_size(10);
    for name in ["W_REFLECT", "W_DOUBLE", "W_HOLDER_MINK"] {
        let w = lookup_witness(name).unwrap();
        group.bench_function(name, |b| {
            b.iter(|| verify_witness(&w, 100, black_box(7), &ctx))
        });
    }
    group.finish();
}

criterion_group!(benches, classify_entries, witnesses);
criterion_main!(benches);
