//! Sequential vs parallel execution over discriminant and conductor sweeps.
//!
//! Built without the `parallel` feature, both arms run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nestforms::reduction::class_set_with;
use nestforms::sweep::{self, SweepConfig};
use nestforms::Execution;
use std::hint::black_box;

const MODES: [(&str, Execution); 2] =
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn class_sets(c: &mut Criterion) {
    let mut group = c.benchmark_group("class_set");
    for d in [-10_007i128, -1_000_003, -100_000_007] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, d), &d, |b, &d| {
                b.iter(|| class_set_with(black_box(d), exec).unwrap().len())
            });
        }
    }
    group.finish();
}

fn surjectivity(c: &mut Criterion) {
    let mut group = c.benchmark_group("surjectivity");
    group.sample_size(10);
    for dmin in [-200i128, -600] {
        for (name, exec) in MODES {
            let cfg = SweepConfig { dmin, dmax: -3, primes: vec![3, 5, 7], exec };
            group.bench_with_input(BenchmarkId::new(name, dmin), &cfg, |b, cfg| {
                b.iter(|| sweep::surjectivity_check(black_box(cfg)).failures)
            });
        }
    }
    group.finish();
}

fn selftest(c: &mut Criterion) {
    let mut group = c.benchmark_group("selftest");
    group.sample_size(10);
    for (name, exec) in MODES {
        let cfg = SweepConfig { dmin: -200, dmax: -3, primes: vec![3, 5, 7, 11, 13], exec };
        group.bench_function(name, |b| {
            b.iter(|| sweep::selftest(black_box(&cfg)).iter().filter(|r| r.passed()).count())
        });
    }
    group.finish();
}

criterion_group!(benches, class_sets, surjectivity, selftest);
criterion_main!(benches);
