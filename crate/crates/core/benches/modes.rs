//! Benchmarks for the element-loop kernels and the corpus verification
//! sweep, labeled by the active execution mode so that a `--no-default-features`
//! run (sequential) can be compared against the default (parallel) run in
//! the same criterion history. An inline single-threaded loop rides along as
//! a fixed baseline in both modes.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use ordsum_core::{arith, catalog, detect, psi, PrimeSet};

const MODE: &str = if cfg!(feature = "parallel") {
    "parallel"
} else {
    "sequential"
};

fn opts() -> catalog::BuildOptions {
    catalog::BuildOptions::default()
}

fn bench_psi_pi(c: &mut Criterion) {
    let big = catalog::cyclic(2520, &opts()).unwrap();
    big.orders();
    let preset = catalog::preset("smallgroup_72_3", &opts()).unwrap();
    preset.orders();
    let pi: PrimeSet = [2u64, 3].into_iter().collect();

    let mut group = c.benchmark_group(format!("psi_pi/{MODE}"));
    group.bench_function("library/c2520", |b| {
        b.iter(|| psi::psi_pi(black_box(&big), &pi).unwrap())
    });
    group.bench_function("library/preset72", |b| {
        b.iter(|| psi::psi_pi(black_box(&preset), &pi).unwrap())
    });
    // Hand-rolled single-threaded loop over the same public API: the
    // yardstick the library path is measured against in either mode.
    group.bench_function("inline_sequential/c2520", |b| {
        let n = big.order() as u64;
        let m = n / arith::pi_part(n, &pi).unwrap();
        b.iter(|| {
            let mut acc = 0u64;
            for x in 0..big.order() {
                acc += big.element_order(big.power(x, m));
            }
            black_box(acc)
        })
    });
    group.finish();
}

fn bench_orders_fill(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("orders_fill/{MODE}"));
    group.sample_size(10);
    group.bench_function("c2520", |b| {
        b.iter_batched(
            || catalog::cyclic(2520, &opts()).unwrap(),
            |g| {
                g.orders();
                black_box(g.element_order(1))
            },
            BatchSize::LargeInput,
        )
    });
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let corpus = catalog::default_corpus().unwrap();
    for g in corpus.groups() {
        g.orders(); // warm the per-group caches so runs are comparable
    }
    let mut group = c.benchmark_group(format!("verify/{MODE}"));
    group.sample_size(10);
    group.bench_function("default_corpus_subsets", |b| {
        b.iter(|| {
            detect::verify_main_theorem(black_box(&corpus), detect::PiPolicy::AllSubsets)
                .unwrap()
                .passed
        })
    });
    group.finish();
}

criterion_group!(benches, bench_psi_pi, bench_orders_fill, bench_verify);
criterion_main!(benches);
