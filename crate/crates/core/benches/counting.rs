//! Single-thread against full-pool timings of the data-parallel kernels.
//!
//! Built with `--no-default-features` only the sequential path is measured.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use forestry::algebra::closed_walk_counts;
use forestry::count::{count_forests_oracle, count_score_vectors};
use forestry::graph::{named_graph, MultiGraph};
use forestry::lab::suites::{bounds_suite, default_corpus, sandwich_suite};
use forestry::Budget;

/// Circulant graph on `n` vertices with jumps 1 and 2.
fn circulant(n: usize) -> MultiGraph {
    MultiGraph::from_edges(n, (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)])).expect("in range")
}

type Kernel = Box<dyn Fn() + Send + Sync>;

fn kernels() -> Vec<(&'static str, Kernel)> {
    let dense = circulant(11);
    let small = circulant(8);
    let tc = named_graph("tutte_coxeter").expect("registry");
    let corpus = default_corpus();
    let budget = Budget::default();
    let b2 = budget.clone();
    let b3 = budget.clone();
    let b4 = budget.clone();
    let corpus2 = corpus.clone();
    vec![
        ("oracle_forests_m22", Box::new(move || {
            black_box(count_forests_oracle(&dense, &budget).expect("fits"));
        })),
        ("score_vectors_m16", Box::new(move || {
            black_box(count_score_vectors(&small, &b2).expect("fits"));
        })),
        ("closed_walks_tutte_coxeter", Box::new(move || {
            black_box(closed_walk_counts(&tc, 40));
        })),
        ("sandwich_suite", Box::new(move || {
            black_box(sandwich_suite(&corpus, &b3));
        })),
        ("bounds_suite", Box::new(move || {
            black_box(bounds_suite(&corpus2, &b4));
        })),
    ]
}

#[cfg(feature = "parallel")]
fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let all = rayon::current_num_threads();
    let mut sizes = vec![1, all];
    sizes.dedup();
    sizes
        .into_iter()
        .map(|t| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().expect("thread pool");
            (format!("rayon_{t}"), pool)
        })
        .collect()
}

#[cfg(feature = "parallel")]
fn bench(c: &mut Criterion) {
    let pools = pools();
    for (name, kernel) in kernels() {
        let mut group = c.benchmark_group(name);
        for (label, pool) in &pools {
            group.bench_function(BenchmarkId::from_parameter(label), |b| b.iter(|| pool.install(&kernel)));
        }
        group.finish();
    }
}

#[cfg(not(feature = "parallel"))]
fn bench(c: &mut Criterion) {
    for (name, kernel) in kernels() {
        let mut group = c.benchmark_group(name);
        group.bench_function(BenchmarkId::from_parameter("sequential"), |b| b.iter(&kernel));
        group.finish();
    }
}

fn config() -> Criterion {
    Criterion::default().sample_size(10).measurement_time(Duration::from_secs(5))
}

criterion_group! {
    name = benches;
    config = config();
    targets = bench
}
criterion_main!(benches);
