use std::hint::black_box;

use aalpha_bench::{dense, graph, omega_matrix, SIZES};
use aalpha_core::eig::{eigenvalues, oracle_eigenvalues, DEFAULT_TOL};
use aalpha_core::verify::{randomized_suite, SweepConfig};
use aalpha_core::{random_mixed_graph, verify_all, Alpha, Beta};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn solvers(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigensolver");
    for n in SIZES {
        let m = dense(n);
        group.bench_with_input(BenchmarkId::new("jacobi", n), &m, |b, m| {
            b.iter(|| eigenvalues(black_box(m), DEFAULT_TOL).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("embedding_ql", n), &m, |b, m| {
            b.iter(|| oracle_eigenvalues(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn a_alpha(c: &mut Criterion) {
    let mut group = c.benchmark_group("a_alpha");
    for n in SIZES {
        let m = omega_matrix(n, 0.5);
        group.bench_with_input(BenchmarkId::new("jacobi", n), &m, |b, m| {
            b.iter(|| eigenvalues(black_box(m), DEFAULT_TOL).unwrap())
        });
    }
    group.finish();
}

fn reports(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_all");
    let alpha = Alpha::new(0.5).unwrap();
    for n in [4, 8, 12] {
        let g = graph(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| verify_all(black_box(g), alpha, Beta::omega()).unwrap())
        });
    }
    group.finish();
}

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("random_mixed_graph");
    for n in [10, 100, 1000] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| random_mixed_graph(n, 0.3, 0.5, black_box(1)).unwrap())
        });
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let cfg = SweepConfig {
        trials: 200,
        ..SweepConfig::default()
    };
    c.bench_function("randomized_suite_200", |b| {
        b.iter(|| randomized_suite(black_box(&cfg)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = solvers, a_alpha, reports, generation, suite
}
criterion_main!(benches);
