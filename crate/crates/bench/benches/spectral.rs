use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rectimax_bench::{dense_matrix, rng};
use rectimax_core::tropical::{eigenbasis, eigenvalue, min_quadratic_form};

fn spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral");
    for n in [3, 5, 8, 12] {
        let a = dense_matrix(&mut rng(n as u64), n);
        group.bench_with_input(BenchmarkId::new("eigenvalue", n), &a, |b, a| {
            b.iter(|| eigenvalue(black_box(a)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("eigenbasis", n), &a, |b, a| {
            b.iter(|| eigenbasis(black_box(a)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("min_quadratic_form", n), &a, |b, a| {
            b.iter(|| min_quadratic_form(black_box(a), 0.5).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, spectral);
criterion_main!(benches);
