use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, Criterion};
use symsym_bench::{cartan, scrambled_plane_sum};
use symsym_core::catalog;
use symsym_core::decompose;
use symsym_core::rootsys::{chevalley_algebra, CartanType};

fn chevalley(c: &mut Criterion) {
    let mut g = c.benchmark_group("chevalley");
    g.sample_size(10).measurement_time(Duration::from_secs(10));
    for (ty, rank) in [(CartanType::A, 4), (CartanType::D, 5), (CartanType::E, 6)] {
        let m = cartan(ty, rank);
        g.bench_function(format!("build {}", m.name()), |b| {
            b.iter(|| chevalley_algebra(black_box(&m)).unwrap())
        });
    }
    g.finish();
}

fn jacobi(c: &mut Criterion) {
    let mut g = c.benchmark_group("jacobi");
    g.sample_size(10).measurement_time(Duration::from_secs(10));
    for (ty, rank) in [(CartanType::B, 4), (CartanType::E, 6)] {
        let ca = chevalley_algebra(&cartan(ty, rank)).unwrap();
        g.bench_function(format!("check {}", ca.roots().cartan().name()), |b| {
            b.iter(|| black_box(ca.alg()).jacobi_check())
        });
    }
    g.finish();
}

fn decomposition(c: &mut Criterion) {
    let mut g = c.benchmark_group("decompose");
    g.sample_size(20);
    let s = scrambled_plane_sum(1, -1, 3);
    g.bench_function("scrambled plane sum", |b| b.iter(|| decompose(black_box(&s)).unwrap()));
    g.finish();
}

fn catalogue(c: &mut Criterion) {
    let mut g = c.benchmark_group("catalog");
    g.sample_size(10);
    g.bench_function("full sweep", |b| b.iter(|| catalog::verify_all(usize::MAX)));
    g.finish();
}

criterion_group!(benches, chevalley, jacobi, decomposition, catalogue);
criterion_main!(benches);
