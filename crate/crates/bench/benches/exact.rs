use bkk_core::generators::random_configuration;
use bkk_core::{hermite_factorization, normalized_volume, IntegerMatrix};
use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn hnf(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut group = c.benchmark_group("hermite");
    for n in [4usize, 8, 16] {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-50..=50)).collect()).collect();
        let m = IntegerMatrix::from_rows(&rows);
        group.bench_function(format!("{n}x{n}"), |b| b.iter(|| hermite_factorization(black_box(&m))));
    }
    group.finish();
}

fn volume(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut group = c.benchmark_group("normalized_volume");
    group.sample_size(20);
    for dim in [2usize, 3, 4] {
        let a = random_configuration(&mut rng, dim, 12, 8);
        group.bench_function(format!("dim{dim}"), |b| b.iter(|| normalized_volume(black_box(&a)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, hnf, volume);
criterion_main!(benches);
