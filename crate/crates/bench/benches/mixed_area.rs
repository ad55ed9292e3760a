use bkk_core::generators::random_convex_polygon;
use bkk_core::{mixed_area_fast, mixed_volume, PointConfiguration, Strategy};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

fn strips(c: &mut Criterion) {
    let mut group = c.benchmark_group("mixed_area_strips");
    group.sample_size(20);
    for n in [1_000usize, 10_000, 40_000] {
        let p = random_convex_polygon(n, 1);
        let q = random_convex_polygon(n, 2);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &(p, q), |b, (p, q)| {
            b.iter(|| mixed_area_fast(black_box(p), black_box(q)).unwrap())
        });
    }
    group.finish();
}

// Small polygons, where all three general methods are usable.
fn methods(c: &mut Criterion) {
    let p = random_convex_polygon(12, 3);
    let q = random_convex_polygon(9, 4);
    let pair: Vec<PointConfiguration> = vec![p, q];
    let mut group = c.benchmark_group("mixed_area_methods");
    for (name, strategy) in [
        ("planar", Strategy::Planar),
        ("ie", Strategy::InclusionExclusion),
        ("cells", Strategy::Cells),
    ] {
        group.bench_function(name, |b| b.iter(|| mixed_volume(black_box(&pair), strategy, 1).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, strips, methods);
criterion_main!(benches);
