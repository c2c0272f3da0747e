use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use gaussphi::{phi, preimage_enumerate, GaussianInt, Oracle};

fn bench_phi(c: &mut Criterion) {
    let points: Vec<GaussianInt> = (-32..=32)
        .flat_map(|y| (-32..=32).map(move |x| GaussianInt::new(x, y)))
        .filter(|z| !z.is_zero())
        .collect();

    c.bench_function("phi/box32", |b| {
        b.iter(|| points.iter().map(|&z| phi(black_box(z)).unwrap()).sum::<u32>())
    });

    c.bench_function("phi_oracle/box32_cold", |b| {
        b.iter(|| {
            let mut oracle = Oracle::new();
            points.iter().map(|&z| oracle.phi(black_box(z)).unwrap()).sum::<u32>()
        })
    });
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("preimage_enumerate");
    for n in [6u32, 10, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| preimage_enumerate(n).unwrap().count())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_phi, bench_enumerate);
criterion_main!(benches);
