use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use jacq::evaluators::{evaluate, Method};

fn bench_methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("j3_term");
    group.sample_size(10);
    for n in [1_000u64, 10_000, 100_000] {
        for method in Method::ALL {
            // linear-time in n with quadratic bit cost; skip the largest index
            if method == Method::Recurrence && n > 10_000 {
                continue;
            }
            group.bench_with_input(BenchmarkId::new(method.as_str(), n), &n, |b, &n| {
                b.iter(|| evaluate(method, black_box(n)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_methods);
criterion_main!(benches);
