use criterion::{criterion_group, criterion_main, Criterion};

use jacq::harness::{verify_with, Execution, VerifyConfig};

fn bench_verify(c: &mut Criterion) {
    let config = VerifyConfig::suite(0, 30);
    let mut group = c.benchmark_group("verify_suite_0_30");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| verify_with(&config, Execution::Sequential))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| verify_with(&config, Execution::Parallel))
    });
    group.finish();
}

criterion_group!(benches, bench_verify);
criterion_main!(benches);
