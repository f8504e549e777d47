use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use roi_forge_core::sweep::range;
use roi_forge_core::{baseline, evaluate, sweep, Execution};

fn single_evaluation(c: &mut Criterion) {
    let s = baseline();
    c.bench_function("evaluate_baseline", |b| b.iter(|| evaluate(black_box(&s)).unwrap()));
}

fn growth_sweep(c: &mut Criterion) {
    let s = baseline();
    let mut group = c.benchmark_group("growth_sweep");
    for points in [16usize, 128] {
        let step = format!("{}", 0.5 / points as f64);
        let values = range("0".parse().unwrap(), "0.5".parse().unwrap(), step.parse().unwrap()).unwrap();
        for (name, execution) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(name, values.len()), &values, |b, v| {
                b.iter(|| sweep(&s, "enrollment.growth", black_box(v), execution).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, single_evaluation, growth_sweep);
criterion_main!(benches);
