use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use lrpos::{decompose_tensor_with, sweep, Execution, Partition, SweepConfig, DEFAULT_BUDGET};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, execution) in MODES {
        let mut config = SweepConfig::new(3, 3, vec![2]);
        config.execution = execution;
        group.bench_with_input(BenchmarkId::new(name, "size3_rank3"), &config, |b, cfg| {
            b.iter(|| black_box(sweep(cfg)))
        });
    }
    group.finish();
}

fn bench_decompose(c: &mut Criterion) {
    let alpha = Partition::from_u64s(&[4, 3, 2, 1]).unwrap();
    let beta = Partition::from_u64s(&[3, 2, 1]).unwrap();
    let mut group = c.benchmark_group("decompose");
    group.sample_size(10);
    for (name, execution) in MODES {
        group.bench_function(BenchmarkId::new(name, "4321x321_rank5"), |b| {
            b.iter(|| {
                black_box(
                    decompose_tensor_with(&alpha, &beta, 5, DEFAULT_BUDGET, execution).unwrap(),
                )
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweep, bench_decompose);
criterion_main!(benches);
