use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use smearlab::gur::gur_batch;
use smearlab::measurement::sample_counts;
use smearlab::parallel::Execution;
use smearlab::phase_space::{convolve_std, Grid};
use smearlab::spin_one::build_one_particle;
use smearlab::su2::{build_sigma, su2_batch};
use smearlab::SmearingParams;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn bench_gur(c: &mut Criterion) {
    let ops = build_one_particle(&SmearingParams::from_delta(0.25).unwrap());
    let mut g = c.benchmark_group("gur_batch_10k");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| gur_batch(&ops, black_box(10_000), 7, 1e-12, exec).unwrap()));
    }
    g.finish();
}

fn bench_su2(c: &mut Criterion) {
    let s = build_sigma(&SmearingParams::from_delta(0.25).unwrap());
    let mut g = c.benchmark_group("su2_batch_10k");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| su2_batch(&s, black_box(10_000), 99, exec)));
    }
    g.finish();
}

fn bench_sampling(c: &mut Criterion) {
    let probs = [0.25, 0.25, 0.125, 0.375];
    let mut g = c.benchmark_group("monte_carlo_1m_shots");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| sample_counts(&probs, black_box(1_000_000), 42, exec)));
    }
    g.finish();
}

fn bench_convolution(c: &mut Criterion) {
    let mut g = c.benchmark_group("convolution_4096");
    g.sample_size(20);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| convolve_std(black_box(1.0), 0.5, Grid::default(), exec).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, bench_gur, bench_su2, bench_sampling, bench_convolution);
criterion_main!(benches);
