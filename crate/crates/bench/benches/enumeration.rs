use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use cupprv::{prv, repthy, schubert, weylcomb, RootSystem, RootType, Weight};

fn systems() -> Vec<RootSystem> {
    [
        (RootType::A, 3),
        (RootType::B, 3),
        (RootType::C, 3),
        (RootType::G, 2),
    ]
    .into_iter()
    .map(|(t, n)| RootSystem::new(t, n).unwrap())
    .collect()
}

fn admissible(c: &mut Criterion) {
    let mut g = c.benchmark_group("admissible_triples");
    for rs in systems() {
        g.bench_function(BenchmarkId::from_parameter(rs.label()), |b| {
            // the table is memoized per group, so each run starts from a fresh system
            b.iter_batched(
                || RootSystem::new(rs.root_type(), rs.rank()).unwrap(),
                |fresh| weylcomb::admissible_triples(&fresh).len(),
                BatchSize::LargeInput,
            )
        });
    }
    g.finish();
}

fn decompose(c: &mut Criterion) {
    let mut g = c.benchmark_group("tensor_decompose");
    for rs in systems() {
        let lam = Weight(vec![2; rs.rank()]);
        let mu = Weight((1..=rs.rank() as i64).collect());
        g.bench_function(BenchmarkId::from_parameter(rs.label()), |b| {
            b.iter(|| repthy::tensor_decompose(&rs, black_box(&lam), black_box(&mu)).unwrap())
        });
    }
    g.finish();
}

fn cohomological(c: &mut Criterion) {
    let mut g = c.benchmark_group("cohomological_components");
    for rs in systems() {
        let lam = Weight(vec![3; rs.rank()]);
        let mu = Weight(vec![1; rs.rank()]);
        g.bench_function(BenchmarkId::from_parameter(rs.label()), |b| {
            b.iter(|| prv::cohomological_components(&rs, black_box(&lam), black_box(&mu)).unwrap())
        });
    }
    g.finish();
}

fn claims(c: &mut Criterion) {
    let mut g = c.benchmark_group("claim_scans");
    g.sample_size(10);
    for n in [3, 4] {
        g.bench_function(BenchmarkId::from_parameter(format!("S{}", n + 1)), |b| {
            b.iter(|| schubert::claim_scans(black_box(n)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, admissible, decompose, cohomological, claims);
criterion_main!(benches);
