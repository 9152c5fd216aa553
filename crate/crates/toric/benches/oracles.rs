use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use toric::core::{Presentation, RawInstance};
use toric::groebner::reduced_groebner_basis;
use toric::verify::{
    default_oracle_depth, fiber_oracle_parallel, fiber_oracle_sequential, spair_check,
    spair_check_sequential, DivisorStrategy, DEFAULT_ORACLE_BUDGET, DEFAULT_REDUCTION_CAP,
};

fn fixture() -> Presentation {
    let raw = RawInstance {
        d: 2,
        alpha: 12,
        generators: vec![vec![11, 1], vec![9, 3], vec![4, 8], vec![1, 11]],
    };
    Presentation::validate(&raw).unwrap().0
}

fn bench_fiber_oracle(c: &mut Criterion) {
    let pres = fixture();
    let result = reduced_groebner_basis(&pres).unwrap();
    let depth = default_oracle_depth(&result);
    let mut group = c.benchmark_group("fiber_oracle");
    group.bench_with_input(BenchmarkId::new("sequential", depth), &depth, |b, &d| {
        b.iter(|| fiber_oracle_sequential(&pres, &result, d, DEFAULT_ORACLE_BUDGET).unwrap())
    });
    group.bench_with_input(BenchmarkId::new("parallel", depth), &depth, |b, &d| {
        b.iter(|| fiber_oracle_parallel(&pres, &result, d, DEFAULT_ORACLE_BUDGET).unwrap())
    });
    group.finish();
}

fn bench_spair_check(c: &mut Criterion) {
    let pres = fixture();
    let result = reduced_groebner_basis(&pres).unwrap();
    let mut group = c.benchmark_group("spair_check");
    group.bench_function("sequential", |b| {
        b.iter(|| {
            spair_check_sequential(&result, DivisorStrategy::SmallestLead, DEFAULT_REDUCTION_CAP)
                .unwrap()
        })
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            spair_check(&result, DivisorStrategy::SmallestLead, DEFAULT_REDUCTION_CAP).unwrap()
        })
    });
    group.finish();
}

criterion_group!(benches, bench_fiber_oracle, bench_spair_check);
criterion_main!(benches);
