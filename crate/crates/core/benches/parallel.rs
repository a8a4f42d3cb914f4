use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gaussian_core::monomial::{edge_ideal, integral_closure_power_with, product_ideal, Graph};
use gaussian_core::par::{run_jobs, Parallelism};
use gaussian_core::scenario::{run_scenario, Scenario, ScenarioSpec};
use gaussian_core::FieldSpec;

const GF: FieldSpec = FieldSpec::PrimeField(32003);

fn closures(c: &mut Criterion) {
    let mut group = c.benchmark_group("integral_closure");
    group.sample_size(10);
    let cases = [
        ("product-1-1-2 q3", product_ideal(&[1, 1, 2], GF).unwrap(), 3),
        ("cycle5 q3", edge_ideal(&Graph::cycle(5).unwrap(), "x", GF).unwrap(), 3),
    ];
    for (label, ideal, q) in &cases {
        for par in [Parallelism::Sequential, Parallelism::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{par:?}"), label), &par, |b, &par| {
                b.iter(|| integral_closure_power_with(black_box(ideal), *q, par).unwrap())
            });
        }
    }
    group.finish();
}

fn scenarios(c: &mut Criterion) {
    let specs: Vec<ScenarioSpec> = [(1, 1), (1, 2), (2, 2), (1, 3)]
        .into_iter()
        .map(|(m, n)| ScenarioSpec::new(format!("dm-{m}-{n}"), GF, Scenario::DedekindMertens { m, n }))
        .collect();
    let mut group = c.benchmark_group("scenario_batch");
    group.sample_size(10);
    for workers in [1, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(workers), &workers, |b, &w| {
            b.iter(|| {
                let jobs: Vec<_> = specs.iter().map(|s| move || run_scenario(s, Parallelism::Sequential)).collect();
                run_jobs(jobs, Some(w))
            })
        });
    }
    group.finish();
}

criterion_group!(benches, closures, scenarios);
criterion_main!(benches);
