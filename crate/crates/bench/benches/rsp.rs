use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use rsp_bench::{graphs, oracle_graphs, relation_input};
use rsp_core::{algorithm1, check_rsp, check_well_behaved, enumerate_squares, oracle_finest, verify_finest};

fn squares(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_squares");
    for (name, g) in graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| enumerate_squares(black_box(g)))
        });
    }
    group.finish();
}

fn algorithm(c: &mut Criterion) {
    let mut group = c.benchmark_group("algorithm1");
    for (name, g) in graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| algorithm1(black_box(g), None).unwrap())
        });
    }
    group.finish();
}

fn checks(c: &mut Criterion) {
    let (g, r) = relation_input();
    c.bench_function("check_rsp/km9", |b| b.iter(|| check_rsp(black_box(&g), black_box(&r)).unwrap()));
    c.bench_function("check_well_behaved/km9", |b| {
        b.iter(|| check_well_behaved(black_box(&g), black_box(&r)).unwrap())
    });
    c.bench_function("verify_finest/km9", |b| b.iter(|| verify_finest(black_box(&g), black_box(&r)).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_finest");
    group.sample_size(10);
    for (name, g) in oracle_graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| oracle_finest(black_box(g), 12).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, squares, algorithm, checks, oracle);
criterion_main!(benches);
