use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use treeconn::parity::{parity_forest, ParitySpec};
use treeconn::ratio::int;
use treeconn::*;
use treeconn_bench::{dense, ring};

fn packing(c: &mut Criterion) {
    let mut group = c.benchmark_group("pack_trees");
    for n in [10, 20, 40] {
        let g = dense(n, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| pack_trees(black_box(g), 2).unwrap()));
    }
    group.finish();
}

fn bounded_tree(c: &mut Criterion) {
    let mut group = c.benchmark_group("bounded_spanning_tree");
    for n in [10, 20, 40] {
        let g = ring(n);
        let spec = DegreeSpec::uniform(n, int(2), int(0), 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| bounded_spanning_tree(black_box(g), &spec, ForestMode::Plain).unwrap())
        });
    }
    group.finish();
}

fn parity(c: &mut Criterion) {
    let mut group = c.benchmark_group("parity_forest");
    for n in [10, 20, 40] {
        let g = dense(n, 3);
        let spec = ParitySpec::FParity { f: vec![2; n] };
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| parity_forest(black_box(g), &spec).unwrap()));
    }
    group.finish();
}

fn walks(c: &mut Criterion) {
    let mut group = c.benchmark_group("f_walk");
    for n in [10, 20, 40] {
        let g = ring(n);
        let f = vec![2; n];
        let none = SpanningSubgraph::empty();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| f_walk(black_box(g), &f, &none).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, packing, bounded_tree, parity, walks);
criterion_main!(benches);
