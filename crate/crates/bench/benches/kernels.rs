use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jetframe::{
    invariant_derivative, invariant_table, Direction, FrameKind, MultiIndex, Solution,
    TruncatedSeries, Var,
};
use jetframe_bench::{sample_element, soliton_jet};

fn series_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("ts_mul");
    for order in [4usize, 8, 12] {
        let a = (&TruncatedSeries::variable(order, Var::T, 0.3)
            + &TruncatedSeries::variable(order, Var::X, -0.2))
            .exp();
        let b = TruncatedSeries::variable(order, Var::X, 1.5)
            .recip()
            .unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(order), &order, |bench, _| {
            bench.iter(|| black_box(&a) * black_box(&b))
        });
    }
    group.finish();
}

fn prolongation(c: &mut Criterion) {
    let g = sample_element();
    let mut group = c.benchmark_group("prolong_act");
    for order in [3usize, 6, 12] {
        let jet = soliton_jet(order);
        group.bench_with_input(BenchmarkId::from_parameter(order), &order, |bench, _| {
            bench.iter(|| g.prolong(black_box(&jet)))
        });
    }
    group.finish();
}

fn tables(c: &mut Criterion) {
    let jet = soliton_jet(6);
    for kind in FrameKind::ALL {
        c.bench_function(&format!("invariant_table/{kind}/6"), |bench| {
            bench.iter(|| invariant_table(black_box(&jet), kind, 6).unwrap())
        });
    }
}

fn invariant_differentiation(c: &mut Criterion) {
    let s = Solution::soliton(1.2, 0.3);
    c.bench_function("invariant_derivative/x-normalized/(1,2)", |bench| {
        bench.iter(|| {
            invariant_derivative(
                &s,
                black_box(0.4),
                black_box(1.9),
                MultiIndex::new(1, 2),
                Direction::T,
                FrameKind::XNormalized,
            )
            .unwrap()
        })
    });
}

criterion_group!(
    benches,
    series_mul,
    prolongation,
    tables,
    invariant_differentiation
);
criterion_main!(benches);
