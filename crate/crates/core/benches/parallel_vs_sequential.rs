use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use interval_coloring::constructions::build_gdq;
use interval_coloring::graph::{cartesian_product, make_complete, make_complete_bipartite, make_path, stats_with};
use interval_coloring::solver::{find_interval_coloring_with, SolveBudget};
use interval_coloring::Exec;

const MODES: [Exec; 2] = [Exec::Sequential, Exec::Parallel];

fn all_pairs_bfs(c: &mut Criterion) {
    let g = cartesian_product(&make_path(40).unwrap(), &make_complete(16).unwrap()).unwrap();
    let mut group = c.benchmark_group("stats P40xK16");
    for exec in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| stats_with(black_box(&g), exec))
        });
    }
    group.finish();
}

fn table_sweep(c: &mut Criterion) {
    let grid: Vec<(u32, u32)> = (1..=8).flat_map(|d| (1..=3).map(move |q| (d, q))).collect();
    let mut group = c.benchmark_group("gdq sweep d<=8 q<=3");
    group.sample_size(20);
    for exec in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| exec.map(grid.clone(), |(d, q)| build_gdq(d, q).unwrap().expected_colors))
        });
    }
    group.finish();
}

fn solver_search(c: &mut Criterion) {
    let cases = [("K8 t=11", make_complete(8).unwrap(), 11), ("K4,5 t=9", make_complete_bipartite(4, 5).unwrap(), 9)];
    let budget = SolveBudget::nodes(20_000_000);
    for (name, g, t) in &cases {
        let mut group = c.benchmark_group(format!("search {name}"));
        group.sample_size(10);
        for exec in MODES {
            group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
                b.iter(|| find_interval_coloring_with(black_box(g), *t, budget, exec).unwrap())
            });
        }
        group.finish();
    }
}

criterion_group!(benches, all_pairs_bfs, table_sweep, solver_search);
criterion_main!(benches);
