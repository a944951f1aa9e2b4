//! Criterion benches for the three axes worth tuning: end-to-end solver
//! throughput per problem kind, the no-good pruning levels against each
//! other, the assignment cursor (dominance screens included), and the
//! instance generator.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use bincomp::{
    generate_suite, open_cursor, solve, CorrelationClass, GenSpec, Item, ProblemKind, Pruning,
    Side, SolverConfig, SplitMix64, Status,
};
use bincomp_bench::pinned;

fn bench_solve(c: &mut Criterion) {
    let cases = [
        ("binpacking_n30", pinned(ProblemKind::BinPacking, CorrelationClass::Uncorrelated, 30, 1, 3)),
        ("mkp_weak_n20_m5", pinned(ProblemKind::Mkp, CorrelationClass::WeaklyCorrelated, 20, 5, 11)),
        ("bincovering_n25", pinned(ProblemKind::BinCovering, CorrelationClass::Uncorrelated, 25, 1, 5)),
        ("mccp_n14_m4", pinned(ProblemKind::Mccp, CorrelationClass::Uncorrelated, 14, 4, 7)),
    ];
    let cfg = SolverConfig::default();
    let mut group = c.benchmark_group("solve");
    for (name, inst) in &cases {
        assert_eq!(solve(inst, &cfg).status, Status::Optimal, "{name}");
        group.bench_function(*name, |b| b.iter(|| black_box(solve(black_box(inst), &cfg))));
    }
    group.finish();
}

fn bench_pruning_levels(c: &mut Criterion) {
    let inst = pinned(ProblemKind::BinPacking, CorrelationClass::Uncorrelated, 20, 1, 3);
    let mut group = c.benchmark_group("pruning");
    for pruning in [Pruning::None, Pruning::Np, Pruning::Ndp] {
        let cfg = SolverConfig {
            pruning,
            ..SolverConfig::default()
        };
        group.bench_function(pruning.token(), |b| {
            b.iter(|| black_box(solve(black_box(&inst), &cfg)))
        });
    }
    group.finish();
}

fn pool(n: usize, seed: u64) -> Vec<Item> {
    let mut rng = SplitMix64::new(seed);
    (0..n)
        .map(|id| Item {
            id,
            weight: rng.next_in(1, 1000),
            value: 0,
        })
        .collect()
}

fn bench_cursor(c: &mut Criterion) {
    let items = pool(20, 42);
    let mut group = c.benchmark_group("cursor");
    group.bench_function("packing_maximal_n20", |b| {
        b.iter(|| {
            open_cursor(Side::Packing, 1000, black_box(&items), Some(0))
                .expect("item 0 fits")
                .count()
        })
    });
    group.bench_function("covering_minimal_n20", |b| {
        b.iter(|| {
            open_cursor(Side::Covering, 1000, black_box(&items), Some(0))
                .expect("pool is nonempty")
                .count()
        })
    });
    group.finish();
}

fn bench_generator(c: &mut Criterion) {
    let spec = GenSpec {
        kind: ProblemKind::Mkp,
        n: 40,
        m: 10,
        weight_min: 1,
        weight_max: 1000,
        class: CorrelationClass::StronglyCorrelated,
        bound: None,
        seed: 1,
    };
    c.bench_function("generate_suite_10x_mkp_n40", |b| {
        b.iter(|| generate_suite(black_box(&spec), 10, false).expect("spec is satisfiable"))
    });
}

criterion_group!(
    benches,
    bench_solve,
    bench_pruning_levels,
    bench_cursor,
    bench_generator
);
criterion_main!(benches);
