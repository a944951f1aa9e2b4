//! Acceptance suite: eight end-to-end criteria that exercise the solver
//! stack at stated tolerances — golden worked examples, oracle
//! equivalence, dominance-predicate ground truth, generator exactness,
//! node monotonicity across pruning policies, search-performance targets,
//! triviality detection, and batch-width consistency.
//!
//! Each test prints one `criterion N (<name>): PASS — <details>` line
//! (visible under `--nocapture`); any assertion failure marks that
//! criterion failed. The tests share a mutex so timing-sensitive checks
//! are not perturbed by sibling criteria.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use bincomp::dominance::{
    cmt_dominates, dominates_covering, dominates_mccp, dominates_mkp, mt_dominates_packing,
    DominanceKind,
};
use bincomp::gen::{open_cursor, Side};
use bincomp::instances::{
    generate_instance, is_trivial_covering, CorrelationClass, GenSpec, SplitMix64,
};
use bincomp::nogood::{apply_pruning, NogoodRecord, NogoodStack, PruneContext, Pruning};
use bincomp::solvers::{
    solve, solve_bincovering, solve_exhaustive, solve_item_oriented, solve_mkp, BatchWidth,
    SolverConfig, Status, ValueOrdering,
};
use bincomp::{validate_solution, BinAssignment, Instance, Item, ProblemKind};

static GATE: Mutex<()> = Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner())
}

fn median_u64(values: &[u64]) -> u64 {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted[sorted.len() / 2]
}

fn median_duration(values: &[Duration]) -> Duration {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted[sorted.len() / 2]
}

/// Weights of `bins` disjoint exact covers of `q`, each a seeded random
/// composition into multiples of `step` between `step` and `9 * step`,
/// shuffled so the tiling is not visible from item order. Total weight is
/// exactly `bins * q`, so the counting bound certifies a perfect tiling.
fn tiled_covering_weights(seed: u64, bins: usize, q: i64, step: i64) -> Vec<i64> {
    let mut rng = SplitMix64::new(seed);
    let mut weights = Vec::new();
    for _ in 0..bins {
        let mut remaining = q / step;
        while remaining > 0 {
            let hi = remaining.min(9) as u64;
            let part = 1 + (rng.next_u64() % hi) as i64;
            weights.push(part * step);
            remaining -= part;
        }
    }
    for i in (1..weights.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        weights.swap(i, j);
    }
    weights
}

/// Builds an item table holding two (weight, value) lists side by side and
/// returns assignments over each half, for direct predicate calls.
fn pair(aw: &[(i64, i64)], bw: &[(i64, i64)]) -> (Vec<Item>, BinAssignment, BinAssignment) {
    let items: Vec<Item> = aw
        .iter()
        .chain(bw.iter())
        .enumerate()
        .map(|(id, &(weight, value))| Item { id, weight, value })
        .collect();
    let a = BinAssignment::new(0..aw.len(), &items);
    let b = BinAssignment::new(aw.len()..aw.len() + bw.len(), &items);
    (items, a, b)
}

// ---------------------------------------------------------------------------
// criterion 1 — worked-example goldens
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_worked_example_goldens() {
    let _g = serial();
    let t0 = Instant::now();

    // Two-bin and three-bin packing examples.
    let two = Instance::binpacking(100, &[6, 12, 15, 40, 43, 82]).unwrap();
    assert_eq!(solve(&two, &SolverConfig::default()).objective, 2);
    let three = Instance::binpacking(100, &[83, 42, 41, 40, 12, 11, 5]).unwrap();
    assert_eq!(solve(&three, &SolverConfig::default()).objective, 3);

    // The completion family of the bin seeded with the 83 item contains
    // exactly one undominated maximal assignment, {83, 12, 5}.
    let pool = three.items().to_vec();
    let cursor = open_cursor(Side::Packing, 100, &pool, Some(0)).unwrap();
    let family: Vec<Vec<i64>> = cursor
        .map(|asg| asg.item_ids().iter().map(|&id| pool[id].weight).collect())
        .collect();
    assert_eq!(family, vec![vec![83, 12, 5]]);

    // Dominance goldens across the predicate family.
    let (items, a, b) = pair(&[(100, 0)], &[(60, 0), (30, 0), (5, 0)]);
    assert!(mt_dominates_packing(&a, &b, &items));
    assert!(!cmt_dominates(&a, &b, &items));
    let (items, a, b) = pair(&[(90, 0), (80, 0)], &[(85, 0), (75, 0)]);
    assert!(cmt_dominates(&a, &b, &items));
    let (items, a, b) = pair(&[(100, 0)], &[(60, 0), (50, 0), (3, 0)]);
    assert!(dominates_covering(&a, &b, &items));
    let (items, a, b) = pair(&[(60, 0), (45, 0)], &[(60, 0), (50, 0)]);
    assert!(dominates_covering(&a, &b, &items));
    let (items, a, b) = pair(&[(60, 0), (45, 0)], &[(50, 0), (45, 0), (10, 0)]);
    assert!(dominates_covering(&a, &b, &items));
    let (items, a, b) = pair(&[(10, 5)], &[(6, 2), (4, 3)]);
    assert!(dominates_mkp(&a, &b, &items));
    let (items, a, b) = pair(&[(10, 5)], &[(6, 2), (4, 4)]);
    assert!(!dominates_mkp(&a, &b, &items));
    let (items, a, b) = pair(&[(10, 7)], &[(6, 4), (5, 4)]);
    assert!(dominates_mccp(&a, &b, &items));

    // Nogood goldens: after exploring bin {10, 8, 2} and descending into
    // {10, 7, 3}, the sibling record prunes {9, 8, 2} under NP and
    // {9, 7, 2} only under NDP.
    let host = Instance::binpacking(20, &[10, 9, 8, 7, 7, 3, 3, 2, 2]).unwrap();
    let items = host.items();
    let explored = BinAssignment::new([0, 2, 7], items);
    let descended = BinAssignment::new([0, 3, 5], items);
    let record = NogoodRecord::from_assignments(&explored, &descended, items, Some(0), 20);
    let mut stack = NogoodStack::new();
    stack.push_frame(vec![record]);
    let ctx = PruneContext {
        side: Side::Packing,
        kind: DominanceKind::MtPacking,
        cand_bound: 20,
        cand_seed: Some(1),
    };
    let np_victim = BinAssignment::new([1, 2, 7], items);
    assert!(apply_pruning(&np_victim, items, &stack, Pruning::Np, &ctx));
    let ndp_victim = BinAssignment::new([1, 4, 7], items);
    assert!(!apply_pruning(&ndp_victim, items, &stack, Pruning::Np, &ctx));
    assert!(apply_pruning(&ndp_victim, items, &stack, Pruning::Ndp, &ctx));

    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 1 (worked-example goldens): PASS — packing 2/3 bins, completion family \
         [83,12,5], dominance and nogood goldens hold in {elapsed:?}"
    );
}

// ---------------------------------------------------------------------------
// criterion 2 — oracle equivalence
// ---------------------------------------------------------------------------

/// Deterministic per-kind suites of small instances: sizes cycle through
/// the ranges below and correlation classes rotate, so reruns see the
/// exact same instances.
fn equivalence_suite(kind: ProblemKind) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut seed = match kind {
        ProblemKind::BinPacking => 10_000u64,
        ProblemKind::Mkp => 20_000,
        ProblemKind::BinCovering => 30_000,
        ProblemKind::Mccp => 40_000,
    };
    let mut attempts = 0usize;
    while out.len() < 200 {
        attempts += 1;
        assert!(attempts < 21_000, "equivalence suite generation stalled");
        let k = out.len();
        let (n, m, weight_min, weight_max, bound) = match kind {
            ProblemKind::BinPacking => (5 + k % 8, 1, 20, 100, Some(100)),
            ProblemKind::BinCovering => (5 + k % 6, 1, 20, 100, Some(100)),
            ProblemKind::Mkp => (7 + k % 6, 2 + k % 2, 10, 100, None),
            ProblemKind::Mccp => (7 + k % 5, 2 + k % 2, 10, 100, None),
        };
        let spec = GenSpec {
            kind,
            n,
            m,
            weight_min,
            weight_max,
            class: CorrelationClass::ALL[k % 4],
            bound,
            seed,
        };
        seed += 1;
        if let Ok(inst) = generate_instance(&spec) {
            out.push(inst);
        }
    }
    out
}

#[test]
fn criterion_2_oracle_equivalence() {
    let _g = serial();
    let t0 = Instant::now();
    let mut total = 0usize;
    for kind in [
        ProblemKind::BinPacking,
        ProblemKind::Mkp,
        ProblemKind::BinCovering,
        ProblemKind::Mccp,
    ] {
        for (i, inst) in equivalence_suite(kind).iter().enumerate() {
            let oracle = solve_exhaustive(inst).unwrap();
            let baseline = solve_item_oriented(inst, &SolverConfig::default());
            assert_eq!(
                (baseline.status, baseline.objective),
                (oracle.status, oracle.objective),
                "baseline disagrees on {kind:?} #{i}"
            );
            for pruning in [Pruning::None, Pruning::Np, Pruning::Ndp] {
                let cfg = SolverConfig {
                    pruning,
                    ..SolverConfig::default()
                };
                let report = solve(inst, &cfg);
                assert_eq!(
                    (report.status, report.objective),
                    (oracle.status, oracle.objective),
                    "bin completion ({pruning:?}) disagrees on {kind:?} #{i}"
                );
                if report.status == Status::Optimal {
                    let verdict = validate_solution(inst, &report.solution);
                    assert!(verdict.is_valid(), "{kind:?} #{i} ({pruning:?}): {verdict}");
                }
            }
            total += 1;
        }
    }
    let elapsed = t0.elapsed();
    assert_eq!(total, 800);
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "criterion 2 (oracle equivalence): PASS — 200 instances per kind agree across \
         exhaustive, item-oriented, and bin-completion None/NP/NDP in {elapsed:?}"
    );
}

// ---------------------------------------------------------------------------
// criterion 3 — dominance predicates vs brute force
// ---------------------------------------------------------------------------

/// Brute one-to-one matching: every `b` item mapped to a distinct `a`
/// item that out-weighs it.
fn brute_cmt(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    fn rec(a: &[(i64, i64)], used: &mut [bool], b: &[(i64, i64)], idx: usize) -> bool {
        if idx == b.len() {
            return true;
        }
        for s in 0..a.len() {
            if !used[s] && a[s].0 >= b[idx].0 {
                used[s] = true;
                let ok = rec(a, used, b, idx + 1);
                used[s] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    rec(a, &mut vec![false; a.len()], b, 0)
}

/// Brute group-to-item packing: every `b` item assigned to some `a` slot,
/// per-slot weight load within the slot's weight.
fn brute_mt(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    fn rec(a: &[(i64, i64)], load: &mut [i64], b: &[(i64, i64)], idx: usize) -> bool {
        if idx == b.len() {
            return true;
        }
        for s in 0..a.len() {
            if load[s] + b[idx].0 <= a[s].0 {
                load[s] += b[idx].0;
                let ok = rec(a, load, b, idx + 1);
                load[s] -= b[idx].0;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    rec(a, &mut vec![0; a.len()], b, 0)
}

/// Brute covering: every `b` item assigned to a slot or discarded; each
/// slot's weight need met in the end.
fn brute_cover(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    fn rec(a: &[(i64, i64)], load: &mut [i64], b: &[(i64, i64)], idx: usize) -> bool {
        if idx == b.len() {
            return (0..a.len()).all(|s| load[s] >= a[s].0);
        }
        for s in 0..a.len() {
            load[s] += b[idx].0;
            let ok = rec(a, load, b, idx + 1);
            load[s] -= b[idx].0;
            if ok {
                return true;
            }
        }
        rec(a, load, b, idx + 1)
    }
    rec(a, &mut vec![0; a.len()], b, 0)
}

/// Brute MKP: packing-style assignment of all of `b` with per-slot weight
/// and profit loads within the slot's.
fn brute_mkp(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    fn rec(a: &[(i64, i64)], load: &mut [(i64, i64)], b: &[(i64, i64)], idx: usize) -> bool {
        if idx == b.len() {
            return true;
        }
        for s in 0..a.len() {
            if load[s].0 + b[idx].0 <= a[s].0 && load[s].1 + b[idx].1 <= a[s].1 {
                load[s].0 += b[idx].0;
                load[s].1 += b[idx].1;
                let ok = rec(a, load, b, idx + 1);
                load[s].0 -= b[idx].0;
                load[s].1 -= b[idx].1;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    rec(a, &mut vec![(0, 0); a.len()], b, 0)
}

/// Brute MCCP: covering-style assignment where each slot's weight and cost
/// needs are both met.
fn brute_mccp(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    fn rec(a: &[(i64, i64)], load: &mut [(i64, i64)], b: &[(i64, i64)], idx: usize) -> bool {
        if idx == b.len() {
            return (0..a.len()).all(|s| load[s].0 >= a[s].0 && load[s].1 >= a[s].1);
        }
        for s in 0..a.len() {
            load[s].0 += b[idx].0;
            load[s].1 += b[idx].1;
            let ok = rec(a, load, b, idx + 1);
            load[s].0 -= b[idx].0;
            load[s].1 -= b[idx].1;
            if ok {
                return true;
            }
        }
        rec(a, load, b, idx + 1)
    }
    rec(a, &mut vec![(0, 0); a.len()], b, 0)
}

#[test]
fn criterion_3_predicates_match_brute_force() {
    let _g = serial();
    let t0 = Instant::now();
    let mut rng = SplitMix64::new(0x0303_0303);
    let mut positives = [0usize; 5];
    let pairs = 10_000usize;
    for _ in 0..pairs {
        let ca = rng.next_in(0, 6) as usize;
        let cb = rng.next_in(0, 6) as usize;
        let draw = |rng: &mut SplitMix64, count: usize| -> Vec<(i64, i64)> {
            (0..count)
                .map(|_| (rng.next_in(1, 12), rng.next_in(0, 8)))
                .collect()
        };
        let aw = draw(&mut rng, ca);
        let bw = draw(&mut rng, cb);
        let (items, a, b) = pair(&aw, &bw);
        let checks = [
            (cmt_dominates(&a, &b, &items), brute_cmt(&aw, &bw), "cmt"),
            (mt_dominates_packing(&a, &b, &items), brute_mt(&aw, &bw), "mt"),
            (dominates_covering(&a, &b, &items), brute_cover(&aw, &bw), "covering"),
            (dominates_mkp(&a, &b, &items), brute_mkp(&aw, &bw), "mkp"),
            (dominates_mccp(&a, &b, &items), brute_mccp(&aw, &bw), "mccp"),
        ];
        for (i, (fast, brute, name)) in checks.iter().enumerate() {
            assert_eq!(fast, brute, "{name} disagrees on a={aw:?} b={bw:?}");
            positives[i] += *fast as usize;
        }
        // The one-to-one criterion refines the group criterion.
        if checks[0].0 {
            assert!(checks[1].0, "cmt without mt on a={aw:?} b={bw:?}");
        }
    }
    for (i, count) in positives.iter().enumerate() {
        assert!(*count > 100, "predicate {i} fired only {count} times");
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 3 (dominance ground truth): PASS — {pairs} random pairs agree on all five \
         predicates (positives {positives:?}), one-to-one implies group, in {elapsed:?}"
    );
}

// ---------------------------------------------------------------------------
// criterion 4 — generator exactness
// ---------------------------------------------------------------------------

fn mask_ids(mask: u32, pool: &[Item]) -> Vec<usize> {
    (0..pool.len()).filter(|&i| mask >> i & 1 == 1).collect()
}

fn mask_weight(mask: u32, pool: &[Item]) -> i64 {
    (0..pool.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| pool[i].weight)
        .sum()
}

/// Maximal feasible subsets of `pool` under `capacity` containing
/// `required`, by full enumeration.
fn brute_maximal(pool: &[Item], capacity: i64, required: Option<usize>) -> Vec<u32> {
    let n = pool.len();
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if let Some(req) = required {
            if mask >> req & 1 == 0 {
                continue;
            }
        }
        let w = mask_weight(mask, pool);
        if w > capacity {
            continue;
        }
        let maximal = (0..n)
            .filter(|&i| mask >> i & 1 == 0)
            .all(|i| w + pool[i].weight > capacity);
        if maximal {
            out.push(mask);
        }
    }
    out
}

/// The exclusion test by direct enumeration: a maximal candidate is
/// dominated when swapping some included subset for a single heavier
/// excluded item stays feasible without losing weight or value, except
/// for exact one-for-one twins.
fn brute_packing_dominated(
    mask: u32,
    pool: &[Item],
    capacity: i64,
    required: Option<usize>,
) -> bool {
    let members: Vec<usize> = mask_ids(mask, pool)
        .into_iter()
        .filter(|&i| Some(i) != required)
        .collect();
    let total = mask_weight(mask, pool);
    let excluded: Vec<usize> = (0..pool.len()).filter(|&i| mask >> i & 1 == 0).collect();
    for sub in 1u32..1 << members.len() {
        let (mut sw, mut sv, mut card) = (0i64, 0i64, 0u32);
        for (j, &id) in members.iter().enumerate() {
            if sub >> j & 1 == 1 {
                sw += pool[id].weight;
                sv += pool[id].value;
                card += 1;
            }
        }
        for &x in &excluded {
            let (xw, xv) = (pool[x].weight, pool[x].value);
            if sw <= xw
                && total - sw + xw <= capacity
                && sv <= xv
                && !(card == 1 && sw == xw && sv == xv)
            {
                return true;
            }
        }
    }
    false
}

/// Minimal feasible subsets of `pool` with weight >= `quota` containing
/// `required`, by full enumeration.
fn brute_minimal(pool: &[Item], quota: i64, required: Option<usize>) -> Vec<u32> {
    let n = pool.len();
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        if let Some(req) = required {
            if mask >> req & 1 == 0 {
                continue;
            }
        }
        let w = mask_weight(mask, pool);
        if w < quota {
            continue;
        }
        let minimal = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| w - pool[i].weight < quota);
        if minimal {
            out.push(mask);
        }
    }
    out
}

#[test]
fn criterion_4_generator_matches_brute_force() {
    let _g = serial();
    let t0 = Instant::now();
    let mut rng = SplitMix64::new(0x0404_0404);
    let trials = 500usize;
    let mut packing_families = 0usize;
    for trial in 0..trials {
        let n = 4 + rng.next_in(0, 10) as usize;
        let weights: Vec<i64> = (0..n).map(|_| rng.next_in(1, 30)).collect();
        let inst = Instance::binpacking(40, &weights).unwrap();
        let pool = inst.items();
        let required = if trial % 2 == 0 { Some(0) } else { None };
        let cursor = open_cursor(Side::Packing, 40, pool, required).unwrap();
        let mut emitted: Vec<Vec<usize>> = cursor.map(|asg| asg.id_set()).collect();
        emitted.sort();
        let mut expected: Vec<Vec<usize>> = brute_maximal(pool, 40, required)
            .into_iter()
            .filter(|&mask| !brute_packing_dominated(mask, pool, 40, required))
            .map(|mask| mask_ids(mask, pool))
            .collect();
        expected.sort();
        assert_eq!(
            emitted, expected,
            "packing family mismatch, weights {weights:?}, required {required:?}"
        );
        packing_families += expected.len();
    }
    let mut sandwich_trials = 0usize;
    for trial in 0..300usize {
        let n = 4 + rng.next_in(0, 8) as usize;
        let weights: Vec<i64> = (0..n).map(|_| rng.next_in(1, 30)).collect();
        let inst = Instance::bincovering(35, &weights).unwrap();
        let pool = inst.items();
        let required = if trial % 2 == 0 { Some(0) } else { None };
        let cursor = match open_cursor(Side::Covering, 35, pool, required) {
            Ok(cursor) => cursor,
            Err(_) => continue,
        };
        let mut emitted: Vec<Vec<usize>> = cursor.map(|asg| asg.id_set()).collect();
        emitted.sort();
        let minimal_masks = brute_minimal(pool, 35, required);
        let minimal: Vec<Vec<usize>> = minimal_masks
            .iter()
            .map(|&mask| mask_ids(mask, pool))
            .collect();
        // Every emission is a minimal feasible set of the family.
        for set in &emitted {
            assert!(
                minimal.contains(set),
                "non-minimal emission {set:?}, weights {weights:?}"
            );
        }
        // Every undominated family member is emitted (dominators compared
        // within the family; mutual domination marks twins, not strict
        // dominance).
        let views: Vec<Vec<(i64, i64)>> = minimal_masks
            .iter()
            .map(|&mask| {
                let mut view: Vec<(i64, i64)> = mask_ids(mask, pool)
                    .iter()
                    .map(|&i| (pool[i].weight, pool[i].value))
                    .collect();
                view.sort_by(|a, b| b.cmp(a));
                view
            })
            .collect();
        for (bi, set) in minimal.iter().enumerate() {
            let dominated = (0..minimal.len()).any(|ai| {
                ai != bi
                    && brute_cover(&views[ai], &views[bi])
                    && !brute_cover(&views[bi], &views[ai])
            });
            if !dominated {
                assert!(
                    emitted.contains(set),
                    "undominated {set:?} missing, weights {weights:?}, required {required:?}"
                );
            }
        }
        sandwich_trials += 1;
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "criterion 4 (generator exactness): PASS — {trials} packing pools match brute \
         undominated families exactly ({packing_families} assignments), {sandwich_trials} \
         covering pools sandwiched between undominated and minimal, in {elapsed:?}"
    );
}

// ---------------------------------------------------------------------------
// criterion 5 — node monotonicity across pruning policies
// ---------------------------------------------------------------------------

#[test]
fn criterion_5_node_monotonicity() {
    let _g = serial();
    let t0 = Instant::now();
    let mut checked = 0usize;
    for kind in [
        ProblemKind::BinPacking,
        ProblemKind::Mkp,
        ProblemKind::BinCovering,
        ProblemKind::Mccp,
    ] {
        for (i, inst) in equivalence_suite(kind).iter().enumerate() {
            let mut nodes = Vec::new();
            let mut objectives = Vec::new();
            for pruning in [Pruning::None, Pruning::Np, Pruning::Ndp] {
                let cfg = SolverConfig {
                    pruning,
                    ordering: Some(ValueOrdering::GenerationOrder),
                    rng_seed: 0,
                    ..SolverConfig::default()
                };
                let report = solve(inst, &cfg);
                nodes.push(report.nodes);
                objectives.push(report.objective);
            }
            assert!(
                objectives[0] == objectives[1] && objectives[1] == objectives[2],
                "{kind:?} #{i}: objectives {objectives:?}"
            );
            assert!(
                nodes[2] <= nodes[1] && nodes[1] <= nodes[0],
                "{kind:?} #{i}: nodes {nodes:?} not monotone"
            );
            checked += 1;
        }
    }
    let elapsed = t0.elapsed();
    assert_eq!(checked, 800);
    println!(
        "criterion 5 (node monotonicity): PASS — NDP <= NP <= no-pruning node counts on all \
         800 instances with zero violations in {elapsed:?}"
    );
}

// ---------------------------------------------------------------------------
// criterion 6 — multiple-knapsack node advantage
// ---------------------------------------------------------------------------

#[test]
fn criterion_6_mkp_node_advantage() {
    let _g = serial();
    let t0 = Instant::now();
    let mut instances = Vec::new();
    let mut seed = 600_000u64;
    while instances.len() < 30 {
        let spec = GenSpec {
            kind: ProblemKind::Mkp,
            n: 20,
            m: 10,
            weight_min: 10,
            weight_max: 1000,
            class: CorrelationClass::SubsetSum,
            bound: None,
            seed,
        };
        seed += 1;
        if let Ok(inst) = generate_instance(&spec) {
            instances.push(inst);
        }
    }
    let mut bc_nodes = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        let report = solve_mkp(inst, &SolverConfig::default());
        assert_eq!(report.status, Status::Optimal, "instance #{i}");
        assert!(
            report.elapsed <= Duration::from_secs(5),
            "instance #{i} took {:?}",
            report.elapsed
        );
        assert!(report.nodes <= 10_000, "instance #{i} took {} nodes", report.nodes);
        bc_nodes.push(report.nodes);
    }
    let bc_median = median_u64(&bc_nodes).max(1);
    let cap = 200 * bc_median;
    let mut baseline_nodes = Vec::new();
    for inst in &instances {
        let cfg = SolverConfig {
            node_limit: Some(cap),
            ..SolverConfig::default()
        };
        let report = solve_item_oriented(inst, &cfg);
        baseline_nodes.push(report.nodes);
    }
    let baseline_median = median_u64(&baseline_nodes);
    assert!(
        baseline_median >= 100 * bc_median,
        "baseline median {baseline_median} vs bin-completion median {bc_median}"
    );
    let elapsed = t0.elapsed();
    println!(
        "criterion 6 (multiple-knapsack node advantage): PASS — 30 subset-sum instances \
         (n=20, m=10) all optimal within 5 s and 10^4 nodes; node medians {bc_median} vs \
         baseline {baseline_median} (>= 100x, baseline capped at {cap}), in {elapsed:?}"
    );
}

// ---------------------------------------------------------------------------
// criterion 7 — trivial covering detection
// ---------------------------------------------------------------------------

#[test]
fn criterion_7_trivial_covering_closes_at_root() {
    let _g = serial();
    let t0 = Instant::now();
    let total = 1000usize;
    let mut trivial = 0usize;
    for seed in 0..total as u64 {
        let spec = GenSpec {
            kind: ProblemKind::BinCovering,
            n: 120,
            m: 1,
            weight_min: 1,
            weight_max: 99_999,
            class: CorrelationClass::Uncorrelated,
            bound: Some(100_000),
            seed,
        };
        let inst = generate_instance(&spec).unwrap();
        if is_trivial_covering(&inst) {
            trivial += 1;
            let report = solve_bincovering(&inst, &SolverConfig::default());
            assert_eq!(report.status, Status::Optimal, "seed {seed}");
            assert_eq!(report.nodes, 1, "trivial seed {seed} took {} nodes", report.nodes);
        }
    }
    // The implication must also fire on genuinely trivial pools, not just
    // hold vacuously on the big suite.
    let trivially_closed = [
        Instance::bincovering(100, &[60, 50, 45, 10]).unwrap(),
        Instance::bincovering(100, &[100, 100, 100]).unwrap(),
        Instance::bincovering(1000, &[40, 30, 20]).unwrap(),
    ];
    for (i, inst) in trivially_closed.iter().enumerate() {
        assert!(is_trivial_covering(inst), "hand instance #{i}");
        let report = solve_bincovering(inst, &SolverConfig::default());
        assert_eq!(report.status, Status::Optimal, "hand instance #{i}");
        assert_eq!(report.nodes, 1, "hand instance #{i} took {} nodes", report.nodes);
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    println!(
        "criterion 7 (trivial covering detection): PASS — {trivial}/{total} instances \
         ({:.1}%) flagged trivial, every one solved at exactly 1 node (implication also \
         verified on hand-built root-closed pools), in {elapsed:?}",
        100.0 * trivial as f64 / total as f64
    );
}

// ---------------------------------------------------------------------------
// criterion 8 — batch-width consistency
// ---------------------------------------------------------------------------

#[test]
fn criterion_8_batch_width_consistency() {
    let _g = serial();
    let t0 = Instant::now();
    // The capped width stands in for unbounded generation; it exceeds the
    // per-batch pull of any width below it by orders of magnitude.
    let widths = [
        BatchWidth::Bounded(1_000_000),
        BatchWidth::Bounded(100),
        BatchWidth::Bounded(20),
        BatchWidth::Bounded(2),
    ];
    // Covering instances built as seven disjoint exact covers of the quota
    // (all weights multiples of 1000, so no single lighter swap preserves a
    // tight cover): the undominated family per node is huge, yet the
    // leftmost descent re-tiles the quota and closes within a few nodes.
    // That is the regime batching is for — children beyond the first few
    // are generation cost with no search value.
    let bins = 7usize;
    let quota = 20_000i64;
    let mut instances = Vec::new();
    let mut variant = 0u64;
    while instances.len() < 20 {
        variant += 1;
        assert!(variant < 200, "tiled covering construction stalled");
        let weights = tiled_covering_weights(0xC0FFEE ^ variant, bins, quota, 1000);
        if weights.len() > 40 {
            continue;
        }
        let inst = Instance::bincovering(quota, &weights).unwrap();
        let probe = solve_bincovering(&inst, &SolverConfig::default());
        if probe.status == Status::Optimal
            && probe.objective == bins as i64
            && probe.nodes >= 2
            && probe.nodes <= 50
        {
            instances.push(inst);
        }
    }
    // Objectives must be identical at every width (and match the built
    // tiling, which the counting bound certifies as optimal).
    for (i, inst) in instances.iter().enumerate() {
        for &h in &widths {
            let cfg = SolverConfig {
                h: Some(h),
                ..SolverConfig::default()
            };
            let report = solve_bincovering(inst, &cfg);
            assert_eq!(report.status, Status::Optimal, "instance #{i} width {h:?}");
            assert_eq!(
                report.objective, bins as i64,
                "instance #{i} width {h:?}: objective {}",
                report.objective
            );
        }
    }
    // Best-of-repeats wall time per width; medians must not increase as
    // the width shrinks.
    let repeats = 5usize;
    let mut medians = Vec::new();
    for &h in &widths {
        let cfg = SolverConfig {
            h: Some(h),
            ..SolverConfig::default()
        };
        let per_instance: Vec<Duration> = instances
            .iter()
            .map(|inst| {
                (0..repeats)
                    .map(|_| solve_bincovering(inst, &cfg).elapsed)
                    .min()
                    .expect("repeats > 0")
            })
            .collect();
        medians.push(median_duration(&per_instance));
    }
    for w in medians.windows(2) {
        assert!(
            w[1] <= w[0],
            "median times increased as width shrank: {medians:?}"
        );
    }
    let elapsed = t0.elapsed();
    println!(
        "criterion 8 (batch-width consistency): PASS — 20 covering instances (q=20000, n ≤ 40) \
         agree at widths 10^6/100/20/2; median best-of-{repeats} times non-increasing as width \
         shrinks {medians:?}, in {elapsed:?}"
    );
}
