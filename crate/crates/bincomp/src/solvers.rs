//! Exact solvers: bin-completion branch-and-bound for all four problem
//! kinds, an item-oriented branch-and-bound baseline, and a small
//! exhaustive-enumeration oracle for cross-checking on tiny instances.
//!
//! The bin-completion solvers branch on *complete bin assignments*: each
//! search node commits one full bin (maximal for packing sides, minimal
//! for covering sides) produced lazily by [`crate::gen::GenCursor`], and
//! prunes with the bounds in [`crate::bounds`] plus the nogood dominance
//! machinery in [`crate::nogood`]. The item-oriented baseline branches on
//! one item at a time and uses the same bounds but no dominance pruning,
//! so node-count comparisons isolate the value of the bin-oriented scheme.
//!
//! Node accounting is uniform across solvers: the root state counts as 1
//! and every child state entered adds 1. Trivially closed instances
//! (incumbent meets the root bound) therefore report exactly one node.
//! Time and node limits are polled at node entry, before the node is
//! counted, so a report's `nodes` never exceeds the configured limit.

use std::time::{Duration, Instant};

use crate::bounds::{
    best_fit_decreasing, binpacking_lower_bound, covering_greedy_lower, covering_upper_bound,
    mccp_l2_bound, min_cost_cover, mtm_greedy_bound, smkp_upper_bound, CoverOutcome,
};
use crate::core::{BinAssignment, Instance, Item, ProblemKind, Solution};
use crate::dominance::DominanceKind;
use crate::gen::{open_cursor, Side};
use crate::instances::SplitMix64;
use crate::nogood::{apply_pruning, compact_stack, NogoodRecord, NogoodStack, PruneContext};

pub use crate::nogood::Pruning;

/// Maximum instance size accepted by [`solve_exhaustive`].
pub const EXHAUSTIVE_LIMIT: usize = 16;

/// How many bin assignments the generation cursor is asked for per batch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BatchWidth {
    /// Request at most this many assignments per batch (must be >= 1).
    Bounded(usize),
    /// Generate every assignment of the family before expanding any child.
    Unbounded,
}

impl BatchWidth {
    /// The default batch width for a problem kind: bin covering uses a
    /// bounded width of 100, all other kinds generate exhaustively.
    pub fn default_for(kind: ProblemKind) -> BatchWidth {
        match kind {
            ProblemKind::BinCovering => BatchWidth::Bounded(100),
            _ => BatchWidth::Unbounded,
        }
    }

    fn width(self) -> usize {
        match self {
            BatchWidth::Bounded(h) => {
                assert!(h >= 1, "batch width must be at least 1");
                h
            }
            BatchWidth::Unbounded => usize::MAX,
        }
    }
}

/// Order in which the assignments of one batch are expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueOrdering {
    /// Fewest items first, ties by highest value sum (0-1 multiple
    /// knapsack default).
    MinCardMaxProfit,
    /// Lightest assignment first (min-cost covering default).
    MinWeight,
    /// Fewest items first, ties by lowest weight sum (bin covering
    /// default).
    MinCardMinSum,
    /// Fewest items first, ties by highest weight sum (bin packing
    /// default).
    MinCardMaxWeight,
    /// Keep the cursor's emission order.
    GenerationOrder,
}

impl ValueOrdering {
    /// The default expansion ordering for a problem kind.
    pub fn default_for(kind: ProblemKind) -> ValueOrdering {
        match kind {
            ProblemKind::BinPacking => ValueOrdering::MinCardMaxWeight,
            ProblemKind::Mkp => ValueOrdering::MinCardMaxProfit,
            ProblemKind::BinCovering => ValueOrdering::MinCardMinSum,
            ProblemKind::Mccp => ValueOrdering::MinWeight,
        }
    }

    /// Stable token used by the command-line interface.
    pub fn token(self) -> &'static str {
        match self {
            ValueOrdering::MinCardMaxProfit => "min-card-max-profit",
            ValueOrdering::MinWeight => "min-weight",
            ValueOrdering::MinCardMinSum => "min-card-min-sum",
            ValueOrdering::MinCardMaxWeight => "min-card-max-weight",
            ValueOrdering::GenerationOrder => "generation",
        }
    }

    /// Inverse of [`ValueOrdering::token`].
    pub fn from_token(token: &str) -> Option<ValueOrdering> {
        Some(match token {
            "min-card-max-profit" => ValueOrdering::MinCardMaxProfit,
            "min-weight" => ValueOrdering::MinWeight,
            "min-card-min-sum" => ValueOrdering::MinCardMinSum,
            "min-card-max-weight" => ValueOrdering::MinCardMaxWeight,
            "generation" => ValueOrdering::GenerationOrder,
            _ => return None,
        })
    }
}

/// Sorts a batch for expansion. Ties after the ordering's keys are broken
/// by the lexicographic item-id sequence, so expansion order is a pure
/// function of the batch contents.
fn order_batch(batch: &mut [BinAssignment], ordering: ValueOrdering) {
    match ordering {
        ValueOrdering::GenerationOrder => {}
        ValueOrdering::MinCardMaxProfit => batch.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then(b.value_sum().cmp(&a.value_sum()))
                .then_with(|| a.item_ids().cmp(b.item_ids()))
        }),
        ValueOrdering::MinWeight => batch.sort_by(|a, b| {
            a.weight_sum()
                .cmp(&b.weight_sum())
                .then_with(|| a.item_ids().cmp(b.item_ids()))
        }),
        ValueOrdering::MinCardMinSum => batch.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then(a.weight_sum().cmp(&b.weight_sum()))
                .then_with(|| a.item_ids().cmp(b.item_ids()))
        }),
        ValueOrdering::MinCardMaxWeight => batch.sort_by(|a, b| {
            a.len()
                .cmp(&b.len())
                .then(b.weight_sum().cmp(&a.weight_sum()))
                .then_with(|| a.item_ids().cmp(b.item_ids()))
        }),
    }
}

/// Tunable knobs shared by every solver entry point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Dominance-pruning policy for the bin-completion solvers; ignored
    /// by the item-oriented baseline and the exhaustive oracle.
    pub pruning: Pruning,
    /// Batch expansion ordering; `None` uses the kind's default.
    pub ordering: Option<ValueOrdering>,
    /// Incremental-generation batch width; `None` uses the kind's default.
    pub h: Option<BatchWidth>,
    /// Wall-clock budget; exceeding it aborts with [`Status::TimeLimit`].
    pub time_limit: Option<Duration>,
    /// Node budget; exceeding it aborts with [`Status::NodeLimit`].
    pub node_limit: Option<u64>,
    /// Seed for the multiple-knapsack container tie-break.
    pub rng_seed: u64,
    /// Below this search depth the NDP policy falls back to NP;
    /// `None` applies NDP at every depth.
    pub ndp_depth_limit: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> SolverConfig {
        SolverConfig {
            pruning: Pruning::Ndp,
            ordering: None,
            h: None,
            time_limit: None,
            node_limit: None,
            rng_seed: 0,
            ndp_depth_limit: None,
        }
    }
}

/// How a solve run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// The search space was exhausted; the reported solution is optimal.
    Optimal,
    /// The wall-clock budget ran out; the report holds the incumbent.
    TimeLimit,
    /// The node budget ran out; the report holds the incumbent.
    NodeLimit,
    /// No feasible solution exists.
    Infeasible,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Optimal => "Optimal",
            Status::TimeLimit => "TimeLimit",
            Status::NodeLimit => "NodeLimit",
            Status::Infeasible => "Infeasible",
        })
    }
}

/// Outcome of one solver run. Everything except `elapsed` is a
/// deterministic function of the instance and the configuration.
#[derive(Clone, Debug)]
pub struct SolveReport {
    /// Best solution found (a placeholder empty solution when infeasible).
    pub solution: Solution,
    /// Objective of `solution`.
    pub objective: i64,
    /// Search states entered (root = 1).
    pub nodes: u64,
    /// Wall-clock time spent.
    pub elapsed: Duration,
    /// How the run ended.
    pub status: Status,
}

/// Node counting plus time/node budget polling, shared by all solvers.
struct Limits {
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    aborted: Option<Status>,
}

impl Limits {
    fn new(cfg: &SolverConfig) -> Limits {
        Limits {
            nodes: 0,
            node_limit: cfg.node_limit,
            deadline: cfg.time_limit.map(|d| Instant::now() + d),
            aborted: None,
        }
    }

    /// Polls budgets and counts the node. Returns false (without counting)
    /// when the search must unwind.
    fn enter_node(&mut self) -> bool {
        if self.aborted.is_some() {
            return false;
        }
        if let Some(limit) = self.node_limit {
            if self.nodes + 1 > limit {
                self.aborted = Some(Status::NodeLimit);
                return false;
            }
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.aborted = Some(Status::TimeLimit);
                return false;
            }
        }
        self.nodes += 1;
        true
    }

    fn stopped(&self) -> bool {
        self.aborted.is_some()
    }

    fn status(&self, exhausted: Status) -> Status {
        self.aborted.unwrap_or(exhausted)
    }
}

/// Per-node pruning policy: NDP degrades to NP below the configured depth.
fn effective_policy(cfg: &SolverConfig, depth: usize) -> Pruning {
    match (cfg.pruning, cfg.ndp_depth_limit) {
        (Pruning::Ndp, Some(limit)) if depth >= limit => Pruning::Np,
        (p, _) => p,
    }
}

fn remove_assigned(remaining: &[Item], asg: &BinAssignment) -> Vec<Item> {
    remaining
        .iter()
        .filter(|it| !asg.item_ids().contains(&it.id))
        .copied()
        .collect()
}

// ---------------------------------------------------------------------------
// Bin packing
// ---------------------------------------------------------------------------

struct PackingSearch<'a> {
    items: &'a [Item],
    capacity: i64,
    cfg: &'a SolverConfig,
    ordering: ValueOrdering,
    h: usize,
    limits: Limits,
    stack: NogoodStack,
    path: Vec<BinAssignment>,
    best: Solution,
}

impl PackingSearch<'_> {
    fn node(&mut self, remaining: &[Item], used: i64) {
        if !self.limits.enter_node() {
            return;
        }
        if remaining.is_empty() {
            if used < self.best.objective {
                self.best = Solution {
                    assignments: self.path.clone(),
                    overflow: BinAssignment::empty(),
                    objective: used,
                };
            }
            return;
        }
        let bound = used + binpacking_lower_bound(remaining, self.capacity);
        if bound >= self.best.objective {
            return;
        }
        let seed = remaining[0].id;
        let mut cursor = match open_cursor(Side::Packing, self.capacity, remaining, Some(seed)) {
            Ok(cursor) => cursor,
            Err(_) => return,
        };
        let mut resolved: Vec<BinAssignment> = Vec::new();
        loop {
            let mut batch = cursor.next_batch(self.h);
            if batch.is_empty() {
                break;
            }
            order_batch(&mut batch, self.ordering);
            for asg in batch {
                if self.limits.stopped() {
                    return;
                }
                // The incumbent may have improved under an earlier child;
                // the node bound itself is fixed, so re-test it.
                if bound >= self.best.objective {
                    return;
                }
                let policy = effective_policy(self.cfg, self.stack.depth());
                let ctx = PruneContext {
                    side: Side::Packing,
                    kind: DominanceKind::MtPacking,
                    cand_bound: self.capacity,
                    cand_seed: Some(seed),
                };
                if policy != Pruning::None
                    && apply_pruning(&asg, self.items, &self.stack, policy, &ctx)
                {
                    resolved.push(asg);
                    continue;
                }
                let next = remove_assigned(remaining, &asg);
                self.descend(&asg, &resolved, &next, used + 1, seed);
                resolved.push(asg);
            }
        }
    }

    fn descend(
        &mut self,
        asg: &BinAssignment,
        resolved: &[BinAssignment],
        next: &[Item],
        used: i64,
        seed: usize,
    ) {
        self.path.push(asg.clone());
        if self.cfg.pruning == Pruning::None {
            self.node(next, used);
        } else {
            // The host seed recorded per frame is the family seed, shared
            // by every assignment of the family.
            let records = resolved
                .iter()
                .map(|r| {
                    NogoodRecord::from_assignments(r, asg, self.items, Some(seed), self.capacity)
                })
                .collect();
            self.stack.push_frame(records);
            if self.cfg.pruning == Pruning::Np {
                let saved = self.stack.clone();
                self.stack = compact_stack(&self.stack, next);
                self.node(next, used);
                self.stack = saved;
            } else {
                self.node(next, used);
            }
            self.stack.pop_frame();
        }
        self.path.pop();
    }
}

/// Solves a bin packing instance with bin-completion branch-and-bound.
pub fn solve_binpacking(inst: &Instance, cfg: &SolverConfig) -> SolveReport {
    assert_eq!(inst.kind(), ProblemKind::BinPacking, "kind mismatch");
    let start = Instant::now();
    let capacity = inst.uniform_bound();
    if inst.items().iter().any(|it| it.weight > capacity) {
        return SolveReport {
            solution: Solution::default(),
            objective: 0,
            nodes: 0,
            elapsed: start.elapsed(),
            status: Status::Infeasible,
        };
    }
    let mut search = PackingSearch {
        items: inst.items(),
        capacity,
        cfg,
        ordering: cfg.ordering.unwrap_or(ValueOrdering::default_for(inst.kind())),
        h: cfg.h.unwrap_or(BatchWidth::default_for(inst.kind())).width(),
        limits: Limits::new(cfg),
        stack: NogoodStack::new(),
        path: Vec::new(),
        best: best_fit_decreasing(inst.items(), capacity),
    };
    search.node(inst.items(), 0);
    let status = search.limits.status(Status::Optimal);
    SolveReport {
        objective: search.best.objective,
        solution: search.best,
        nodes: search.limits.nodes,
        elapsed: start.elapsed(),
        status,
    }
}

// ---------------------------------------------------------------------------
// 0-1 multiple knapsack
// ---------------------------------------------------------------------------

struct MkpSearch<'a> {
    items: &'a [Item],
    cfg: &'a SolverConfig,
    ordering: ValueOrdering,
    h: usize,
    limits: Limits,
    stack: NogoodStack,
    current: Vec<BinAssignment>,
    best_profit: i64,
    best: Vec<BinAssignment>,
}

impl MkpSearch<'_> {
    /// Instance-reduction hook applied at node entry. Intentionally a
    /// no-op: the multiple-knapsack search keeps every remaining item
    /// and container, but reductions (e.g. dropping items that fit no
    /// remaining container) would slot in here.
    fn reduce(&mut self, _remaining: &[Item], _bins: &[(usize, i64)]) {}

    /// Picks the remaining container with the smallest capacity. Ties are
    /// broken by a pseudo-random draw derived from the seed and the set of
    /// tied container indices, so identical search states reached under
    /// different pruning policies make the same choice.
    fn choose_bin(&self, bins: &[(usize, i64)]) -> usize {
        let min_cap = bins.iter().map(|b| b.1).min().expect("bins nonempty");
        let tied: Vec<usize> = (0..bins.len()).filter(|&p| bins[p].1 == min_cap).collect();
        if tied.len() == 1 {
            return tied[0];
        }
        let mut fold = self.cfg.rng_seed ^ 0x9E37_79B9_7F4A_7C15;
        for &p in &tied {
            fold = fold.rotate_left(7) ^ (bins[p].0 as u64).wrapping_add(0x100);
        }
        let draw = SplitMix64::new(fold).next_u64();
        tied[(draw % tied.len() as u64) as usize]
    }

    fn node(&mut self, remaining: &[Item], bins: &[(usize, i64)], profit: i64) {
        if !self.limits.enter_node() {
            return;
        }
        self.reduce(remaining, bins);
        if bins.is_empty() || remaining.is_empty() {
            if profit > self.best_profit {
                self.best_profit = profit;
                self.best = self.current.clone();
            }
            return;
        }
        let caps: Vec<i64> = bins.iter().map(|b| b.1).collect();
        let bound = profit + smkp_upper_bound(remaining, &caps);
        if bound <= self.best_profit {
            return;
        }
        let pos = self.choose_bin(bins);
        let (orig_idx, capacity) = bins[pos];
        let mut rest: Vec<(usize, i64)> = bins.to_vec();
        rest.remove(pos);
        let mut cursor = match open_cursor(Side::Packing, capacity, remaining, None) {
            Ok(cursor) => cursor,
            Err(_) => return,
        };
        let mut resolved: Vec<BinAssignment> = Vec::new();
        loop {
            let mut batch = cursor.next_batch(self.h);
            if batch.is_empty() {
                break;
            }
            order_batch(&mut batch, self.ordering);
            for asg in batch {
                if self.limits.stopped() {
                    return;
                }
                // The incumbent may have improved under an earlier child;
                // the node bound itself is fixed, so re-test it.
                if bound <= self.best_profit {
                    return;
                }
                let policy = effective_policy(self.cfg, self.stack.depth());
                let ctx = PruneContext {
                    side: Side::Packing,
                    kind: DominanceKind::MkpPacking,
                    cand_bound: capacity,
                    cand_seed: None,
                };
                if policy != Pruning::None
                    && apply_pruning(&asg, self.items, &self.stack, policy, &ctx)
                {
                    resolved.push(asg);
                    continue;
                }
                let next = remove_assigned(remaining, &asg);
                let gained = asg.value_sum();
                self.current[orig_idx] = asg.clone();
                if self.cfg.pruning == Pruning::None {
                    self.node(&next, &rest, profit + gained);
                } else {
                    let records = resolved
                        .iter()
                        .map(|r| NogoodRecord::from_assignments(r, &asg, self.items, None, capacity))
                        .collect();
                    self.stack.push_frame(records);
                    if self.cfg.pruning == Pruning::Np {
                        let saved = self.stack.clone();
                        self.stack = compact_stack(&self.stack, &next);
                        self.node(&next, &rest, profit + gained);
                        self.stack = saved;
                    } else {
                        self.node(&next, &rest, profit + gained);
                    }
                    self.stack.pop_frame();
                }
                self.current[orig_idx] = BinAssignment::empty();
                resolved.push(asg);
            }
        }
    }
}

/// Solves a 0-1 multiple knapsack instance with bin-completion
/// branch-and-bound.
pub fn solve_mkp(inst: &Instance, cfg: &SolverConfig) -> SolveReport {
    assert_eq!(inst.kind(), ProblemKind::Mkp, "kind mismatch");
    let start = Instant::now();
    let m = inst.m();
    let mut search = MkpSearch {
        items: inst.items(),
        cfg,
        ordering: cfg.ordering.unwrap_or(ValueOrdering::default_for(inst.kind())),
        h: cfg.h.unwrap_or(BatchWidth::default_for(inst.kind())).width(),
        limits: Limits::new(cfg),
        stack: NogoodStack::new(),
        current: vec![BinAssignment::empty(); m],
        best_profit: 0,
        best: vec![BinAssignment::empty(); m],
    };
    let bins: Vec<(usize, i64)> = inst.containers().iter().copied().enumerate().collect();
    search.node(inst.items(), &bins, 0);
    let status = search.limits.status(Status::Optimal);
    SolveReport {
        solution: Solution {
            assignments: search.best,
            overflow: BinAssignment::empty(),
            objective: search.best_profit,
        },
        objective: search.best_profit,
        nodes: search.limits.nodes,
        elapsed: start.elapsed(),
        status,
    }
}

// ---------------------------------------------------------------------------
// Bin covering
// ---------------------------------------------------------------------------

struct CoveringSearch<'a> {
    items: &'a [Item],
    quota: i64,
    cfg: &'a SolverConfig,
    ordering: ValueOrdering,
    h: usize,
    limits: Limits,
    stack: NogoodStack,
    path: Vec<BinAssignment>,
    best: Solution,
}

impl CoveringSearch<'_> {
    fn node(&mut self, remaining: &[Item], covered: i64) {
        if !self.limits.enter_node() {
            return;
        }
        // Every node is a candidate leaf: the items still unassigned fall
        // to overflow if the search stopped extending here.
        if covered > self.best.objective {
            self.best = Solution {
                assignments: self.path.clone(),
                overflow: BinAssignment::from_members(remaining.iter().copied()),
                objective: covered,
            };
        }
        let bound = covered + covering_upper_bound(remaining, self.quota);
        if bound <= self.best.objective {
            return;
        }
        let seed = remaining[0].id;
        let mut cursor = match open_cursor(Side::Covering, self.quota, remaining, Some(seed)) {
            Ok(cursor) => cursor,
            Err(_) => return,
        };
        let mut resolved: Vec<BinAssignment> = Vec::new();
        loop {
            let mut batch = cursor.next_batch(self.h);
            if batch.is_empty() {
                break;
            }
            order_batch(&mut batch, self.ordering);
            for asg in batch {
                if self.limits.stopped() {
                    return;
                }
                // The incumbent may have improved under an earlier child;
                // the node bound itself is fixed, so re-test it.
                if bound <= self.best.objective {
                    return;
                }
                let policy = effective_policy(self.cfg, self.stack.depth());
                let ctx = PruneContext {
                    side: Side::Covering,
                    kind: DominanceKind::Covering,
                    cand_bound: self.quota,
                    cand_seed: Some(seed),
                };
                if policy != Pruning::None
                    && apply_pruning(&asg, self.items, &self.stack, policy, &ctx)
                {
                    resolved.push(asg);
                    continue;
                }
                let next = remove_assigned(remaining, &asg);
                self.path.push(asg.clone());
                if self.cfg.pruning == Pruning::None {
                    self.node(&next, covered + 1);
                } else {
                    let records = resolved
                        .iter()
                        .map(|r| {
                            NogoodRecord::from_assignments(r, &asg, self.items, Some(seed), self.quota)
                        })
                        .collect();
                    self.stack.push_frame(records);
                    if self.cfg.pruning == Pruning::Np {
                        let saved = self.stack.clone();
                        self.stack = compact_stack(&self.stack, &next);
                        self.node(&next, covered + 1);
                        self.stack = saved;
                    } else {
                        self.node(&next, covered + 1);
                    }
                    self.stack.pop_frame();
                }
                self.path.pop();
                resolved.push(asg);
            }
        }
    }
}

/// Solves a bin covering instance with bin-completion branch-and-bound.
pub fn solve_bincovering(inst: &Instance, cfg: &SolverConfig) -> SolveReport {
    assert_eq!(inst.kind(), ProblemKind::BinCovering, "kind mismatch");
    let start = Instant::now();
    let quota = inst.uniform_bound();
    let mut search = CoveringSearch {
        items: inst.items(),
        quota,
        cfg,
        ordering: cfg.ordering.unwrap_or(ValueOrdering::default_for(inst.kind())),
        h: cfg.h.unwrap_or(BatchWidth::default_for(inst.kind())).width(),
        limits: Limits::new(cfg),
        stack: NogoodStack::new(),
        path: Vec::new(),
        best: covering_greedy_lower(inst.items(), quota),
    };
    search.node(inst.items(), 0);
    let status = search.limits.status(Status::Optimal);
    SolveReport {
        objective: search.best.objective,
        solution: search.best,
        nodes: search.limits.nodes,
        elapsed: start.elapsed(),
        status,
    }
}

// ---------------------------------------------------------------------------
// Min-cost covering
// ---------------------------------------------------------------------------

struct MccpSearch<'a> {
    items: &'a [Item],
    bins: Vec<(usize, i64)>,
    cfg: &'a SolverConfig,
    ordering: ValueOrdering,
    h: usize,
    limits: Limits,
    stack: NogoodStack,
    current: Vec<BinAssignment>,
    best: Option<(i64, Vec<BinAssignment>)>,
}

impl MccpSearch<'_> {
    fn node(&mut self, pos: usize, remaining: &[Item], accrued: i64) {
        if !self.limits.enter_node() {
            return;
        }
        if pos == self.bins.len() {
            if self.best.as_ref().map_or(true, |(cost, _)| accrued < *cost) {
                self.best = Some((accrued, self.current.clone()));
            }
            return;
        }
        let quotas: Vec<i64> = self.bins[pos..].iter().map(|b| b.1).collect();
        match mccp_l2_bound(remaining, &quotas) {
            None => return,
            Some(lb) => {
                if let Some((cost, _)) = &self.best {
                    if accrued + lb >= *cost {
                        return;
                    }
                }
            }
        }
        let (orig_idx, quota) = self.bins[pos];
        let mut cursor = match open_cursor(Side::Covering, quota, remaining, None) {
            Ok(cursor) => cursor,
            Err(_) => return,
        };
        let mut resolved: Vec<BinAssignment> = Vec::new();
        loop {
            let mut batch = cursor.next_batch(self.h);
            if batch.is_empty() {
                break;
            }
            order_batch(&mut batch, self.ordering);
            for asg in batch {
                if self.limits.stopped() {
                    return;
                }
                let policy = effective_policy(self.cfg, self.stack.depth());
                let ctx = PruneContext {
                    side: Side::Covering,
                    kind: DominanceKind::MccpCovering,
                    cand_bound: quota,
                    cand_seed: None,
                };
                if policy != Pruning::None
                    && apply_pruning(&asg, self.items, &self.stack, policy, &ctx)
                {
                    resolved.push(asg);
                    continue;
                }
                let next = remove_assigned(remaining, &asg);
                let cost = asg.value_sum();
                self.current[orig_idx] = asg.clone();
                if self.cfg.pruning == Pruning::None {
                    self.node(pos + 1, &next, accrued + cost);
                } else {
                    let records = resolved
                        .iter()
                        .map(|r| NogoodRecord::from_assignments(r, &asg, self.items, None, quota))
                        .collect();
                    self.stack.push_frame(records);
                    if self.cfg.pruning == Pruning::Np {
                        let saved = self.stack.clone();
                        self.stack = compact_stack(&self.stack, &next);
                        self.node(pos + 1, &next, accrued + cost);
                        self.stack = saved;
                    } else {
                        self.node(pos + 1, &next, accrued + cost);
                    }
                    self.stack.pop_frame();
                }
                self.current[orig_idx] = BinAssignment::empty();
                resolved.push(asg);
            }
        }
    }
}

/// Solves a min-cost covering instance with bin-completion
/// branch-and-bound. Containers are covered in order of non-decreasing
/// quota; every container must be covered, so instances whose items
/// cannot meet all quotas report [`Status::Infeasible`].
pub fn solve_mccp(inst: &Instance, cfg: &SolverConfig) -> SolveReport {
    assert_eq!(inst.kind(), ProblemKind::Mccp, "kind mismatch");
    let start = Instant::now();
    let m = inst.m();
    let mut bins: Vec<(usize, i64)> = inst.containers().iter().copied().enumerate().collect();
    bins.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    let mut search = MccpSearch {
        items: inst.items(),
        bins,
        cfg,
        ordering: cfg.ordering.unwrap_or(ValueOrdering::default_for(inst.kind())),
        h: cfg.h.unwrap_or(BatchWidth::default_for(inst.kind())).width(),
        limits: Limits::new(cfg),
        stack: NogoodStack::new(),
        current: vec![BinAssignment::empty(); m],
        best: None,
    };
    search.node(0, inst.items(), 0);
    let (exhausted, objective, assignments) = match search.best {
        Some((cost, assignments)) => (Status::Optimal, cost, assignments),
        None => (Status::Infeasible, 0, vec![BinAssignment::empty(); m]),
    };
    let status = search.limits.status(exhausted);
    SolveReport {
        solution: Solution {
            assignments,
            overflow: BinAssignment::empty(),
            objective,
        },
        objective,
        nodes: search.limits.nodes,
        elapsed: start.elapsed(),
        status,
    }
}

// ---------------------------------------------------------------------------
// Item-oriented baseline
// ---------------------------------------------------------------------------

/// Feasible placements for one item given current bin loads: every
/// existing bin with room, in creation order, then a fresh bin (`None`).
fn branch_targets_packing(loads: &[i64], capacity: i64, weight: i64) -> Vec<Option<usize>> {
    let mut targets: Vec<Option<usize>> = (0..loads.len())
        .filter(|&b| loads[b] + weight <= capacity)
        .map(Some)
        .collect();
    targets.push(None);
    targets
}

struct BaselinePacking<'a> {
    items: &'a [Item],
    capacity: i64,
    suffix_w: Vec<i64>,
    root_lower: i64,
    limits: Limits,
    bins: Vec<Vec<usize>>,
    loads: Vec<i64>,
    best: Solution,
}

impl BaselinePacking<'_> {
    fn node(&mut self, idx: usize) {
        if !self.limits.enter_node() {
            return;
        }
        if idx == self.items.len() {
            let used = self.bins.len() as i64;
            if used < self.best.objective {
                self.best = Solution {
                    assignments: self
                        .bins
                        .iter()
                        .map(|ids| BinAssignment::new(ids.iter().copied(), self.items))
                        .collect(),
                    overflow: BinAssignment::empty(),
                    objective: used,
                };
            }
            return;
        }
        // Residual-aware completion bound: the unplaced weight beyond the
        // free space of open bins forces at least that many fresh bins.
        let used = self.bins.len() as i64;
        let free: i64 = self.loads.iter().map(|l| self.capacity - l).sum();
        let overflowing = (self.suffix_w[idx] - free).max(0);
        let extra = (overflowing + self.capacity - 1) / self.capacity;
        if (used + extra).max(self.root_lower) >= self.best.objective {
            return;
        }
        let weight = self.items[idx].weight;
        for target in branch_targets_packing(&self.loads, self.capacity, weight) {
            if self.limits.stopped() {
                return;
            }
            match target {
                Some(b) => {
                    self.loads[b] += weight;
                    self.bins[b].push(self.items[idx].id);
                    self.node(idx + 1);
                    self.bins[b].pop();
                    self.loads[b] -= weight;
                }
                None => {
                    self.loads.push(weight);
                    self.bins.push(vec![self.items[idx].id]);
                    self.node(idx + 1);
                    self.bins.pop();
                    self.loads.pop();
                }
            }
        }
    }
}

struct BaselineMkp<'a> {
    items: &'a [Item],
    /// Branching sequence over item ids: non-increasing efficiency with
    /// seeded random tie-breaks (the classic item-oriented variable order;
    /// under subset-sum profits every efficiency ties, so the sequence is
    /// effectively a seeded shuffle, as in the original Fortran solvers).
    order: Vec<usize>,
    capacities: &'a [i64],
    limits: Limits,
    bins: Vec<Vec<usize>>,
    loads: Vec<i64>,
    best_profit: i64,
    best: Vec<BinAssignment>,
}

/// Item ids sorted by non-increasing value density; ties keep a seeded
/// shuffle so equal-efficiency items branch in pseudo-random order.
fn efficiency_order(items: &[Item], seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    let mut rng = SplitMix64::new(seed ^ 0x5851_F42D_4C95_7F2D);
    for i in (1..order.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    order.sort_by(|&a, &b| {
        (items[b].value * items[a].weight).cmp(&(items[a].value * items[b].weight))
    });
    order
}

impl BaselineMkp<'_> {
    fn node(&mut self, d: usize, profit: i64) {
        if !self.limits.enter_node() {
            return;
        }
        if d == self.order.len() {
            if profit > self.best_profit {
                self.best_profit = profit;
                self.best = self
                    .bins
                    .iter()
                    .map(|ids| BinAssignment::new(ids.iter().copied(), self.items))
                    .collect();
            }
            return;
        }
        let rest: Vec<Item> = self.order[d..].iter().map(|&i| self.items[i]).collect();
        let residuals: Vec<i64> = (0..self.capacities.len())
            .map(|b| self.capacities[b] - self.loads[b])
            .collect();
        let upper = profit + smkp_upper_bound(&rest, &residuals);
        if upper <= self.best_profit {
            return;
        }
        // Bound-and-bound: materialize the greedy completion as an
        // incumbent and close the subtree when it meets the upper bound.
        let greedy = mtm_greedy_bound(&rest, &residuals);
        if profit + greedy.objective > self.best_profit {
            self.best_profit = profit + greedy.objective;
            self.best = (0..self.capacities.len())
                .map(|b| {
                    let mut ids = self.bins[b].clone();
                    ids.extend(greedy.assignments[b].item_ids().iter().copied());
                    BinAssignment::new(ids.iter().copied(), self.items)
                })
                .collect();
        }
        if profit + greedy.objective == upper {
            return;
        }
        let item = self.items[self.order[d]];
        for b in 0..self.capacities.len() {
            if self.loads[b] + item.weight > self.capacities[b] {
                continue;
            }
            if self.limits.stopped() {
                return;
            }
            self.loads[b] += item.weight;
            self.bins[b].push(item.id);
            self.node(d + 1, profit + item.value);
            self.bins[b].pop();
            self.loads[b] -= item.weight;
        }
        if self.limits.stopped() {
            return;
        }
        self.node(d + 1, profit);
    }
}

struct BaselineCovering<'a> {
    items: &'a [Item],
    quota: i64,
    suffix_w: Vec<i64>,
    limits: Limits,
    bins: Vec<Vec<usize>>,
    loads: Vec<i64>,
    discard: Vec<usize>,
    best: Solution,
}

impl BaselineCovering<'_> {
    fn node(&mut self, idx: usize) {
        if !self.limits.enter_node() {
            return;
        }
        if idx == self.items.len() {
            if self.loads.iter().all(|&l| l >= self.quota) {
                let covered = self.bins.len() as i64;
                if covered > self.best.objective {
                    self.best = Solution {
                        assignments: self
                            .bins
                            .iter()
                            .map(|ids| BinAssignment::new(ids.iter().copied(), self.items))
                            .collect(),
                        overflow: BinAssignment::new(self.discard.iter().copied(), self.items),
                        objective: covered,
                    };
                }
            }
            return;
        }
        // Counting bound: open-bin loads rejoin the unplaced pool for the
        // purpose of bounding how many covered bins can still be formed.
        let covered = self.loads.iter().filter(|&&l| l >= self.quota).count() as i64;
        let open: i64 = self.loads.iter().filter(|&&l| l < self.quota).sum();
        if covered + (self.suffix_w[idx] + open) / self.quota <= self.best.objective {
            return;
        }
        let item = self.items[idx];
        for b in 0..self.bins.len() {
            if self.loads[b] >= self.quota {
                continue;
            }
            if self.limits.stopped() {
                return;
            }
            self.loads[b] += item.weight;
            self.bins[b].push(item.id);
            self.node(idx + 1);
            self.bins[b].pop();
            self.loads[b] -= item.weight;
        }
        if self.limits.stopped() {
            return;
        }
        self.loads.push(item.weight);
        self.bins.push(vec![item.id]);
        self.node(idx + 1);
        self.bins.pop();
        self.loads.pop();
        if self.limits.stopped() {
            return;
        }
        self.discard.push(item.id);
        self.node(idx + 1);
        self.discard.pop();
    }
}

struct BaselineMccp<'a> {
    items: &'a [Item],
    quotas: &'a [i64],
    limits: Limits,
    bins: Vec<Vec<usize>>,
    loads: Vec<i64>,
    best: Option<(i64, Vec<BinAssignment>)>,
}

impl BaselineMccp<'_> {
    fn node(&mut self, idx: usize, accrued: i64) {
        if !self.limits.enter_node() {
            return;
        }
        if idx == self.items.len() {
            if (0..self.quotas.len()).all(|b| self.loads[b] >= self.quotas[b])
                && self.best.as_ref().map_or(true, |(cost, _)| accrued < *cost)
            {
                let assignments = self
                    .bins
                    .iter()
                    .map(|ids| BinAssignment::new(ids.iter().copied(), self.items))
                    .collect();
                self.best = Some((accrued, assignments));
            }
            return;
        }
        let rest = &self.items[idx..];
        let mut completion = 0i64;
        for b in 0..self.quotas.len() {
            let need = self.quotas[b] - self.loads[b];
            match min_cost_cover(rest, need) {
                CoverOutcome::Feasible { cost, .. } => completion += cost,
                CoverOutcome::Infeasible => return,
            }
        }
        if let Some((cost, _)) = &self.best {
            if accrued + completion >= *cost {
                return;
            }
        }
        let item = self.items[idx];
        for b in 0..self.quotas.len() {
            if self.loads[b] >= self.quotas[b] {
                continue;
            }
            if self.limits.stopped() {
                return;
            }
            self.loads[b] += item.weight;
            self.bins[b].push(item.id);
            self.node(idx + 1, accrued + item.value);
            self.bins[b].pop();
            self.loads[b] -= item.weight;
        }
        if self.limits.stopped() {
            return;
        }
        self.node(idx + 1, accrued);
    }
}

/// Solves an instance with the item-oriented branch-and-bound baseline.
///
/// Items are considered largest-first (non-increasing efficiency with
/// seeded random tie-breaks for the knapsack variant, the classic MTM
/// variable order); each node places the next item into an existing bin
/// (creation order), a fresh bin (uniform-bin kinds), or the discard set
/// (kinds that allow unassigned items). The baseline uses the same bounds
/// as the bin-completion solvers but no dominance pruning, so it isolates
/// the contribution of bin-oriented branching.
pub fn solve_item_oriented(inst: &Instance, cfg: &SolverConfig) -> SolveReport {
    let start = Instant::now();
    let items = inst.items();
    match inst.kind() {
        ProblemKind::BinPacking => {
            let capacity = inst.uniform_bound();
            if items.iter().any(|it| it.weight > capacity) {
                return SolveReport {
                    solution: Solution::default(),
                    objective: 0,
                    nodes: 0,
                    elapsed: start.elapsed(),
                    status: Status::Infeasible,
                };
            }
            let mut search = BaselinePacking {
                items,
                capacity,
                suffix_w: suffix_weights(items),
                root_lower: binpacking_lower_bound(items, capacity),
                limits: Limits::new(cfg),
                bins: Vec::new(),
                loads: Vec::new(),
                best: best_fit_decreasing(items, capacity),
            };
            search.node(0);
            let status = search.limits.status(Status::Optimal);
            SolveReport {
                objective: search.best.objective,
                solution: search.best,
                nodes: search.limits.nodes,
                elapsed: start.elapsed(),
                status,
            }
        }
        ProblemKind::Mkp => {
            let m = inst.m();
            let mut search = BaselineMkp {
                items,
                order: efficiency_order(items, cfg.rng_seed),
                capacities: inst.containers(),
                limits: Limits::new(cfg),
                bins: vec![Vec::new(); m],
                loads: vec![0; m],
                best_profit: 0,
                best: vec![BinAssignment::empty(); m],
            };
            search.node(0, 0);
            let status = search.limits.status(Status::Optimal);
            SolveReport {
                solution: Solution {
                    assignments: search.best,
                    overflow: BinAssignment::empty(),
                    objective: search.best_profit,
                },
                objective: search.best_profit,
                nodes: search.limits.nodes,
                elapsed: start.elapsed(),
                status,
            }
        }
        ProblemKind::BinCovering => {
            let quota = inst.uniform_bound();
            let mut search = BaselineCovering {
                items,
                quota,
                suffix_w: suffix_weights(items),
                limits: Limits::new(cfg),
                bins: Vec::new(),
                loads: Vec::new(),
                discard: Vec::new(),
                best: covering_greedy_lower(items, quota),
            };
            search.node(0);
            let status = search.limits.status(Status::Optimal);
            SolveReport {
                objective: search.best.objective,
                solution: search.best,
                nodes: search.limits.nodes,
                elapsed: start.elapsed(),
                status,
            }
        }
        ProblemKind::Mccp => {
            let m = inst.m();
            let mut search = BaselineMccp {
                items,
                quotas: inst.containers(),
                limits: Limits::new(cfg),
                bins: vec![Vec::new(); m],
                loads: vec![0; m],
                best: None,
            };
            search.node(0, 0);
            let (exhausted, objective, assignments) = match search.best {
                Some((cost, assignments)) => (Status::Optimal, cost, assignments),
                None => (Status::Infeasible, 0, vec![BinAssignment::empty(); m]),
            };
            let status = search.limits.status(exhausted);
            SolveReport {
                solution: Solution {
                    assignments,
                    overflow: BinAssignment::empty(),
                    objective,
                },
                objective,
                nodes: search.limits.nodes,
                elapsed: start.elapsed(),
                status,
            }
        }
    }
}

fn suffix_weights(items: &[Item]) -> Vec<i64> {
    let mut suffix = vec![0i64; items.len() + 1];
    for i in (0..items.len()).rev() {
        suffix[i] = suffix[i + 1] + items[i].weight;
    }
    suffix
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

/// Error returned by [`solve_exhaustive`] for instances too large to
/// enumerate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("exhaustive oracle accepts at most {EXHAUSTIVE_LIMIT} items, instance has {0}")]
pub struct TooLargeForOracle(pub usize);

struct OraclePartition<'a> {
    items: &'a [Item],
    bound: i64,
    covering: bool,
    group_cap: usize,
    nodes: u64,
    groups: Vec<Vec<usize>>,
    sums: Vec<i64>,
    discard: Vec<usize>,
    best: Option<(i64, Vec<Vec<usize>>, Vec<usize>)>,
}

impl OraclePartition<'_> {
    /// Enumerates set partitions (restricted growth: a fresh group is only
    /// ever opened as the next index) with elementary feasibility pruning.
    fn rec(&mut self, idx: usize) {
        self.nodes += 1;
        if idx == self.items.len() {
            if self.covering {
                if self.sums.iter().all(|&s| s >= self.bound) {
                    let covered = self.groups.len() as i64;
                    if self.best.as_ref().map_or(true, |(obj, _, _)| covered > *obj) {
                        self.best = Some((covered, self.groups.clone(), self.discard.clone()));
                    }
                }
            } else {
                let used = self.groups.len() as i64;
                if self.best.as_ref().map_or(true, |(obj, _, _)| used < *obj) {
                    self.best = Some((used, self.groups.clone(), Vec::new()));
                }
            }
            return;
        }
        if !self.covering {
            if let Some((obj, _, _)) = &self.best {
                if self.groups.len() as i64 >= *obj {
                    return;
                }
            }
        }
        let item = self.items[idx];
        for g in 0..self.groups.len() {
            if !self.covering && self.sums[g] + item.weight > self.bound {
                continue;
            }
            self.sums[g] += item.weight;
            self.groups[g].push(item.id);
            self.rec(idx + 1);
            self.groups[g].pop();
            self.sums[g] -= item.weight;
        }
        if self.groups.len() < self.group_cap {
            self.sums.push(item.weight);
            self.groups.push(vec![item.id]);
            self.rec(idx + 1);
            self.groups.pop();
            self.sums.pop();
        }
        if self.covering {
            self.discard.push(item.id);
            self.rec(idx + 1);
            self.discard.pop();
        }
    }
}

struct OracleLabeled<'a> {
    items: &'a [Item],
    bounds: &'a [i64],
    covering: bool,
    nodes: u64,
    bins: Vec<Vec<usize>>,
    sums: Vec<i64>,
    best: Option<(i64, Vec<Vec<usize>>)>,
}

impl OracleLabeled<'_> {
    /// Enumerates assignments of each item to a labeled container or the
    /// discard set, with only capacity/shortfall feasibility pruning.
    fn rec(&mut self, idx: usize, value_acc: i64, weight_left: i64) {
        self.nodes += 1;
        if idx == self.items.len() {
            if self.covering {
                if (0..self.bounds.len()).all(|b| self.sums[b] >= self.bounds[b]) {
                    let cost = value_acc;
                    if self.best.as_ref().map_or(true, |(obj, _)| cost < *obj) {
                        self.best = Some((cost, self.bins.clone()));
                    }
                }
            } else if self.best.as_ref().map_or(true, |(obj, _)| value_acc > *obj) {
                self.best = Some((value_acc, self.bins.clone()));
            }
            return;
        }
        if self.covering {
            let shortfall: i64 = (0..self.bounds.len())
                .map(|b| (self.bounds[b] - self.sums[b]).max(0))
                .sum();
            if weight_left < shortfall {
                return;
            }
        } else {
            // Even taking every remaining item cannot beat the incumbent.
            let optimistic: i64 = self.items[idx..].iter().map(|it| it.value).sum();
            if let Some((obj, _)) = &self.best {
                if value_acc + optimistic <= *obj {
                    return;
                }
            }
        }
        let item = self.items[idx];
        for b in 0..self.bounds.len() {
            if !self.covering && self.sums[b] + item.weight > self.bounds[b] {
                continue;
            }
            if self.covering && self.sums[b] >= self.bounds[b] {
                continue;
            }
            self.sums[b] += item.weight;
            self.bins[b].push(item.id);
            self.rec(idx + 1, value_acc + item.value, weight_left - item.weight);
            self.bins[b].pop();
            self.sums[b] -= item.weight;
        }
        self.rec(idx + 1, value_acc, weight_left - item.weight);
    }
}

/// Solves a tiny instance by exhaustive enumeration with only elementary
/// feasibility pruning. Independent of the branch-and-bound machinery, so
/// it serves as a ground-truth oracle; rejects instances with more than
/// [`EXHAUSTIVE_LIMIT`] items.
pub fn solve_exhaustive(inst: &Instance) -> Result<SolveReport, TooLargeForOracle> {
    if inst.n() > EXHAUSTIVE_LIMIT {
        return Err(TooLargeForOracle(inst.n()));
    }
    let start = Instant::now();
    let items = inst.items();
    let report = match inst.kind() {
        ProblemKind::BinPacking => {
            let capacity = inst.uniform_bound();
            if items.iter().any(|it| it.weight > capacity) {
                return Ok(SolveReport {
                    solution: Solution::default(),
                    objective: 0,
                    nodes: 0,
                    elapsed: start.elapsed(),
                    status: Status::Infeasible,
                });
            }
            let mut oracle = OraclePartition {
                items,
                bound: capacity,
                covering: false,
                group_cap: items.len(),
                nodes: 0,
                groups: Vec::new(),
                sums: Vec::new(),
                discard: Vec::new(),
                best: None,
            };
            oracle.rec(0);
            let (objective, groups, _) = oracle.best.expect("packing always has a partition");
            SolveReport {
                solution: Solution {
                    assignments: groups.iter().map(|g| BinAssignment::new(g.iter().copied(), items)).collect(),
                    overflow: BinAssignment::empty(),
                    objective,
                },
                objective,
                nodes: oracle.nodes,
                elapsed: start.elapsed(),
                status: Status::Optimal,
            }
        }
        ProblemKind::BinCovering => {
            let quota = inst.uniform_bound();
            let total: i64 = items.iter().map(|it| it.weight).sum();
            let cap = (total / quota.max(1)).max(0) as usize;
            let mut oracle = OraclePartition {
                items,
                bound: quota,
                covering: true,
                group_cap: cap.min(items.len()),
                nodes: 0,
                groups: Vec::new(),
                sums: Vec::new(),
                discard: Vec::new(),
                best: None,
            };
            oracle.rec(0);
            let (objective, groups, discard) =
                oracle.best.expect("the empty covering is always feasible");
            SolveReport {
                solution: Solution {
                    assignments: groups.iter().map(|g| BinAssignment::new(g.iter().copied(), items)).collect(),
                    overflow: BinAssignment::new(discard.iter().copied(), items),
                    objective,
                },
                objective,
                nodes: oracle.nodes,
                elapsed: start.elapsed(),
                status: Status::Optimal,
            }
        }
        ProblemKind::Mkp => {
            let mut oracle = OracleLabeled {
                items,
                bounds: inst.containers(),
                covering: false,
                nodes: 0,
                bins: vec![Vec::new(); inst.m()],
                sums: vec![0; inst.m()],
                best: None,
            };
            let total: i64 = items.iter().map(|it| it.weight).sum();
            oracle.rec(0, 0, total);
            let (objective, bins) = oracle.best.expect("the empty assignment is feasible");
            SolveReport {
                solution: Solution {
                    assignments: bins.iter().map(|b| BinAssignment::new(b.iter().copied(), items)).collect(),
                    overflow: BinAssignment::empty(),
                    objective,
                },
                objective,
                nodes: oracle.nodes,
                elapsed: start.elapsed(),
                status: Status::Optimal,
            }
        }
        ProblemKind::Mccp => {
            let mut oracle = OracleLabeled {
                items,
                bounds: inst.containers(),
                covering: true,
                nodes: 0,
                bins: vec![Vec::new(); inst.m()],
                sums: vec![0; inst.m()],
                best: None,
            };
            let total: i64 = items.iter().map(|it| it.weight).sum();
            oracle.rec(0, 0, total);
            match oracle.best {
                Some((objective, bins)) => {
                    let assignments: Vec<BinAssignment> =
                        bins.iter().map(|b| BinAssignment::new(b.iter().copied(), items)).collect();
                    SolveReport {
                        solution: Solution {
                            assignments,
                            overflow: BinAssignment::empty(),
                            objective,
                        },
                        objective,
                        nodes: oracle.nodes,
                        elapsed: start.elapsed(),
                        status: Status::Optimal,
                    }
                }
                None => SolveReport {
                    solution: Solution {
                        assignments: vec![BinAssignment::empty(); inst.m()],
                        overflow: BinAssignment::empty(),
                        objective: 0,
                    },
                    objective: 0,
                    nodes: oracle.nodes,
                    elapsed: start.elapsed(),
                    status: Status::Infeasible,
                },
            }
        }
    };
    Ok(report)
}

/// Solves an instance with the bin-completion solver for its kind.
pub fn solve(inst: &Instance, cfg: &SolverConfig) -> SolveReport {
    match inst.kind() {
        ProblemKind::BinPacking => solve_binpacking(inst, cfg),
        ProblemKind::Mkp => solve_mkp(inst, cfg),
        ProblemKind::BinCovering => solve_bincovering(inst, cfg),
        ProblemKind::Mccp => solve_mccp(inst, cfg),
    }
}
