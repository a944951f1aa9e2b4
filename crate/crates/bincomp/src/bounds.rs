//! Bounding functions shared by the solvers: exact single-knapsack solves,
//! aggregate relaxations for the multi-bin kinds, counting bounds for
//! covering, the wasted-space lower bound for packing, and the best-fit /
//! greedy heuristics used as initial incumbents.
//!
//! All bounds are admissible: upper bounds never under-estimate a maximizing
//! objective, lower bounds never over-estimate a minimizing one, so pruning
//! against them preserves exactness.

use crate::core::{BinAssignment, Item, Solution};

/// Outcome of [`knapsack_max`]: the optimal value and one optimal selection
/// (item ids, ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnapsackResult {
    pub best_value: i64,
    pub selection: Vec<usize>,
}

/// Ceiling division for non-negative numerators.
fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(a >= 0 && b > 0);
    (a + b - 1) / b
}

/// Largest table (entries) the dynamic-programming paths may allocate before
/// falling back to branch-and-bound.
const DP_LIMIT: u128 = 1 << 21;

/// Exact 0-1 knapsack: maximize total value with total weight <= `capacity`.
///
/// Two engines produce identical results: a classic `O(n*c)` table when the
/// table is small (subset-sum-like inputs defeat efficiency-based bounding,
/// and those are exactly the small-capacity cases), otherwise
/// branch-and-bound over efficiency-sorted items with the fractional
/// relaxation as upper bound.
pub fn knapsack_max(items: &[Item], capacity: i64) -> KnapsackResult {
    let fitting: Vec<&Item> = items
        .iter()
        .filter(|it| it.weight <= capacity)
        .collect();
    if fitting.is_empty() || capacity <= 0 {
        return KnapsackResult {
            best_value: 0,
            selection: Vec::new(),
        };
    }
    let n = fitting.len();
    if (n as u128 + 1) * (capacity as u128 + 1) <= DP_LIMIT {
        knapsack_dp(&fitting, capacity)
    } else {
        knapsack_bb(&fitting, capacity)
    }
}

fn knapsack_dp(items: &[&Item], capacity: i64) -> KnapsackResult {
    let c = capacity as usize;
    let words = c / 64 + 1;
    let mut dp = vec![0i64; c + 1];
    // take[i] is a bitset over weights: bit w set = item i improved state w.
    let mut take = vec![0u64; items.len() * words];
    for (i, it) in items.iter().enumerate() {
        let w = it.weight as usize;
        for s in (w..=c).rev() {
            let cand = dp[s - w] + it.value;
            if cand > dp[s] {
                dp[s] = cand;
                take[i * words + s / 64] |= 1 << (s % 64);
            }
        }
    }
    // dp[s] is non-decreasing in s by construction order? Not guaranteed;
    // take the best state explicitly.
    let mut best_state = 0;
    for s in 0..=c {
        if dp[s] > dp[best_state] {
            best_state = s;
        }
    }
    let mut selection = Vec::new();
    let mut s = best_state;
    for i in (0..items.len()).rev() {
        if take[i * words + s / 64] >> (s % 64) & 1 == 1 {
            // The bit guarantees item i produced dp[s] at its pass only if
            // no later item overwrote the state; re-check consistency.
            let w = items[i].weight as usize;
            if s >= w {
                selection.push(items[i].id);
                s -= w;
            }
        }
    }
    selection.sort_unstable();
    KnapsackResult {
        best_value: dp[best_state],
        selection,
    }
}

fn knapsack_bb(items: &[&Item], capacity: i64) -> KnapsackResult {
    // Efficiency order: value per weight descending (cross-multiplied to
    // stay in integers), heavier first on ties, then id.
    let mut order: Vec<&Item> = items.to_vec();
    order.sort_by(|a, b| {
        let lhs = a.value as i128 * b.weight as i128;
        let rhs = b.value as i128 * a.weight as i128;
        rhs.cmp(&lhs)
            .then(b.weight.cmp(&a.weight))
            .then(a.id.cmp(&b.id))
    });
    let suffix_w: Vec<i64> = suffix_sums(order.iter().map(|it| it.weight));
    let suffix_v: Vec<i64> = suffix_sums(order.iter().map(|it| it.value));

    struct Search<'a> {
        order: &'a [&'a Item],
        suffix_w: &'a [i64],
        suffix_v: &'a [i64],
        best: i64,
        best_sel: Vec<usize>,
        cur: Vec<usize>,
    }
    impl Search<'_> {
        /// Fractional relaxation of the remaining items into the residual.
        fn bound(&self, idx: usize, residual: i64) -> i64 {
            let mut b = 0;
            let mut res = residual;
            for i in idx..self.order.len() {
                let it = self.order[i];
                if it.weight <= res {
                    res -= it.weight;
                    b += it.value;
                } else {
                    b += it.value * res / it.weight;
                    return b;
                }
            }
            b
        }
        fn dfs(&mut self, idx: usize, residual: i64, value: i64) {
            if idx == self.order.len() {
                if value > self.best {
                    self.best = value;
                    self.best_sel = self.cur.clone();
                }
                return;
            }
            // everything left fits: take it all
            if self.suffix_w[idx] <= residual {
                let total = value + self.suffix_v[idx];
                if total > self.best {
                    self.best = total;
                    let mut sel = self.cur.clone();
                    sel.extend(self.order[idx..].iter().map(|it| it.id));
                    self.best_sel = sel;
                }
                return;
            }
            if value + self.bound(idx, residual) <= self.best {
                return;
            }
            let it = self.order[idx];
            if it.weight <= residual {
                self.cur.push(it.id);
                self.dfs(idx + 1, residual - it.weight, value + it.value);
                self.cur.pop();
            }
            self.dfs(idx + 1, residual, value);
        }
    }
    let mut s = Search {
        order: &order,
        suffix_w: &suffix_w,
        suffix_v: &suffix_v,
        best: -1,
        best_sel: Vec::new(),
        cur: Vec::new(),
    };
    s.dfs(0, capacity, 0);
    let mut selection = s.best_sel;
    selection.sort_unstable();
    KnapsackResult {
        best_value: s.best.max(0),
        selection,
    }
}

fn suffix_sums(vals: impl Iterator<Item = i64>) -> Vec<i64> {
    let v: Vec<i64> = vals.collect();
    let mut out = vec![0; v.len() + 1];
    for i in (0..v.len()).rev() {
        out[i] = out[i + 1] + v[i];
    }
    out
}

/// Surrogate relaxation for the 0-1 multiple knapsack: one knapsack whose
/// capacity is the sum of all bin capacities. Always an upper bound on the
/// assignable profit.
pub fn smkp_upper_bound(items: &[Item], capacities: &[i64]) -> i64 {
    knapsack_max(items, capacities.iter().sum()).best_value
}

/// Greedy MKP bound in the Martello-Toth style: the bins are solved one
/// after the other as independent knapsacks over the still-unused items.
/// The result is a feasible solution (hence a lower bound); assignments
/// align with `capacities` and keep the callers' item ids.
pub fn mtm_greedy_bound(items: &[Item], capacities: &[i64]) -> Solution {
    let mut remaining: Vec<Item> = items.to_vec();
    let mut assignments = Vec::with_capacity(capacities.len());
    let mut objective = 0;
    for &c in capacities {
        let res = knapsack_max(&remaining, c);
        objective += res.best_value;
        assignments.push(BinAssignment::from_members(
            remaining
                .iter()
                .filter(|it| res.selection.contains(&it.id))
                .copied(),
        ));
        remaining.retain(|it| !res.selection.contains(&it.id));
    }
    Solution {
        assignments,
        overflow: BinAssignment::empty(),
        objective,
    }
}

/// Result of [`min_cost_cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverOutcome {
    /// Cheapest selection with weight sum >= quota.
    Feasible { cost: i64, selection: Vec<usize> },
    /// Even the full item set stays below the quota.
    Infeasible,
}

/// Exact minimum-cost cover of a single quota: the cheapest item subset with
/// weight sum >= `quota`.
///
/// Solved through the complement identity: a subset S covers the quota
/// exactly when its complement T fits the weight budget `sum(w) - quota`,
/// and cost(S) = total_cost - value(T); minimizing cost(S) is maximizing
/// value(T). This inherits [`knapsack_max`]'s exact engines (table or
/// branch-and-bound) unchanged.
pub fn min_cost_cover(items: &[Item], quota: i64) -> CoverOutcome {
    let total_w: i64 = items.iter().map(|it| it.weight).sum();
    if quota <= 0 {
        return CoverOutcome::Feasible {
            cost: 0,
            selection: Vec::new(),
        };
    }
    if total_w < quota {
        return CoverOutcome::Infeasible;
    }
    let total_v: i64 = items.iter().map(|it| it.value).sum();
    let spare = knapsack_max(items, total_w - quota);
    let mut selection: Vec<usize> = items
        .iter()
        .map(|it| it.id)
        .filter(|id| !spare.selection.contains(id))
        .collect();
    selection.sort_unstable();
    CoverOutcome::Feasible {
        cost: total_v - spare.best_value,
        selection,
    }
}

/// Per-bin additive relaxation for MCCP: each quota is covered from the full
/// item set independently (items may be counted twice across bins, never
/// within one). `None` when some quota cannot be covered at all.
pub fn mccp_l2_bound(items: &[Item], quotas: &[i64]) -> Option<i64> {
    let mut sum = 0;
    for &q in quotas {
        match min_cost_cover(items, q) {
            CoverOutcome::Feasible { cost, .. } => sum += cost,
            CoverOutcome::Infeasible => return None,
        }
    }
    Some(sum)
}

/// Counting upper bound for bin covering: `floor(sum(weights) / quota)`.
pub fn covering_upper_bound(items: &[Item], quota: i64) -> i64 {
    debug_assert!(quota >= 1);
    items.iter().map(|it| it.weight).sum::<i64>() / quota
}

/// Greedy bin covering: fill one bin at a time with the heaviest remaining
/// items until it reaches the quota; once the leftovers cannot cover another
/// bin they become overflow. Returns a feasible solution (a lower bound).
pub fn covering_greedy_lower(items: &[Item], quota: i64) -> Solution {
    let mut order: Vec<&Item> = items.iter().collect();
    order.sort_by(|a, b| b.weight.cmp(&a.weight).then(a.id.cmp(&b.id)));
    let mut assignments = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut cur_w = 0;
    let mut overflow: Vec<usize> = Vec::new();
    for it in order {
        cur.push(it.id);
        cur_w += it.weight;
        if cur_w >= quota {
            assignments.push(BinAssignment::new(cur.drain(..), items));
            cur_w = 0;
        }
    }
    overflow.extend(cur);
    let objective = assignments.len() as i64;
    Solution {
        assignments,
        overflow: BinAssignment::new(overflow, items),
        objective,
    }
}

/// Wasted-space lower bound for bin packing.
///
/// For each threshold `alpha` (zero and every distinct weight <= c/2) split
/// the items into
/// `J1 = {w > c - alpha}`, `J2 = {c - alpha >= w > c/2}`, `J3 = {c/2 >= w >= alpha}`:
/// J1 and J2 items need a bin each, and whatever part of `sum(J3)` does not
/// fit into the spare room of the J2 bins forces extra bins. The bound is
/// the maximum over all thresholds, never below `ceil(sum(w) / c)`.
pub fn binpacking_lower_bound(items: &[Item], capacity: i64) -> i64 {
    if items.is_empty() {
        return 0;
    }
    let c = capacity;
    let total: i64 = items.iter().map(|it| it.weight).sum();
    let mut best = ceil_div(total, c);
    let mut alphas: Vec<i64> = items
        .iter()
        .map(|it| it.weight)
        .filter(|&w| 2 * w <= c)
        .collect();
    alphas.push(0);
    alphas.sort_unstable();
    alphas.dedup();
    for &alpha in &alphas {
        let mut j1 = 0i64;
        let mut j2 = 0i64;
        let mut j2_sum = 0i64;
        let mut j3_sum = 0i64;
        for it in items {
            let w = it.weight;
            if w > c - alpha {
                j1 += 1;
            } else if 2 * w > c {
                j2 += 1;
                j2_sum += w;
            } else if w >= alpha {
                j3_sum += w;
            }
        }
        let spare = j2 * c - j2_sum;
        let extra = if j3_sum > spare {
            ceil_div(j3_sum - spare, c)
        } else {
            0
        };
        best = best.max(j1 + j2 + extra);
    }
    best
}

/// Best-fit-decreasing packing heuristic: items heaviest first, each into
/// the feasible bin with the smallest residual (ties: lowest bin index),
/// opening a new bin when none fits. Returns a feasible solution whose bin
/// count upper-bounds the optimum. Items must fit the capacity individually.
pub fn best_fit_decreasing(items: &[Item], capacity: i64) -> Solution {
    let mut order: Vec<&Item> = items.iter().collect();
    order.sort_by(|a, b| b.weight.cmp(&a.weight).then(a.id.cmp(&b.id)));
    let mut bins: Vec<(i64, Vec<usize>)> = Vec::new(); // (residual, ids)
    for it in order {
        let mut best: Option<usize> = None;
        for (i, (res, _)) in bins.iter().enumerate() {
            if *res >= it.weight && best.map_or(true, |b| *res < bins[b].0) {
                best = Some(i);
            }
        }
        match best {
            Some(i) => {
                bins[i].0 -= it.weight;
                bins[i].1.push(it.id);
            }
            None => bins.push((capacity - it.weight, vec![it.id])),
        }
    }
    let assignments: Vec<BinAssignment> = bins
        .into_iter()
        .map(|(_, ids)| BinAssignment::new(ids, items))
        .collect();
    let objective = assignments.len() as i64;
    Solution {
        assignments,
        overflow: BinAssignment::empty(),
        objective,
    }
}
