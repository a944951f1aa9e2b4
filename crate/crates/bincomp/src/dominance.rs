//! Dominance criteria between bin assignments.
//!
//! `dominates_*(a, b)` answers: may a search that commits assignment `a`
//! discard assignment `b` without losing optimality? The underlying swap
//! argument is per kind:
//!
//! * packing — every item (or group of items) of `b` fits inside a distinct
//!   item of `a`, so wherever `b`'s items went, `a`'s items can take their
//!   place without overflowing anything;
//! * covering — disjoint groups of `b`'s items each out-weigh a distinct
//!   item of `a` (leftover `b` items may stay unmatched), so `a` covers at
//!   least as well using at most as much material;
//! * valued kinds add the profit (resp. cost) direction to each match.
//!
//! All predicates are reflexive and the packing chain is ordered:
//! [`cmt_dominates`] implies [`mt_dominates_packing`].

use crate::core::{BinAssignment, Item};

/// Selects which criterion [`dominates`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominanceKind {
    /// One-to-one matching, weight only (packing).
    CmtPacking,
    /// Group-to-item matching, weight only (packing).
    MtPacking,
    /// Group-covers-item matching, weight only (covering).
    Covering,
    /// Group-to-item matching with profit caps (0-1 multiple knapsack).
    MkpPacking,
    /// Group-covers-item matching with cost floors (min-cost covering).
    MccpCovering,
}

/// `(weight, value)` view of an assignment's items, sorted by non-increasing
/// weight (ties by non-increasing value) — the internal currency of every
/// predicate here. Also used by the nogood module, whose records outlive the
/// assignments they came from.
pub(crate) fn pair_view(asg: &BinAssignment, items: &[Item]) -> Vec<(i64, i64)> {
    let mut v: Vec<(i64, i64)> = asg
        .item_ids()
        .iter()
        .map(|&id| (items[id].weight, items[id].value))
        .collect();
    sort_pairs(&mut v);
    v
}

pub(crate) fn sort_pairs(v: &mut [(i64, i64)]) {
    v.sort_by(|a, b| b.cmp(a));
}

/// One-to-one dominance: `a` dominates `b` when `|a| >= |b|` and the k-th
/// heaviest item of `a` out-weighs the k-th heaviest item of `b` for all k.
/// This greedy sorted matching is exact for the one-to-one criterion.
pub fn cmt_dominates(a: &BinAssignment, b: &BinAssignment, items: &[Item]) -> bool {
    cmt_pairs(&pair_view(a, items), &pair_view(b, items))
}

/// Group-to-item packing dominance: `b` can be partitioned into at most `|a|`
/// groups, each assigned to a distinct item of `a` with group weight not
/// exceeding that item's weight.
pub fn mt_dominates_packing(a: &BinAssignment, b: &BinAssignment, items: &[Item]) -> bool {
    mt_pairs(&pair_view(a, items), &pair_view(b, items))
}

/// Covering dominance: disjoint groups of `b`'s items cover each item of `a`
/// (group weight >= item weight); `b` items may stay unmatched.
pub fn dominates_covering(a: &BinAssignment, b: &BinAssignment, items: &[Item]) -> bool {
    covering_pairs(&pair_view(a, items), &pair_view(b, items))
}

/// MKP dominance: packing-style partition of all of `b` where each group
/// additionally has profit sum <= the profit of its `a` item.
pub fn dominates_mkp(a: &BinAssignment, b: &BinAssignment, items: &[Item]) -> bool {
    mkp_pairs(&pair_view(a, items), &pair_view(b, items))
}

/// MCCP dominance: covering-style matching where each group additionally has
/// cost sum >= the cost of its `a` item (so `a` is at most as expensive).
pub fn dominates_mccp(a: &BinAssignment, b: &BinAssignment, items: &[Item]) -> bool {
    mccp_pairs(&pair_view(a, items), &pair_view(b, items))
}

/// Dispatch over [`DominanceKind`].
pub fn dominates(kind: DominanceKind, a: &BinAssignment, b: &BinAssignment, items: &[Item]) -> bool {
    dominates_pairs(kind, &pair_view(a, items), &pair_view(b, items))
}

/// Slice-level dispatch; both slices sorted as produced by [`pair_view`].
pub(crate) fn dominates_pairs(kind: DominanceKind, a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    match kind {
        DominanceKind::CmtPacking => cmt_pairs(a, b),
        DominanceKind::MtPacking => mt_pairs(a, b),
        DominanceKind::Covering => covering_pairs(a, b),
        DominanceKind::MkpPacking => mkp_pairs(a, b),
        DominanceKind::MccpCovering => mccp_pairs(a, b),
    }
}

fn cmt_pairs(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    if a.len() < b.len() {
        return false;
    }
    b.iter().zip(a.iter()).all(|(bi, ai)| ai.0 >= bi.0)
}

/// Backtracking search for a partition of `b` into per-slot groups whose
/// weight fits the slot. Slots start with `a`'s item weights as residuals;
/// identical residuals at one decision point are tried once.
fn mt_pairs(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    let mut residual: Vec<i64> = a.iter().map(|p| p.0).collect();
    fn place(residual: &mut [i64], b: &[(i64, i64)], idx: usize) -> bool {
        if idx == b.len() {
            return true;
        }
        let w = b[idx].0;
        let mut tried: Vec<i64> = Vec::new();
        for s in 0..residual.len() {
            if residual[s] >= w && !tried.contains(&residual[s]) {
                tried.push(residual[s]);
                residual[s] -= w;
                if place(residual, b, idx + 1) {
                    residual[s] += w;
                    return true;
                }
                residual[s] += w;
            }
        }
        false
    }
    place(&mut residual, b, 0)
}

/// Backtracking search for disjoint groups of `b` covering every slot of
/// `a`; items may also be discarded. A slot is covered once its remaining
/// need drops to zero or below.
fn covering_pairs(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    let mut need: Vec<i64> = a.iter().map(|p| p.0).collect();
    let total_b: i64 = b.iter().map(|p| p.0).sum();
    fn place(need: &mut [i64], b: &[(i64, i64)], idx: usize, avail: i64) -> bool {
        let open: i64 = need.iter().map(|&x| x.max(0)).sum();
        if open == 0 {
            return true;
        }
        if idx == b.len() || avail < open {
            return false;
        }
        let w = b[idx].0;
        let rest = avail - w;
        let mut tried: Vec<i64> = Vec::new();
        for s in 0..need.len() {
            if need[s] > 0 && !tried.contains(&need[s]) {
                tried.push(need[s]);
                need[s] -= w;
                if place(need, b, idx + 1, rest) {
                    need[s] += w;
                    return true;
                }
                need[s] += w;
            }
        }
        // discard b[idx]
        place(need, b, idx + 1, rest)
    }
    place(&mut need, b, 0, total_b)
}

/// [`mt_pairs`] with the additional per-slot profit cap.
fn mkp_pairs(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    let mut slot: Vec<(i64, i64)> = a.to_vec();
    fn place(slot: &mut [(i64, i64)], b: &[(i64, i64)], idx: usize) -> bool {
        if idx == b.len() {
            return true;
        }
        let (w, p) = b[idx];
        let mut tried: Vec<(i64, i64)> = Vec::new();
        for s in 0..slot.len() {
            if slot[s].0 >= w && slot[s].1 >= p && !tried.contains(&slot[s]) {
                tried.push(slot[s]);
                slot[s].0 -= w;
                slot[s].1 -= p;
                if place(slot, b, idx + 1) {
                    slot[s].0 += w;
                    slot[s].1 += p;
                    return true;
                }
                slot[s].0 += w;
                slot[s].1 += p;
            }
        }
        false
    }
    place(&mut slot, b, 0)
}

/// [`covering_pairs`] with the additional per-slot cost floor: a slot is
/// satisfied once both its weight need and its cost need are met.
fn mccp_pairs(a: &[(i64, i64)], b: &[(i64, i64)]) -> bool {
    let mut need: Vec<(i64, i64)> = a.to_vec();
    let (total_w, total_p) = b.iter().fold((0, 0), |acc, p| (acc.0 + p.0, acc.1 + p.1));
    fn place(need: &mut [(i64, i64)], b: &[(i64, i64)], idx: usize, avail: (i64, i64)) -> bool {
        let open_w: i64 = need.iter().map(|n| n.0.max(0)).sum();
        let open_p: i64 = need.iter().map(|n| n.1.max(0)).sum();
        if open_w == 0 && open_p == 0 {
            return true;
        }
        if idx == b.len() || avail.0 < open_w || avail.1 < open_p {
            return false;
        }
        let (w, p) = b[idx];
        let rest = (avail.0 - w, avail.1 - p);
        let mut tried: Vec<(i64, i64)> = Vec::new();
        for s in 0..need.len() {
            if (need[s].0 > 0 || need[s].1 > 0) && !tried.contains(&need[s]) {
                tried.push(need[s]);
                need[s].0 -= w;
                need[s].1 -= p;
                if place(need, b, idx + 1, rest) {
                    need[s].0 += w;
                    need[s].1 += p;
                    return true;
                }
                need[s].0 += w;
                need[s].1 += p;
            }
        }
        place(need, b, idx + 1, rest)
    }
    place(&mut need, b, 0, (total_w, total_p))
}
