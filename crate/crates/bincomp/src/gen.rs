//! Incremental generation of undominated bin assignments.
//!
//! A [`GenCursor`] walks the binary inclusion-exclusion tree over a pool of
//! items (largest first, include branch before exclude branch) and emits
//! - packing side: maximal feasible assignments surviving the exclusion
//!   test, and
//! - covering side: minimal feasible assignments surviving a single-swap
//!   screen.
//!
//! The cursor is resumable: [`GenCursor::next_batch`] hands out the next `h`
//! assignments and can be called again later, which is what hybrid
//! incremental branching needs. Memory stays linear in the pool size (the
//! traversal stack), never in the number of emitted assignments.
//!
//! Screens compare `(weight, value)` pairs throughout. Instances of the
//! unvalued kinds carry value 0 on every item, for which the value
//! conditions hold trivially, so one implementation serves all four problem
//! kinds.

use crate::core::{BinAssignment, Item};

/// Which feasibility discipline the cursor enforces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Assignments must fit a capacity; emitted sets are maximal.
    Packing,
    /// Assignments must reach a quota; emitted sets are minimal.
    Covering,
}

/// Raised by [`open_cursor`] when no assignment can ever be emitted.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EmptyCursor {
    #[error("required item {id} (weight {weight}) exceeds the capacity {capacity}")]
    SeedTooHeavy { id: usize, weight: i64, capacity: i64 },
    #[error("covering cursor over an empty pool with quota {quota}")]
    EmptyPool { quota: i64 },
}

/// Largest included-set size for which the exclusion test enumerates all
/// subsets; above it only singletons and pairs are tried (still sound: a
/// weaker screen keeps extra assignments, never drops required ones).
const FULL_ENUM_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug)]
struct Frame {
    /// Next pool position to consider when this continuation resumes.
    idx: usize,
    /// Length `cur` must be truncated to.
    cur_len: usize,
    cur_w: i64,
    cur_v: i64,
    /// Smallest weight among explicitly excluded items (packing side).
    min_excl: i64,
}

/// Resumable generator of undominated bin assignments over one pool.
#[derive(Clone, Debug)]
pub struct GenCursor {
    side: Side,
    bound: i64,
    seed: Option<Item>,
    /// Pool minus the seed, weight descending (ties by id).
    free: Vec<Item>,
    /// `suffix_w[i]` = total weight of `free[i..]`.
    suffix_w: Vec<i64>,
    stack: Vec<Frame>,
    /// Indices into `free` on the current include path (ascending).
    cur: Vec<usize>,
    emitted: usize,
}

/// Opens a cursor over `pool` for the given side and capacity/quota.
///
/// `required`, when given, must be the id of a pool item; every emitted
/// assignment contains it and it is never swapped out by the screens.
///
/// # Panics
/// Panics if `required` names an id not present in `pool`.
pub fn open_cursor(
    side: Side,
    bound: i64,
    pool: &[Item],
    required: Option<usize>,
) -> Result<GenCursor, EmptyCursor> {
    let seed = required.map(|id| {
        *pool
            .iter()
            .find(|it| it.id == id)
            .unwrap_or_else(|| panic!("required item {id} not in pool"))
    });
    if let (Side::Packing, Some(s)) = (side, seed) {
        if s.weight > bound {
            return Err(EmptyCursor::SeedTooHeavy {
                id: s.id,
                weight: s.weight,
                capacity: bound,
            });
        }
    }
    if side == Side::Covering && pool.is_empty() && bound > 0 {
        return Err(EmptyCursor::EmptyPool { quota: bound });
    }
    let mut free: Vec<Item> = pool
        .iter()
        .filter(|it| Some(it.id) != required)
        .copied()
        .collect();
    free.sort_by(|a, b| b.weight.cmp(&a.weight).then(a.id.cmp(&b.id)));
    let mut suffix_w = vec![0; free.len() + 1];
    for i in (0..free.len()).rev() {
        suffix_w[i] = suffix_w[i + 1] + free[i].weight;
    }
    let root = Frame {
        idx: 0,
        cur_len: 0,
        cur_w: seed.map_or(0, |s| s.weight),
        cur_v: seed.map_or(0, |s| s.value),
        min_excl: i64::MAX,
    };
    Ok(GenCursor {
        side,
        bound,
        seed,
        free,
        suffix_w,
        stack: vec![root],
        cur: Vec::new(),
        emitted: 0,
    })
}

impl GenCursor {
    /// Assignments emitted so far.
    pub fn emitted(&self) -> usize {
        self.emitted
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Returns up to `h` further assignments in traversal order; fewer only
    /// at exhaustion. Concatenating batches over any `h` reproduces the
    /// full emission sequence.
    ///
    /// # Panics
    /// Panics if `h` is zero.
    pub fn next_batch(&mut self, h: usize) -> Vec<BinAssignment> {
        assert!(h >= 1, "batch width must be positive");
        self.by_ref().take(h).collect()
    }

    fn push_frame(&mut self, frame: Frame) {
        self.stack.push(frame);
        debug_assert!(
            self.stack.len() <= self.free.len() + 1,
            "traversal stack must stay linear in the pool size"
        );
    }

    /// Free items not on the current include path (`cur` is ascending).
    fn excluded_items(&self) -> Vec<Item> {
        let mut out = Vec::with_capacity(self.free.len() - self.cur.len());
        let mut k = 0;
        for (i, it) in self.free.iter().enumerate() {
            if k < self.cur.len() && self.cur[k] == i {
                k += 1;
            } else {
                out.push(*it);
            }
        }
        out
    }

    fn assemble(&self) -> BinAssignment {
        let members = self
            .seed
            .iter()
            .copied()
            .chain(self.cur.iter().map(|&i| self.free[i]));
        BinAssignment::from_members(members)
    }

    /// Exclusion test on the current maximal leaf (weight sum `t`): the
    /// candidate is dominated when a subset of its free members can be
    /// swapped for one excluded item without breaking feasibility and
    /// without losing weight or value. Identical `(weight, value)`
    /// one-for-one swaps do not count (an assignment is never pruned by a
    /// twin of itself).
    fn packing_dominated(&self, t: i64) -> bool {
        let excluded = self.excluded_items();
        if excluded.is_empty() || self.cur.is_empty() {
            return false;
        }
        let members: Vec<Item> = self.cur.iter().map(|&i| self.free[i]).collect();
        let max_xw = excluded.iter().map(|x| x.weight).max().unwrap();
        let pairs_only = members.len() > FULL_ENUM_LIMIT;
        subset_witness(
            &members, &excluded, 0, 0, 0, 0, t, self.bound, max_xw, pairs_only,
        )
    }

    /// Single-swap screen on the current minimal leaf (weight sum `sum`):
    /// reject when one free member can be replaced by one strictly lighter
    /// excluded item (of no greater value) while still reaching the quota.
    fn covering_dominated(&self, sum: i64) -> bool {
        let excluded = self.excluded_items();
        if excluded.is_empty() {
            return false;
        }
        self.cur.iter().any(|&i| {
            let a = self.free[i];
            excluded.iter().any(|x| {
                x.weight < a.weight && sum - a.weight + x.weight >= self.bound && x.value <= a.value
            })
        })
    }
}

/// Depth-first enumeration of non-empty subsets of `members` (weight sum
/// capped by the heaviest excluded item), testing each against every
/// excluded witness. Returns true on the first dominating swap.
#[allow(clippy::too_many_arguments)]
fn subset_witness(
    members: &[Item],
    excluded: &[Item],
    idx: usize,
    sw: i64,
    sv: i64,
    size: usize,
    t: i64,
    capacity: i64,
    max_xw: i64,
    pairs_only: bool,
) -> bool {
    for j in idx..members.len() {
        let nw = sw + members[j].weight;
        if nw > max_xw {
            continue; // later members are lighter; they may still fit
        }
        let nv = sv + members[j].value;
        let hit = excluded.iter().any(|x| {
            sw + members[j].weight <= x.weight
                && t - nw + x.weight <= capacity
                && nv <= x.value
                && !(size == 0 && x.weight == nw && x.value == nv)
        });
        if hit {
            return true;
        }
        if (!pairs_only || size + 1 < 2)
            && subset_witness(
                members, excluded, j + 1, nw, nv, size + 1, t, capacity, max_xw, pairs_only,
            )
        {
            return true;
        }
    }
    false
}

impl Iterator for GenCursor {
    type Item = BinAssignment;

    fn next(&mut self) -> Option<BinAssignment> {
        while let Some(frame) = self.stack.pop() {
            self.cur.truncate(frame.cur_len);
            let mut idx = frame.idx;
            let mut w = frame.cur_w;
            let mut v = frame.cur_v;
            let min_excl = frame.min_excl;
            match self.side {
                Side::Packing => loop {
                    let residual = self.bound - w;
                    let mut j = idx;
                    while j < self.free.len() && self.free[j].weight > residual {
                        j += 1;
                    }
                    if j == self.free.len() {
                        // Leaf. Maximal iff nothing unconsidered fits (just
                        // established) and every branched-out item exceeds
                        // the residual.
                        if residual < min_excl && !self.packing_dominated(w) {
                            self.emitted += 1;
                            return Some(self.assemble());
                        }
                        break;
                    }
                    self.push_frame(Frame {
                        idx: j + 1,
                        cur_len: self.cur.len(),
                        cur_w: w,
                        cur_v: v,
                        min_excl: min_excl.min(self.free[j].weight),
                    });
                    self.cur.push(j);
                    w += self.free[j].weight;
                    v += self.free[j].value;
                    idx = j + 1;
                },
                Side::Covering => loop {
                    if w >= self.bound {
                        // First crossing: minimal w.r.t. every free member
                        // by construction; re-check removability of the
                        // seed, which may be lighter than the last member.
                        let seed_ok = self
                            .seed
                            .map_or(true, |s| w - s.weight < self.bound);
                        if seed_ok && !self.covering_dominated(w) {
                            self.emitted += 1;
                            return Some(self.assemble());
                        }
                        break;
                    }
                    if idx == self.free.len() || w + self.suffix_w[idx] < self.bound {
                        break;
                    }
                    self.push_frame(Frame {
                        idx: idx + 1,
                        cur_len: self.cur.len(),
                        cur_w: w,
                        cur_v: v,
                        min_excl,
                    });
                    self.cur.push(idx);
                    w += self.free[idx].weight;
                    v += self.free[idx].value;
                    idx += 1;
                },
            }
        }
        None
    }
}

/// Raw packing exclusion test: true (dominated) iff some provided
/// included-subset sum `s` and excluded item `x` satisfy `s <= w(x)` and
/// `t - s + w(x) <= c`. Weights only; the caller chooses which subset sums
/// to enumerate. The sums are consumed lazily in one pass.
pub fn exclusion_test_packing(
    t: i64,
    included_subset_sums: impl IntoIterator<Item = i64>,
    excluded: &[Item],
    capacity: i64,
) -> bool {
    included_subset_sums.into_iter().any(|s| {
        excluded
            .iter()
            .any(|x| s <= x.weight && t - s + x.weight <= capacity)
    })
}

/// Single-swap covering screen over a minimal-feasible candidate: keep
/// (true) unless one member can be replaced by a strictly lighter excluded
/// pool item while still reaching the quota. Weights only.
pub fn undominated_covering_filter(
    candidate: &BinAssignment,
    pool: &[Item],
    quota: i64,
) -> bool {
    let ids = candidate.id_set();
    let sum = candidate.weight_sum();
    let is_member = |it: &Item| ids.binary_search(&it.id).is_ok();
    for a in pool.iter().filter(|it| is_member(it)) {
        for x in pool.iter().filter(|it| !is_member(it)) {
            if x.weight < a.weight && sum - a.weight + x.weight >= quota {
                return false;
            }
        }
    }
    true
}
