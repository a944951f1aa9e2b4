//! Nogood recording and the two pruning rules built on it.
//!
//! When a node descends into sibling assignment `A_i` after having resolved
//! siblings `A_j` (explored or pruned), each `A_j` becomes a *nogood*: any
//! solution below `A_i` that could be rearranged into one with the host bin
//! holding `A_j` was already covered. Two rules detect such candidates on
//! later bins:
//!
//! - **NP** (nogood pruning): the candidate contains `S_j` outright and the
//!   direct swap stays feasible on both bins.
//! - **NDP** (nogood dominance pruning): the candidate's remainder is merely
//!   *dominated* by `S_j`, with both post-swap assignments feasible.
//!
//! `S_j`/`S_i` are the sibling assignments minus the common seed item when
//! the kind seeds its cursors (packing, covering), or the full assignments
//! otherwise (MKP, MCCP - their bins differ in capacity, so feasibility is
//! checked against each bin's own bound).

use crate::core::{BinAssignment, Item};
use crate::dominance::{dominates_pairs, pair_view, sort_pairs, DominanceKind};
use crate::gen::Side;

/// Which nogood rule the solver applies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Pruning {
    /// No nogood pruning at all.
    None,
    /// Containment-based nogood pruning only.
    Np,
    /// Dominance-based pruning (runs the NP check first).
    #[default]
    Ndp,
}

impl Pruning {
    /// Stable lowercase token, used in files and command lines.
    pub fn token(self) -> &'static str {
        match self {
            Pruning::None => "none",
            Pruning::Np => "np",
            Pruning::Ndp => "ndp",
        }
    }

    /// Parses the token written by [`Pruning::token`].
    pub fn from_token(tok: &str) -> Option<Pruning> {
        match tok {
            "none" => Some(Pruning::None),
            "np" => Some(Pruning::Np),
            "ndp" => Some(Pruning::Ndp),
            _ => None,
        }
    }
}

/// One resolved sibling, recorded while a later sibling's subtree runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NogoodRecord {
    /// Resolved sibling minus the host seed, `(weight, value)` descending.
    s_j: Vec<(i64, i64)>,
    /// Descended sibling minus the host seed, same order.
    s_i: Vec<(i64, i64)>,
    s_j_w: i64,
    s_i_w: i64,
    /// Capacity/quota of the bin both siblings complete.
    host_bound: i64,
    /// `(weight, value)` of the host seed; zeros when seedless.
    host_seed: (i64, i64),
}

impl NogoodRecord {
    /// Builds a record from the resolved sibling `A_j` and the sibling
    /// `A_i` being descended into, stripping `host_seed_id` (when given)
    /// from both.
    pub fn from_assignments(
        resolved: &BinAssignment,
        descended: &BinAssignment,
        items: &[Item],
        host_seed_id: Option<usize>,
        host_bound: i64,
    ) -> NogoodRecord {
        let strip = |asg: &BinAssignment| -> Vec<(i64, i64)> {
            let mut pairs: Vec<(i64, i64)> = asg
                .item_ids()
                .iter()
                .filter(|&&id| Some(id) != host_seed_id)
                .map(|&id| (items[id].weight, items[id].value))
                .collect();
            sort_pairs(&mut pairs);
            pairs
        };
        let s_j = strip(resolved);
        let s_i = strip(descended);
        // Siblings always differ as item sets, but twin items (equal
        // weight and value) can make their stripped pair multisets
        // coincide; such records encode the twin-swap symmetry and are
        // kept.
        debug_assert_ne!(resolved.item_ids(), descended.item_ids());
        let host_seed = host_seed_id.map_or((0, 0), |id| (items[id].weight, items[id].value));
        NogoodRecord {
            s_j_w: s_j.iter().map(|p| p.0).sum(),
            s_i_w: s_i.iter().map(|p| p.0).sum(),
            s_j,
            s_i,
            host_bound,
            host_seed,
        }
    }

    pub fn prior_remainder(&self) -> &[(i64, i64)] {
        &self.s_j
    }
}

/// Per-depth frames of records; one frame per committed bin on the current
/// search path.
#[derive(Clone, Debug, Default)]
pub struct NogoodStack {
    frames: Vec<Vec<NogoodRecord>>,
}

impl NogoodStack {
    pub fn new() -> NogoodStack {
        NogoodStack::default()
    }

    pub fn push_frame(&mut self, records: Vec<NogoodRecord>) {
        self.frames.push(records);
    }

    pub fn pop_frame(&mut self) {
        self.frames.pop().expect("pop on empty nogood stack");
    }

    /// Current frame count (equals the search depth that pushed them).
    pub fn depth(&self) -> usize {
        self.frames.len()
    }

    pub fn record_count(&self) -> usize {
        self.frames.iter().map(|f| f.len()).sum()
    }

    pub fn records(&self) -> impl Iterator<Item = &NogoodRecord> {
        self.frames.iter().flatten()
    }
}

/// How a candidate is judged against the stack.
#[derive(Clone, Copy, Debug)]
pub struct PruneContext {
    /// Feasibility direction for the swapped assignments.
    pub side: Side,
    /// Dominance criterion used by the NDP leg.
    pub kind: DominanceKind,
    /// Capacity/quota of the candidate's bin.
    pub cand_bound: i64,
    /// Seed item id of the candidate's cursor, if one is in play.
    pub cand_seed: Option<usize>,
}

fn feasible(side: Side, weight: i64, bound: i64) -> bool {
    match side {
        Side::Packing => weight <= bound,
        Side::Covering => weight >= bound,
    }
}

/// True when `small` is a sub-multiset of `big` (both `(w, v)` descending).
fn sub_multiset(small: &[(i64, i64)], big: &[(i64, i64)]) -> bool {
    let mut i = 0;
    'outer: for &p in small {
        while i < big.len() {
            let b = big[i];
            i += 1;
            if b == p {
                continue 'outer;
            }
            if b < p {
                return false; // big is descending: no later match possible
            }
        }
        return false;
    }
    true
}

/// Nogood pruning: candidate contains `S_j` and both post-swap assignments
/// are feasible — candidate loses `S_j` and gains `S_i`, the host bin goes
/// back to `seed + S_j`.
pub fn np_prunes(
    candidate: &BinAssignment,
    items: &[Item],
    rec: &NogoodRecord,
    cand_bound: i64,
    side: Side,
) -> bool {
    let cand = pair_view(candidate, items);
    if !sub_multiset(&rec.s_j, &cand) {
        return false;
    }
    let swapped = candidate.weight_sum() - rec.s_j_w + rec.s_i_w;
    let host = rec.host_seed.0 + rec.s_j_w;
    feasible(side, swapped, cand_bound) && feasible(side, host, rec.host_bound)
}

/// Nogood dominance pruning: the candidate's remainder `R` (candidate minus
/// its own seed) is dominated by `S_j`, and both post-swap assignments —
/// candidate seed with `S_i`, host seed with `R` — are feasible.
pub fn ndp_prunes(
    candidate: &BinAssignment,
    items: &[Item],
    rec: &NogoodRecord,
    cand_bound: i64,
    cand_seed: Option<usize>,
    side: Side,
    kind: DominanceKind,
) -> bool {
    let mut r = pair_view(candidate, items);
    let mut r_w = candidate.weight_sum();
    let mut seed_w = 0;
    if let Some(id) = cand_seed {
        let p = (items[id].weight, items[id].value);
        if let Some(pos) = r.iter().position(|&q| q == p) {
            r.remove(pos);
            r_w -= p.0;
            seed_w = p.0;
        }
    }
    if !dominates_pairs(kind, &rec.s_j, &r) {
        return false;
    }
    let new_cand = seed_w + rec.s_i_w;
    let new_host = rec.host_seed.0 + r_w;
    feasible(side, new_cand, cand_bound) && feasible(side, new_host, rec.host_bound)
}

/// Applies the configured policy over the whole stack: under NDP the cheap
/// containment rule screens every record first, dominance runs only when no
/// record prunes outright.
pub fn apply_pruning(
    candidate: &BinAssignment,
    items: &[Item],
    stack: &NogoodStack,
    policy: Pruning,
    ctx: &PruneContext,
) -> bool {
    if policy == Pruning::None {
        return false;
    }
    if stack
        .records()
        .any(|rec| np_prunes(candidate, items, rec, ctx.cand_bound, ctx.side))
    {
        return true;
    }
    policy == Pruning::Ndp
        && stack.records().any(|rec| {
            ndp_prunes(
                candidate,
                items,
                rec,
                ctx.cand_bound,
                ctx.cand_seed,
                ctx.side,
                ctx.kind,
            )
        })
}

/// Functional copy of the stack without records whose `S_j` is no longer a
/// sub-multiset of the remaining items. Only valid under plain NP: a
/// consumed nogood can still prune via dominance, so NDP keeps every
/// record.
pub fn compact_stack(stack: &NogoodStack, remaining: &[Item]) -> NogoodStack {
    let mut pool: Vec<(i64, i64)> = remaining.iter().map(|it| (it.weight, it.value)).collect();
    sort_pairs(&mut pool);
    NogoodStack {
        frames: stack
            .frames
            .iter()
            .map(|f| {
                f.iter()
                    .filter(|rec| sub_multiset(&rec.s_j, &pool))
                    .cloned()
                    .collect()
            })
            .collect(),
    }
}
