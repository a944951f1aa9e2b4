//! Problem model shared by every solver: items, instances, bin assignments,
//! solutions and the feasibility / validation predicates.
//!
//! Conventions used throughout the crate:
//!
//! * all weights, values, capacities and quotas are `i64` and strictly
//!   positive where the problem requires it (weights >= 1, container bounds
//!   >= 1; values >= 0);
//! * the items of an [`Instance`] are canonically sorted by non-increasing
//!   weight, ties kept in input order, and `items[i].id == i`. Every module
//!   relies on that order: a list of item ids sorted ascending is therefore
//!   also sorted by non-increasing weight.

use thiserror::Error;

/// One indivisible item. `value` doubles as profit (multiple knapsack) or
/// cost (min-cost covering) and is zero for the pure packing/covering kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Item {
    /// Index of the item inside its instance (`0..n`, canonical order).
    pub id: usize,
    /// Resource requirement, >= 1.
    pub weight: i64,
    /// Profit or cost depending on the problem kind; 0 when unused.
    pub value: i64,
}

/// The four problem kinds covered by the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    /// Minimize the number of capacity-c bins that hold every item.
    BinPacking,
    /// Maximize assigned profit over m bins of fixed capacities; items may
    /// stay unassigned.
    Mkp,
    /// Maximize the number of quota-q bins filled to at least q; leftover
    /// items go to a designated overflow assignment.
    BinCovering,
    /// Cover every quota bin at minimum total cost of the used items; items
    /// may stay unassigned.
    Mccp,
}

impl ProblemKind {
    /// `true` for the kinds whose per-bin constraint is `sum >= bound`.
    pub fn is_covering(self) -> bool {
        matches!(self, ProblemKind::BinCovering | ProblemKind::Mccp)
    }

    /// `true` for the kinds where item values participate in the objective.
    pub fn is_valued(self) -> bool {
        matches!(self, ProblemKind::Mkp | ProblemKind::Mccp)
    }

    /// Lower-case token used by the file format and the CLI.
    pub fn token(self) -> &'static str {
        match self {
            ProblemKind::BinPacking => "binpacking",
            ProblemKind::Mkp => "mkp",
            ProblemKind::BinCovering => "bincovering",
            ProblemKind::Mccp => "mccp",
        }
    }

    /// Inverse of [`ProblemKind::token`].
    pub fn from_token(tok: &str) -> Option<ProblemKind> {
        match tok {
            "binpacking" => Some(ProblemKind::BinPacking),
            "mkp" => Some(ProblemKind::Mkp),
            "bincovering" => Some(ProblemKind::BinCovering),
            "mccp" => Some(ProblemKind::Mccp),
            _ => None,
        }
    }
}

impl std::fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Error raised by [`Instance::new`] when the raw data violates an invariant.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("item {index} has weight {weight}; weights must be >= 1")]
    BadWeight { index: usize, weight: i64 },
    #[error("item {index} has value {value}; values must be >= 0")]
    BadValue { index: usize, value: i64 },
    #[error("container {index} has bound {bound}; bounds must be >= 1")]
    BadContainer { index: usize, bound: i64 },
    #[error("{kind} takes exactly one container value, got {got}")]
    UniformContainerCount { kind: ProblemKind, got: usize },
    #[error("{kind} needs at least one container")]
    NoContainers { kind: ProblemKind },
}

/// A full problem instance. Construction canonicalizes item order (weights
/// non-increasing, stable) and assigns ids `0..n` in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    kind: ProblemKind,
    containers: Vec<i64>,
    items: Vec<Item>,
}

impl Instance {
    /// Builds an instance from raw `(weight, value)` pairs. The pairs may
    /// arrive in any order; they are stably sorted by non-increasing weight
    /// and renumbered.
    ///
    /// For [`ProblemKind::BinPacking`] and [`ProblemKind::BinCovering`] the
    /// container list must hold exactly one value (the shared capacity or
    /// quota); for the other kinds one bound per container.
    pub fn new(
        kind: ProblemKind,
        containers: Vec<i64>,
        weights_values: Vec<(i64, i64)>,
    ) -> Result<Instance, InstanceError> {
        if containers.is_empty() {
            return Err(InstanceError::NoContainers { kind });
        }
        if !matches!(kind, ProblemKind::Mkp | ProblemKind::Mccp) && containers.len() != 1 {
            return Err(InstanceError::UniformContainerCount {
                kind,
                got: containers.len(),
            });
        }
        for (index, &bound) in containers.iter().enumerate() {
            if bound < 1 {
                return Err(InstanceError::BadContainer { index, bound });
            }
        }
        for (index, &(weight, value)) in weights_values.iter().enumerate() {
            if weight < 1 {
                return Err(InstanceError::BadWeight { index, weight });
            }
            if value < 0 {
                return Err(InstanceError::BadValue { index, value });
            }
        }
        let mut pairs = weights_values;
        pairs.sort_by(|a, b| b.0.cmp(&a.0)); // stable: equal weights keep input order
        let items = pairs
            .into_iter()
            .enumerate()
            .map(|(id, (weight, value))| Item { id, weight, value })
            .collect();
        Ok(Instance {
            kind,
            containers,
            items,
        })
    }

    /// Bin packing instance with shared capacity `c`.
    pub fn binpacking(c: i64, weights: &[i64]) -> Result<Instance, InstanceError> {
        Instance::new(
            ProblemKind::BinPacking,
            vec![c],
            weights.iter().map(|&w| (w, 0)).collect(),
        )
    }

    /// Bin covering instance with shared quota `q`.
    pub fn bincovering(q: i64, weights: &[i64]) -> Result<Instance, InstanceError> {
        Instance::new(
            ProblemKind::BinCovering,
            vec![q],
            weights.iter().map(|&w| (w, 0)).collect(),
        )
    }

    /// 0-1 multiple knapsack instance; `wv` holds `(weight, profit)` pairs.
    pub fn mkp(capacities: &[i64], wv: &[(i64, i64)]) -> Result<Instance, InstanceError> {
        Instance::new(ProblemKind::Mkp, capacities.to_vec(), wv.to_vec())
    }

    /// Min-cost covering instance; `wv` holds `(weight, cost)` pairs.
    pub fn mccp(quotas: &[i64], wv: &[(i64, i64)]) -> Result<Instance, InstanceError> {
        Instance::new(ProblemKind::Mccp, quotas.to_vec(), wv.to_vec())
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    /// Container bounds: capacities for packing kinds, quotas for covering
    /// kinds. Uniform kinds store a single shared value.
    pub fn containers(&self) -> &[i64] {
        &self.containers
    }

    /// Items in canonical (non-increasing weight) order; `items()[i].id == i`.
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn n(&self) -> usize {
        self.items.len()
    }

    /// Number of containers. Uniform kinds report 1 (the shared bound).
    pub fn m(&self) -> usize {
        self.containers.len()
    }

    /// Shared bound of a uniform kind (capacity or quota).
    ///
    /// # Panics
    /// Panics for [`ProblemKind::Mkp`] / [`ProblemKind::Mccp`] instances.
    pub fn uniform_bound(&self) -> i64 {
        assert!(
            !matches!(self.kind, ProblemKind::Mkp | ProblemKind::Mccp),
            "uniform_bound on a multi-container instance"
        );
        self.containers[0]
    }

    pub fn total_weight(&self) -> i64 {
        self.items.iter().map(|it| it.weight).sum()
    }
}

/// The contents of one bin: a set of item ids plus cached weight/value sums.
/// Ids are stored sorted by non-increasing weight (ties by ascending id),
/// which for canonical instances is simply ascending id order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BinAssignment {
    item_ids: Vec<usize>,
    weight_sum: i64,
    value_sum: i64,
}

impl BinAssignment {
    /// Builds an assignment over `items` (an instance's canonical item
    /// table). Duplicate ids are rejected.
    ///
    /// # Panics
    /// Panics if an id is out of range or repeated.
    pub fn new(ids: impl IntoIterator<Item = usize>, items: &[Item]) -> BinAssignment {
        let mut item_ids: Vec<usize> = ids.into_iter().collect();
        item_ids.sort_by(|&a, &b| items[b].weight.cmp(&items[a].weight).then(a.cmp(&b)));
        let mut weight_sum = 0;
        let mut value_sum = 0;
        for win in item_ids.windows(2) {
            assert!(win[0] != win[1], "duplicate item id {} in assignment", win[0]);
        }
        for &id in &item_ids {
            weight_sum += items[id].weight;
            value_sum += items[id].value;
        }
        BinAssignment {
            item_ids,
            weight_sum,
            value_sum,
        }
    }

    /// Builds an assignment directly from member items (no id-indexed table
    /// needed). Same canonical order and duplicate rules as [`Self::new`].
    ///
    /// # Panics
    /// Panics if an item id repeats.
    pub fn from_members(members: impl IntoIterator<Item = Item>) -> BinAssignment {
        let mut list: Vec<Item> = members.into_iter().collect();
        list.sort_by(|a, b| b.weight.cmp(&a.weight).then(a.id.cmp(&b.id)));
        let mut seen: Vec<usize> = list.iter().map(|it| it.id).collect();
        seen.sort_unstable();
        for win in seen.windows(2) {
            assert!(win[0] != win[1], "duplicate item id {} in assignment", win[0]);
        }
        BinAssignment {
            weight_sum: list.iter().map(|it| it.weight).sum(),
            value_sum: list.iter().map(|it| it.value).sum(),
            item_ids: list.into_iter().map(|it| it.id).collect(),
        }
    }

    /// The empty assignment.
    pub fn empty() -> BinAssignment {
        BinAssignment::default()
    }

    /// Item ids, sorted by non-increasing weight (ties ascending id).
    pub fn item_ids(&self) -> &[usize] {
        &self.item_ids
    }

    pub fn weight_sum(&self) -> i64 {
        self.weight_sum
    }

    pub fn value_sum(&self) -> i64 {
        self.value_sum
    }

    pub fn len(&self) -> usize {
        self.item_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.item_ids.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.item_ids.contains(&id)
    }

    /// Ids sorted ascending — convenient as a set key.
    pub fn id_set(&self) -> Vec<usize> {
        let mut ids = self.item_ids.clone();
        ids.sort_unstable();
        ids
    }
}

/// A complete solution.
///
/// * `assignments` — the counted bins. Bin packing: the used bins, in
///   creation order. MKP / MCCP: exactly one entry per container, aligned
///   with [`Instance::containers`] (possibly empty for MKP). Bin covering:
///   the covered bins.
/// * `overflow` — bin covering only: the items not used to cover any bin.
///   Empty for the other kinds (unassigned MKP/MCCP items are simply absent).
/// * `objective` — bins used (packing), assigned profit (MKP), bins covered
///   (covering) or total cost of used items (MCCP).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Solution {
    pub assignments: Vec<BinAssignment>,
    pub overflow: BinAssignment,
    pub objective: i64,
}

/// One concrete rule violation found by [`validate_solution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// An id outside `0..n`.
    UnknownItem { id: usize },
    /// The same id appears in two places.
    DuplicateItem { id: usize },
    /// An item of a partition kind (packing / covering) is nowhere.
    MissingItem { id: usize },
    /// A packing bin exceeds its capacity.
    CapacityExceeded { bin: usize, weight: i64, capacity: i64 },
    /// A counted covering bin misses its quota.
    QuotaUnmet { bin: usize, weight: i64, quota: i64 },
    /// MKP/MCCP solutions must carry one assignment per container.
    BinCountMismatch { expected: usize, actual: usize },
    /// Overflow is only meaningful for bin covering.
    UnexpectedOverflow,
    /// Stated objective differs from the recomputed one.
    ObjectiveMismatch { stated: i64, recomputed: i64 },
    /// Cached weight/value sums differ from the item table.
    CorruptSums { bin: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::UnknownItem { id } => write!(f, "unknown item id {id}"),
            Violation::DuplicateItem { id } => write!(f, "item {id} assigned twice"),
            Violation::MissingItem { id } => write!(f, "item {id} not assigned anywhere"),
            Violation::CapacityExceeded { bin, weight, capacity } => {
                write!(f, "bin {bin} holds {weight} > capacity {capacity}")
            }
            Violation::QuotaUnmet { bin, weight, quota } => {
                write!(f, "bin {bin} holds {weight} < quota {quota}")
            }
            Violation::BinCountMismatch { expected, actual } => {
                write!(f, "expected {expected} bins, solution has {actual}")
            }
            Violation::UnexpectedOverflow => write!(f, "overflow items on a non-covering kind"),
            Violation::ObjectiveMismatch { stated, recomputed } => {
                write!(f, "stated objective {stated}, recomputed {recomputed}")
            }
            Violation::CorruptSums { bin } => write!(f, "bin {bin} has corrupt cached sums"),
        }
    }
}

/// Outcome of [`validate_solution`]: the (possibly empty) violation list.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationVerdict {
    pub violations: Vec<Violation>,
}

impl ValidationVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `sum(weights) <= capacity` — may a packing bin hold these items?
pub fn feasible_packing(assignment: &BinAssignment, capacity: i64) -> bool {
    assignment.weight_sum() <= capacity
}

/// `sum(weights) >= quota` — does this set cover a quota bin?
pub fn feasible_covering(assignment: &BinAssignment, quota: i64) -> bool {
    assignment.weight_sum() >= quota
}

/// A packing assignment is maximal w.r.t. `pool` when no pool item outside
/// the assignment still fits the residual capacity.
pub fn is_maximal(assignment: &BinAssignment, pool: &[Item], capacity: i64) -> bool {
    if !feasible_packing(assignment, capacity) {
        return false;
    }
    let residual = capacity - assignment.weight_sum();
    pool.iter()
        .all(|it| assignment.contains(it.id) || it.weight > residual)
}

/// A covering assignment is minimal when it meets the quota and removing any
/// single member drops it below the quota.
pub fn is_minimal(assignment: &BinAssignment, items: &[Item], quota: i64) -> bool {
    if !feasible_covering(assignment, quota) {
        return false;
    }
    assignment
        .item_ids()
        .iter()
        .all(|&id| assignment.weight_sum() - items[id].weight < quota)
}

/// Checks a solution against every rule of its instance kind and returns the
/// complete violation list (empty = valid).
pub fn validate_solution(inst: &Instance, sol: &Solution) -> ValidationVerdict {
    let mut violations = Vec::new();
    let n = inst.n();
    let items = inst.items();
    let mut seen = vec![false; n];

    let mut scan = |asg: &BinAssignment, bin: usize, violations: &mut Vec<Violation>| {
        let mut w = 0;
        let mut v = 0;
        for &id in asg.item_ids() {
            if id >= n {
                violations.push(Violation::UnknownItem { id });
                continue;
            }
            if seen[id] {
                violations.push(Violation::DuplicateItem { id });
            }
            seen[id] = true;
            w += items[id].weight;
            v += items[id].value;
        }
        if w != asg.weight_sum() || v != asg.value_sum() {
            violations.push(Violation::CorruptSums { bin });
        }
    };

    for (bin, asg) in sol.assignments.iter().enumerate() {
        scan(asg, bin, &mut violations);
    }
    scan(&sol.overflow, sol.assignments.len(), &mut violations);

    if !sol.overflow.is_empty() && inst.kind() != ProblemKind::BinCovering {
        violations.push(Violation::UnexpectedOverflow);
    }

    match inst.kind() {
        ProblemKind::BinPacking => {
            let c = inst.uniform_bound();
            for (bin, asg) in sol.assignments.iter().enumerate() {
                if asg.weight_sum() > c {
                    violations.push(Violation::CapacityExceeded {
                        bin,
                        weight: asg.weight_sum(),
                        capacity: c,
                    });
                }
            }
            for (id, &s) in seen.iter().enumerate() {
                if !s {
                    violations.push(Violation::MissingItem { id });
                }
            }
        }
        ProblemKind::BinCovering => {
            let q = inst.uniform_bound();
            for (bin, asg) in sol.assignments.iter().enumerate() {
                if asg.weight_sum() < q {
                    violations.push(Violation::QuotaUnmet {
                        bin,
                        weight: asg.weight_sum(),
                        quota: q,
                    });
                }
            }
            for (id, &s) in seen.iter().enumerate() {
                if !s {
                    violations.push(Violation::MissingItem { id });
                }
            }
        }
        ProblemKind::Mkp => {
            if sol.assignments.len() != inst.m() {
                violations.push(Violation::BinCountMismatch {
                    expected: inst.m(),
                    actual: sol.assignments.len(),
                });
            }
            for (bin, asg) in sol.assignments.iter().enumerate() {
                if let Some(&c) = inst.containers().get(bin) {
                    if asg.weight_sum() > c {
                        violations.push(Violation::CapacityExceeded {
                            bin,
                            weight: asg.weight_sum(),
                            capacity: c,
                        });
                    }
                }
            }
        }
        ProblemKind::Mccp => {
            if sol.assignments.len() != inst.m() {
                violations.push(Violation::BinCountMismatch {
                    expected: inst.m(),
                    actual: sol.assignments.len(),
                });
            }
            for (bin, asg) in sol.assignments.iter().enumerate() {
                if let Some(&q) = inst.containers().get(bin) {
                    if asg.weight_sum() < q {
                        violations.push(Violation::QuotaUnmet {
                            bin,
                            weight: asg.weight_sum(),
                            quota: q,
                        });
                    }
                }
            }
        }
    }

    let recomputed = match inst.kind() {
        ProblemKind::BinPacking | ProblemKind::BinCovering => sol.assignments.len() as i64,
        ProblemKind::Mkp | ProblemKind::Mccp => {
            sol.assignments.iter().map(|a| a.value_sum()).sum()
        }
    };
    if recomputed != sol.objective {
        violations.push(Violation::ObjectiveMismatch {
            stated: sol.objective,
            recomputed,
        });
    }

    ValidationVerdict { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn items(weights: &[i64]) -> Vec<Item> {
        Instance::binpacking(i64::MAX / 4, weights).unwrap().items().to_vec()
    }

    #[test]
    fn canonical_order_is_weight_descending_with_stable_ties() {
        let inst = Instance::binpacking(100, &[6, 12, 15, 40, 43, 82]).unwrap();
        let ws: Vec<i64> = inst.items().iter().map(|it| it.weight).collect();
        assert_eq!(ws, vec![82, 43, 40, 15, 12, 6]);
        for (i, it) in inst.items().iter().enumerate() {
            assert_eq!(it.id, i);
        }
    }

    #[test]
    fn feasibility_examples() {
        let its = items(&[83, 12, 5]);
        let a = BinAssignment::new([0, 1, 2], &its);
        assert!(feasible_packing(&a, 100));

        let its = items(&[96, 4, 3]);
        let b = BinAssignment::new([0, 1, 2], &its);
        assert!(!feasible_packing(&b, 100)); // 103 > 100
        assert!(feasible_covering(&b, 100));
    }

    #[test]
    fn maximality_and_minimality() {
        // pool {83,42,41,40,12,11,5}, c=100: {83,12,5} is maximal, {83,12} is not.
        let inst = Instance::binpacking(100, &[83, 42, 41, 40, 12, 11, 5]).unwrap();
        let pool = inst.items();
        let full = BinAssignment::new([0, 4, 6], pool); // 83,12,5
        assert!(is_maximal(&full, pool, 100));
        let partial = BinAssignment::new([0, 4], pool); // 83,12 — 5 still fits
        assert!(!is_maximal(&partial, pool, 100));

        // quota 100: {60,45} minimal, {60,50,45} not, {60,10} infeasible.
        let cov = Instance::bincovering(100, &[60, 50, 45, 10]).unwrap();
        let its = cov.items();
        assert!(is_minimal(&BinAssignment::new([0, 2], its), its, 100));
        assert!(!is_minimal(&BinAssignment::new([0, 1, 2], its), its, 100));
        assert!(!is_minimal(&BinAssignment::new([0, 3], its), its, 100));
    }

    #[test]
    fn validate_accepts_the_textbook_packing_solution() {
        let inst = Instance::binpacking(100, &[6, 12, 15, 40, 43, 82]).unwrap();
        // canonical ids: 0:82 1:43 2:40 3:15 4:12 5:6
        let sol = Solution {
            assignments: vec![
                BinAssignment::new([0, 4, 5], inst.items()), // 82,12,6
                BinAssignment::new([1, 2, 3], inst.items()), // 43,40,15
            ],
            overflow: BinAssignment::empty(),
            objective: 2,
        };
        assert!(validate_solution(&inst, &sol).is_valid());
    }

    #[test]
    fn validate_reports_each_violation_kind() {
        let inst = Instance::binpacking(100, &[6, 12, 15, 40, 43, 82]).unwrap();
        let sol = Solution {
            assignments: vec![
                BinAssignment::new([0, 1], inst.items()), // 82+43 = 125 > 100
                BinAssignment::new([1, 2], inst.items()), // 43 again
            ],
            overflow: BinAssignment::empty(),
            objective: 7,
        };
        let verdict = validate_solution(&inst, &sol);
        assert!(!verdict.is_valid());
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, Violation::CapacityExceeded { .. })));
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DuplicateItem { id: 1 })));
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, Violation::MissingItem { .. })));
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ObjectiveMismatch { .. })));
    }

    #[test]
    fn validate_checks_mkp_bin_alignment_and_profit_objective() {
        let inst = Instance::mkp(&[7, 5], &[(3, 4), (4, 5), (5, 6)]).unwrap();
        // canonical: 0:(5,6) 1:(4,5) 2:(3,4)
        let sol = Solution {
            assignments: vec![
                BinAssignment::new([1, 2], inst.items()), // 4+3=7 <= 7
                BinAssignment::new([0], inst.items()),    // 5 <= 5
            ],
            overflow: BinAssignment::empty(),
            objective: 15,
        };
        assert!(validate_solution(&inst, &sol).is_valid());

        let short = Solution {
            assignments: vec![BinAssignment::new([0], inst.items())],
            overflow: BinAssignment::empty(),
            objective: 6,
        };
        assert!(validate_solution(&inst, &short)
            .violations
            .iter()
            .any(|v| matches!(v, Violation::BinCountMismatch { expected: 2, actual: 1 })));
    }

    #[test]
    fn validate_covering_requires_every_item_once_and_quotas_met() {
        let inst = Instance::bincovering(100, &[60, 50, 45, 10]).unwrap();
        let good = Solution {
            assignments: vec![BinAssignment::new([0, 1], inst.items())],
            overflow: BinAssignment::new([2, 3], inst.items()),
            objective: 1,
        };
        assert!(validate_solution(&inst, &good).is_valid());

        let bad = Solution {
            assignments: vec![BinAssignment::new([2, 3], inst.items())], // 55 < 100
            overflow: BinAssignment::new([0], inst.items()),             // item 1 missing
            objective: 1,
        };
        let verdict = validate_solution(&inst, &bad);
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, Violation::QuotaUnmet { .. })));
        assert!(verdict
            .violations
            .iter()
            .any(|v| matches!(v, Violation::MissingItem { id: 1 })));
    }

    #[test]
    fn instance_constructor_rejects_bad_data() {
        assert!(matches!(
            Instance::binpacking(100, &[0]),
            Err(InstanceError::BadWeight { .. })
        ));
        assert!(matches!(
            Instance::binpacking(0, &[1]),
            Err(InstanceError::BadContainer { .. })
        ));
        assert!(matches!(
            Instance::new(ProblemKind::BinPacking, vec![5, 5], vec![(1, 0)]),
            Err(InstanceError::UniformContainerCount { .. })
        ));
        assert!(matches!(
            Instance::mkp(&[5], &[(2, -1)]),
            Err(InstanceError::BadValue { .. })
        ));
        assert!(matches!(
            Instance::new(ProblemKind::Mkp, vec![], vec![(1, 1)]),
            Err(InstanceError::NoContainers { .. })
        ));
    }
}
