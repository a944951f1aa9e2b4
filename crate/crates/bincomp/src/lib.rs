//! Exact bin-oriented branch-and-bound for one-dimensional packing and
//! covering problems.
//!
//! The library solves four problem kinds over a shared item model:
//!
//! * **bin packing** — partition all items into the fewest bins of uniform
//!   capacity `c`;
//! * **0-1 multiple knapsack** — fill `m` containers of given capacities
//!   with a maximum-profit subset of the items;
//! * **bin covering** — build as many disjoint bins as possible whose
//!   weights each reach a quota `q`, discarding the rest;
//! * **min-cost covering** — meet every container's quota with disjoint
//!   item sets of minimum total cost.
//!
//! The central idea is *bin completion*: the search branches on complete
//! bin assignments (maximal feasible sets for packing, minimal feasible
//! sets for covering) instead of one item at a time. Families of candidate
//! assignments are produced lazily by [`gen::GenCursor`], filtered by the
//! dominance predicates in [`dominance`], bounded by the relaxations in
//! [`bounds`], and further pruned by the nogood machinery in [`nogood`],
//! which suppresses assignments interchangeable with previously explored
//! siblings. An item-oriented baseline and an exhaustive oracle (both in
//! [`solvers`]) provide independent reference points, and [`instances`]
//! supplies seeded random instance generation plus file round-tripping.
//!
//! ```
//! use bincomp::{Instance, SolverConfig, solve};
//!
//! let inst = Instance::binpacking(100, &[6, 12, 15, 40, 43, 82]).unwrap();
//! let report = solve(&inst, &SolverConfig::default());
//! assert_eq!(report.objective, 2);
//! ```

pub mod bounds;
pub mod core;
pub mod dominance;
pub mod gen;
pub mod instances;
pub mod nogood;
pub mod solvers;

pub use crate::core::{
    validate_solution, BinAssignment, Instance, InstanceError, Item, ProblemKind, Solution,
    Violation,
};
pub use crate::gen::{open_cursor, GenCursor, Side};
pub use crate::instances::{
    generate_instance, generate_suite, instance_filename, read_instance, read_solution,
    write_instance, write_solution, CorrelationClass, GenSpec, SplitMix64,
};
pub use crate::nogood::Pruning;
pub use crate::solvers::{
    solve, solve_bincovering, solve_binpacking, solve_exhaustive, solve_item_oriented, solve_mccp,
    solve_mkp, BatchWidth, SolveReport, SolverConfig, Status, ValueOrdering,
};
