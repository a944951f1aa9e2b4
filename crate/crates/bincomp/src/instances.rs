//! Random instance generation (four correlation classes, degeneracy and
//! triviality filters) and instance/solution serialization.
//!
//! Everything here is deterministic given a [`GenSpec`] and seed: the PRNG is a
//! fixed, documented 64-bit algorithm (SplitMix64), not the platform
//! default, so suites are bit-reproducible across machines and languages.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::bounds::{covering_greedy_lower, covering_upper_bound};
use crate::core::{Instance, InstanceError, ProblemKind, Solution};

/// SplitMix64: `state += 0x9E3779B97F4A7C15`, then two xor-multiply mixes
/// (`0xBF58476D1CE4E5B9` after a 30-bit shift, `0x94D049BB133111EB` after a
/// 27-bit shift) and a final 31-bit xor-shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `lo..=hi` via `lo + next % (hi - lo + 1)`. The
    /// modulo bias is accepted and documented: reproducibility matters more
    /// than perfect uniformity for benchmark suites.
    pub fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

/// Profit/weight correlation classes for valued kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CorrelationClass {
    /// Profits drawn independently in the weight range.
    Uncorrelated,
    /// Profits in `[w - d, w + d]` with `d = (max - min) / 10`, clamped >= 1.
    WeaklyCorrelated,
    /// Profits exactly `w + d`.
    StronglyCorrelated,
    /// Profits equal weights.
    SubsetSum,
}

impl CorrelationClass {
    pub fn token(self) -> &'static str {
        match self {
            CorrelationClass::Uncorrelated => "uncorrelated",
            CorrelationClass::WeaklyCorrelated => "weakly",
            CorrelationClass::StronglyCorrelated => "strongly",
            CorrelationClass::SubsetSum => "subsetsum",
        }
    }

    pub fn from_token(tok: &str) -> Option<CorrelationClass> {
        match tok {
            "uncorrelated" => Some(CorrelationClass::Uncorrelated),
            "weakly" => Some(CorrelationClass::WeaklyCorrelated),
            "strongly" => Some(CorrelationClass::StronglyCorrelated),
            "subsetsum" => Some(CorrelationClass::SubsetSum),
            _ => None,
        }
    }

    pub const ALL: [CorrelationClass; 4] = [
        CorrelationClass::Uncorrelated,
        CorrelationClass::WeaklyCorrelated,
        CorrelationClass::StronglyCorrelated,
        CorrelationClass::SubsetSum,
    ];
}

impl fmt::Display for CorrelationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// One generation request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: ProblemKind,
    pub n: usize,
    /// Container count for MKP/MCCP; ignored (forced to 1) for the uniform
    /// kinds.
    pub m: usize,
    pub weight_min: i64,
    pub weight_max: i64,
    pub class: CorrelationClass,
    /// Capacity (packing) or quota (covering); must be set for those kinds
    /// and is ignored for MKP/MCCP, whose containers are generated.
    pub bound: Option<i64>,
    pub seed: u64,
}

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("weight range [{min}, {max}] is invalid (need 1 <= min <= max)")]
    BadRange { min: i64, max: i64 },
    #[error("kind {0} needs an explicit capacity/quota")]
    MissingBound(ProblemKind),
    #[error("n and m must be at least 1")]
    EmptySpec,
    #[error("generation budget exhausted after {attempts} attempts")]
    BudgetExhausted { attempts: usize },
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// Attempts before a degenerate-instance rejection loop gives up.
const REJECTION_BUDGET: usize = 10_000;

/// Draws `n` `(weight, value)` pairs. Valued kinds get class-correlated
/// profits (weight first, then profit per item); the others carry value 0
/// and consume no profit draws.
pub fn gen_items(
    kind: ProblemKind,
    n: usize,
    weight_min: i64,
    weight_max: i64,
    class: CorrelationClass,
    rng: &mut SplitMix64,
) -> Vec<(i64, i64)> {
    let d = (weight_max - weight_min) / 10;
    (0..n)
        .map(|_| {
            let w = rng.next_in(weight_min, weight_max);
            let v = if !kind.is_valued() {
                0
            } else {
                match class {
                    CorrelationClass::Uncorrelated => rng.next_in(weight_min, weight_max),
                    CorrelationClass::WeaklyCorrelated => rng.next_in(w - d, w + d).max(1),
                    CorrelationClass::StronglyCorrelated => w + d,
                    CorrelationClass::SubsetSum => w,
                }
            };
            (w, v)
        })
        .collect()
}

/// Draws MKP capacities: the first `m - 1` uniform in
/// `[floor(0.4 sum/m), floor(0.6 sum/m)]`, the last the remainder so the
/// total is `floor(0.5 sum)`. Returns `None` when the remainder is below 1
/// (caller redraws).
pub fn gen_mkp_capacities(rng: &mut SplitMix64, m: usize, total_weight: i64) -> Option<Vec<i64>> {
    let target = total_weight / 2;
    let lo = 2 * total_weight / (5 * m as i64);
    let hi = 3 * total_weight / (5 * m as i64);
    let mut caps = Vec::with_capacity(m);
    let mut used = 0;
    for _ in 0..m - 1 {
        let c = rng.next_in(lo, hi);
        caps.push(c);
        used += c;
    }
    let last = target - used;
    if last < 1 {
        return None;
    }
    caps.push(last);
    Some(caps)
}

/// The three rejection conditions for generated MKP suites (also reused for
/// MCCP quotas to keep the suites comparable):
/// (a) some item fits no container, (b) the smallest container is below the
/// smallest item, (c) the weight sum is below the largest capacity.
pub fn is_degenerate_mkp(inst: &Instance) -> bool {
    let max_c = *inst.containers().iter().max().unwrap();
    let min_c = *inst.containers().iter().min().unwrap();
    let min_w = inst.items().iter().map(|it| it.weight).min().unwrap_or(0);
    inst.items().iter().any(|it| it.weight > max_c)
        || min_c < min_w
        || inst.total_weight() < max_c
}

/// Root closure test for covering instances: the greedy lower bound already
/// matches the counting upper bound, so the solver finishes without search.
pub fn is_trivial_covering(inst: &Instance) -> bool {
    let quota = inst.uniform_bound();
    covering_greedy_lower(inst.items(), quota).objective
        == covering_upper_bound(inst.items(), quota)
}

/// Generates one instance deterministically from a [`GenSpec`]. MKP/MCCP use an
/// internal rejection loop (budgeted) for capacity feasibility and
/// degeneracy; the uniform kinds never reject.
pub fn generate_instance(spec: &GenSpec) -> Result<Instance, GenError> {
    if spec.weight_min < 1 || spec.weight_min > spec.weight_max {
        return Err(GenError::BadRange {
            min: spec.weight_min,
            max: spec.weight_max,
        });
    }
    if spec.n == 0 || spec.m == 0 {
        return Err(GenError::EmptySpec);
    }
    let mut rng = SplitMix64::new(spec.seed);
    match spec.kind {
        ProblemKind::BinPacking | ProblemKind::BinCovering => {
            let bound = spec.bound.ok_or(GenError::MissingBound(spec.kind))?;
            let items = gen_items(
                spec.kind,
                spec.n,
                spec.weight_min,
                spec.weight_max,
                spec.class,
                &mut rng,
            );
            Ok(Instance::new(spec.kind, vec![bound], items)?)
        }
        ProblemKind::Mkp | ProblemKind::Mccp => {
            for _ in 0..REJECTION_BUDGET {
                let items = gen_items(
                    spec.kind,
                    spec.n,
                    spec.weight_min,
                    spec.weight_max,
                    spec.class,
                    &mut rng,
                );
                let total: i64 = items.iter().map(|&(w, _)| w).sum();
                let Some(caps) = gen_mkp_capacities(&mut rng, spec.m, total) else {
                    continue;
                };
                let inst = Instance::new(spec.kind, caps, items)?;
                if !is_degenerate_mkp(&inst) {
                    return Ok(inst);
                }
            }
            Err(GenError::BudgetExhausted {
                attempts: REJECTION_BUDGET,
            })
        }
    }
}

/// Generates `count` instances with sequential seeds starting at
/// `spec.seed`, skipping seeds whose instance fails the filters. Returns
/// `(seed, instance)` pairs.
pub fn generate_suite(
    spec: &GenSpec,
    count: usize,
    nontrivial_covering: bool,
) -> Result<Vec<(u64, Instance)>, GenError> {
    let mut out = Vec::with_capacity(count);
    let mut seed = spec.seed;
    let budget = REJECTION_BUDGET + 100 * count;
    for _ in 0..budget {
        if out.len() == count {
            break;
        }
        let one = GenSpec { seed, ..spec.clone() };
        seed += 1;
        match generate_instance(&one) {
            Ok(inst) => {
                if nontrivial_covering
                    && inst.kind().is_covering()
                    && !inst.kind().is_valued()
                    && is_trivial_covering(&inst)
                {
                    continue;
                }
                out.push((one.seed, inst));
            }
            Err(GenError::BudgetExhausted { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    if out.len() < count {
        return Err(GenError::BudgetExhausted { attempts: budget });
    }
    Ok(out)
}

/// Canonical file name for a generated instance.
pub fn instance_filename(spec: &GenSpec) -> String {
    format!(
        "{}_{}_n{}_m{}_s{:08}.txt",
        spec.kind.token(),
        spec.class.token(),
        spec.n,
        spec.m,
        spec.seed
    )
}

#[derive(Debug, thiserror::Error)]
#[error("{path}:{line}: {msg}")]
pub struct ParseError {
    pub path: String,
    pub line: usize,
    pub msg: String,
}

fn perr(path: &Path, line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        path: path.display().to_string(),
        line,
        msg: msg.into(),
    }
}

/// Lines that carry content: comment (`#`) and blank lines are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_int(path: &Path, line: usize, field: &str, tok: &str) -> Result<i64, ParseError> {
    tok.parse::<i64>()
        .map_err(|_| perr(path, line, format!("{field}: not an integer: {tok:?}")))
}

/// Reads an instance file:
/// ```text
/// kind <binpacking|mkp|bincovering|mccp>
/// containers <v1> <v2> ...
/// items <n>
/// <weight> [<value>]   (n lines; value only for mkp/mccp)
/// ```
/// `#` comments and blank lines are ignored.
pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance, ParseError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| perr(path, 0, e.to_string()))?;
    let mut lines = content_lines(&text);

    let (ln, kind_line) = lines
        .next()
        .ok_or_else(|| perr(path, 0, "missing kind line"))?;
    let kind_tok = kind_line
        .strip_prefix("kind")
        .map(str::trim)
        .ok_or_else(|| perr(path, ln, "expected `kind <token>`"))?;
    let kind = ProblemKind::from_token(kind_tok)
        .ok_or_else(|| perr(path, ln, format!("unknown kind token {kind_tok:?}")))?;

    let (ln, cont_line) = lines
        .next()
        .ok_or_else(|| perr(path, 0, "missing containers line"))?;
    let cont_body = cont_line
        .strip_prefix("containers")
        .ok_or_else(|| perr(path, ln, "expected `containers <values>`"))?;
    let containers = cont_body
        .split_whitespace()
        .map(|tok| parse_int(path, ln, "container", tok))
        .collect::<Result<Vec<i64>, _>>()?;

    let (ln, items_line) = lines
        .next()
        .ok_or_else(|| perr(path, 0, "missing items line"))?;
    let n_tok = items_line
        .strip_prefix("items")
        .map(str::trim)
        .ok_or_else(|| perr(path, ln, "expected `items <n>`"))?;
    let n = parse_int(path, ln, "item count", n_tok)?;
    if n < 0 {
        return Err(perr(path, ln, "item count must be non-negative"));
    }

    let mut weights_values = Vec::with_capacity(n as usize);
    for k in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| perr(path, 0, format!("missing item line {} of {n}", k + 1)))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        let expected = if kind.is_valued() { 2 } else { 1 };
        if toks.len() != expected {
            return Err(perr(
                path,
                ln,
                format!("item line needs {expected} field(s), found {}", toks.len()),
            ));
        }
        let w = parse_int(path, ln, "weight", toks[0])?;
        let v = if kind.is_valued() {
            parse_int(path, ln, "value", toks[1])?
        } else {
            0
        };
        weights_values.push((w, v));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(perr(path, ln, "unexpected trailing content"));
    }
    Instance::new(kind, containers, weights_values).map_err(|e| perr(path, 0, e.to_string()))
}

/// Writes an instance in the format read by [`read_instance`].
pub fn write_instance(inst: &Instance, path: impl AsRef<Path>) -> std::io::Result<()> {
    let mut out = String::new();
    out.push_str(&format!("kind {}\n", inst.kind().token()));
    out.push_str("containers");
    for c in inst.containers() {
        out.push_str(&format!(" {c}"));
    }
    out.push('\n');
    out.push_str(&format!("items {}\n", inst.n()));
    for it in inst.items() {
        if inst.kind().is_valued() {
            out.push_str(&format!("{} {}\n", it.weight, it.value));
        } else {
            out.push_str(&format!("{}\n", it.weight));
        }
    }
    fs::write(path, out)
}

/// Reads a solution file against its instance:
/// ```text
/// bins <k>
/// <id> <id> ...        (exactly k lines; a blank line is an empty bin)
/// overflow <id> ...    (optional; covering discards)
/// ```
/// Comments and blank lines are skipped *outside* the k-line bin block;
/// inside it every raw line counts (that is how empty bins are written).
pub fn read_solution(path: impl AsRef<Path>, inst: &Instance) -> Result<Solution, ParseError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| perr(path, 0, e.to_string()))?;
    let all: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    let mut pos = 0;
    // header
    let (ln, header) = loop {
        let Some(&(ln, raw)) = all.get(pos) else {
            return Err(perr(path, 0, "missing bins line"));
        };
        pos += 1;
        let t = raw.trim();
        if !t.is_empty() && !t.starts_with('#') {
            break (ln, t);
        }
    };
    let k_tok = header
        .strip_prefix("bins")
        .map(str::trim)
        .ok_or_else(|| perr(path, ln, "expected `bins <k>`"))?;
    let k = parse_int(path, ln, "bin count", k_tok)?;
    if k < 0 {
        return Err(perr(path, ln, "bin count must be non-negative"));
    }

    let parse_ids = |ln: usize, body: &str| -> Result<Vec<usize>, ParseError> {
        let mut ids = Vec::new();
        for tok in body.split_whitespace() {
            let id = parse_int(path, ln, "item id", tok)?;
            if id < 0 || id as usize >= inst.n() {
                return Err(perr(path, ln, format!("item id {id} out of range")));
            }
            if ids.contains(&(id as usize)) {
                return Err(perr(path, ln, format!("item id {id} repeated in one bin")));
            }
            ids.push(id as usize);
        }
        Ok(ids)
    };

    let mut assignments = Vec::with_capacity(k as usize);
    for b in 0..k {
        let Some(&(ln, raw)) = all.get(pos) else {
            return Err(perr(path, 0, format!("missing bin line {} of {k}", b + 1)));
        };
        pos += 1;
        let ids = parse_ids(ln, raw)?;
        assignments.push(crate::core::BinAssignment::new(ids, inst.items()));
    }

    let mut overflow = crate::core::BinAssignment::empty();
    while let Some(&(ln, raw)) = all.get(pos) {
        pos += 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let body = t
            .strip_prefix("overflow")
            .ok_or_else(|| perr(path, ln, "expected `overflow <ids>` or end of file"))?;
        overflow = crate::core::BinAssignment::new(parse_ids(ln, body)?, inst.items());
    }

    let objective = match inst.kind() {
        ProblemKind::BinPacking | ProblemKind::BinCovering => assignments.len() as i64,
        ProblemKind::Mkp | ProblemKind::Mccp => {
            assignments.iter().map(|a| a.value_sum()).sum()
        }
    };
    Ok(Solution {
        assignments,
        overflow,
        objective,
    })
}

/// Writes a solution in the format read by [`read_solution`]. The overflow
/// line appears only for covering kinds.
pub fn write_solution(
    sol: &Solution,
    kind: ProblemKind,
    path: impl AsRef<Path>,
) -> std::io::Result<()> {
    let mut out = String::new();
    out.push_str(&format!("bins {}\n", sol.assignments.len()));
    for asg in &sol.assignments {
        let ids: Vec<String> = asg.item_ids().iter().map(|id| id.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    if kind.is_covering() {
        out.push_str("overflow");
        for id in sol.overflow.item_ids() {
            out.push_str(&format!(" {id}"));
        }
        out.push('\n');
    }
    fs::write(path, out)
}
