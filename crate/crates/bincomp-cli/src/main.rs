//! `bincomp` command line: generate instance suites, run the solvers,
//! verify solutions, and emit benchmark tables.
//!
//! Exit codes:
//!
//! | code | meaning                                             |
//! |------|-----------------------------------------------------|
//! | 0    | success (for `solve`: proved optimal)               |
//! | 1    | failure (unsatisfiable spec, invalid solution, ...) |
//! | 2    | unusable input: bad flags or unparseable files      |
//! | 3    | `solve` stopped at the wall-clock limit             |
//! | 4    | `solve` stopped at the node limit                   |
//! | 5    | `solve` proved the instance infeasible              |

mod bench;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use bincomp::instances::ParseError;
use bincomp::{
    generate_suite, instance_filename, read_instance, read_solution, solve, solve_exhaustive,
    solve_item_oriented, validate_solution, write_instance, write_solution, BatchWidth,
    CorrelationClass, GenSpec, Instance, ProblemKind, Pruning, SolveReport, SolverConfig, Status,
    ValueOrdering,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_TIME_LIMIT: u8 = 3;
pub const EXIT_NODE_LIMIT: u8 = 4;
pub const EXIT_INFEASIBLE: u8 = 5;

#[derive(Parser)]
#[command(
    name = "bincomp",
    version,
    about = "Exact bin-completion solvers for packing and covering problems"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a suite of generated instance files.
    Generate(GenerateArgs),
    /// Solve one instance file and report the search outcome.
    Solve(SolveArgs),
    /// Validate a solution file against its instance.
    Verify(VerifyArgs),
    /// Run solver configurations over an instance directory and
    /// aggregate fail counts, mean times, and mean node counts.
    Bench(bench::BenchArgs),
}

/// Which solving engine a command drives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SolverChoice {
    /// Bin-completion branch-and-bound (the library's main solver).
    Bc,
    /// Item-oriented branch-and-bound baseline.
    Baseline,
    /// Exhaustive enumeration; refuses instances with more than 16 items.
    Oracle,
}

impl SolverChoice {
    pub fn token(self) -> &'static str {
        match self {
            SolverChoice::Bc => "bc",
            SolverChoice::Baseline => "baseline",
            SolverChoice::Oracle => "oracle",
        }
    }
}

fn parse_solver(tok: &str) -> Result<SolverChoice, String> {
    match tok {
        "bc" => Ok(SolverChoice::Bc),
        "baseline" => Ok(SolverChoice::Baseline),
        "oracle" => Ok(SolverChoice::Oracle),
        _ => Err(format!("unknown solver {tok:?} (expected bc, baseline, or oracle)")),
    }
}

fn parse_kind(tok: &str) -> Result<ProblemKind, String> {
    ProblemKind::from_token(tok).ok_or_else(|| {
        format!("unknown kind {tok:?} (expected binpacking, mkp, bincovering, or mccp)")
    })
}

fn parse_class(tok: &str) -> Result<CorrelationClass, String> {
    CorrelationClass::from_token(tok).ok_or_else(|| {
        format!("unknown class {tok:?} (expected uncorrelated, weakly, strongly, or subsetsum)")
    })
}

fn parse_pruning(tok: &str) -> Result<Pruning, String> {
    Pruning::from_token(tok)
        .ok_or_else(|| format!("unknown pruning {tok:?} (expected none, np, or ndp)"))
}

fn parse_ordering(tok: &str) -> Result<ValueOrdering, String> {
    ValueOrdering::from_token(tok).ok_or_else(|| {
        format!(
            "unknown ordering {tok:?} (expected min-card-max-profit, min-weight, \
             min-card-min-sum, min-card-max-weight, or generation)"
        )
    })
}

fn parse_width(tok: &str) -> Result<BatchWidth, String> {
    if tok == "unbounded" {
        return Ok(BatchWidth::Unbounded);
    }
    match tok.parse::<usize>() {
        Ok(h) if h >= 1 => Ok(BatchWidth::Bounded(h)),
        _ => Err(format!("width must be a positive integer or \"unbounded\", got {tok:?}")),
    }
}

fn parse_seconds(tok: &str) -> Result<f64, String> {
    match tok.parse::<f64>() {
        Ok(s) if s.is_finite() && s >= 0.0 => Ok(s),
        _ => Err(format!("expected a non-negative number of seconds, got {tok:?}")),
    }
}

pub fn status_token(status: Status) -> &'static str {
    match status {
        Status::Optimal => "optimal",
        Status::TimeLimit => "time-limit",
        Status::NodeLimit => "node-limit",
        Status::Infeasible => "infeasible",
    }
}

fn status_exit(status: Status) -> u8 {
    match status {
        Status::Optimal => EXIT_OK,
        Status::TimeLimit => EXIT_TIME_LIMIT,
        Status::NodeLimit => EXIT_NODE_LIMIT,
        Status::Infeasible => EXIT_INFEASIBLE,
    }
}

fn width_token(width: BatchWidth) -> String {
    match width {
        BatchWidth::Bounded(h) => h.to_string(),
        BatchWidth::Unbounded => "unbounded".to_string(),
    }
}

fn main() -> ExitCode {
    // Clap itself exits with 2 on unusable flags, matching EXIT_INPUT.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.is::<ParseError>() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::from(EXIT_FAILURE)
            }
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.cmd {
        Cmd::Generate(args) => cmd_generate(args),
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Bench(args) => bench::cmd_bench(args),
    }
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

#[derive(Args)]
struct GenerateArgs {
    /// Problem kind: binpacking, mkp, bincovering, or mccp.
    #[arg(long, value_parser = parse_kind)]
    kind: ProblemKind,
    /// Profit correlation class for the valued kinds.
    #[arg(long, value_parser = parse_class, default_value = "uncorrelated")]
    class: CorrelationClass,
    /// Item count per instance.
    #[arg(long)]
    n: usize,
    /// Container count (mkp/mccp; the uniform kinds always use one).
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Weight range, two integers.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    range: Vec<i64>,
    /// Capacity (binpacking) or quota (bincovering); mkp/mccp generate
    /// their own container bounds.
    #[arg(long)]
    bound: Option<i64>,
    /// How many instances to write.
    #[arg(long)]
    count: usize,
    /// First seed; instances take sequential seeds from here (seeds whose
    /// draws come out degenerate are skipped).
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Directory the instance files are written into.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// Keep only covering instances the root bound test cannot close.
    #[arg(long)]
    nontrivial: bool,
}

fn cmd_generate(args: GenerateArgs) -> anyhow::Result<u8> {
    let spec = GenSpec {
        kind: args.kind,
        n: args.n,
        m: args.m,
        weight_min: args.range[0],
        weight_max: args.range[1],
        class: args.class,
        bound: args.bound,
        seed: args.seed,
    };
    let suite = generate_suite(&spec, args.count, args.nontrivial)
        .context("instance generation failed")?;
    std::fs::create_dir_all(&args.out_dir)
        .with_context(|| format!("creating {}", args.out_dir.display()))?;
    for (seed, inst) in &suite {
        let name = instance_filename(&GenSpec { seed: *seed, ..spec.clone() });
        let path = args.out_dir.join(name);
        write_instance(inst, &path).with_context(|| format!("writing {}", path.display()))?;
    }
    println!("wrote {} instance file(s) to {}", suite.len(), args.out_dir.display());
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

#[derive(Args)]
struct SolveArgs {
    /// Instance file.
    instance: PathBuf,
    /// Solving engine: bc, baseline, or oracle.
    #[arg(long, value_parser = parse_solver, default_value = "bc")]
    solver: SolverChoice,
    /// Nogood pruning policy (bc only): none, np, or ndp.
    #[arg(long, value_parser = parse_pruning, default_value = "ndp")]
    pruning: Pruning,
    /// Batch expansion ordering; defaults to the kind's own.
    #[arg(long, value_parser = parse_ordering)]
    ordering: Option<ValueOrdering>,
    /// Incremental batch width: a positive integer or "unbounded";
    /// defaults to the kind's own.
    #[arg(long, value_parser = parse_width)]
    width: Option<BatchWidth>,
    /// Wall-clock limit in seconds, polled at node boundaries.
    #[arg(long, value_parser = parse_seconds)]
    time_limit: Option<f64>,
    /// Node budget.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Seed for documented random tie-breaks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the solution file here.
    #[arg(long)]
    solution: Option<PathBuf>,
    /// Print one machine-readable line instead of the report.
    #[arg(long)]
    machine: bool,
}

fn cmd_solve(args: SolveArgs) -> anyhow::Result<u8> {
    let inst = read_instance(&args.instance)?;
    let cfg = SolverConfig {
        pruning: args.pruning,
        ordering: args.ordering,
        h: args.width,
        time_limit: args.time_limit.map(Duration::from_secs_f64),
        node_limit: args.node_limit,
        rng_seed: args.seed,
        ..SolverConfig::default()
    };
    let report = run_solver(args.solver, &inst, &cfg)?;
    if let Some(path) = &args.solution {
        write_solution(&report.solution, inst.kind(), path)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if args.machine {
        println!(
            "status={} objective={} nodes={} timeSeconds={:.6}",
            status_token(report.status),
            report.objective,
            report.nodes,
            report.elapsed.as_secs_f64()
        );
    } else {
        print_report(&args, &inst, &report);
    }
    Ok(status_exit(report.status))
}

pub fn run_solver(
    choice: SolverChoice,
    inst: &Instance,
    cfg: &SolverConfig,
) -> anyhow::Result<SolveReport> {
    match choice {
        SolverChoice::Bc => Ok(solve(inst, cfg)),
        SolverChoice::Baseline => Ok(solve_item_oriented(inst, cfg)),
        SolverChoice::Oracle => Ok(solve_exhaustive(inst)?),
    }
}

fn print_report(args: &SolveArgs, inst: &Instance, report: &SolveReport) {
    println!("instance   {}", args.instance.display());
    println!("kind       {}", inst.kind().token());
    println!("items      {}", inst.n());
    println!("containers {}", inst.m());
    match args.solver {
        SolverChoice::Bc => {
            let ordering = args
                .ordering
                .unwrap_or_else(|| ValueOrdering::default_for(inst.kind()));
            let width = args.width.unwrap_or_else(|| BatchWidth::default_for(inst.kind()));
            println!(
                "solver     bc (pruning={}, ordering={}, width={})",
                args.pruning.token(),
                ordering.token(),
                width_token(width)
            );
        }
        choice => println!("solver     {}", choice.token()),
    }
    println!("status     {}", status_token(report.status));
    println!("objective  {}", report.objective);
    println!("nodes      {}", report.nodes);
    println!("time       {:.6}s", report.elapsed.as_secs_f64());
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Args)]
struct VerifyArgs {
    /// Instance file.
    instance: PathBuf,
    /// Solution file.
    solution: PathBuf,
    /// Cross-check the objective against the exhaustive oracle (n <= 16).
    #[arg(long)]
    against_oracle: bool,
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let inst = read_instance(&args.instance)?;
    let sol = read_solution(&args.solution, &inst)?;
    let verdict = validate_solution(&inst, &sol);
    if !verdict.is_valid() {
        println!("{verdict}");
        return Ok(EXIT_FAILURE);
    }
    if args.against_oracle {
        let oracle = solve_exhaustive(&inst)?;
        if oracle.objective != sol.objective {
            println!(
                "objective gap: oracle {} vs solution {}",
                oracle.objective, sol.objective
            );
            return Ok(EXIT_FAILURE);
        }
        println!("valid; objective {} matches the oracle", sol.objective);
    } else {
        println!("valid; objective {}", sol.objective);
    }
    Ok(EXIT_OK)
}
