//! The `bench` subcommand: run solver configurations over a directory of
//! instance files and aggregate per-group fail counts, mean times over
//! the non-failed runs, and mean node counts.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::Args;

use bincomp::{read_instance, CorrelationClass, Instance, Pruning, SolverConfig, Status};

use crate::{parse_pruning, parse_seconds, parse_solver, run_solver, SolverChoice, EXIT_OK};

/// Machine-readable record header; field order is stable.
pub const CSV_HEADER: &str = "class,kind,n,m,solver,pruning,fail,meanTime,meanNodes";

#[derive(Args)]
pub struct BenchArgs {
    /// Directory of instance files (*.txt).
    dir: PathBuf,
    /// Solving engines to run: bc, baseline, or oracle. Repeatable.
    #[arg(long = "solver", value_parser = parse_solver, default_value = "bc")]
    solvers: Vec<SolverChoice>,
    /// Pruning policies for the bc engine. Repeatable.
    #[arg(long = "pruning", value_parser = parse_pruning, default_value = "ndp")]
    prunings: Vec<Pruning>,
    /// Per-instance wall-clock limit in seconds.
    #[arg(long, value_parser = parse_seconds, default_value = "300")]
    time_limit: f64,
    /// Per-instance node budget.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Parallel worker slots; each run owns its solver state.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Also write the machine-readable records to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for documented random tie-breaks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// One instance plus the correlation class recovered from its file name
/// (instance files do not store the class; foreign names read "unknown").
struct Loaded {
    inst: Instance,
    class: String,
}

/// A single (instance, engine, pruning) run request.
struct Job<'a> {
    loaded: &'a Loaded,
    choice: SolverChoice,
    pruning: Pruning,
}

struct Run {
    status: Status,
    nodes: u64,
    elapsed: Duration,
}

/// Group key in CSV column order: failed runs within a group are counted
/// and excluded from both means.
type RowKey = (String, &'static str, usize, usize, &'static str, &'static str);

#[derive(Default)]
struct Acc {
    fail: usize,
    done_time: f64,
    done_nodes: u64,
    done: usize,
}

pub fn cmd_bench(args: BenchArgs) -> anyhow::Result<u8> {
    let loaded = load_dir(&args.dir)?;
    let configs = expand_configs(&args.solvers, &args.prunings);
    if let Some(big) = loaded.iter().find(|l| l.inst.n() > bincomp::solvers::EXHAUSTIVE_LIMIT) {
        if configs.iter().any(|&(choice, _)| choice == SolverChoice::Oracle) {
            bail!(
                "oracle runs are limited to {} items, but an instance has {}",
                bincomp::solvers::EXHAUSTIVE_LIMIT,
                big.inst.n()
            );
        }
    }

    let jobs: Vec<Job> = loaded
        .iter()
        .flat_map(|l| {
            configs.iter().map(move |&(choice, pruning)| Job { loaded: l, choice, pruning })
        })
        .collect();
    let runs = run_jobs(&args, &jobs)?;

    let mut groups: BTreeMap<RowKey, Acc> = BTreeMap::new();
    for (job, run) in jobs.iter().zip(&runs) {
        let pruning = match job.choice {
            SolverChoice::Bc => job.pruning.token(),
            _ => "-",
        };
        let key = (
            job.loaded.class.clone(),
            job.loaded.inst.kind().token(),
            job.loaded.inst.n(),
            job.loaded.inst.m(),
            job.choice.token(),
            pruning,
        );
        let acc = groups.entry(key).or_default();
        match run.status {
            Status::TimeLimit | Status::NodeLimit => acc.fail += 1,
            Status::Optimal | Status::Infeasible => {
                acc.done += 1;
                acc.done_time += run.elapsed.as_secs_f64();
                acc.done_nodes += run.nodes;
            }
        }
    }

    let mut records = vec![CSV_HEADER.to_string()];
    for ((class, kind, n, m, solver, pruning), acc) in &groups {
        let (mean_time, mean_nodes) = if acc.done == 0 {
            (String::new(), String::new())
        } else {
            (
                format!("{:.6}", acc.done_time / acc.done as f64),
                format!("{:.1}", acc.done_nodes as f64 / acc.done as f64),
            )
        };
        records.push(format!(
            "{class},{kind},{n},{m},{solver},{pruning},{},{mean_time},{mean_nodes}",
            acc.fail
        ));
    }

    print_table(&records);
    println!();
    for record in &records {
        println!("{record}");
    }
    if let Some(path) = &args.out {
        let mut text = records.join("\n");
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(EXIT_OK)
}

fn load_dir(dir: &PathBuf) -> anyhow::Result<Vec<Loaded>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "txt"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        bail!("no instance files (*.txt) in {}", dir.display());
    }
    paths
        .into_iter()
        .map(|path| {
            let inst = read_instance(&path)?;
            Ok(Loaded { inst, class: class_from_name(&path) })
        })
        .collect()
}

/// Recovers the correlation class from the generator's file-name shape
/// `kind_class_nN_mM_sSEED.txt`; anything else reads "unknown".
fn class_from_name(path: &std::path::Path) -> String {
    path.file_stem()
        .and_then(|stem| stem.to_str())
        .and_then(|stem| stem.split('_').nth(1))
        .and_then(CorrelationClass::from_token)
        .map(|class| class.token().to_string())
        .unwrap_or_else(|| "unknown".to_string())
}

/// Expands the engine and pruning lists into run configurations: the bc
/// engine takes each pruning policy once; the others ignore pruning.
fn expand_configs(
    solvers: &[SolverChoice],
    prunings: &[Pruning],
) -> Vec<(SolverChoice, Pruning)> {
    let mut out = Vec::new();
    for &choice in solvers {
        match choice {
            SolverChoice::Bc => {
                for &p in prunings {
                    if !out.contains(&(choice, p)) {
                        out.push((choice, p));
                    }
                }
            }
            _ => {
                if !out.iter().any(|&(c, _)| c == choice) {
                    out.push((choice, Pruning::default()));
                }
            }
        }
    }
    out
}

/// Runs every job, fanning out over worker threads. Results land in a
/// per-job slot, so aggregation is independent of execution order.
fn run_jobs(args: &BenchArgs, jobs: &[Job]) -> anyhow::Result<Vec<Run>> {
    let cfg_base = SolverConfig {
        time_limit: Some(Duration::from_secs_f64(args.time_limit)),
        node_limit: args.node_limit,
        rng_seed: args.seed,
        ..SolverConfig::default()
    };
    let slots: Vec<Mutex<Option<Run>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    let cursor = AtomicUsize::new(0);
    let workers = args.workers.clamp(1, jobs.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                let cfg = SolverConfig { pruning: job.pruning, ..cfg_base };
                let run = run_solver(job.choice, &job.loaded.inst, &cfg).map(|report| Run {
                    status: report.status,
                    nodes: report.nodes,
                    elapsed: report.elapsed,
                });
                *slots[i].lock().unwrap() = Some(run.expect("oracle size pre-checked"));
            });
        }
    });
    Ok(slots
        .into_iter()
        .map(|slot| slot.into_inner().unwrap().expect("every job ran"))
        .collect())
}

/// Prints the records as an aligned text table (a derived view; the
/// comma-separated records below it are the stable interface).
fn print_table(records: &[String]) {
    let rows: Vec<Vec<&str>> = records.iter().map(|r| r.split(',').collect()).collect();
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, width)| format!("{cell:<width$}"))
            .collect();
        println!("{}", line.join("  ").trim_end());
    }
}
