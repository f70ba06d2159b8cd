//! The `syncagents` command line.
//!
//! Exit codes: 0 success, 1 runtime failure (divergence, failed sweep rows,
//! output errors), 2 usage or configuration error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{preset, RunConfig, PRESETS};
use crate::error::{Error, Result};
use crate::experiments::summary::curves;
use crate::experiments::{run_sweep, run_sweep_with_threads, run_trajectory, write_table, write_trajectory};
use crate::observables::{order_series, settling_time};
use crate::topology::{all_to_all, deterministic_scale_free, save_adjacency};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "syncagents", version, about = "Amplitude-phase Kuramoto agents on networks")]
struct Cli {
    /// List the embedded presets and exit.
    #[arg(long, global = true)]
    list_presets: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a network as an edge list.
    GenNetwork(GenNetworkArgs),
    /// Integrate one trajectory and write it as CSV.
    Simulate(RunArgs),
    /// Run a (sigma, epsilon, replicate) sweep and write the table as CSV.
    Sweep(RunArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum NetworkArg {
    AllToAll,
    ScaleFree,
}

#[derive(Debug, Args)]
struct GenNetworkArgs {
    kind: NetworkArg,
    /// Node count for all-to-all.
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Replication rounds for scale-free (3^k nodes).
    #[arg(long, default_value_t = 4)]
    iterations: u32,
    #[arg(long, default_value = "network.edges")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    #[arg(long)]
    preset: Option<String>,
    /// Output CSV path (overrides the config).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed (overrides the config).
    #[arg(long)]
    seed: Option<u64>,
    /// Maximum worker threads for sweeps.
    #[arg(long)]
    threads: Option<usize>,
    /// Write the effective configuration, defaults filled in, to this path.
    #[arg(long)]
    dump_config: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::Parse { .. } | Error::InvalidParameter(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };

    if cli.list_presets {
        for p in PRESETS {
            println!("{:<16} {}", p.name, p.summary);
        }
        return EXIT_OK;
    }

    let outcome = match cli.command {
        Some(Command::GenNetwork(a)) => gen_network(&a),
        Some(Command::Simulate(a)) => simulate(&a),
        Some(Command::Sweep(a)) => sweep(&a),
        None => Err(Failure::Usage("no command given; see --help".into())),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            EXIT_RUNTIME
        }
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Runtime(format!("cannot create {}: {e}", path.display())))
}

fn gen_network(args: &GenNetworkArgs) -> Result<i32, Failure> {
    let adjacency = match args.kind {
        NetworkArg::AllToAll => all_to_all(args.n)?,
        NetworkArg::ScaleFree => {
            if args.iterations > 12 {
                return Err(Failure::Usage("--iterations above 12 is not supported".into()));
            }
            deterministic_scale_free(args.iterations)?
        }
    };
    save_adjacency(&adjacency, create(&args.out)?)?;
    println!("nodes {}", adjacency.n());
    println!("edges {}", adjacency.edge_count());
    println!("max_degree {}", adjacency.max_degree());
    Ok(EXIT_OK)
}

fn load_config(args: &RunArgs) -> Result<RunConfig, Failure> {
    let mut cfg = match (&args.config, &args.preset) {
        (Some(path), _) => RunConfig::from_path(path)?,
        (None, Some(name)) => preset(name)?,
        (None, None) => RunConfig::default(),
    };
    if let Some(seed) = args.seed {
        cfg.run.seed = seed;
    }
    if let Some(path) = &args.dump_config {
        std::fs::write(path, cfg.to_toml_string())
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(cfg)
}

fn simulate(args: &RunArgs) -> Result<i32, Failure> {
    let cfg = load_config(args)?;
    let point = cfg.run_point()?;
    let adjacency = cfg.topology()?.build()?;
    let out = args.out.clone().unwrap_or_else(|| cfg.output.trajectory.clone());

    let trajectory = run_trajectory(&adjacency, &point)?;
    write_trajectory(&trajectory, create(&out)?)?;

    let series = order_series(&trajectory);
    let cut = point.transient_fraction * point.integration.t_end;
    let (mean_raw, mean_norm) = series.tail_means(cut)?;
    let last = series.len() - 1;
    println!("network       {}", adjacency.describe());
    println!("final R       raw {:.6}  normalized {:.6}", series.raw[last], series.normalized[last]);
    println!("mean R (t>={cut})  raw {mean_raw:.6}  normalized {mean_norm:.6}");
    match settling_time(&series, cut, 0.05)? {
        Some(t) => println!("settled       within 5% of plateau from t = {t}"),
        None => println!("settled       no (final R outside 5% band)"),
    }
    if trajectory.meta().negative_amplitude {
        println!("note          an amplitude went negative during integration");
    }
    println!("wrote         {}", out.display());
    Ok(EXIT_OK)
}

fn sweep(args: &RunArgs) -> Result<i32, Failure> {
    let cfg = load_config(args)?;
    let spec = cfg.experiment_spec()?;
    // Build the network up front so that a bad topology is a config error.
    spec.topology.build()?;
    let out = args.out.clone().unwrap_or_else(|| cfg.output.sweep.clone());

    let records = match args.threads {
        Some(t) => run_sweep_with_threads(&spec, t)?,
        None => run_sweep(&spec)?,
    };
    let mut sink = create(&out)?;
    write_table(&records, &mut sink)?;
    sink.flush().map_err(Error::from)?;

    for c in curves(&records) {
        let (first, last) = (&c.points[0], &c.points[c.points.len() - 1]);
        println!(
            "sigma {:<6} <R> raw {:.4} -> {:.4}  normalized {:.4} -> {:.4}  (epsilon {} -> {})",
            c.sigma,
            first.mean_r_raw,
            last.mean_r_raw,
            first.mean_r_normalized,
            last.mean_r_normalized,
            first.epsilon,
            last.epsilon
        );
    }
    let failed = records.iter().filter(|r| !r.status.is_ok()).count();
    let flagged = records.iter().filter(|r| r.negative_amplitude).count();
    println!(
        "{} runs, {} failed, {} with negative amplitudes; wrote {}",
        records.len(),
        failed,
        flagged,
        out.display()
    );
    Ok(if failed == 0 { EXIT_OK } else { EXIT_RUNTIME })
}
