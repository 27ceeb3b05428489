//! `twelvej`: exact and semiclassical 12j computations over `j6` sweeps.
//!
//! Exit codes: 0 success, 1 config error, 2 numerical degeneracy or failed
//! self-verification, 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use harness_cli::cache::{load_cache, save_cache};
use harness_cli::config::{ExactBackend, Mode, SweepConfig};
use harness_cli::csvout::{emit_csv, emit_plotdata, render_csv};
use harness_cli::sweep::{run_sweep, summarize, Engines};
use harness_cli::verify::{oracle_equivalence, symmetry_suite};

#[derive(Parser)]
#[command(name = "twelvej", about = "exact and asymptotic 12j sweep harness")]
struct Cli {
    /// worker threads for sweep evaluation (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// binary 6j-cache file to load before and save after the run
    #[arg(long, global = true)]
    cache_file: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact values over the configured j6 range
    Exact(RunArgs),
    /// Asymptotic values over the configured j6 range
    Asym(RunArgs),
    /// Exact vs asymptotic comparison with error summary
    Sweep(RunArgs),
    /// Oracle-equivalence and symmetry suites
    Selftest {
        /// smaller enumeration bound and sample count
        #[arg(long)]
        quick: bool,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    /// JSON sweep configuration
    #[arg(long)]
    config: PathBuf,

    /// output CSV path (default: config's `out`, else stdout)
    #[arg(long)]
    out: Option<PathBuf>,

    /// gnuplot-style two-column series file
    #[arg(long)]
    plotdata: Option<PathBuf>,

    /// override the configured float-backend precision
    #[arg(long)]
    precision_bits: Option<usize>,

    /// override the configured exact backend
    #[arg(long, value_enum)]
    exact_backend: Option<ExactBackend>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("thread pool: {e}");
            return ExitCode::from(1);
        }
    }
    match &cli.command {
        Command::Exact(args) => run(args, Some(Mode::Exact), cli.cache_file.as_deref()),
        Command::Asym(args) => run(args, Some(Mode::Asym), cli.cache_file.as_deref()),
        Command::Sweep(args) => run(args, None, cli.cache_file.as_deref()),
        Command::Selftest { quick } => selftest(*quick),
    }
}

fn run(args: &RunArgs, mode_override: Option<Mode>, cache_file: Option<&std::path::Path>) -> ExitCode {
    let mut cfg = match SweepConfig::from_path(&args.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Some(m) = mode_override {
        cfg.mode = m;
    }
    if let Some(p) = args.precision_bits {
        cfg.precision_bits = p;
    }
    if let Some(b) = args.exact_backend {
        cfg.exact_backend = b;
    }
    let engines = Engines::new(cfg.precision_bits);
    if let Some(path) = cache_file {
        match load_cache(&engines.exact, path) {
            Ok(n) if n > 0 => eprintln!("loaded {n} cached 6j values"),
            Ok(_) => {}
            Err(e) => {
                eprintln!("cache read {}: {e}", path.display());
                return ExitCode::from(3);
            }
        }
    }
    let rows = match run_sweep(&cfg, &engines) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("sweep aborted: {e}");
            return ExitCode::from(2);
        }
    };
    let out_path = args.out.clone().or_else(|| cfg.out.clone());
    match &out_path {
        Some(p) => {
            if let Err(e) = emit_csv(&rows, p) {
                eprintln!("{e}");
                return ExitCode::from(3);
            }
        }
        None => print!("{}", render_csv(&rows)),
    }
    if let Some(p) = &args.plotdata {
        if let Err(e) = emit_plotdata(&rows, p) {
            eprintln!("{e}");
            return ExitCode::from(3);
        }
    }
    if cfg.mode == Mode::Compare {
        match summarize(&rows) {
            Some(s) => eprintln!(
                "summary: rows={} max|err|={:.3e} rms(err)={:.3e} rms(exact)={:.3e} ratio={:.4}",
                s.rows_used, s.max_abs_error, s.rms_error, s.rms_exact, s.ratio
            ),
            None => eprintln!("summary: no allowed interior rows"),
        }
    }
    if let Some(path) = cache_file {
        if let Err(e) = save_cache(&engines.exact, path) {
            eprintln!("cache write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    ExitCode::SUCCESS
}

fn selftest(quick: bool) -> ExitCode {
    let cap = if quick { 3 } else { 4 };
    let samples = if quick { 60 } else { 500 };
    print!("oracle equivalence (all 2j <= {}) ... ", cap);
    match oracle_equivalence(cap) {
        Ok((total, nonzero)) => println!("ok: {total} inputs, {nonzero} nonzero"),
        Err(e) => {
            println!("FAILED: {e}");
            return ExitCode::from(2);
        }
    }
    print!("symmetry suite ({samples} samples, 2j <= 8) ... ");
    match symmetry_suite(samples, 8, 2024) {
        Ok(checks) => println!("ok: {checks} checks"),
        Err(e) => {
            println!("FAILED: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::SUCCESS
}
