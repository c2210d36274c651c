//! `mzv`: evaluate multiple zeta values and run the verification suites.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mzv_core::exact::constants;
use mzv_core::mzv::MzvCache;
use mzv_core::verify::{parse_weights, run_all, Config, Report, Suite};
use mzv_core::{IndexSet, ZetaEngine};

#[derive(Parser, Debug)]
#[command(name = "mzv", version, about = "Multiple zeta values and group-ring identity checks")]
struct Cli {
    /// Decimal digits of working precision.
    #[arg(long, global = true, default_value_t = 50)]
    digits: u32,
    /// Inclusive weight range, `A..B`.
    #[arg(long, global = true, default_value = "5..10")]
    weights: String,
    /// Relative tolerance for numeric checks.
    #[arg(long, global = true, default_value_t = 1e-30)]
    tol: f64,
    /// TSV value cache; created if missing.
    #[arg(long, global = true, env = "MZV_CACHE")]
    cache: Option<PathBuf>,
    /// Write the report here as well as to stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for numeric checks.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print the constant matrices and exit.
    #[arg(long)]
    dump_constants: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DumpTarget {
    Constants,
    Omega,
    Cache,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print ζ(L); index sets with l₁ = 1 use the shuffle-regularized value at T = 0.
    Eval {
        /// Comma-separated positive integers, l₁ first.
        index: String,
    },
    /// Run suites: exact | theorem | corollary | props | cyclic | appendix | all (comma-separated).
    Verify { suite: String },
    /// Human-readable dumps.
    Dump {
        #[arg(value_enum)]
        target: DumpTarget,
    },
}

fn engine(cli: &Cli) -> Result<ZetaEngine> {
    Ok(match &cli.cache {
        Some(p) => ZetaEngine::with_cache(MzvCache::open(p).with_context(|| format!("opening cache {}", p.display()))?),
        None => ZetaEngine::new(),
    })
}

fn eval(cli: &Cli, index: &str) -> Result<ExitCode> {
    let l: IndexSet = index.parse().with_context(|| format!("invalid index set {index:?}"))?;
    if cli.digits < 1 {
        anyhow::bail!("digits must be positive");
    }
    let e = engine(cli)?;
    if l.is_admissible() {
        let v = e.mzv(&l, cli.digits)?;
        println!("zeta({l}) = {}", v.to_decimal_string(cli.digits));
    } else {
        let v = e.reg_mzv(&l, cli.digits)?;
        println!("zeta*({l}) = {}  [regularized (T=0)]", v.to_decimal_string(cli.digits));
    }
    Ok(ExitCode::SUCCESS)
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    }
}

fn verify(cli: &Cli, suite: &str) -> Result<ExitCode> {
    let cfg = Config {
        digits: cli.digits,
        weights: parse_weights(&cli.weights)?,
        tol: cli.tol,
        suites: Suite::parse_list(suite)?,
        jobs: cli.jobs,
    };
    cfg.validate()?;
    let e = engine(cli)?;
    let report = run_all(&cfg, &e)?;
    print!("{}", render(&report, cli.format));
    if let Some(p) = &cli.out {
        std::fs::write(p, render(&report, cli.format)).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn dump(cli: &Cli, target: DumpTarget) -> Result<ExitCode> {
    match target {
        DumpTarget::Constants => print!("{}", constants().dump()),
        DumpTarget::Omega => {
            let omega = &constants().omega;
            println!("Omega: {} support matrices", omega.len());
            for (m, c) in omega.terms() {
                println!("  {c}\t{}", m.rows_string());
            }
        }
        DumpTarget::Cache => {
            let path = cli.cache.as_ref().context("dump cache needs --cache or MZV_CACHE")?;
            let cache = MzvCache::open(path).with_context(|| format!("opening cache {}", path.display()))?;
            let s = cache.stats();
            println!("cache: {}", path.display());
            println!("entries: {}", s.entries);
            println!("skipped lines: {}", s.skipped_lines);
            let reg = cache.entries().iter().filter(|(k, _)| k.regularized).count();
            println!("regularized: {reg}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    if cli.dump_constants {
        print!("{}", constants().dump());
        return Ok(ExitCode::SUCCESS);
    }
    match &cli.command {
        Some(Command::Eval { index }) => eval(cli, index),
        Some(Command::Verify { suite }) => verify(cli, suite),
        Some(Command::Dump { target }) => dump(cli, *target),
        None => anyhow::bail!("no command given (try --help)"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
