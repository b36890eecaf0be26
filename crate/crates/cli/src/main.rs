use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use vcsize_core::catalog::{run_search, SearchConfig};
use vcsize_core::dsl::{parse_group_expr, GroupExpr};
use vcsize_core::group::DEFAULT_BOUND;
use vcsize_core::report::{self, error_json, to_json, AnalyzeOptions};
use vcsize_core::{Error, Result};

const BOUND_ENV: &str = "VCSIZE_BOUND";

/// Vanishing class sizes of finite groups from exact character tables.
#[derive(Parser, Debug)]
#[command(name = "vcsize", version, about)]
struct Cli {
    /// Largest group order the engine will enumerate.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Seed for randomized subgroup searches.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the JSON output here instead of stdout.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    /// TOML file supplying defaults for the flags above.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Include per-stage wall-clock timings in reports.
    #[arg(long, global = true)]
    timings: bool,
    /// Include the full character table in analyze reports.
    #[arg(long, global = true)]
    emit_table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Group expression, e.g. "sdp(3^3, ES(2,+), maxker)".
    expr: Option<String>,
    /// Read the expression from a plain-text file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: classes, vanishing sizes, classification and checks.
    Analyze(Source),
    /// Character table only.
    Chartab(Source),
    /// Invariant suite and characterization check only.
    Verify(Source),
    /// Sweep a family grid and append results to a JSON-lines catalog.
    Search {
        /// TOML grid description.
        grid: PathBuf,
        /// Catalog file; created if missing, resumed if present.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

/// Contents of the `--config` file.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FlagsFile {
    bound: Option<usize>,
    seed: Option<u64>,
    json_out: Option<PathBuf>,
    timings: Option<bool>,
    emit_table: Option<bool>,
    catalog: Option<PathBuf>,
}

struct Settings {
    opts: AnalyzeOptions,
    json_out: Option<PathBuf>,
    seed_given: bool,
    catalog: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Flag, then environment (bound only), then config file, then default.
fn settings(cli: &Cli) -> Result<Settings> {
    let file: FlagsFile = match &cli.config {
        Some(path) => toml::from_str(&read(path)?).map_err(|e| Error::Config(e.to_string()))?,
        None => FlagsFile::default(),
    };
    let env_bound = match std::env::var(BOUND_ENV) {
        Ok(v) => Some(
            v.trim()
                .parse()
                .map_err(|_| Error::Config(format!("{BOUND_ENV}={v:?} is not a number")))?,
        ),
        Err(_) => None,
    };
    let seed = cli.seed.or(file.seed);
    Ok(Settings {
        opts: AnalyzeOptions {
            bound: cli.bound.or(env_bound).or(file.bound).unwrap_or(DEFAULT_BOUND),
            seed: seed.unwrap_or(0),
            emit_table: cli.emit_table || file.emit_table.unwrap_or(false),
            timings: cli.timings || file.timings.unwrap_or(false),
        },
        json_out: cli.json_out.clone().or(file.json_out),
        seed_given: seed.is_some(),
        catalog: match &cli.command {
            Command::Search { catalog, .. } => catalog.clone().or(file.catalog),
            _ => None,
        },
    })
}

fn expression(source: &Source) -> Result<GroupExpr> {
    match (&source.expr, &source.file) {
        (Some(text), _) => parse_group_expr(text),
        (None, Some(path)) => parse_group_expr(&read(path)?),
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn emit(json_out: Option<&Path>, text: &str) -> Result<()> {
    match json_out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Returns whether any invariant check failed.
fn run(cli: &Cli, s: &Settings) -> Result<bool> {
    let out = s.json_out.as_deref();
    match &cli.command {
        Command::Analyze(src) => {
            let r = report::analyze(&expression(src)?, &s.opts)?;
            emit(out, &to_json(&r))?;
            Ok(r.has_failures())
        }
        Command::Chartab(src) => {
            emit(out, &to_json(&report::chartab(&expression(src)?, &s.opts)?))?;
            Ok(false)
        }
        Command::Verify(src) => {
            let r = report::verify(&expression(src)?, &s.opts)?;
            emit(out, &to_json(&r))?;
            Ok(r.has_failures())
        }
        Command::Search { grid, .. } => {
            let catalog = s
                .catalog
                .as_deref()
                .ok_or_else(|| Error::Config("search needs --catalog".into()))?;
            let mut config = SearchConfig::from_toml(&read(grid)?)?;
            if s.seed_given {
                config.seed = s.opts.seed;
            }
            let summary = run_search(&config, catalog, s.opts.bound)?;
            for expr in &summary.findings {
                eprintln!("FINDING {expr}");
            }
            emit(out, &to_json(&summary))?;
            Ok(false)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, json_out) = match settings(&cli) {
        Ok(s) => (run(&cli, &s), s.json_out),
        Err(e) => (Err(e), cli.json_out.clone()),
    };
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            let _ = emit(json_out.as_deref(), &format!("{}\n", error_json(&e)));
            ExitCode::from(1)
        }
    }
}
