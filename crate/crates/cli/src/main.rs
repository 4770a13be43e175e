//! Unified command-line front end for the m-isometry probes.
//!
//! Exit codes: 0 when every verdict passes, 1 when any check fails,
//! 2 on usage or input errors. The JSON report goes to stdout (or --out)
//! even when checks fail; diagnostics go to stderr.

mod commands;
mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use miso_core::ProbeConfig;

use report::{CheckEntry, ConfigEcho, ExperimentReport, SCHEMA_VERSION};

#[derive(Parser)]
#[command(
    name = "miso",
    about = "Numerical probes for m-isometric operators and semigroups",
    version
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Optional config file of `key = value` lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Omit wall-clock data so reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timestamp: bool,

    /// RNG seed; overrides the config file and the MISO_SEED variable.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Verdict tolerance; overrides the config file.
    #[arg(long, global = true)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustively verify both binomial lemma identities up to m-max.
    LemmaVerify(commands::lemma::LemmaArgs),
    /// Probe a single operator for its minimal isometry order.
    CheckOperator(commands::operator::OperatorArgs),
    /// Run the four equivalent m-isometry conditions on a generator.
    CheckSemigroup(commands::semigroup::SemigroupArgs),
    /// Lattice weight tests for the translation semigroup families.
    Translation(commands::translation::TranslationArgs),
    /// Semigroup-law and identification checks for weighted-shift embeddings.
    Embed(commands::embed::EmbedArgs),
    /// Regenerate the deterministic sample corpus into a directory.
    Corpus(commands::corpus::CorpusArgs),
}

/// Input or environment problem: diagnostic to stderr, exit 2.
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub type CmdResult = Result<Vec<CheckEntry>, InputError>;

fn parse_config_file(path: &PathBuf) -> Result<ProbeConfig, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read config {}: {e}", path.display())))?;
    let mut cfg = ProbeConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| InputError(format!("config line {} is not key = value", lineno + 1)))?;
        let key = key.trim();
        let value = value.trim();
        macro_rules! set {
            ($field:ident) => {
                cfg.$field = value.parse().map_err(|e| {
                    InputError(format!("config line {}: bad value for {key}: {e}", lineno + 1))
                })?
            };
        }
        match key {
            "tol_verdict" => set!(tol_verdict),
            "tol_linear" => set!(tol_linear),
            "rng_seed" => set!(rng_seed),
            "grid_h" => set!(grid_h),
            "grid_cells" => set!(grid_cells),
            "t_max" => set!(t_max),
            "trajectory_points" => set!(trajectory_points),
            "m_max" => set!(m_max),
            other => return Err(InputError(format!("unknown config key {other:?}"))),
        }
    }
    Ok(cfg)
}

/// Precedence: defaults < config file < MISO_SEED < --seed/--tol flags.
fn resolve_config(global: &GlobalOpts) -> Result<ProbeConfig, InputError> {
    let mut cfg = match &global.config {
        Some(path) => parse_config_file(path)?,
        None => ProbeConfig::default(),
    };
    if let Ok(seed) = std::env::var("MISO_SEED") {
        cfg.rng_seed = seed
            .parse()
            .map_err(|e| InputError(format!("MISO_SEED is not an integer: {e}")))?;
    }
    if let Some(seed) = global.seed {
        cfg.rng_seed = seed;
    }
    if let Some(tol) = global.tol {
        cfg.tol_verdict = tol;
    }
    if !cfg.is_valid() {
        return Err(InputError(
            "config rejected: tolerances and counts must be positive".into(),
        ));
    }
    Ok(cfg)
}

fn command_echo() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    format!("miso {}", args.join(" "))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();

    let cfg = match resolve_config(&cli.global) {
        Ok(cfg) => cfg,
        Err(InputError(msg)) => {
            eprintln!("miso: {msg}");
            return ExitCode::from(2);
        }
    };

    let outcome = match &cli.command {
        Command::LemmaVerify(args) => commands::lemma::run(args, &cfg),
        Command::CheckOperator(args) => commands::operator::run(args, &cfg),
        Command::CheckSemigroup(args) => commands::semigroup::run(args, &cfg),
        Command::Translation(args) => commands::translation::run(args, &cfg),
        Command::Embed(args) => commands::embed::run(args, &cfg),
        Command::Corpus(args) => commands::corpus::run(args, &cfg),
    };

    let checks = match outcome {
        Ok(checks) => checks,
        Err(InputError(msg)) => {
            eprintln!("miso: {msg}");
            return ExitCode::from(2);
        }
    };

    let all_pass = checks.iter().all(|c| c.pass);
    let report = ExperimentReport {
        schema_version: SCHEMA_VERSION,
        command: command_echo(),
        config: ConfigEcho::from(&cfg),
        checks,
        all_pass,
        duration_ms: if cli.global.no_timestamp {
            None
        } else {
            Some(started.elapsed().as_millis())
        },
    };

    let json = match serde_json::to_string_pretty(&report) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("miso: cannot serialize report: {e}");
            return ExitCode::from(2);
        }
    };

    match &cli.global.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json + "\n") {
                eprintln!("miso: cannot write report to {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{json}"),
    }

    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
