use std::path::{Path, PathBuf};

use clap::Args;
use miso_core::corpus::{random_vector, rng_from_seed};
use miso_core::embedding::{
    semigroup_law_residual, verify_t1_matches_shift, FiberGridFunction, OperatorWeightSequence,
};
use miso_core::matrix::read_matrix_text;
use miso_core::ProbeConfig;

use crate::report::CheckEntry;
use crate::{CmdResult, InputError};

#[derive(Args)]
pub struct EmbedArgs {
    /// Directory of block matrix files (sorted by name) or a comma-separated
    /// scalar list like `1.0,1.5,2.0`.
    #[arg(long, value_name = "DIR|LIST")]
    weights: String,

    /// First evolution time (lattice-aligned: a multiple of 1/q).
    #[arg(long, value_name = "R")]
    t: f64,

    /// Second evolution time.
    #[arg(long, value_name = "R")]
    t_prime: f64,

    /// Cells per unit interval.
    #[arg(long, value_name = "Q", default_value_t = 8)]
    q: usize,

    /// Horizon in unit intervals; defaults to one more than the number of
    /// weights, capped at 8.
    #[arg(long, value_name = "L")]
    horizon: Option<usize>,

    /// Also check that T(1) reproduces the abstract weighted shift.
    #[arg(long)]
    verify_t1: bool,
}

fn load_weights(source: &str) -> Result<OperatorWeightSequence, InputError> {
    let path = Path::new(source);
    if path.is_dir() {
        let mut files: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| InputError(format!("cannot list {}: {e}", path.display())))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|ext| ext == "mat"))
            .collect();
        files.sort();
        if files.is_empty() {
            return Err(InputError(format!(
                "{} holds no .mat block files",
                path.display()
            )));
        }
        let mut blocks = Vec::with_capacity(files.len());
        for f in files {
            let text = std::fs::read_to_string(&f)
                .map_err(|e| InputError(format!("cannot read {}: {e}", f.display())))?;
            let m = read_matrix_text(&text)
                .map_err(|e| InputError(format!("{}: {e}", f.display())))?;
            blocks.push(m);
        }
        OperatorWeightSequence::new(blocks).map_err(|e| InputError(e.to_string()))
    } else {
        let scalars: Result<Vec<f64>, _> =
            source.split(',').map(|s| s.trim().parse::<f64>()).collect();
        let scalars = scalars.map_err(|e| {
            InputError(format!(
                "{source:?} is neither a directory nor a scalar list: {e}"
            ))
        })?;
        OperatorWeightSequence::scalars(&scalars).map_err(|e| InputError(e.to_string()))
    }
}

pub fn run(args: &EmbedArgs, cfg: &ProbeConfig) -> CmdResult {
    if args.q < 2 {
        return Err(InputError("--q must be at least 2".into()));
    }
    let w = load_weights(&args.weights)?;
    let horizon = args.horizon.unwrap_or_else(|| (w.len() + 1).min(8));
    if horizon < 2 {
        return Err(InputError("--horizon must be at least 2".into()));
    }
    if horizon > w.len() + 1 {
        return Err(InputError(format!(
            "horizon {horizon} needs {} weights, have {}",
            horizon - 1,
            w.len()
        )));
    }

    // deterministic pseudo-random initial function from the configured seed
    let mut rng = rng_from_seed(cfg.rng_seed);
    let mut f = FiberGridFunction::zero(w.fiber_dim(), args.q, horizon);
    for cell in 0..f.cells() {
        f.set_value(cell, random_vector(w.fiber_dim(), &mut rng));
    }

    let residual = semigroup_law_residual(&w, args.t, args.t_prime, &f)
        .map_err(|e| InputError(e.to_string()))?;
    let tol = cfg.tol_linear;

    let mut checks = vec![CheckEntry::new(
        "semigroup-law",
        residual <= tol,
        Some(residual),
        serde_json::json!({
            "t": args.t,
            "t_prime": args.t_prime,
            "q": args.q,
            "horizon": horizon,
            "fiber_dim": w.fiber_dim(),
            "weights": w.len(),
            "tol": tol,
        }),
    )];

    if args.verify_t1 {
        let slots = horizon - 1;
        let seq: Vec<_> = (0..slots).map(|_| random_vector(w.fiber_dim(), &mut rng)).collect();
        let residual = verify_t1_matches_shift(&w, &seq, args.q)
            .map_err(|e| InputError(e.to_string()))?;
        checks.push(CheckEntry::new(
            "t1-matches-shift",
            residual <= tol,
            Some(residual),
            serde_json::json!({ "slots": slots, "tol": tol }),
        ));
    }

    Ok(checks)
}
