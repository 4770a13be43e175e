use std::path::PathBuf;

use clap::Args;
use miso_core::translation::{
    mode_residual_profile, mode_weight_test, TranslationMode, WeightFamily, WeightedGrid,
};
use miso_core::ProbeConfig;

use crate::report::CheckEntry;
use crate::{CmdResult, InputError};

#[derive(Args)]
pub struct TranslationArgs {
    /// Named weight family (constant, affine, quadratic, sqrt-affine,
    /// exp-plus, exp-minus, reciprocal-affine) or a path to a weight CSV.
    #[arg(long, value_name = "NAME|CSV")]
    family: String,

    /// Which translation family to test.
    #[arg(long, value_name = "MODE")]
    mode: String,

    /// Isometry order to test.
    #[arg(long, value_name = "M")]
    m: u32,

    /// Shift size in cells (t = j * h).
    #[arg(long, value_name = "J")]
    shift_cells: usize,

    /// Grid step for named families (defaults to the config value).
    #[arg(long, value_name = "R")]
    h: Option<f64>,

    /// Cell count for named families (defaults to the config value).
    #[arg(long, value_name = "N")]
    cells: Option<usize>,

    /// Write the residual profile g_i as CSV here; without it the profile
    /// is embedded in the JSON report.
    #[arg(long, value_name = "FILE")]
    residual_csv: Option<PathBuf>,

    /// Verdict tolerance for the residual (defaults to 1e-9).
    #[arg(long, value_name = "TOL", default_value_t = 1e-9)]
    residual_tol: f64,
}

pub fn run(args: &TranslationArgs, cfg: &ProbeConfig) -> CmdResult {
    if args.m == 0 || args.shift_cells == 0 {
        return Err(InputError("--m and --shift-cells must be at least 1".into()));
    }
    let mode = TranslationMode::parse(&args.mode).ok_or_else(|| {
        InputError(format!(
            "unknown mode {:?}; expected right, weighted, or left-adjoint",
            args.mode
        ))
    })?;

    let (grid, family_label) = match WeightFamily::parse(&args.family) {
        Some(family) => {
            let h = args.h.unwrap_or(cfg.grid_h);
            let cells = args.cells.unwrap_or(cfg.grid_cells);
            let grid = WeightedGrid::from_family(family, h, cells)
                .map_err(|e| InputError(e.to_string()))?;
            (grid, family.name().to_string())
        }
        None => {
            let path = PathBuf::from(&args.family);
            let text = std::fs::read_to_string(&path).map_err(|e| {
                InputError(format!(
                    "{:?} is neither a known family nor a readable CSV: {e}",
                    args.family
                ))
            })?;
            let grid = WeightedGrid::from_weight_csv(&text)
                .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            (grid, path.display().to_string())
        }
    };

    let report = mode_weight_test(&grid, mode, args.m, args.shift_cells, args.residual_tol)
        .map_err(|e| InputError(e.to_string()))?;
    let profile = mode_residual_profile(&grid, mode, args.m, args.shift_cells)
        .map_err(|e| InputError(e.to_string()))?;

    let mut csv = String::from("i,s,residual\n");
    for (i, g) in profile.iter().enumerate() {
        csv.push_str(&format!("{i},{:?},{g:?}\n", i as f64 * grid.h()));
    }

    let profile_field = match &args.residual_csv {
        Some(path) => {
            std::fs::write(path, &csv)
                .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
            serde_json::json!({ "csv_path": path.display().to_string() })
        }
        None => serde_json::json!({ "csv": csv }),
    };

    let detail = serde_json::json!({
        "family": family_label,
        "mode": mode.name(),
        "m": args.m,
        "shift_cells": args.shift_cells,
        "h": grid.h(),
        "cells": grid.cells(),
        "window": report.window,
        "residual_tol": args.residual_tol,
        "profile": profile_field,
    });

    Ok(vec![CheckEntry::new(
        format!("{}-weight-test-m{}", mode.name(), args.m),
        report.pass,
        Some(report.max_residual),
        detail,
    )])
}
