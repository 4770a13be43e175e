use std::path::PathBuf;

use clap::Args;
use miso_core::isometry::defect_report;
use miso_core::ProbeConfig;

use crate::report::{vector_json, CheckEntry};
use crate::{commands::load_square_matrix, CmdResult, InputError};

#[derive(Args)]
pub struct OperatorArgs {
    /// Operator in the plain-text matrix format.
    #[arg(long, value_name = "FILE")]
    matrix: PathBuf,

    /// Largest isometry order to probe.
    #[arg(long, value_name = "M", default_value_t = 8)]
    m_max: u32,

    /// Write the per-order defect table as CSV to this file.
    #[arg(long, value_name = "FILE")]
    emit_table: Option<PathBuf>,
}

pub fn run(args: &OperatorArgs, cfg: &ProbeConfig) -> CmdResult {
    if args.m_max == 0 {
        return Err(InputError("--m-max must be at least 1".into()));
    }
    let t = load_square_matrix(&args.matrix)?;
    let rep = defect_report(&t, args.m_max, cfg.tol_verdict);

    if let Some(path) = &args.emit_table {
        let mut csv = String::from("m,defect_norm\n");
        for (m, norm) in &rep.per_order_table {
            csv.push_str(&format!("{m},{norm:?}\n"));
        }
        std::fs::write(path, csv)
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
    }

    let detail = serde_json::json!({
        "matrix": args.matrix.display().to_string(),
        "dim": t.nrows(),
        "order_tested": rep.order_tested,
        "defect_norm": rep.defect_norm,
        "per_order_table": rep.per_order_table
            .iter()
            .map(|(m, norm)| serde_json::json!({"m": m, "defect_norm": norm}))
            .collect::<Vec<_>>(),
        "witness": rep.witness.as_ref().map(vector_json),
    });

    Ok(vec![CheckEntry::new(
        format!("isometry-order-le-{}", args.m_max),
        rep.verdict,
        Some(rep.defect_norm),
        detail,
    )])
}
