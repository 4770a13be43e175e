use std::path::PathBuf;

use clap::Args;
use miso_core::combinat::lemma_sweep;
use miso_core::ProbeConfig;

use crate::report::CheckEntry;
use crate::{CmdResult, InputError};

#[derive(Args)]
pub struct LemmaArgs {
    /// Largest order m to sweep.
    #[arg(long, value_name = "M")]
    m_max: u64,

    /// Write the per-cell CSV here; without it the CSV is embedded in the
    /// JSON report.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

pub fn run(args: &LemmaArgs, _cfg: &ProbeConfig) -> CmdResult {
    if args.m_max == 0 {
        return Err(InputError("--m-max must be at least 1".into()));
    }
    let rows = lemma_sweep(args.m_max);
    let failures: Vec<String> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("m={} p={} q={}", r.m, r.p, r.q))
        .collect();

    let mut csv = String::from("m,p,q,value,expected,pass\n");
    for r in &rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.m, r.p, r.q, r.value, r.expected, r.pass
        ));
    }

    let detail = match &args.csv {
        Some(path) => {
            std::fs::write(path, &csv)
                .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
            serde_json::json!({
                "rows": rows.len(),
                "failures": failures,
                "csv_path": path.display().to_string(),
            })
        }
        None => serde_json::json!({
            "rows": rows.len(),
            "failures": failures,
            "csv": csv,
        }),
    };

    let pass = failures.is_empty();
    Ok(vec![CheckEntry::new(
        format!("lemma-identities-m-le-{}", args.m_max),
        pass,
        None,
        detail,
    )])
}
