use std::path::PathBuf;

use clap::Args;
use miso_core::corpus::{
    named_generator_corpus, random_weight_sequence, rng_from_seed, scalar_sqrt_ratio_weights,
};
use miso_core::matrix::write_matrix_text;
use miso_core::translation::WeightFamily;
use miso_core::ProbeConfig;
use sha2::{Digest, Sha256};

use crate::report::CheckEntry;
use crate::{CmdResult, InputError};

#[derive(Args)]
pub struct CorpusArgs {
    /// Directory to (re)generate; created if missing.
    #[arg(long, value_name = "DIR")]
    out_dir: PathBuf,
}

/// Weight-family CSVs are sampled on a small grid: enough cells for every
/// sweep in the test suite while keeping the corpus readable.
const FAMILY_CELLS: usize = 512;

pub fn run(args: &CorpusArgs, cfg: &ProbeConfig) -> CmdResult {
    std::fs::create_dir_all(&args.out_dir)
        .map_err(|e| InputError(format!("cannot create {}: {e}", args.out_dir.display())))?;

    // name -> bytes, collected first so the manifest can be sorted
    let mut artifacts: Vec<(String, String)> = Vec::new();

    for (name, matrix) in named_generator_corpus(cfg.rng_seed) {
        artifacts.push((format!("gen-{name}.mat"), write_matrix_text(&matrix)));
    }

    for family in WeightFamily::ALL {
        let mut csv = String::from("s,value\n");
        for i in 0..FAMILY_CELLS {
            let s = i as f64 * cfg.grid_h;
            csv.push_str(&format!("{s:?},{:?}\n", family.eval(s)));
        }
        artifacts.push((format!("weights-{}.csv", family.name()), csv));
    }

    let sqrt_weights = scalar_sqrt_ratio_weights(24);
    let listed: Vec<String> = sqrt_weights.iter().map(|w| format!("{w:?}")).collect();
    artifacts.push(("shift-scalar-sqrt.txt".into(), listed.join(",") + "\n"));

    let mut rng = rng_from_seed(cfg.rng_seed ^ 0x57454947); // decorrelate from generators
    let blocks = random_weight_sequence(8, 2, &mut rng);
    for (i, block) in blocks.blocks().iter().enumerate() {
        artifacts.push((format!("shift-block-d2-{:02}.mat", i + 1), write_matrix_text(block)));
    }

    artifacts.sort_by(|a, b| a.0.cmp(&b.0));

    let mut manifest_entries = Vec::with_capacity(artifacts.len());
    for (name, bytes) in &artifacts {
        let path = args.out_dir.join(name);
        std::fs::write(&path, bytes)
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
        let digest = Sha256::digest(bytes.as_bytes());
        manifest_entries.push(serde_json::json!({
            "name": name,
            "bytes": bytes.len(),
            "sha256": hex::encode(digest),
        }));
    }

    let manifest = serde_json::json!({
        "schema_version": "1",
        "seed": cfg.rng_seed,
        "artifacts": manifest_entries,
    });
    let manifest_text = serde_json::to_string_pretty(&manifest)
        .map_err(|e| InputError(format!("manifest serialization failed: {e}")))?
        + "\n";
    let manifest_path = args.out_dir.join("manifest.json");
    std::fs::write(&manifest_path, &manifest_text)
        .map_err(|e| InputError(format!("cannot write {}: {e}", manifest_path.display())))?;

    let manifest_sha = hex::encode(Sha256::digest(manifest_text.as_bytes()));
    Ok(vec![CheckEntry::new(
        "corpus-regenerated",
        artifacts.len() >= 12,
        None,
        serde_json::json!({
            "out_dir": args.out_dir.display().to_string(),
            "artifact_count": artifacts.len(),
            "manifest_sha256": manifest_sha,
        }),
    )])
}
