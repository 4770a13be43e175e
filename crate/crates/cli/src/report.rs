//! Machine-readable experiment reports.
//!
//! Reports serialize with a fixed field order and shortest-round-trip float
//! formatting, so identical config and seed produce identical bytes. The
//! wall-clock duration is omitted under --no-timestamp, which the golden
//! tests rely on.

use miso_core::matrix::CVector;
use miso_core::ProbeConfig;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct ExperimentReport {
    pub schema_version: &'static str,
    pub command: String,
    pub config: ConfigEcho,
    pub checks: Vec<CheckEntry>,
    pub all_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u128>,
}

#[derive(Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub detail: Value,
}

impl CheckEntry {
    /// # Panics
    /// Panics on a non-finite residual; every reported residual is finite
    /// by contract (serde_json would otherwise degrade it to null).
    pub fn new(name: impl Into<String>, pass: bool, residual: Option<f64>, detail: Value) -> Self {
        if let Some(r) = residual {
            assert!(r.is_finite(), "non-finite residual in report entry");
        }
        CheckEntry {
            name: name.into(),
            pass,
            residual,
            detail,
        }
    }
}

#[derive(Serialize)]
pub struct ConfigEcho {
    pub tol_verdict: f64,
    pub tol_linear: f64,
    pub rng_seed: u64,
    pub grid_h: f64,
    pub grid_cells: usize,
    pub t_max: f64,
    pub trajectory_points: usize,
    pub m_max: u32,
}

impl From<&ProbeConfig> for ConfigEcho {
    fn from(cfg: &ProbeConfig) -> Self {
        ConfigEcho {
            tol_verdict: cfg.tol_verdict,
            tol_linear: cfg.tol_linear,
            rng_seed: cfg.rng_seed,
            grid_h: cfg.grid_h,
            grid_cells: cfg.grid_cells,
            t_max: cfg.t_max,
            trajectory_points: cfg.trajectory_points,
            m_max: cfg.m_max,
        }
    }
}

/// Complex vector as [re, im] pairs.
pub fn vector_json(v: &CVector) -> Value {
    Value::Array(
        v.iter()
            .map(|z| serde_json::json!([z.re, z.im]))
            .collect(),
    )
}
