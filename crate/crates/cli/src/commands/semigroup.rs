use std::path::PathBuf;

use clap::Args;
use miso_core::error::Error;
use miso_core::matrix::CVector;
use miso_core::semigroup::{
    check_semigroup_m_isometry, polynomial_degree, sample_trajectory, GeneratorSemigroup,
};
use miso_core::ProbeConfig;
use num_complex::Complex64;

use crate::report::{vector_json, CheckEntry};
use crate::svg::trajectory_svg;
use crate::{commands::load_square_matrix, CmdResult, InputError};

#[derive(Args)]
pub struct SemigroupArgs {
    /// Generator matrix in the plain-text format.
    #[arg(long, value_name = "FILE")]
    generator: PathBuf,

    /// Isometry order to test.
    #[arg(long, value_name = "M")]
    m: u32,

    /// Right end of the probe grid (defaults to the config value).
    #[arg(long, value_name = "R")]
    t_max: Option<f64>,

    /// Points on the probe grid (defaults to the config value).
    #[arg(long, value_name = "N")]
    points: Option<usize>,

    /// Emit an SVG of each basis-vector trajectory with its fitted degree.
    #[arg(long, value_name = "FILE")]
    plot: Option<PathBuf>,
}

pub fn run(args: &SemigroupArgs, cfg: &ProbeConfig) -> CmdResult {
    if args.m == 0 {
        return Err(InputError("--m must be at least 1".into()));
    }
    let a = load_square_matrix(&args.generator)?;
    let mut cfg = cfg.clone();
    if let Some(t_max) = args.t_max {
        cfg.t_max = t_max;
    }
    if let Some(points) = args.points {
        cfg.trajectory_points = points;
    }
    if !cfg.is_valid() {
        return Err(InputError("probe grid rejected: t_max and points must be positive".into()));
    }

    let g = GeneratorSemigroup::new(a);
    let check = match check_semigroup_m_isometry(&g, args.m, &cfg) {
        Ok(check) => check,
        Err(e @ Error::ResolventViolation) => {
            return Err(InputError(format!("{}: {e}", args.generator.display())))
        }
        Err(e) => return Err(InputError(e.to_string())),
    };

    if let Some(path) = &args.plot {
        let n = g.dim();
        let mut samples = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = CVector::zeros(n);
            x[i] = Complex64::new(1.0, 0.0);
            let sample = sample_trajectory(&g, &x, cfg.t_max, cfg.trajectory_points);
            let degree = polynomial_degree(&sample, cfg.m_max, cfg.tol_verdict);
            samples.push((format!("e{}", i + 1), sample, degree));
        }
        std::fs::write(path, trajectory_svg(&samples))
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
    }

    let witness = check.witness.as_ref().map(vector_json);
    let entry = |name: &str, v: miso_core::semigroup::ConditionVerdict| {
        CheckEntry::new(
            format!("{name}-m{}", args.m),
            v.pass,
            Some(v.residual),
            serde_json::json!({}),
        )
    };

    let mut checks = vec![
        entry("trajectory-defect", check.trajectory_defect),
        entry("polynomial-growth", check.polynomial_growth),
        entry("generator-sum", check.generator_sum),
        entry("cogenerator-defect", check.cogenerator_defect),
    ];
    checks.push(CheckEntry::new(
        format!("conditions-agree-m{}", args.m),
        check.all_agree(),
        None,
        serde_json::json!({
            "generator": args.generator.display().to_string(),
            "dim": g.dim(),
            "verdicts": check.verdicts(),
            "witness": witness,
        }),
    ));
    Ok(checks)
}
