/// Tolerances, grid geometry, sample counts, and RNG seed governing every
/// numerical verdict.
///
/// Two tolerance tiers: `tol_verdict` decides pass/fail of operator-level
/// probes and is deliberately loose because alternating binomial sums
/// amplify rounding by up to 2^m; `tol_linear` guards linear-algebra
/// internals (rank decisions, orthonormality).
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeConfig {
    /// Relative tolerance for pass/fail verdicts.
    pub tol_verdict: f64,
    /// Relative tolerance for linear-algebra internals (kernels, resolvents).
    pub tol_linear: f64,
    /// Seed for every randomized probe; fixed seed means identical output.
    pub rng_seed: u64,
    /// Grid step for weighted half-line discretizations.
    pub grid_h: f64,
    /// Cell count for weighted half-line discretizations.
    pub grid_cells: usize,
    /// Right endpoint of trajectory sampling grids.
    pub t_max: f64,
    /// Number of points on trajectory sampling grids.
    pub trajectory_points: usize,
    /// Largest isometry order probed when scanning for a minimal order.
    pub m_max: u32,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig {
            tol_verdict: 1e-8,
            tol_linear: 1e-12,
            rng_seed: 0x6D69_736F, // "miso"
            grid_h: 1.0 / 64.0,
            grid_cells: 4096,
            t_max: 2.0,
            trajectory_points: 33,
            m_max: 8,
        }
    }
}

impl ProbeConfig {
    /// True when tolerances are positive and counts usable.
    pub fn is_valid(&self) -> bool {
        self.tol_verdict > 0.0
            && self.tol_linear > 0.0
            && self.grid_h > 0.0
            && self.grid_cells >= 4
            && self.t_max > 0.0
            && self.trajectory_points >= 4
            && self.m_max >= 1
    }
}
