use thiserror::Error;

/// Errors surfaced by the numerical probes.
///
/// Precondition violations that indicate a caller bug (dimension mismatches
/// between an operator and a vector it is applied to) panic instead; the
/// variants here are runtime conditions a caller is expected to handle.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// 0 is (numerically) in the spectrum, so no logarithm exists.
    #[error("matrix is singular: 0 lies in the numerical spectrum")]
    SingularMatrix,

    /// An eigenvalue lies on the closed negative real axis, where the
    /// principal logarithm has no branch.
    #[error("eigenvalue on the branch cut (-inf, 0]: principal logarithm undefined")]
    BranchCut,

    /// 1 is not in the resolvent set of the generator, so the cogenerator
    /// (A+I)(A-I)^-1 does not exist.
    #[error("resolvent violation: A - I is numerically singular, cogenerator undefined")]
    ResolventViolation,

    /// An operator matrix must be square.
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    /// Matrix or vector entries must be finite.
    #[error("non-finite entry at position {index}")]
    NonFinite { index: usize },

    /// Text-format matrix or weight file could not be parsed.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A translation step must be a whole number of grid cells.
    #[error("shift of {cells} cells is out of range for a grid of {grid} cells")]
    ShiftOutOfRange { cells: usize, grid: usize },

    /// The defect window [0, N - m*j) is empty.
    #[error("window exhausted: m*j = {span} does not fit in {grid} cells")]
    WindowExhausted { span: usize, grid: usize },

    /// Evolution times for the embedded semigroup must be lattice-aligned.
    #[error("time {t} is not a multiple of the cell width 1/{q}")]
    NonLatticeTime { t: f64, q: usize },

    /// Weight profiles must be strictly positive.
    #[error("weight at cell {index} is not strictly positive")]
    NonPositiveWeight { index: usize },

    /// Nilpotency order must satisfy 2 <= n <= dim.
    #[error("nilpotency order {order} does not fit dimension {dim}")]
    BadNilpotencyOrder { order: usize, dim: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
