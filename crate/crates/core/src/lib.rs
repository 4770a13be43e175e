//! Numerical and exact-arithmetic probes for m-isometric operators and
//! C0-semigroups at desk scale.
//!
//! The crate turns operator-theoretic characterizations into runnable,
//! falsifiable checks:
//!
//! - [`combinat`]: the exact binomial identities behind every alternating
//!   defect sum, in arbitrary-precision integers.
//! - [`matrix`]: dense complex linear algebra (Schur, SVD, exponential,
//!   principal logarithm) shared by all probes.
//! - [`isometry`]: m-isometry / m-symmetry defects, order detection,
//!   kernel condition, finite-dimensional embeddability.
//! - [`semigroup`]: matrix semigroups e^{tA}, cogenerators, the
//!   four equivalent m-isometry characterizations, interval and group tests.
//! - [`translation`]: discretized weighted half-line translation semigroups
//!   and their polynomial-weight characterizations.
//! - [`embedding`]: operator-weighted shifts and their explicit embedding
//!   into a semigroup on vector-valued grid functions.
//! - [`corpus`]: deterministic sample generators for all of the above.

pub mod combinat;
pub mod config;
pub mod corpus;
pub mod embedding;
pub mod error;
pub mod isometry;
pub mod matrix;
pub mod semigroup;
pub mod translation;

pub use config::ProbeConfig;
pub use error::{Error, Result};
pub use matrix::{CMatrix, CVector};
