//! Operator-valued unilateral forward weighted shifts and their explicit
//! embedding into a semigroup acting on vector-valued grid functions.
//!
//! Functions are piecewise constant on cells [i*h, (i+1)*h) with h = 1/q, so
//! unit-interval boundaries align with cells and every case boundary of the
//! embedding formula falls exactly on a cell edge. That makes the semigroup
//! law exact rather than approximate: residuals isolate implementation bugs.
//! Cells are half-open, which fixes the behavior at integer boundary times.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{self, operator_norm, CMatrix, CVector};

/// Finite sequence (W_1, ..., W_L) of d x d blocks driving the shift
/// (h_1, h_2, ...) -> (0, W_1 h_1, W_2 h_2, ...).
#[derive(Debug, Clone)]
pub struct OperatorWeightSequence {
    dim: usize,
    blocks: Vec<CMatrix>,
    uniform_bound: f64,
}

impl OperatorWeightSequence {
    pub fn new(blocks: Vec<CMatrix>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Malformed("weight sequence must be nonempty".into()));
        }
        let dim = blocks[0].nrows();
        if dim == 0 {
            return Err(Error::Malformed("weight blocks must be nonempty".into()));
        }
        for b in &blocks {
            matrix::ensure_square(b)?;
            matrix::ensure_finite(b)?;
            if b.nrows() != dim {
                return Err(Error::Malformed(format!(
                    "weight blocks disagree in dimension: {} vs {}",
                    b.nrows(),
                    dim
                )));
            }
        }
        let uniform_bound = blocks.iter().map(operator_norm).fold(0.0, f64::max);
        Ok(OperatorWeightSequence {
            dim,
            blocks,
            uniform_bound,
        })
    }

    /// Scalar weights as 1 x 1 blocks.
    pub fn scalars(ws: &[f64]) -> Result<Self> {
        OperatorWeightSequence::new(
            ws.iter()
                .map(|&w| CMatrix::from_element(1, 1, Complex64::new(w, 0.0)))
                .collect(),
        )
    }

    /// Fiber dimension d.
    pub fn fiber_dim(&self) -> usize {
        self.dim
    }

    /// Number of stored blocks L.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// W_n, 1-indexed as in the shift definition.
    pub fn block(&self, n: usize) -> &CMatrix {
        &self.blocks[n - 1]
    }

    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }

    /// Largest block operator norm.
    pub fn uniform_bound(&self) -> f64 {
        self.uniform_bound
    }
}

/// Apply the forward weighted shift to a finite vector sequence; the output
/// keeps the input length, dropping the last image by truncation.
pub fn shift_apply(w: &OperatorWeightSequence, seq: &[CVector]) -> Result<Vec<CVector>> {
    if seq.len() > w.len() {
        return Err(Error::Malformed(format!(
            "sequence of {} slots exceeds the {} stored weights",
            seq.len(),
            w.len()
        )));
    }
    for (i, v) in seq.iter().enumerate() {
        if v.len() != w.fiber_dim() {
            return Err(Error::Malformed(format!(
                "slot {i} has dimension {} but the fiber is {}",
                v.len(),
                w.fiber_dim()
            )));
        }
    }
    let mut out = vec![CVector::zeros(w.fiber_dim()); seq.len()];
    for i in 1..seq.len() {
        out[i] = w.block(i) * &seq[i - 1];
    }
    Ok(out)
}

/// Dense matrix of the shift truncated to `slots` slots; the block at
/// (slot n+1, slot n) is W_{n+1}.
pub fn shift_matrix(w: &OperatorWeightSequence, slots: usize) -> CMatrix {
    assert!(slots >= 1 && slots <= w.len() + 1, "slots must fit the stored weights");
    let d = w.fiber_dim();
    let mut m = CMatrix::zeros(slots * d, slots * d);
    for n in 0..(slots - 1) {
        let b = w.block(n + 1);
        for r in 0..d {
            for c in 0..d {
                m[((n + 1) * d + r, n * d + c)] = b[(r, c)];
            }
        }
    }
    m
}

/// Piecewise-constant function on [0, units) with values in C^d, stored as
/// one vector per cell of width 1/q.
#[derive(Debug, Clone)]
pub struct FiberGridFunction {
    q: usize,
    units: usize,
    dim: usize,
    values: Vec<CVector>,
}

impl FiberGridFunction {
    /// # Panics
    /// Panics unless q >= 2, units >= 2, dim >= 1.
    pub fn zero(dim: usize, q: usize, units: usize) -> Self {
        assert!(q >= 2 && units >= 2 && dim >= 1, "degenerate fiber grid");
        FiberGridFunction {
            q,
            units,
            dim,
            values: vec![CVector::zeros(dim); q * units],
        }
    }

    /// Embed a vector sequence as the step function with component n
    /// constant on [n-1, n).
    pub fn from_sequence(seq: &[CVector], q: usize, units: usize) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::Malformed("sequence must be nonempty".into()));
        }
        if seq.len() > units {
            return Err(Error::Malformed(format!(
                "sequence of {} slots exceeds the horizon of {units} units",
                seq.len()
            )));
        }
        let dim = seq[0].len();
        let mut f = FiberGridFunction::zero(dim, q, units);
        for (n, v) in seq.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::Malformed("sequence dimensions disagree".into()));
            }
            for c in 0..q {
                f.values[n * q + c] = v.clone();
            }
        }
        Ok(f)
    }

    pub fn cell_width(&self) -> f64 {
        1.0 / self.q as f64
    }

    pub fn cells_per_unit(&self) -> usize {
        self.q
    }

    pub fn units(&self) -> usize {
        self.units
    }

    pub fn fiber_dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, cell: usize) -> &CVector {
        &self.values[cell]
    }

    pub fn set_value(&mut self, cell: usize, v: CVector) {
        assert_eq!(v.len(), self.dim);
        self.values[cell] = v;
    }

    pub fn norm_squared(&self) -> f64 {
        self.cell_width() * self.values.iter().map(|v| v.norm_squared()).sum::<f64>()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// L2 distance to another function on the same geometry, restricted to
    /// the first `cells` cells.
    pub fn distance_on(&self, other: &FiberGridFunction, cells: usize) -> f64 {
        assert_eq!(self.q, other.q);
        assert_eq!(self.dim, other.dim);
        let n = cells.min(self.cells()).min(other.cells());
        let sum: f64 = (0..n)
            .map(|i| (&self.values[i] - &other.values[i]).norm_squared())
            .sum();
        (self.cell_width() * sum).sqrt()
    }
}

fn lattice_index(t: f64, q: usize) -> Result<usize> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::NonLatticeTime { t, q });
    }
    let scaled = t * q as f64;
    let j = scaled.round();
    if (scaled - j).abs() > 1e-9 {
        return Err(Error::NonLatticeTime { t, q });
    }
    Ok(j as usize)
}

fn ensure_weights_cover(w: &OperatorWeightSequence, f: &FiberGridFunction) -> Result<()> {
    if w.fiber_dim() != f.fiber_dim() {
        return Err(Error::Malformed(format!(
            "fiber dimension {} does not match the weights' {}",
            f.fiber_dim(),
            w.fiber_dim()
        )));
    }
    if w.len() + 1 < f.units() {
        return Err(Error::Malformed(format!(
            "horizon of {} units needs at least {} weights, have {}",
            f.units(),
            f.units() - 1,
            w.len()
        )));
    }
    Ok(())
}

/// One evolution step for lattice times 0 <= t <= 1, by the three-case
/// formula: zero below t, a W_n band on [n, n+t), a plain copy elsewhere.
pub fn embed_step(
    w: &OperatorWeightSequence,
    f: &FiberGridFunction,
    t: f64,
) -> Result<FiberGridFunction> {
    ensure_weights_cover(w, f)?;
    let q = f.cells_per_unit();
    let j = lattice_index(t, q)?;
    if j > q {
        return Err(Error::NonLatticeTime { t, q });
    }
    let mut out = FiberGridFunction::zero(f.fiber_dim(), q, f.units());
    for i in j..f.cells() {
        let src = f.value(i - j);
        let unit = i / q;
        let weighted = unit >= 1 && (i % q) < j;
        let v = if weighted {
            w.block(unit) * src
        } else {
            src.clone()
        };
        out.set_value(i, v);
    }
    Ok(out)
}

/// Full evolution T(t) = T(1)^{floor(t)} T(t - floor(t)) for lattice t >= 0.
pub fn embed_apply(
    w: &OperatorWeightSequence,
    f: &FiberGridFunction,
    t: f64,
) -> Result<FiberGridFunction> {
    ensure_weights_cover(w, f)?;
    let q = f.cells_per_unit();
    let j = lattice_index(t, q)?;
    let whole = j / q;
    let frac = j % q;
    let mut out = embed_step(w, f, frac as f64 / q as f64)?;
    for _ in 0..whole {
        out = embed_step(w, &out, 1.0)?;
    }
    Ok(out)
}

/// || T(t) T(t') F - T(t + t') F || over the interior window that truncation
/// cannot touch.
pub fn semigroup_law_residual(
    w: &OperatorWeightSequence,
    t: f64,
    t_prime: f64,
    f: &FiberGridFunction,
) -> Result<f64> {
    let q = f.cells_per_unit();
    let j_total = lattice_index(t, q)? + lattice_index(t_prime, q)?;
    if j_total > f.cells() {
        return Err(Error::Malformed(format!(
            "combined shift {t} + {t_prime} exceeds the horizon"
        )));
    }
    let composed = embed_apply(w, &embed_apply(w, f, t_prime)?, t)?;
    let direct = embed_apply(w, f, t + t_prime)?;
    Ok(composed.distance_on(&direct, f.cells() - j_total))
}

/// Embed a sequence as a step function, run one unit of time, and compare
/// the read-back against the abstract shift; returns the l2 discrepancy.
pub fn verify_t1_matches_shift(
    w: &OperatorWeightSequence,
    seq: &[CVector],
    q: usize,
) -> Result<f64> {
    if seq.len() > w.len() {
        return Err(Error::Malformed(format!(
            "sequence of {} slots needs {} weights, have {}",
            seq.len(),
            seq.len(),
            w.len()
        )));
    }
    let units = seq.len() + 1;
    let f = FiberGridFunction::from_sequence(seq, q, units)?;
    let evolved = embed_apply(w, &f, 1.0)?;
    let expected_seq = shift_apply(w, seq)?;
    let expected = FiberGridFunction::from_sequence(&expected_seq, q, units)?;
    Ok(evolved.distance_on(&expected, seq.len() * q))
}
