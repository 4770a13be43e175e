//! Dense complex linear algebra services: adjoints, kernels, spectral radius,
//! matrix exponential and principal logarithm.
//!
//! Matrices are `nalgebra` dynamic matrices over `Complex64`. Decompositions
//! (Schur, SVD, LU) come from nalgebra; the exponential uses
//! scaling-and-squaring with a Pade(13) kernel and the logarithm uses inverse
//! scaling-and-squaring on the Schur triangular factor.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Hermitian inner product <u, v>, conjugate-linear in `v`.
pub fn inner(u: &CVector, v: &CVector) -> Complex64 {
    // nalgebra dotc conjugates self, so <u, v> = conj(v) . u
    v.dotc(u)
}

/// n x n identity.
pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// Conjugate transpose.
pub fn adjoint(m: &CMatrix) -> CMatrix {
    m.adjoint()
}

/// Max column sum of moduli; cheap norm used to drive scaling decisions.
pub fn one_norm(m: &CMatrix) -> f64 {
    let mut max = 0.0f64;
    for j in 0..m.ncols() {
        let s: f64 = m.column(j).iter().map(|z| z.norm()).sum();
        max = max.max(s);
    }
    max
}

/// Operator 2-norm (largest singular value).
pub fn operator_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    singular_values(m).iter().cloned().fold(0.0, f64::max)
}

// Iteration budget for the QR/Golub-Kahan sweeps. nalgebra's default is
// unbounded, which cycles forever on shift-like matrices whose Wilkinson
// shift vanishes by symmetry; a budget plus a random-rotation retry is the
// standard cure.
fn iteration_budget(n: usize) -> usize {
    200 * n.max(4)
}

// Deterministic unitary used to break QR shift-cycling symmetries: QR factor
// of an LCG-filled matrix, fixed across runs.
fn scrambling_unitary(n: usize, salt: u64) -> CMatrix {
    let mut state = 0x9E37_79B9_7F4A_7C15u64 ^ salt;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 11) as f64) / ((1u64 << 53) as f64) - 0.5
    };
    let m = CMatrix::from_fn(n, n, |_, _| Complex64::new(next(), next()));
    m.qr().q()
}

/// Singular values with a convergence-failure retry.
pub fn singular_values(m: &CMatrix) -> nalgebra::DVector<f64> {
    if let Some(svd) = m.clone().try_svd(false, false, f64::EPSILON, iteration_budget(m.nrows())) {
        return svd.singular_values;
    }
    for salt in 1..=4u64 {
        let v1 = scrambling_unitary(m.nrows(), salt);
        let v2 = scrambling_unitary(m.ncols(), salt.wrapping_mul(0x5DEECE66D));
        let rotated = v1.adjoint() * m * &v2;
        if let Some(svd) = rotated.try_svd(false, false, f64::EPSILON, iteration_budget(m.nrows())) {
            return svd.singular_values;
        }
    }
    panic!("singular value iteration failed to converge");
}

/// Full SVD (u, sigma, v_t) with the same retry policy.
fn svd_full(m: &CMatrix) -> (CMatrix, nalgebra::DVector<f64>, CMatrix) {
    if let Some(svd) = m.clone().try_svd(true, true, f64::EPSILON, iteration_budget(m.nrows())) {
        return (svd.u.unwrap(), svd.singular_values, svd.v_t.unwrap());
    }
    for salt in 1..=4u64 {
        let v1 = scrambling_unitary(m.nrows(), salt);
        let v2 = scrambling_unitary(m.ncols(), salt.wrapping_mul(0x5DEECE66D));
        let rotated = v1.adjoint() * m * &v2;
        if let Some(svd) = rotated.try_svd(true, true, f64::EPSILON, iteration_budget(m.nrows())) {
            let u = &v1 * svd.u.unwrap();
            let v_t = svd.v_t.unwrap() * v2.adjoint();
            return (u, svd.singular_values, v_t);
        }
    }
    panic!("singular value iteration failed to converge");
}

/// k-th power by repeated multiplication. No eigendecomposition shortcut,
/// which keeps non-normal matrices honest.
pub fn matrix_power(m: &CMatrix, k: u32) -> CMatrix {
    let n = m.nrows();
    let mut acc = identity(n);
    for _ in 0..k {
        acc = &acc * m;
    }
    acc
}

/// Fails unless the matrix is square.
pub fn ensure_square(m: &CMatrix) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(())
}

/// Fails if any entry is NaN or infinite.
pub fn ensure_finite(m: &CMatrix) -> Result<()> {
    for (idx, z) in m.iter().enumerate() {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite { index: idx });
        }
    }
    Ok(())
}

/// A subspace carried as orthonormal columns.
#[derive(Debug, Clone)]
pub struct Subspace {
    basis: CMatrix,
}

impl Subspace {
    pub fn from_orthonormal(basis: CMatrix) -> Self {
        Subspace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &CVector) -> CVector {
        if self.dim() == 0 {
            return CVector::zeros(v.len());
        }
        &self.basis * (self.basis.adjoint() * v)
    }

    /// Max deviation of B^H B from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let k = self.dim();
        if k == 0 {
            return 0.0;
        }
        let gram = self.basis.adjoint() * &self.basis;
        (gram - identity(k)).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Orthonormal basis of the numerical null space: right singular vectors
/// whose singular value falls at or below `tol` times the largest one.
pub fn kernel(m: &CMatrix, tol: f64) -> Subspace {
    assert!(tol > 0.0, "kernel tolerance must be positive");
    let n = m.ncols();
    let (_, sigma, v_t) = svd_full(m);
    let sigma_max = sigma.iter().cloned().fold(0.0, f64::max);
    let threshold = tol * sigma_max;
    let v = v_t.adjoint();
    let mut cols: Vec<usize> = (0..sigma.len()).filter(|&i| sigma[i] <= threshold).collect();
    // a wide/tall matrix can hide extra null directions beyond min(r, c);
    // operators here are square, so this is exact
    cols.sort_unstable();
    let mut basis = CMatrix::zeros(n, cols.len());
    for (dst, &src) in cols.iter().enumerate() {
        basis.set_column(dst, &v.column(src));
    }
    Subspace::from_orthonormal(basis)
}

fn is_upper_triangular(m: &CMatrix) -> bool {
    for j in 0..m.ncols() {
        for i in (j + 1)..m.nrows() {
            if m[(i, j)] != Complex64::new(0.0, 0.0) {
                return false;
            }
        }
    }
    true
}

/// Unitary similarity M = Q T Q^H with T upper triangular; the eigenvalues
/// sit on the diagonal of T.
pub fn schur(m: &CMatrix) -> (CMatrix, CMatrix) {
    let n = m.nrows();
    if n <= 1 || is_upper_triangular(m) {
        return (identity(n), m.clone());
    }
    if let Some(s) = m.clone().try_schur(f64::EPSILON, iteration_budget(n)) {
        return s.unpack();
    }
    for salt in 1..=4u64 {
        let v = scrambling_unitary(n, salt);
        let rotated = v.adjoint() * m * &v;
        if let Some(s) = rotated.try_schur(f64::EPSILON, iteration_budget(n)) {
            let (q, t) = s.unpack();
            return (&v * q, t);
        }
    }
    panic!("Schur iteration failed to converge");
}

/// Eigenvalues via the Schur diagonal.
pub fn eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    let (_, t) = schur(m);
    (0..t.nrows()).map(|i| t[(i, i)]).collect()
}

/// Largest eigenvalue modulus.
pub fn spectral_radius(m: &CMatrix) -> f64 {
    eigenvalues(m).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Top eigenpair (by modulus) of a Hermitian matrix; (eigenvalue, unit vector).
pub fn hermitian_top_eigenpair(h: &CMatrix) -> (f64, CVector) {
    let eig = nalgebra::SymmetricEigen::new(h.clone());
    let mut best = 0usize;
    for i in 1..eig.eigenvalues.len() {
        if eig.eigenvalues[i].abs() > eig.eigenvalues[best].abs() {
            best = i;
        }
    }
    (eig.eigenvalues[best], eig.eigenvectors.column(best).into_owned())
}

// Pade(13) numerator/denominator coefficients for exp, Higham's b-vector.
const EXP_PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

const EXP_THETA13: f64 = 5.371920351148152;

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Matrix exponential by scaling-and-squaring with a Pade(13) kernel.
///
/// # Panics
/// Panics if the matrix is not square.
pub fn matrix_exp(m: &CMatrix) -> CMatrix {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "matrix_exp requires a square matrix");
    if n == 1 {
        return CMatrix::from_element(1, 1, m[(0, 0)].exp());
    }

    let norm = one_norm(m);
    let s = if norm > EXP_THETA13 {
        (norm / EXP_THETA13).log2().ceil() as u32
    } else {
        0
    };
    let a = m * real(2.0f64.powi(-(s as i32)));

    let id = identity(n);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;

    let b = &EXP_PADE13;
    let w1 = &a6 * real(b[13]) + &a4 * real(b[11]) + &a2 * real(b[9]);
    let w2 = &w1 * &a6 + &a6 * real(b[7]) + &a4 * real(b[5]) + &a2 * real(b[3]) + &id * real(b[1]);
    let u = &a * &w2;
    let v1 = &a6 * real(b[12]) + &a4 * real(b[10]) + &a2 * real(b[8]);
    let v = &v1 * &a6 + &a6 * real(b[6]) + &a4 * real(b[4]) + &a2 * real(b[2]) + &id * real(b[0]);

    let num = &v + &u;
    let den = &v - &u;
    let mut result = den
        .lu()
        .solve(&num)
        .expect("Pade denominator is singular: exponential argument too extreme");

    for _ in 0..s {
        result = &result * &result;
    }
    result
}

/// Principal square root of an upper triangular matrix with spectrum off
/// (-inf, 0], by the triangular recurrence.
fn sqrtm_upper_triangular(t: &CMatrix) -> CMatrix {
    let n = t.nrows();
    let mut r = CMatrix::zeros(n, n);
    for i in 0..n {
        r[(i, i)] = t[(i, i)].sqrt();
    }
    for offset in 1..n {
        for i in 0..(n - offset) {
            let j = i + offset;
            let mut s = Complex64::new(0.0, 0.0);
            for k in (i + 1)..j {
                s += r[(i, k)] * r[(k, j)];
            }
            // principal sqrts have positive real part, so the sum below
            // never vanishes for spectra off the branch cut
            r[(i, j)] = (t[(i, j)] - s) / (r[(i, i)] + r[(j, j)]);
        }
    }
    r
}

// 8-point Gauss-Legendre rule on [0, 1]; equivalent to the diagonal
// Pade approximant of log(1 + x) of the same order.
const LOG_GL_NODES: [f64; 8] = [
    0.019855071751231856,
    0.10166676129318664,
    0.2372337950418355,
    0.4082826787521751,
    0.5917173212478249,
    0.7627662049581645,
    0.8983332387068134,
    0.9801449282487681,
];
const LOG_GL_WEIGHTS: [f64; 8] = [
    0.05061426814518813,
    0.11119051722668723,
    0.15685332293894365,
    0.1813418916891810,
    0.1813418916891810,
    0.15685332293894365,
    0.11119051722668723,
    0.05061426814518813,
];

/// log(I + X) for small ||X|| via the quadrature form of the Pade approximant.
fn log1p_pade(x: &CMatrix) -> CMatrix {
    let n = x.nrows();
    let id = identity(n);
    let mut acc = CMatrix::zeros(n, n);
    for (&node, &weight) in LOG_GL_NODES.iter().zip(LOG_GL_WEIGHTS.iter()) {
        let den = &id + x * real(node);
        let solved = den.lu().solve(x).expect("log Pade denominator singular");
        acc += solved * real(weight);
    }
    acc
}

const LOG_SQRT_THRESHOLD: f64 = 0.25;
const LOG_MAX_SQRTS: u32 = 64;

/// Principal matrix logarithm.
///
/// Requires an invertible matrix with no eigenvalue on the closed negative
/// real axis; such inputs fail loudly instead of silently rotating the
/// branch. Eigenvalue imaginary parts of the result lie in (-pi, pi).
pub fn matrix_log_principal(m: &CMatrix) -> Result<CMatrix> {
    ensure_square(m)?;
    let n = m.nrows();
    // singularity gate ahead of any QR sweep; exactly singular inputs are
    // where the Schur iteration is least comfortable
    let sigma = singular_values(m);
    let smax = sigma.iter().cloned().fold(0.0, f64::max);
    let smin = sigma.iter().cloned().fold(f64::INFINITY, f64::min);
    if smin <= 1e-14 * smax.max(1.0) {
        return Err(Error::SingularMatrix);
    }
    let (q, t) = schur(m);

    let eigs: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    let max_mod = eigs.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let scale = max_mod.max(1.0);
    for z in &eigs {
        if z.norm() <= 1e-14 * scale {
            return Err(Error::SingularMatrix);
        }
    }
    for z in &eigs {
        if z.re < 0.0 && z.im.abs() <= 1e-12 * z.norm() {
            return Err(Error::BranchCut);
        }
    }

    let id = identity(n);
    let mut r = t;
    let mut sqrts = 0u32;
    while one_norm(&(&r - &id)) > LOG_SQRT_THRESHOLD && sqrts < LOG_MAX_SQRTS {
        r = sqrtm_upper_triangular(&r);
        sqrts += 1;
    }
    let x = &r - &id;
    let log_t = log1p_pade(&x) * real(2.0f64.powi(sqrts as i32));
    Ok(&q * log_t * q.adjoint())
}

/// Parse the plain-text matrix format: first line `rows cols`, then
/// rows*cols lines `re im` in row-major order.
pub fn read_matrix_text(src: &str) -> Result<CMatrix> {
    let mut lines = src.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Malformed("empty matrix file".into()))?;
    let mut hp = header.split_whitespace();
    let rows: usize = hp
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Malformed(format!("bad header line: {header:?}")))?;
    let cols: usize = hp
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Malformed(format!("bad header line: {header:?}")))?;
    if hp.next().is_some() {
        return Err(Error::Malformed(format!("trailing tokens in header: {header:?}")));
    }
    if rows == 0 || cols == 0 {
        return Err(Error::Malformed("matrix dimensions must be positive".into()));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for line in lines {
        let mut p = line.split_whitespace();
        let re: f64 = p
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Malformed(format!("bad entry line: {line:?}")))?;
        let im: f64 = p
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Malformed(format!("bad entry line: {line:?}")))?;
        if p.next().is_some() {
            return Err(Error::Malformed(format!("trailing tokens in entry: {line:?}")));
        }
        entries.push(Complex64::new(re, im));
    }
    if entries.len() != rows * cols {
        return Err(Error::Malformed(format!(
            "expected {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    let m = CMatrix::from_row_slice(rows, cols, &entries);
    ensure_finite(&m)?;
    Ok(m)
}

/// Serialize to the plain-text matrix format (shortest round-trip decimals).
pub fn write_matrix_text(m: &CMatrix) -> String {
    let mut out = format!("{} {}\n", m.nrows(), m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            out.push_str(&format!("{:?} {:?}\n", z.re, z.im));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
        (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn adjoint_examples() {
        let id = identity(2);
        assert_eq!(adjoint(&id), id);

        let n = CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]);
        let nt = CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., 0.), c(1., 0.), c(0., 0.)]);
        assert_eq!(adjoint(&n), nt);

        let i1 = CMatrix::from_element(1, 1, c(0., 1.));
        assert_eq!(adjoint(&i1)[(0, 0)], c(0., -1.));
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert_eq!(kernel(&identity(3), 1e-12).dim(), 0);
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let z = CMatrix::zeros(3, 3);
        let k = kernel(&z, 1e-12);
        assert_eq!(k.dim(), 3);
        assert!(k.orthonormality_defect() < 1e-12);
    }

    #[test]
    fn kernel_of_shift_adjoint() {
        // forward shift e1 -> e2 -> e3 -> 0; its adjoint kills e1
        let mut t = CMatrix::zeros(3, 3);
        t[(1, 0)] = c(1., 0.);
        t[(2, 1)] = c(1., 0.);
        let k = kernel(&adjoint(&t), 1e-12);
        assert_eq!(k.dim(), 1);
        // basis spans e1
        assert_abs_diff_eq!(k.basis().column(0)[0].norm(), 1.0, epsilon = 1e-12);
        assert!(k.basis().column(0)[1].norm() < 1e-12);
        assert!(k.basis().column(0)[2].norm() < 1e-12);
    }

    #[test]
    fn spectral_radius_examples() {
        assert_abs_diff_eq!(spectral_radius(&identity(4)), 1.0, epsilon = 1e-14);
        let n = CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]);
        assert_abs_diff_eq!(spectral_radius(&n), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(spectral_radius(&(identity(3) * c(2., 0.))), 2.0, epsilon = 1e-13);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let z = CMatrix::zeros(4, 4);
        assert!(max_abs_diff(&matrix_exp(&z), &identity(4)) < 1e-15);
    }

    #[test]
    fn exp_of_nilpotent_truncates() {
        for t in [0.25f64, 1.0, 3.5] {
            let n = CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(t, 0.), c(0., 0.), c(0., 0.)]);
            let e = matrix_exp(&n);
            let expected =
                CMatrix::from_row_slice(2, 2, &[c(1., 0.), c(t, 0.), c(0., 0.), c(1., 0.)]);
            assert!(max_abs_diff(&e, &expected) < 1e-13, "t = {t}");
        }
    }

    #[test]
    fn exp_of_i_pi_is_minus_one() {
        let m = CMatrix::from_element(1, 1, c(0., std::f64::consts::PI));
        let e = matrix_exp(&m);
        assert!((e[(0, 0)] - c(-1., 0.)).norm() < 1e-14);
    }

    #[test]
    fn exp_needs_scaling_for_large_norm() {
        let m = CMatrix::from_row_slice(2, 2, &[c(30., 0.), c(0., 0.), c(0., 0.), c(-30., 0.)]);
        let e = matrix_exp(&m);
        assert_abs_diff_eq!(e[(0, 0)].re, 30f64.exp(), epsilon = 1e-4 * 30f64.exp());
        assert_abs_diff_eq!(e[(1, 1)].re, (-30f64).exp(), epsilon = 1e-18);
    }

    #[test]
    fn log_of_identity_is_zero() {
        let l = matrix_log_principal(&identity(3)).unwrap();
        assert!(one_norm(&l) < 1e-14);
    }

    #[test]
    fn log_of_unipotent_is_nilpotent() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1., 0.), c(1., 0.), c(0., 0.), c(1., 0.)]);
        let l = matrix_log_principal(&m).unwrap();
        let expected = CMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]);
        assert!(max_abs_diff(&l, &expected) < 1e-12);
    }

    #[test]
    fn log_of_diag_i_is_principal() {
        let m = CMatrix::from_element(1, 1, c(0., 1.));
        let l = matrix_log_principal(&m).unwrap();
        assert!((l[(0, 0)] - c(0., std::f64::consts::FRAC_PI_2)).norm() < 1e-14);
    }

    #[test]
    fn log_rejects_singular() {
        let mut t = CMatrix::zeros(3, 3);
        t[(1, 0)] = c(1., 0.);
        t[(2, 1)] = c(1., 0.);
        assert!(matches!(matrix_log_principal(&t), Err(Error::SingularMatrix)));
    }

    #[test]
    fn log_rejects_branch_cut() {
        let m = CMatrix::from_row_slice(2, 2, &[c(-1., 0.), c(0., 0.), c(0., 0.), c(2., 0.)]);
        assert!(matches!(matrix_log_principal(&m), Err(Error::BranchCut)));
    }

    #[test]
    fn log_pade_matches_scalar_ln() {
        for x in [-0.24, -0.1, 0.0, 0.05, 0.2, 0.249] {
            let m = CMatrix::from_element(1, 1, c(x, 0.));
            let l = log1p_pade(&m);
            assert_abs_diff_eq!(l[(0, 0)].re, (1.0 + x).ln(), epsilon = 1e-15);
            assert!(l[(0, 0)].im.abs() < 1e-15);
        }
        let m = CMatrix::from_element(1, 1, c(0.1, 0.2));
        let l = log1p_pade(&m);
        let want = (c(1.1, 0.2)).ln();
        assert!((l[(0, 0)] - want).norm() < 1e-15);
    }

    #[test]
    fn matrix_text_round_trip() {
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[c(1.5, -0.25), c(0.1, 0.0), c(0.0, 1e-17), c(-3.0, 2.0)],
        );
        let text = write_matrix_text(&m);
        let back = read_matrix_text(&text).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn matrix_text_rejects_garbage() {
        assert!(read_matrix_text("").is_err());
        assert!(read_matrix_text("2 2\n1 0\n").is_err());
        assert!(read_matrix_text("1 1\nfoo bar\n").is_err());
        assert!(read_matrix_text("1 1\n1 0 extra\n").is_err());
        assert!(read_matrix_text("1 1\nnan 0\n").is_err());
    }

    #[test]
    fn operator_norm_of_shift_is_one() {
        let mut t = CMatrix::zeros(3, 3);
        t[(1, 0)] = c(1., 0.);
        t[(2, 1)] = c(1., 0.);
        assert_abs_diff_eq!(operator_norm(&t), 1.0, epsilon = 1e-13);
    }
}
