//! Finite-dimensional semigroups T(t) = e^{tA}: cogenerators, the four
//! equivalent m-isometry characterizations, trajectory sampling with
//! polynomial-degree detection, and the interval / two-point group tests.
//!
//! Polynomial degree is decided by finite differences, not least-squares
//! fits: exact for polynomials on uniform grids and conditioning-free.
//! Differences are additionally taken at strided steps, since the defining
//! identity quantifies over every step size and coarse strides keep slowly
//! growing exponential trajectories detectable.

use num_complex::Complex64;

use crate::combinat::binom_f64;
use crate::config::ProbeConfig;
use crate::error::{Error, Result};
use crate::isometry::{
    defect_scale, finite_difference, hermitian_defect_norm, misometry_defect_operator,
};
use crate::matrix::{
    self, hermitian_top_eigenpair, identity, inner, matrix_exp, operator_norm, schur, CMatrix,
    CVector,
};

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// A matrix generator together with its cached Schur form, so repeated
/// exponentials reuse the unitary reduction.
#[derive(Debug, Clone)]
pub struct GeneratorSemigroup {
    a: CMatrix,
    schur_q: CMatrix,
    schur_t: CMatrix,
    eigs: Vec<Complex64>,
}

impl GeneratorSemigroup {
    /// # Panics
    /// Panics if the generator is not square or has non-finite entries.
    pub fn new(a: CMatrix) -> Self {
        assert_eq!(a.nrows(), a.ncols(), "generator must be square");
        matrix::ensure_finite(&a).expect("generator entries must be finite");
        let (q, t) = schur(&a);
        let eigs = (0..t.nrows()).map(|i| t[(i, i)]).collect();
        GeneratorSemigroup {
            a,
            schur_q: q,
            schur_t: t,
            eigs,
        }
    }

    pub fn dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn generator(&self) -> &CMatrix {
        &self.a
    }

    pub fn generator_eigenvalues(&self) -> &[Complex64] {
        &self.eigs
    }

    /// T(t) = e^{tA}. Negative t is allowed for group probes.
    pub fn evolve(&self, t: f64) -> CMatrix {
        if t == 0.0 {
            return identity(self.dim());
        }
        let exp_t = matrix_exp(&(&self.schur_t * real(t)));
        &self.schur_q * exp_t * self.schur_q.adjoint()
    }

    /// Spectral bound s(A) and the growth estimate log r(T(t)) / t.
    ///
    /// # Panics
    /// Panics unless t_probe > 0.
    pub fn bound_report(&self, t_probe: f64) -> BoundReport {
        assert!(t_probe > 0.0, "probe time must be positive");
        let spectral_bound = self
            .eigs
            .iter()
            .map(|z| z.re)
            .fold(f64::NEG_INFINITY, f64::max);
        let radius = matrix::spectral_radius(&self.evolve(t_probe));
        BoundReport {
            spectral_bound,
            growth_estimate: radius.ln() / t_probe,
        }
    }

    /// Cogenerator V = (A + I)(A - I)^{-1}, defined when 1 is in the
    /// resolvent set of A.
    pub fn cogenerator(&self) -> Result<CMatrix> {
        cogenerator_of(&self.a)
    }
}

/// Cogenerator of a raw generator matrix.
pub fn cogenerator_of(a: &CMatrix) -> Result<CMatrix> {
    let n = a.nrows();
    let id = identity(n);
    let shifted = a - &id;
    let sigma = matrix::singular_values(&shifted);
    let smin = sigma.iter().cloned().fold(f64::INFINITY, f64::min);
    let smax = sigma.iter().cloned().fold(0.0, f64::max);
    if smin <= 1e-12 * smax.max(1.0) {
        return Err(Error::ResolventViolation);
    }
    let inv = shifted
        .lu()
        .try_inverse()
        .ok_or(Error::ResolventViolation)?;
    Ok((a + &id) * inv)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub spectral_bound: f64,
    pub growth_estimate: f64,
}

/// Samples of t -> ||T(t) x||^2 on a uniform grid.
#[derive(Debug, Clone)]
pub struct TrajectorySample {
    pub t_grid: Vec<f64>,
    pub values: Vec<f64>,
    pub x: CVector,
}

/// Sample ||T(i * t_max/(n-1)) x||^2 for i = 0..n.
///
/// # Panics
/// Panics unless t_max > 0 and n >= 4.
pub fn sample_trajectory(
    g: &GeneratorSemigroup,
    x: &CVector,
    t_max: f64,
    n: usize,
) -> TrajectorySample {
    assert!(t_max > 0.0 && n >= 4, "need t_max > 0 and n >= 4");
    let mut t_grid = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let t = i as f64 * t_max / (n - 1) as f64;
        t_grid.push(t);
        values.push((g.evolve(t) * x).norm_squared());
    }
    TrajectorySample {
        t_grid,
        values,
        x: x.clone(),
    }
}

/// Least d <= d_max whose (d+1)-th finite differences vanish within
/// tol * max|values|; None when no degree fits.
///
/// # Panics
/// Panics unless the sample holds at least d_max + 2 points.
pub fn polynomial_degree(sample: &TrajectorySample, d_max: u32, tol: f64) -> Option<u32> {
    assert!(
        sample.values.len() >= d_max as usize + 2,
        "sample too short for degree bound"
    );
    let scale = sample.values.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(1.0);
    (0..=d_max).find(|&d| {
        finite_difference(&sample.values, d + 1)
            .iter()
            .all(|x| x.abs() <= tol * scale)
    })
}

/// Generator-side sum sum_k C(m,k) <A^{m-k} x, A^k x> (no alternating sign).
pub fn generator_condition(a: &CMatrix, m: u32, x: &CVector) -> Complex64 {
    assert!(m >= 1, "order must be at least 1");
    assert_eq!(a.ncols(), x.len(), "dimension mismatch");
    let mut powers = Vec::with_capacity(m as usize + 1);
    powers.push(x.clone());
    for _ in 0..m {
        let next = a * powers.last().unwrap();
        powers.push(next);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..=m {
        let w = binom_f64(m as u64, k as i64);
        acc += inner(&powers[(m - k) as usize], &powers[k as usize]) * real(w);
    }
    acc
}

/// Hermitian operator form of `generator_condition`:
/// sum_k C(m,k) (A*)^k A^{m-k}; zero exactly when the sum vanishes for all x.
pub fn generator_condition_operator(a: &CMatrix, m: u32) -> CMatrix {
    let n = a.nrows();
    let a_adj = a.adjoint();
    let mut fwd = Vec::with_capacity(m as usize + 1);
    let mut bwd = Vec::with_capacity(m as usize + 1);
    fwd.push(identity(n));
    bwd.push(identity(n));
    for _ in 0..m {
        let f = fwd.last().unwrap() * a;
        fwd.push(f);
        let b = bwd.last().unwrap() * &a_adj;
        bwd.push(b);
    }
    let mut acc = CMatrix::zeros(n, n);
    for k in 0..=m {
        let w = real(binom_f64(m as u64, k as i64));
        acc += (&bwd[k as usize] * &fwd[(m - k) as usize]) * w;
    }
    (&acc + acc.adjoint()) * real(0.5)
}

/// One of the four equivalent characterizations, with its residual.
#[derive(Debug, Clone, Copy)]
pub struct ConditionVerdict {
    pub pass: bool,
    pub residual: f64,
}

/// Verdicts of the four equivalent m-isometry conditions for a semigroup.
#[derive(Debug, Clone)]
pub struct SemigroupCheck {
    pub m: u32,
    /// (i) defect of T(t) over a t-grid.
    pub trajectory_defect: ConditionVerdict,
    /// (ii) ||T(t) x||^2 has polynomial degree < m on a spanning probe family.
    pub polynomial_growth: ConditionVerdict,
    /// (iii) the generator-side binomial sum vanishes as an operator.
    pub generator_sum: ConditionVerdict,
    /// (iv) the cogenerator is an m-isometry.
    pub cogenerator_defect: ConditionVerdict,
    /// Unit vector exhibiting the failure, when one exists.
    pub witness: Option<CVector>,
}

impl SemigroupCheck {
    pub fn verdicts(&self) -> [bool; 4] {
        [
            self.trajectory_defect.pass,
            self.polynomial_growth.pass,
            self.generator_sum.pass,
            self.cogenerator_defect.pass,
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts().iter().all(|&b| b)
    }

    /// The four conditions are equivalent; disagreement signals a numerical
    /// artifact worth investigating.
    pub fn all_agree(&self) -> bool {
        let v = self.verdicts();
        v.iter().all(|&b| b == v[0])
    }
}

/// Probe vectors spanning every entry of a Hermitian quadratic form:
/// basis vectors plus (e_i + e_j)/sqrt2 and (e_i + i e_j)/sqrt2.
fn hermitian_probe_family(n: usize) -> Vec<CVector> {
    let mut family = Vec::new();
    for i in 0..n {
        let mut v = CVector::zeros(n);
        v[i] = real(1.0);
        family.push(v);
    }
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = CVector::zeros(n);
            v[i] = real(inv_sqrt2);
            v[j] = real(inv_sqrt2);
            family.push(v);
            let mut w = CVector::zeros(n);
            w[i] = real(inv_sqrt2);
            w[j] = Complex64::new(0.0, inv_sqrt2);
            family.push(w);
        }
    }
    family
}

/// Max strided m-th difference of `values`, relative to max(1, max|values|).
///
/// Strides realize different step sizes tau on the same grid; a genuine
/// polynomial annihilates all of them.
fn strided_difference_residual(values: &[f64], m: u32) -> f64 {
    let scale = values.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(1.0);
    let mut worst = 0.0f64;
    let mut stride = 1usize;
    while m as usize * stride <= values.len() - 1 {
        for offset in 0..stride {
            let sub: Vec<f64> = values[offset..].iter().step_by(stride).cloned().collect();
            if sub.len() >= m as usize + 1 {
                for d in finite_difference(&sub, m) {
                    worst = worst.max(d.abs());
                }
            }
        }
        stride *= 2;
    }
    worst / scale
}

/// Run all four characterizations of the m-isometry property at order m.
///
/// Fails with `ResolventViolation` when the cogenerator does not exist.
pub fn check_semigroup_m_isometry(
    g: &GeneratorSemigroup,
    m: u32,
    cfg: &ProbeConfig,
) -> Result<SemigroupCheck> {
    assert!(m >= 1, "order must be at least 1");
    let n = g.dim();
    let points = cfg.trajectory_points.max(m as usize + 2);
    let tol = cfg.tol_verdict;

    let ts: Vec<f64> = (0..points)
        .map(|i| i as f64 * cfg.t_max / (points - 1) as f64)
        .collect();
    let evolved: Vec<CMatrix> = ts.iter().map(|&t| g.evolve(t)).collect();

    // (i) operator defect along the grid
    let mut worst_i = 0.0f64;
    let mut worst_defect: Option<CMatrix> = None;
    for tt in evolved.iter().skip(1) {
        let delta = misometry_defect_operator(tt, m);
        let norm = hermitian_defect_norm(&delta);
        let residual = norm / defect_scale(operator_norm(tt), m);
        if residual > worst_i {
            worst_i = residual;
            worst_defect = Some(delta);
        }
    }
    let cond_i = ConditionVerdict {
        pass: worst_i <= tol,
        residual: worst_i,
    };

    // (ii) polynomial growth of the squared trajectory norms
    let mut worst_ii = 0.0f64;
    for x in hermitian_probe_family(n) {
        let values: Vec<f64> = evolved.iter().map(|tt| (tt * &x).norm_squared()).collect();
        worst_ii = worst_ii.max(strided_difference_residual(&values, m));
    }
    let cond_ii = ConditionVerdict {
        pass: worst_ii <= tol,
        residual: worst_ii,
    };

    // (iii) generator-side operator sum
    let s_op = generator_condition_operator(g.generator(), m);
    let scale_iii = (2.0 * operator_norm(g.generator()))
        .powi(m as i32)
        .max(1.0);
    let res_iii = hermitian_defect_norm(&s_op) / scale_iii;
    let cond_iii = ConditionVerdict {
        pass: res_iii <= tol,
        residual: res_iii,
    };

    // (iv) the cogenerator is an m-isometry
    let v = g.cogenerator()?;
    let delta_v = misometry_defect_operator(&v, m);
    let res_iv = hermitian_defect_norm(&delta_v) / defect_scale(operator_norm(&v), m);
    let cond_iv = ConditionVerdict {
        pass: res_iv <= tol,
        residual: res_iv,
    };

    let witness = if !cond_i.pass {
        worst_defect.map(|d| hermitian_top_eigenpair(&d).1)
    } else if !cond_iii.pass {
        Some(hermitian_top_eigenpair(&s_op).1)
    } else if !cond_iv.pass {
        Some(hermitian_top_eigenpair(&delta_v).1)
    } else {
        None
    };

    Ok(SemigroupCheck {
        m,
        trajectory_defect: cond_i,
        polynomial_growth: cond_ii,
        generator_sum: cond_iii,
        cogenerator_defect: cond_iv,
        witness,
    })
}

/// Nilpotent Jordan block of order n embedded in a dim x dim matrix.
pub fn nilpotent_generator(n: usize, dim: usize) -> Result<GeneratorSemigroup> {
    if n < 2 || n > dim {
        return Err(Error::BadNilpotencyOrder { order: n, dim });
    }
    let mut q = CMatrix::zeros(dim, dim);
    for i in 0..(n - 1) {
        q[(i, i + 1)] = real(1.0);
    }
    Ok(GeneratorSemigroup::new(q))
}

/// Semigroup generated by i B; m-symmetric B yields an m-isometric semigroup.
pub fn msymmetric_generator(b: &CMatrix) -> GeneratorSemigroup {
    GeneratorSemigroup::new(b * Complex64::new(0.0, 1.0))
}

/// True iff the order-m defect of T(t) stays below tol * scale on an n-point
/// grid over [t1, t2].
///
/// # Panics
/// Panics unless 0 <= t1 < t2 and n >= 2.
pub fn interval_test(
    g: &GeneratorSemigroup,
    m: u32,
    t1: f64,
    t2: f64,
    n: usize,
    tol: f64,
) -> bool {
    assert!((0.0..t2).contains(&t1) && n >= 2, "need 0 <= t1 < t2, n >= 2");
    (0..n).all(|i| {
        let t = t1 + (t2 - t1) * i as f64 / (n - 1) as f64;
        let tt = g.evolve(t);
        let delta = misometry_defect_operator(&tt, m);
        hermitian_defect_norm(&delta) <= tol * defect_scale(operator_norm(&tt), m)
    })
}

/// Defect verdicts at two distinguished times and on a symmetric dense grid.
#[derive(Debug, Clone, Copy)]
pub struct TwoPointCheck {
    pub pass_t1: bool,
    pub pass_t2: bool,
    pub pass_grid: bool,
}

const TWO_POINT_GRID: usize = 33;

/// Group probe: m-isometry verdicts at t1, t2, and across a dense grid of
/// both signs. Irrationality of t1/t2 is the caller's assertion; floating
/// point cannot certify it.
pub fn group_two_point_test(
    g: &GeneratorSemigroup,
    m: u32,
    t1: f64,
    t2: f64,
    tol: f64,
) -> TwoPointCheck {
    assert!(t1 > 0.0 && t2 > 0.0, "probe times must be positive");
    let pass_at = |t: f64| {
        let tt = g.evolve(t);
        let delta = misometry_defect_operator(&tt, m);
        hermitian_defect_norm(&delta) <= tol * defect_scale(operator_norm(&tt), m)
    };
    let reach = 1.25 * t1.max(t2);
    let pass_grid = (0..TWO_POINT_GRID).all(|i| {
        let t = -reach + 2.0 * reach * i as f64 / (TWO_POINT_GRID - 1) as f64;
        if t == 0.0 {
            true
        } else {
            pass_at(t)
        }
    });
    TwoPointCheck {
        pass_t1: pass_at(t1),
        pass_t2: pass_at(t2),
        pass_grid,
    }
}

/// Relative discrepancy between the two algebraic routes bridging the
/// generator sum and the cogenerator defect:
/// 2^m sum_k C(m,k) <A^{m-k} x, A^k x> against
/// sum_k C(m,k) (-1)^{m-k} ||(A+I)^k (A-I)^{m-k} x||^2.
pub fn cogenerator_bridge_residual(a: &CMatrix, m: u32, x: &CVector) -> f64 {
    let n = a.nrows();
    let id = identity(n);
    let plus = a + &id;
    let minus = a - &id;

    let lhs = generator_condition(a, m, x) * real(2.0f64.powi(m as i32));

    let mut minus_powers = Vec::with_capacity(m as usize + 1);
    minus_powers.push(x.clone());
    for _ in 0..m {
        let next = &minus * minus_powers.last().unwrap();
        minus_powers.push(next);
    }
    let mut rhs = 0.0f64;
    let mut scale = 1.0f64;
    for k in 0..=m {
        let mut v = minus_powers[(m - k) as usize].clone();
        for _ in 0..k {
            v = &plus * v;
        }
        let w = binom_f64(m as u64, k as i64);
        let sign = if (m - k) % 2 == 0 { 1.0 } else { -1.0 };
        rhs += sign * w * v.norm_squared();
        scale += w * v.norm_squared();
    }
    (lhs.re - rhs).abs().hypot(lhs.im) / scale
}
