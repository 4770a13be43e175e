//! Discretized weighted L^2(R+) spaces and the three translation-semigroup
//! families, with the polynomial-weight characterizations as executable
//! lattice tests.
//!
//! Translations are restricted to whole cells t = j*h: off-lattice t would
//! need interpolation that corrupts the exact finite-difference structure.
//! All defect residuals ignore the last m*j cells, where truncation creates
//! artificial mass loss; the window is part of every verdict.

use num_complex::Complex64;

use crate::combinat::binom_f64;
use crate::error::{Error, Result};

/// Uniform grid on [0, N*h) carrying a strictly positive weight per cell,
/// sampled at s_i = i*h.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGrid {
    h: f64,
    weights: Vec<f64>,
}

impl WeightedGrid {
    pub fn new(h: f64, weights: Vec<f64>) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::Malformed(format!("grid step must be positive, got {h}")));
        }
        if weights.len() < 4 {
            return Err(Error::Malformed(format!(
                "grid needs at least 4 cells, got {}",
                weights.len()
            )));
        }
        for (i, w) in weights.iter().enumerate() {
            if !(w > &0.0) || !w.is_finite() {
                return Err(Error::NonPositiveWeight { index: i });
            }
        }
        Ok(WeightedGrid { h, weights })
    }

    /// Sample a named family at the cell points s_i = i*h.
    pub fn from_family(family: WeightFamily, h: f64, cells: usize) -> Result<Self> {
        let weights = (0..cells).map(|i| family.eval(i as f64 * h)).collect();
        WeightedGrid::new(h, weights)
    }

    /// Parse the weight CSV format: a `s,value` header then one pair per line.
    pub fn from_weight_csv(src: &str) -> Result<Self> {
        let mut lines = src.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Malformed("empty weight file".into()))?;
        if header.replace(' ', "") != "s,value" {
            return Err(Error::Malformed(format!(
                "weight CSV requires the header `s,value`, found {header:?}"
            )));
        }
        let mut ss = Vec::new();
        let mut ws = Vec::new();
        for line in lines {
            let mut parts = line.split(',');
            let s: f64 = parts
                .next()
                .and_then(|v| v.trim().parse().ok())
                .ok_or_else(|| Error::Malformed(format!("bad weight row: {line:?}")))?;
            let w: f64 = parts
                .next()
                .and_then(|v| v.trim().parse().ok())
                .ok_or_else(|| Error::Malformed(format!("bad weight row: {line:?}")))?;
            if parts.next().is_some() {
                return Err(Error::Malformed(format!("trailing fields in row: {line:?}")));
            }
            ss.push(s);
            ws.push(w);
        }
        if ss.len() < 4 {
            return Err(Error::Malformed("weight CSV needs at least 4 rows".into()));
        }
        if ss[0].abs() > 1e-12 {
            return Err(Error::Malformed("weight CSV must start at s = 0".into()));
        }
        let h = ss[1] - ss[0];
        if !(h > 0.0) {
            return Err(Error::Malformed("weight CSV abscissae must increase".into()));
        }
        for (i, s) in ss.iter().enumerate() {
            if (s - i as f64 * h).abs() > 1e-9 * (1.0 + s.abs()) {
                return Err(Error::Malformed(format!(
                    "weight CSV abscissae must be uniform; row {i} breaks the pattern"
                )));
            }
        }
        WeightedGrid::new(h, ws)
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn cells(&self) -> usize {
        self.weights.len()
    }

    /// Truncation horizon N*h.
    pub fn horizon(&self) -> f64 {
        self.h * self.weights.len() as f64
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Same grid with every weight squared (the profile driving the
    /// weighted-translate characterization).
    pub fn squared(&self) -> WeightedGrid {
        WeightedGrid {
            h: self.h,
            weights: self.weights.iter().map(|w| w * w).collect(),
        }
    }

    /// Unweighted grid of the same geometry.
    pub fn flat(&self) -> WeightedGrid {
        WeightedGrid {
            h: self.h,
            weights: vec![1.0; self.weights.len()],
        }
    }
}

/// Closed-form weight profiles used across the test sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightFamily {
    Constant,
    Affine,
    Quadratic,
    SqrtAffine,
    ExpPlus,
    ExpMinus,
    ReciprocalAffine,
}

impl WeightFamily {
    pub const ALL: [WeightFamily; 7] = [
        WeightFamily::Constant,
        WeightFamily::Affine,
        WeightFamily::Quadratic,
        WeightFamily::SqrtAffine,
        WeightFamily::ExpPlus,
        WeightFamily::ExpMinus,
        WeightFamily::ReciprocalAffine,
    ];

    pub fn eval(self, s: f64) -> f64 {
        match self {
            WeightFamily::Constant => 1.0,
            WeightFamily::Affine => 1.0 + s,
            WeightFamily::Quadratic => s * s + s + 1.0,
            WeightFamily::SqrtAffine => (1.0 + s).sqrt(),
            WeightFamily::ExpPlus => s.exp(),
            WeightFamily::ExpMinus => (-s).exp(),
            WeightFamily::ReciprocalAffine => 1.0 / (1.0 + s),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightFamily::Constant => "constant",
            WeightFamily::Affine => "affine",
            WeightFamily::Quadratic => "quadratic",
            WeightFamily::SqrtAffine => "sqrt-affine",
            WeightFamily::ExpPlus => "exp-plus",
            WeightFamily::ExpMinus => "exp-minus",
            WeightFamily::ReciprocalAffine => "reciprocal-affine",
        }
    }

    pub fn parse(name: &str) -> Option<WeightFamily> {
        WeightFamily::ALL.iter().copied().find(|f| f.name() == name)
    }
}

/// Complex samples on a weighted grid; squared norm h * sum |f_i|^2 w_i.
#[derive(Debug, Clone)]
pub struct WeightedGridFunction {
    grid: WeightedGrid,
    values: Vec<Complex64>,
}

impl WeightedGridFunction {
    pub fn new(grid: WeightedGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.cells() {
            return Err(Error::Malformed(format!(
                "function has {} cells on a grid of {}",
                values.len(),
                grid.cells()
            )));
        }
        Ok(WeightedGridFunction { grid, values })
    }

    pub fn zero(grid: WeightedGrid) -> Self {
        let n = grid.cells();
        WeightedGridFunction {
            grid,
            values: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    /// Indicator of a single cell.
    pub fn delta(grid: WeightedGrid, cell: usize) -> Self {
        let mut f = WeightedGridFunction::zero(grid);
        f.values[cell] = Complex64::new(1.0, 0.0);
        f
    }

    pub fn grid(&self) -> &WeightedGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn norm_squared(&self) -> f64 {
        self.grid.h
            * self
                .values
                .iter()
                .zip(self.grid.weights.iter())
                .map(|(v, w)| v.norm_sqr() * w)
                .sum::<f64>()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }
}

fn check_shift(j: usize, cells: usize) -> Result<()> {
    if j >= cells {
        return Err(Error::ShiftOutOfRange { cells: j, grid: cells });
    }
    Ok(())
}

/// Does the grid satisfy rho(i+j) <= M e^{omega j h} rho(i) everywhere?
///
/// # Panics
/// Panics unless M >= 1.
pub fn admissible_right(grid: &WeightedGrid, m_const: f64, omega: f64) -> bool {
    assert!(m_const >= 1.0, "admissibility constant must be >= 1");
    let n = grid.cells();
    let w = grid.weights();
    for j in 1..n {
        let bound = m_const * (omega * j as f64 * grid.h).exp();
        for i in 0..(n - j) {
            if w[i + j] > bound * w[i] {
                return false;
            }
        }
    }
    true
}

/// Right translation by j cells with zero fill; cells shifted past the
/// horizon are dropped.
pub fn right_translate(f: &WeightedGridFunction, j: usize) -> Result<WeightedGridFunction> {
    check_shift(j, f.grid.cells())?;
    let n = f.grid.cells();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for i in j..n {
        out[i] = f.values[i - j];
    }
    WeightedGridFunction::new(f.grid.clone(), out)
}

/// Adjoint of the right translation on the rho-weighted space:
/// out_i = (rho_{i+j} / rho_i) f_{i+j}.
pub fn adjoint_right_translate(f: &WeightedGridFunction, j: usize) -> Result<WeightedGridFunction> {
    check_shift(j, f.grid.cells())?;
    let n = f.grid.cells();
    let w = f.grid.weights();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for i in 0..(n - j) {
        out[i] = f.values[i + j] * Complex64::new(w[i + j] / w[i], 0.0);
    }
    WeightedGridFunction::new(f.grid.clone(), out)
}

/// Weighted right translation on the unweighted space:
/// out_i = (rho_i / rho_{i-j}) f_{i-j}. The profile rho is supplied
/// separately; f itself lives on a flat grid.
pub fn weighted_translate(
    rho: &WeightedGrid,
    f: &WeightedGridFunction,
    j: usize,
) -> Result<WeightedGridFunction> {
    check_shift(j, f.grid.cells())?;
    if rho.cells() != f.grid.cells() {
        return Err(Error::Malformed(format!(
            "profile has {} cells, function {}",
            rho.cells(),
            f.grid.cells()
        )));
    }
    let n = f.grid.cells();
    let w = rho.weights();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for i in j..n {
        out[i] = f.values[i - j] * Complex64::new(w[i] / w[i - j], 0.0);
    }
    WeightedGridFunction::new(f.grid.clone(), out)
}

/// Adjoint of the left shift on the w-weighted space:
/// out_i = (w_{i-j} / w_i) f_{i-j}.
pub fn left_adjoint_translate(f: &WeightedGridFunction, j: usize) -> Result<WeightedGridFunction> {
    check_shift(j, f.grid.cells())?;
    let n = f.grid.cells();
    let w = f.grid.weights();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for i in j..n {
        out[i] = f.values[i - j] * Complex64::new(w[i - j] / w[i], 0.0);
    }
    WeightedGridFunction::new(f.grid.clone(), out)
}

/// Outcome of a lattice weight test; the window is the number of interior
/// cells actually checked.
#[derive(Debug, Clone, Copy)]
pub struct WeightTestReport {
    pub pass: bool,
    pub max_residual: f64,
    pub window: usize,
}

fn window_len(grid: &WeightedGrid, m: u32, j: usize) -> Result<usize> {
    assert!(m >= 1 && j >= 1, "order and shift must be at least 1");
    let span = m as usize * j;
    if span >= grid.cells() {
        return Err(Error::WindowExhausted {
            span,
            grid: grid.cells(),
        });
    }
    Ok(grid.cells() - span)
}

/// Alternating binomial row (-1)^{m-k} C(m,k), hoisted out of grid loops.
fn signed_binomials(m: u32) -> Vec<f64> {
    (0..=m)
        .map(|k| {
            let sign = if (m - k) % 2 == 0 { 1.0 } else { -1.0 };
            sign * binom_f64(m as u64, k as i64)
        })
        .collect()
}

/// Residuals g_i = sum_k C(m,k) (-1)^{m-k} rho_{i+kj} / rho_i over the
/// interior window i in [0, N - m*j).
pub fn residual_profile(grid: &WeightedGrid, m: u32, j: usize) -> Result<Vec<f64>> {
    let window = window_len(grid, m, j)?;
    let w = grid.weights();
    let coeffs = signed_binomials(m);
    let mut out = Vec::with_capacity(window);
    for i in 0..window {
        let mut g = 0.0f64;
        for (k, c) in coeffs.iter().enumerate() {
            g += c * w[i + k * j] / w[i];
        }
        out.push(g);
    }
    Ok(out)
}

/// Lattice form of the m-isometry test for the right translation by t = j*h.
pub fn weight_test(grid: &WeightedGrid, m: u32, j: usize, tol: f64) -> Result<WeightTestReport> {
    let profile = residual_profile(grid, m, j)?;
    let max_residual = profile.iter().fold(0.0f64, |a, g| a.max(g.abs()));
    Ok(WeightTestReport {
        pass: max_residual <= tol,
        max_residual,
        window: profile.len(),
    })
}

/// Weighted-translate test: delegates to `weight_test` on the squared
/// profile, i.e. asks whether rho^2 has lattice polynomial degree < m.
pub fn weighted_translate_m_test(
    rho: &WeightedGrid,
    m: u32,
    j: usize,
    tol: f64,
) -> Result<WeightTestReport> {
    weight_test(&rho.squared(), m, j, tol)
}

/// Residuals sum_k C(m,k) (-1)^{m-k} w_i / w_{i+kj} for the adjoint of the
/// left shift; vanishing says 1/w has lattice polynomial degree < m.
pub fn reciprocal_residual_profile(grid: &WeightedGrid, m: u32, j: usize) -> Result<Vec<f64>> {
    let window = window_len(grid, m, j)?;
    let w = grid.weights();
    let coeffs = signed_binomials(m);
    let mut out = Vec::with_capacity(window);
    for i in 0..window {
        let mut g = 0.0f64;
        for (k, c) in coeffs.iter().enumerate() {
            g += c * w[i] / w[i + k * j];
        }
        out.push(g);
    }
    Ok(out)
}

/// Left-adjoint test against the reciprocal-polynomial characterization.
pub fn reciprocal_weight_test(
    grid: &WeightedGrid,
    m: u32,
    j: usize,
    tol: f64,
) -> Result<WeightTestReport> {
    let profile = reciprocal_residual_profile(grid, m, j)?;
    let max_residual = profile.iter().fold(0.0f64, |a, g| a.max(g.abs()));
    Ok(WeightTestReport {
        pass: max_residual <= tol,
        max_residual,
        window: profile.len(),
    })
}

/// Which translation family a test refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationMode {
    /// Right translation on the rho-weighted space.
    Right,
    /// Weighted translation on the flat space (profile rho).
    Weighted,
    /// Adjoint of the left shift on the w-weighted space.
    LeftAdjoint,
}

impl TranslationMode {
    pub fn name(self) -> &'static str {
        match self {
            TranslationMode::Right => "right",
            TranslationMode::Weighted => "weighted",
            TranslationMode::LeftAdjoint => "left-adjoint",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "right" => Some(TranslationMode::Right),
            "weighted" => Some(TranslationMode::Weighted),
            "left-adjoint" => Some(TranslationMode::LeftAdjoint),
            _ => None,
        }
    }
}

/// Residual profile for a given mode.
pub fn mode_residual_profile(
    grid: &WeightedGrid,
    mode: TranslationMode,
    m: u32,
    j: usize,
) -> Result<Vec<f64>> {
    match mode {
        TranslationMode::Right => residual_profile(grid, m, j),
        TranslationMode::Weighted => residual_profile(&grid.squared(), m, j),
        TranslationMode::LeftAdjoint => reciprocal_residual_profile(grid, m, j),
    }
}

/// Single-shift test for a given mode.
pub fn mode_weight_test(
    grid: &WeightedGrid,
    mode: TranslationMode,
    m: u32,
    j: usize,
    tol: f64,
) -> Result<WeightTestReport> {
    match mode {
        TranslationMode::Right => weight_test(grid, m, j, tol),
        TranslationMode::Weighted => weighted_translate_m_test(grid, m, j, tol),
        TranslationMode::LeftAdjoint => reciprocal_weight_test(grid, m, j, tol),
    }
}

/// Family verdict at order m: the conjunction over a sweep of shift sizes,
/// the lattice proxy for "an m-isometry for every t".
pub fn sweep_verdict(
    grid: &WeightedGrid,
    mode: TranslationMode,
    m: u32,
    shifts: &[usize],
    tol: f64,
) -> Result<bool> {
    assert!(!shifts.is_empty(), "sweep needs at least one shift");
    let mut pass = true;
    for &j in shifts {
        pass &= mode_weight_test(grid, mode, m, j, tol)?.pass;
    }
    Ok(pass)
}

/// Operator-level defect sum_k C(m,k) (-1)^{m-k} ||(op)^k f||^2 for the
/// mode's translation at shift j. For interior-supported f this equals the
/// weighted sum of the residual profile against |f|^2.
pub fn translate_defect_vector(
    rho: &WeightedGrid,
    mode: TranslationMode,
    f: &WeightedGridFunction,
    m: u32,
    j: usize,
) -> Result<f64> {
    let mut acc = 0.0f64;
    let mut iterate = f.clone();
    for k in 0..=m {
        let sign = if (m - k) % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom_f64(m as u64, k as i64) * iterate.norm_squared();
        if k < m {
            iterate = match mode {
                TranslationMode::Right => right_translate(&iterate, j)?,
                TranslationMode::Weighted => weighted_translate(rho, &iterate, j)?,
                TranslationMode::LeftAdjoint => left_adjoint_translate(&iterate, j)?,
            };
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn grid(family: WeightFamily, h: f64, cells: usize) -> WeightedGrid {
        WeightedGrid::from_family(family, h, cells).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let flat = grid(WeightFamily::Constant, 0.25, 64);
        assert!(admissible_right(&flat, 1.0, 0.0));

        let affine = grid(WeightFamily::Affine, 0.25, 64);
        assert!(admissible_right(&affine, 1.0, 1.0));

        // e^{s^2} on horizon 20 outruns any fixed M e^{10 t}
        let w: Vec<f64> = (0..80).map(|i| ((i as f64 * 0.25).powi(2)).exp()).collect();
        let gauss = WeightedGrid::new(0.25, w).unwrap();
        assert!(!admissible_right(&gauss, 2.0, 10.0));
    }

    #[test]
    fn right_translate_examples() {
        let g = grid(WeightFamily::Constant, 0.5, 8);
        let f = WeightedGridFunction::delta(g.clone(), 0);
        assert_eq!(right_translate(&f, 0).unwrap().values(), f.values());

        let shifted = right_translate(&f, 3).unwrap();
        assert_eq!(shifted.values()[3], c(1., 0.));
        assert_eq!(shifted.values()[0], c(0., 0.));

        // unweighted shift preserves norm for interior support
        let mut f = WeightedGridFunction::zero(g);
        f.values_mut()[1] = c(0.3, -0.4);
        f.values_mut()[2] = c(1.0, 0.2);
        let shifted = right_translate(&f, 2).unwrap();
        assert!((shifted.norm() - f.norm()).abs() < 1e-15);

        assert!(matches!(
            right_translate(&f, 8),
            Err(Error::ShiftOutOfRange { .. })
        ));
    }

    #[test]
    fn adjoint_identity_holds_cellwise() {
        let g = grid(WeightFamily::Affine, 0.25, 16);
        let mut f = WeightedGridFunction::zero(g.clone());
        let mut p = WeightedGridFunction::zero(g.clone());
        for i in 2..9 {
            f.values_mut()[i] = c(0.1 * i as f64, -0.05 * i as f64);
            p.values_mut()[i + 3] = c((-1.0f64).powi(i as i32), 0.3);
        }
        let j = 3;
        // <S f, p>_rho = <f, S* p>_rho exactly for interior support
        let sf = right_translate(&f, j).unwrap();
        let sp = adjoint_right_translate(&p, j).unwrap();
        let pair = |a: &WeightedGridFunction, b: &WeightedGridFunction| -> Complex64 {
            a.values()
                .iter()
                .zip(b.values())
                .zip(g.weights())
                .map(|((x, y), w)| x * y.conj() * c(*w, 0.) * c(g.h(), 0.))
                .sum()
        };
        let lhs = pair(&sf, &p);
        let rhs = pair(&f, &sp);
        assert!((lhs - rhs).norm() < 1e-14);

        let id = adjoint_right_translate(&p, 0).unwrap();
        assert_eq!(id.values(), p.values());
    }

    #[test]
    fn weight_test_examples() {
        let affine = grid(WeightFamily::Affine, 1.0 / 64.0, 512);
        for j in [1usize, 3] {
            let r = weight_test(&affine, 2, j, 1e-12).unwrap();
            assert!(r.pass, "affine m=2 j={j}: {r:?}");
        }

        let exp = grid(WeightFamily::ExpPlus, 1.0 / 64.0, 512);
        let r = weight_test(&exp, 2, 1, 1e-9).unwrap();
        assert!(!r.pass);
        let expected = ((1.0f64 / 64.0).exp() - 1.0).powi(2);
        assert!((r.max_residual - expected).abs() < 1e-12);

        let quad = grid(WeightFamily::Quadratic, 1.0 / 64.0, 512);
        assert!(weight_test(&quad, 3, 2, 1e-9).unwrap().pass);
        assert!(!weight_test(&quad, 2, 2, 1e-9).unwrap().pass);
    }

    #[test]
    fn weighted_translate_reduces_to_right_translate() {
        let flat = grid(WeightFamily::Constant, 0.25, 12);
        let mut f = WeightedGridFunction::zero(flat.clone());
        for i in 0..6 {
            f.values_mut()[i] = c(i as f64, 1.0);
        }
        let a = weighted_translate(&flat, &f, 2).unwrap();
        let b = right_translate(&f, 2).unwrap();
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn weighted_translate_is_conjugated_right_translate() {
        let rho = grid(WeightFamily::SqrtAffine, 0.25, 16);
        let flat = rho.flat();
        let mut f = WeightedGridFunction::zero(flat.clone());
        for i in 0..10 {
            f.values_mut()[i] = c(0.2 * i as f64 - 0.5, 0.1);
        }
        let j = 3;
        let direct = weighted_translate(&rho, &f, j).unwrap();

        // M_rho . S . M_rho^{-1}, cell by cell
        let mut scaled = f.clone();
        for (i, v) in scaled.values_mut().iter_mut().enumerate() {
            *v /= c(rho.weights()[i], 0.);
        }
        let shifted = right_translate(&scaled, j).unwrap();
        let mut conj = shifted.clone();
        for (i, v) in conj.values_mut().iter_mut().enumerate() {
            *v *= c(rho.weights()[i], 0.);
        }
        for i in 0..flat.cells() {
            assert!((direct.values()[i] - conj.values()[i]).norm() < 1e-15, "cell {i}");
        }
    }

    #[test]
    fn weighted_translate_test_examples() {
        let h = 1.0 / 64.0;
        let sqrt_affine = grid(WeightFamily::SqrtAffine, h, 512);
        assert!(weighted_translate_m_test(&sqrt_affine, 2, 1, 1e-9).unwrap().pass);

        let flat = grid(WeightFamily::Constant, h, 512);
        assert!(weighted_translate_m_test(&flat, 1, 1, 1e-9).unwrap().pass);

        let exp = grid(WeightFamily::ExpPlus, h, 512);
        for m in 1..=6 {
            assert!(
                !weighted_translate_m_test(&exp, m, 5, 1e-9).unwrap().pass,
                "m={m}"
            );
        }
    }

    #[test]
    fn left_adjoint_examples() {
        let h = 1.0 / 64.0;
        let flat = grid(WeightFamily::Constant, h, 512);
        assert!(reciprocal_weight_test(&flat, 1, 1, 1e-9).unwrap().pass);

        let recip = grid(WeightFamily::ReciprocalAffine, h, 512);
        assert!(reciprocal_weight_test(&recip, 2, 1, 1e-9).unwrap().pass);
        assert!(!reciprocal_weight_test(&recip, 1, 1, 1e-9).unwrap().pass);

        let expm = grid(WeightFamily::ExpMinus, h, 512);
        for m in 1..=6 {
            assert!(!reciprocal_weight_test(&expm, m, 5, 1e-9).unwrap().pass, "m={m}");
        }

        // w == 1 makes the operator the plain right shift
        let mut f = WeightedGridFunction::zero(flat.clone());
        f.values_mut()[2] = c(1., 0.);
        let out = left_adjoint_translate(&f, 4).unwrap();
        assert_eq!(out.values()[6], c(1., 0.));
    }

    #[test]
    fn window_is_enforced() {
        let g = grid(WeightFamily::Affine, 0.5, 8);
        assert!(matches!(
            weight_test(&g, 4, 2, 1e-9),
            Err(Error::WindowExhausted { .. })
        ));
        let r = weight_test(&g, 2, 2, 1e-9).unwrap();
        assert_eq!(r.window, 4);
    }

    #[test]
    fn csv_round_trip_and_validation() {
        let mut src = String::from("s,value\n");
        for i in 0..8 {
            let s = i as f64 * 0.25;
            src.push_str(&format!("{s},{}\n", 1.0 + s));
        }
        let g = WeightedGrid::from_weight_csv(&src).unwrap();
        assert_eq!(g.cells(), 8);
        assert!((g.h() - 0.25).abs() < 1e-15);
        assert!((g.weights()[4] - 2.0).abs() < 1e-15);

        assert!(WeightedGrid::from_weight_csv("").is_err());
        assert!(WeightedGrid::from_weight_csv("x,y\n0,1\n").is_err());
        assert!(WeightedGrid::from_weight_csv("s,value\n0,1\n0.25,1\n0.7,1\n1.0,1\n").is_err());
        assert!(WeightedGrid::from_weight_csv("s,value\n0,1\n0.25,-1\n0.5,1\n0.75,1\n").is_err());
    }

    #[test]
    fn grid_rejects_bad_weights() {
        assert!(matches!(
            WeightedGrid::new(0.5, vec![1.0, 0.0, 1.0, 1.0]),
            Err(Error::NonPositiveWeight { index: 1 })
        ));
        assert!(WeightedGrid::new(-0.5, vec![1.0; 8]).is_err());
        assert!(WeightedGrid::new(0.5, vec![1.0; 3]).is_err());
    }
}
