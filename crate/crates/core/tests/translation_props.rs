//! Lattice invariants of the translation families: the norm-defect
//! equivalence, conjugation invariance, truncation monotonicity, and
//! strictness across exact polynomial degrees.

use miso_core::corpus::rng_from_seed;
use miso_core::translation::{
    mode_residual_profile, mode_weight_test, translate_defect_vector, weight_test,
    TranslationMode, WeightFamily, WeightedGrid, WeightedGridFunction,
};
use num_complex::Complex64;
use rand::Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_interior_function(
    grid: &WeightedGrid,
    support: usize,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> WeightedGridFunction {
    let mut f = WeightedGridFunction::zero(grid.clone());
    for i in 0..support {
        f.values_mut()[i] = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    f
}

#[test]
fn vector_defect_equals_weighted_residual_sum() {
    // the operator-level defect of interior-supported f reduces to the
    // residual profile summed against |f|^2 on the weighted grid
    let mut rng = rng_from_seed(51);
    let h = 1.0 / 32.0;
    let cells = 256;
    let cases = [
        (WeightFamily::Affine, TranslationMode::Right),
        (WeightFamily::Quadratic, TranslationMode::Right),
        (WeightFamily::ExpMinus, TranslationMode::Right),
        (WeightFamily::SqrtAffine, TranslationMode::Weighted),
        (WeightFamily::ExpPlus, TranslationMode::Weighted),
        (WeightFamily::ReciprocalAffine, TranslationMode::LeftAdjoint),
        (WeightFamily::ExpMinus, TranslationMode::LeftAdjoint),
    ];
    for (family, mode) in cases {
        let rho = WeightedGrid::from_family(family, h, cells).unwrap();
        let carrier = match mode {
            TranslationMode::Weighted => rho.flat(),
            _ => rho.clone(),
        };
        for trial in 0..100 {
            let m = 1 + (trial % 4) as u32;
            let j = 1 + trial % 5;
            let support = cells - m as usize * j;
            let f = random_interior_function(&carrier, support, &mut rng);
            let defect = translate_defect_vector(&rho, mode, &f, m, j).unwrap();
            let profile = mode_residual_profile(&rho, mode, m, j).unwrap();
            let weights = match mode {
                TranslationMode::Right => rho.weights(),
                TranslationMode::Weighted => carrier.weights(),
                TranslationMode::LeftAdjoint => rho.weights(),
            };
            let summed: f64 = profile
                .iter()
                .enumerate()
                .map(|(i, g)| h * g * f.values()[i].norm_sqr() * weights[i])
                .sum();
            let scale = f.norm_squared().max(1.0)
                * (1..=m).map(|_| 2.0).product::<f64>()
                * profile.iter().fold(1.0f64, |a, g| a.max(g.abs()));
            assert!(
                (defect - summed).abs() <= 1e-9 * scale,
                "{:?}/{:?} trial {trial}: defect {defect} vs summed {summed}",
                family,
                mode
            );
        }
    }
}

#[test]
fn conjugation_preserves_the_two_isometry_verdict() {
    // weighted translate with rho = sqrt(1+s) versus the plain right
    // translate on the rho^2-weighted grid
    let h = 1.0 / 64.0;
    let rho = WeightedGrid::from_family(WeightFamily::SqrtAffine, h, 1024).unwrap();
    for j in [1usize, 2, 5] {
        let weighted = mode_weight_test(&rho, TranslationMode::Weighted, 2, j, 1e-9)
            .unwrap()
            .pass;
        let conjugated = weight_test(&rho.squared(), 2, j, 1e-9).unwrap().pass;
        assert_eq!(weighted, conjugated, "j = {j}");
        assert!(weighted);
    }
}

#[test]
fn shrinking_the_window_never_flips_a_pass() {
    let h = 1.0 / 64.0;
    for family in WeightFamily::ALL {
        let grid = WeightedGrid::from_family(family, h, 512).unwrap();
        for m in [1u32, 2, 3] {
            let profile = mode_residual_profile(&grid, TranslationMode::Right, m, 3).unwrap();
            let full_max = profile.iter().fold(0.0f64, |a, g| a.max(g.abs()));
            let shrunk_max = profile[..profile.len() - 1]
                .iter()
                .fold(0.0f64, |a, g| a.max(g.abs()));
            assert!(shrunk_max <= full_max, "{family:?} m={m}");
        }
    }
}

#[test]
fn exact_degree_d_passes_at_d_plus_one_and_fails_at_d() {
    let h = 1.0 / 64.0;
    let cells = 512;
    for d in 0u32..=3 {
        // lattice polynomial of exact degree d, strictly positive on the grid
        let weights: Vec<f64> = (0..cells)
            .map(|i| {
                let s = i as f64 * h;
                1.0 + s.powi(d as i32) + 0.5 * s.powi(d.saturating_sub(1) as i32)
            })
            .collect();
        let grid = WeightedGrid::new(h, weights).unwrap();
        for j in [1usize, 2, 5] {
            assert!(
                weight_test(&grid, d + 1, j, 1e-9).unwrap().pass,
                "degree {d} should pass at m = {}",
                d + 1
            );
            if d >= 1 {
                assert!(
                    !weight_test(&grid, d, j, 1e-9).unwrap().pass,
                    "degree {d} should fail at m = {d}"
                );
            }
        }
    }
    // degree 0 against m = 0 is outside the contract; constant at m = 1 passes
    let flat = WeightedGrid::from_family(WeightFamily::Constant, h, cells).unwrap();
    assert!(weight_test(&flat, 1, 1, 1e-9).unwrap().pass);
}
