//! Embedding invariants: the semigroup law across both wrap cases and
//! several resolutions, the strong-continuity proxy, consistency with the
//! matrix-side defect calculus, and kernel-dimension bookkeeping.

use miso_core::corpus::{random_vector, random_weight_sequence, rng_from_seed};
use miso_core::embedding::{
    embed_apply, semigroup_law_residual, shift_matrix, verify_t1_matches_shift,
    FiberGridFunction, OperatorWeightSequence,
};
use miso_core::isometry::{misometry_defect_operator, misometry_defect_vector};
use miso_core::matrix::{adjoint, kernel, operator_norm, CMatrix, CVector};
use miso_core::corpus::scalar_sqrt_ratio_weights;
use num_complex::Complex64;

fn random_function(
    d: usize,
    q: usize,
    units: usize,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> FiberGridFunction {
    let mut f = FiberGridFunction::zero(d, q, units);
    for cell in 0..f.cells() {
        f.set_value(cell, random_vector(d, rng));
    }
    f
}

#[test]
fn semigroup_law_holds_across_resolutions_and_wrap_cases() {
    let mut rng = rng_from_seed(61);
    for q in [4usize, 8, 16] {
        for trial in 0..50 {
            let d = 1 + trial % 3;
            let units = 6;
            let w = random_weight_sequence(units - 1, d, &mut rng);
            let f = random_function(d, q, units, &mut rng);
            // split the trials between t + t' < 1 and t + t' > 1
            let (t, t_prime) = if trial % 2 == 0 {
                (1.0 / q as f64, (q / 2) as f64 / q as f64)
            } else {
                (
                    (q - 1) as f64 / q as f64,
                    (q / 2 + q) as f64 / q as f64, // > 1, exercises the unit step
                )
            };
            let residual = semigroup_law_residual(&w, t, t_prime, &f).unwrap();
            assert!(
                residual <= 1e-12,
                "q={q} trial={trial} t={t} t'={t_prime}: residual {residual:e}"
            );
        }
    }
}

#[test]
fn small_time_steps_converge_to_the_identity() {
    // || T(h) F - F || decreases monotonically through q = 8, 16, 32 for a
    // fixed smooth profile
    let units = 6usize;
    let weights = OperatorWeightSequence::scalars(&scalar_sqrt_ratio_weights(units - 1)).unwrap();
    let mut previous = f64::INFINITY;
    for q in [8usize, 16, 32] {
        let mut f = FiberGridFunction::zero(1, q, units);
        for cell in 0..f.cells() {
            let s = (cell as f64 + 0.5) / q as f64;
            let bump = (-(s - 2.0) * (s - 2.0)).exp();
            f.set_value(cell, CVector::from_vec(vec![Complex64::new(bump, 0.0)]));
        }
        let stepped = embed_apply(&weights, &f, 1.0 / q as f64).unwrap();
        let drift = stepped.distance_on(&f, f.cells());
        assert!(drift < previous, "q={q}: drift {drift} did not decrease");
        previous = drift;
    }
}

#[test]
fn sqrt_ratio_shift_is_a_two_isometry_on_the_interior() {
    let slots = 16usize;
    let w = OperatorWeightSequence::scalars(&scalar_sqrt_ratio_weights(slots - 1)).unwrap();
    let s = shift_matrix(&w, slots);

    // interior block of the order-2 defect vanishes exactly
    let delta = misometry_defect_operator(&s, 2);
    let interior = delta.view((0, 0), (slots - 2, slots - 2)).into_owned();
    assert!(operator_norm(&interior) < 1e-12);

    for slot in 0..(slots - 2) {
        let mut e = CVector::zeros(slots);
        e[slot] = Complex64::new(1.0, 0.0);
        assert!(misometry_defect_vector(&s, 2, &e).abs() < 1e-12);
    }

    // order scan against the truncation-safe block: least m whose defect
    // block vanishes is exactly 2
    let window = slots - 5;
    let interior_order = (1u32..=4).find(|&m| {
        let block = misometry_defect_operator(&s, m)
            .view((0, 0), (window, window))
            .into_owned();
        operator_norm(&block) <= 1e-10
    });
    assert_eq!(interior_order, Some(2));

    // embedding at t = 1 reproduces the same shift
    let mut rng = rng_from_seed(62);
    let seq: Vec<CVector> = (0..(slots - 1)).map(|_| random_vector(1, &mut rng)).collect();
    let residual = verify_t1_matches_shift(&w, &seq, 8).unwrap();
    assert!(residual <= 1e-12, "identification residual {residual:e}");
}

#[test]
fn t1_identification_matches_on_random_blocks() {
    let mut rng = rng_from_seed(63);
    for trial in 0..20 {
        let d = 1 + trial % 3;
        let slots = 5;
        let w = random_weight_sequence(slots, d, &mut rng);
        let seq: Vec<CVector> = (0..slots).map(|_| random_vector(d, &mut rng)).collect();
        let residual = verify_t1_matches_shift(&w, &seq, 4).unwrap();
        assert!(residual <= 1e-12, "trial {trial}: residual {residual:e}");
    }
}

#[test]
fn truncated_shift_cokernel_has_fiber_dimension() {
    let mut rng = rng_from_seed(64);
    for d in 1..=3usize {
        let w = random_weight_sequence(5, d, &mut rng);
        let s = shift_matrix(&w, 6);
        let coker = kernel(&adjoint(&s), 1e-10);
        assert_eq!(coker.dim(), d, "fiber dimension {d}");
        let ker = kernel(&s, 1e-10);
        assert_eq!(ker.dim(), d, "truncation also frees the last slot");
    }
}

#[test]
fn identity_weight_embedding_preserves_norms() {
    let w = OperatorWeightSequence::new(vec![CMatrix::identity(2, 2); 7]).unwrap();
    let mut rng = rng_from_seed(65);
    let f = random_function(2, 8, 8, &mut rng);
    for t in [0.125, 0.5, 1.0] {
        let moved = embed_apply(&w, &f, t).unwrap();
        // mass is only lost past the horizon
        let kept = f.cells() - (t * 8.0).round() as usize;
        let mut expected = 0.0;
        for cell in 0..kept {
            expected += f.value(cell).norm_squared();
        }
        let got: f64 = (0..moved.cells()).map(|i| moved.value(i).norm_squared()).sum();
        assert!((got - expected).abs() < 1e-12 * expected.max(1.0), "t={t}");
    }
}
