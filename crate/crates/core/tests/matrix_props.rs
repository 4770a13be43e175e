//! Property tests for the linear-algebra substrate: exponential/logarithm
//! round trips, the exponential semigroup law, and kernel orthogonality.

use miso_core::matrix::{
    identity, kernel, matrix_exp, matrix_log_principal, operator_norm, CMatrix,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn matrix_from_parts(n: usize, parts: &[f64]) -> CMatrix {
    CMatrix::from_fn(n, n, |i, j| c(parts[2 * (i * n + j)], parts[2 * (i * n + j) + 1]))
}

/// Random matrix rescaled to operator norm at most `cap`.
fn capped(n: usize, parts: &[f64], cap: f64) -> CMatrix {
    let m = matrix_from_parts(n, parts);
    let norm = operator_norm(&m);
    if norm > cap {
        m * c(cap / norm, 0.0)
    } else {
        m
    }
}

fn arb_parts(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, 2 * n * n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // ||M|| <= 2 < pi keeps every eigenvalue of exp(M) off the branch cut,
    // so the principal logarithm must recover M.
    #[test]
    fn exp_log_round_trip(n in 2usize..=5, parts in arb_parts(5)) {
        let m = capped(n, &parts, 2.0);
        let e = matrix_exp(&m);
        let l = matrix_log_principal(&e).unwrap();
        let err = operator_norm(&(&l - &m));
        prop_assert!(err <= 1e-8, "round trip error {err}");
    }

    #[test]
    fn exp_semigroup_law(n in 2usize..=4, parts in arb_parts(4), s in 0.0f64..2.0, t in 0.0f64..2.0) {
        let a = capped(n, &parts, 1.5);
        let both = matrix_exp(&(&a * c(s + t, 0.0)));
        let split = matrix_exp(&(&a * c(s, 0.0))) * matrix_exp(&(&a * c(t, 0.0)));
        let err = operator_norm(&(&both - &split));
        prop_assert!(err <= 1e-10 * (1.0 + operator_norm(&both)), "law error {err}");
    }

    // manufacture a rank-deficient matrix; its computed kernel must be
    // annihilated up to rounding
    #[test]
    fn kernel_is_orthogonal_to_rows(n in 3usize..=5, parts_a in arb_parts(5), parts_b in arb_parts(5), drop in 1usize..=2) {
        let qa = matrix_from_parts(n, &parts_a).qr().q();
        let qb = matrix_from_parts(n, &parts_b).qr().q();
        let mut sigma = CMatrix::zeros(n, n);
        for i in 0..n {
            sigma[(i, i)] = if i < n - drop { c(1.0 + i as f64, 0.0) } else { c(0.0, 0.0) };
        }
        let m = &qa * sigma * qb.adjoint();
        let ker = kernel(&m, 1e-10);
        prop_assert!(ker.dim() >= drop);
        prop_assert!(ker.orthonormality_defect() < 1e-10);
        let image = &m * ker.basis();
        prop_assert!(operator_norm(&image) <= 1e-10 * operator_norm(&m).max(1.0));
    }
}

#[test]
fn log_of_exp_handles_near_branch_rotations() {
    // pure rotations with |angle| just below pi survive the round trip
    for angle in [3.0f64, -3.0, 2.5, -2.5] {
        let m = CMatrix::from_element(1, 1, c(0.0, angle));
        let l = matrix_log_principal(&matrix_exp(&m)).unwrap();
        assert!((l[(0, 0)] - c(0.0, angle)).norm() < 1e-10, "angle {angle}");
    }
}

#[test]
fn schur_handles_exactly_nilpotent_dense_matrices() {
    // unitary conjugates of Jordan blocks stall textbook QR shift strategies;
    // eigenvalues of a perturbed n-block scatter like eps^(1/n), so the
    // radius bound must respect that, not machine epsilon
    let mut rng = miso_core::corpus::rng_from_seed(11);
    for n in [3usize, 4, 6] {
        let u = miso_core::corpus::random_unitary(n, &mut rng);
        let mut j = CMatrix::zeros(n, n);
        for i in 0..n - 1 {
            j[(i, i + 1)] = c(1.0, 0.0);
        }
        let m = u.adjoint() * &j * &u;
        let radius = miso_core::matrix::spectral_radius(&m);
        let scatter = f64::EPSILON.powf(1.0 / n as f64);
        assert!(
            radius < 10.0 * scatter,
            "nilpotent spectral radius came out {radius}, scatter bound {scatter}"
        );
        let (q, t) = miso_core::matrix::schur(&m);
        let recon = &q * &t * q.adjoint();
        assert!(operator_norm(&(&recon - &m)) < 1e-12);
    }
}

#[test]
fn identity_exponential_is_euler() {
    let e = matrix_exp(&identity(3));
    let err = operator_norm(&(&e - &(identity(3) * c(std::f64::consts::E, 0.0))));
    assert!(err < 1e-13);
}
