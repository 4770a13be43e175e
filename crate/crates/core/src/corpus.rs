//! Deterministic sample generators: seeded random operators, the named
//! generator corpus for the equivalence sweeps, and weight-shift material.
//!
//! Everything is driven by a caller-supplied seed through ChaCha8, so two
//! runs with the same seed produce identical samples on every platform.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::embedding::OperatorWeightSequence;
use crate::matrix::{identity, matrix_exp, operator_norm, CMatrix, CVector};
use crate::semigroup::nilpotent_generator;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn uniform(rng: &mut ChaCha8Rng, scale: f64) -> f64 {
    rng.gen_range(-scale..=scale)
}

/// Dense matrix with entries uniform in the centered box of half-width `scale`.
pub fn random_complex_matrix(n: usize, scale: f64, rng: &mut ChaCha8Rng) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| Complex64::new(uniform(rng, scale), uniform(rng, scale)))
}

pub fn random_vector(n: usize, rng: &mut ChaCha8Rng) -> CVector {
    CVector::from_fn(n, |_, _| Complex64::new(uniform(rng, 1.0), uniform(rng, 1.0)))
}

/// Random unit vector.
pub fn random_unit_vector(n: usize, rng: &mut ChaCha8Rng) -> CVector {
    loop {
        let v = random_vector(n, rng);
        let norm = v.norm();
        if norm > 1e-3 {
            return v / Complex64::new(norm, 0.0);
        }
    }
}

/// Skew-Hermitian matrix (M - M*) / 2; generates a unitary group.
pub fn random_skew_hermitian(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let m = random_complex_matrix(n, 1.0, rng);
    (&m - m.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Hermitian matrix (M + M*) / 2.
pub fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let m = random_complex_matrix(n, 1.0, rng);
    (&m + m.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Unitary from the QR factor of a random matrix.
pub fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let m = random_complex_matrix(n, 1.0, rng);
    m.qr().q()
}

/// Invertible matrix whose spectrum avoids the closed negative real axis:
/// e^B with ||B|| <= 2 < pi keeps every eigenvalue argument inside (-pi, pi).
pub fn random_invertible_off_branch(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let b = random_complex_matrix(n, 1.0, rng);
    let norm = operator_norm(&b);
    let b = if norm > 2.0 {
        &b * Complex64::new(2.0 / norm, 0.0)
    } else {
        b
    };
    matrix_exp(&b)
}

/// Scalar shift weights W_n = sqrt((n+1)/n); the associated shift has
/// ||S^k e_1||^2 = k + 1, affine in k.
pub fn scalar_sqrt_ratio_weights(l: usize) -> Vec<f64> {
    (1..=l).map(|n| ((n as f64 + 1.0) / n as f64).sqrt()).collect()
}

/// Random operator weight sequence with blocks of norm about 1.
pub fn random_weight_sequence(
    l: usize,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> OperatorWeightSequence {
    let blocks: Vec<CMatrix> = (0..l)
        .map(|_| {
            let b = random_complex_matrix(d, 1.0, rng);
            let norm = operator_norm(&b).max(1e-6);
            &b * Complex64::new(1.2 / norm, 0.0)
        })
        .collect();
    OperatorWeightSequence::new(blocks).expect("blocks are square and finite")
}

fn block_diag(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (na, nb) = (a.nrows(), b.nrows());
    let mut m = CMatrix::zeros(na + nb, na + nb);
    for i in 0..na {
        for j in 0..na {
            m[(i, j)] = a[(i, j)];
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            m[(na + i, na + j)] = b[(i, j)];
        }
    }
    m
}

fn jordan(n: usize, dim: usize) -> CMatrix {
    nilpotent_generator(n, dim)
        .expect("valid jordan parameters")
        .generator()
        .clone()
}

/// The named generator corpus behind the equivalence sweeps: nilpotent
/// blocks, unitary-group generators, commuting and block mixtures, a
/// unitary conjugate, and non-examples with clearly visible growth.
pub fn named_generator_corpus(seed: u64) -> Vec<(String, CMatrix)> {
    let mut rng = rng_from_seed(seed);
    let mut corpus: Vec<(String, CMatrix)> = Vec::new();

    corpus.push(("nilpotent-n2-d2".into(), jordan(2, 2)));
    corpus.push(("nilpotent-n3-d3".into(), jordan(3, 3)));
    corpus.push(("nilpotent-n4-d4".into(), jordan(4, 4)));
    corpus.push(("nilpotent-n2-d4".into(), jordan(2, 4)));
    corpus.push(("nilpotent-n3-d5".into(), jordan(3, 5)));

    for d in 2..=6 {
        corpus.push((format!("skew-hermitian-d{d}"), random_skew_hermitian(d, &mut rng)));
    }

    // commuting mixtures: i*theta*I + nilpotent shares the nilpotent defects
    for (n, theta) in [(2usize, 0.7f64), (3, -1.3), (4, 0.35)] {
        let phase = identity(n) * Complex64::new(0.0, theta);
        corpus.push((format!("phase-nilpotent-n{n}"), phase + jordan(n, n)));
    }

    // block mixtures: unitary part plus a nilpotent block
    let skew2a = random_skew_hermitian(2, &mut rng);
    corpus.push(("mix-skew-nilpotent-n2".into(), block_diag(&skew2a, &jordan(2, 2))));
    let skew2b = random_skew_hermitian(2, &mut rng);
    corpus.push(("mix-skew-nilpotent-n3".into(), block_diag(&skew2b, &jordan(3, 3))));

    // unitary conjugate of a nilpotent block: same verdicts in a rotated basis
    let u = random_unitary(3, &mut rng);
    corpus.push(("conjugated-nilpotent-n3".into(), u.adjoint() * jordan(3, 3) * &u));

    corpus.push(("zero-d3".into(), CMatrix::zeros(3, 3)));

    // non-examples: spectra with real parts far from the imaginary axis
    corpus.push((
        "nonexample-expanding-d2".into(),
        CMatrix::from_diagonal(&CVector::from_vec(vec![
            Complex64::new(1.2, 0.0),
            Complex64::new(1.5, -0.4),
        ])),
    ));
    corpus.push((
        "nonexample-contracting-d3".into(),
        CMatrix::from_diagonal(&CVector::from_vec(vec![
            Complex64::new(-1.1, 0.3),
            Complex64::new(-1.4, 0.0),
            Complex64::new(-2.0, 1.0),
        ])),
    ));
    corpus.push((
        "nonexample-mixed-d4".into(),
        CMatrix::from_diagonal(&CVector::from_vec(vec![
            Complex64::new(0.9, 2.0),
            Complex64::new(-1.3, 0.5),
            Complex64::new(0.8, -1.0),
            Complex64::new(1.2, 0.0),
        ])),
    ));
    let dense = random_complex_matrix(3, 0.25, &mut rng);
    corpus.push(("nonexample-dense-d3".into(), identity(3) * Complex64::new(2.0, 0.0) + dense));
    corpus.push((
        "nonexample-shifted-jordan-d2".into(),
        identity(2) * Complex64::new(0.5, 0.0) + jordan(2, 2),
    ));
    let cyclic = {
        let mut m = CMatrix::zeros(3, 3);
        m[(0, 1)] = Complex64::new(2.0, 0.0);
        m[(1, 2)] = Complex64::new(2.0, 0.0);
        m[(2, 0)] = Complex64::new(0.5, 0.0);
        m
    };
    corpus.push(("nonexample-cyclic-d3".into(), cyclic));

    corpus
}

/// Minimal isometry order expected for corpus members that are m-isometric,
/// by name; None for non-examples.
pub fn expected_minimal_order(name: &str) -> Option<u32> {
    match name {
        "nilpotent-n2-d2" | "nilpotent-n2-d4" | "phase-nilpotent-n2"
        | "mix-skew-nilpotent-n2" => Some(3),
        "nilpotent-n3-d3" | "nilpotent-n3-d5" | "phase-nilpotent-n3"
        | "mix-skew-nilpotent-n3" | "conjugated-nilpotent-n3" => Some(5),
        "nilpotent-n4-d4" | "phase-nilpotent-n4" => Some(7),
        "zero-d3" => Some(1),
        n if n.starts_with("skew-hermitian") => Some(1),
        n if n.starts_with("nonexample") => None,
        _ => None,
    }
}
