//! Exact integer combinatorics for the alternating defect sums.
//!
//! Everything here is evaluated in arbitrary-precision integers; floating
//! point is forbidden because these identities anchor every downstream
//! tolerance. The binomial coefficient uses the convention C(m, k) = 0
//! whenever k < 0 or k > m, which the lattice sums below rely on.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Binomial coefficient C(m, k) with the zero convention for k < 0 or k > m.
pub fn binom(m: u64, k: i64) -> BigInt {
    if k < 0 || (k as u64) > m {
        return BigInt::zero();
    }
    let k = k as u64;
    // Multiplicative form; every intermediate quotient is exact.
    let k = k.min(m - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

/// `binom` converted to f64 for use as a floating weight.
///
/// Exact for m <= 56; larger orders round in the conversion, which is
/// irrelevant at the probe scales used here (m <= 64).
pub fn binom_f64(m: u64, k: i64) -> f64 {
    binom(m, k).to_f64().unwrap_or(f64::INFINITY)
}

/// Pascal triangle rows 0..=m; `tab[n][k]` = C(n, k).
fn binom_table(m: u64) -> Vec<Vec<BigInt>> {
    let m = m as usize;
    let mut tab: Vec<Vec<BigInt>> = Vec::with_capacity(m + 1);
    tab.push(vec![BigInt::one()]);
    for n in 1..=m {
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::one());
        for k in 1..n {
            row.push(&tab[n - 1][k - 1] + &tab[n - 1][k]);
        }
        row.push(BigInt::one());
        tab.push(row);
    }
    tab
}

/// Table lookup honoring the zero conventions.
fn tab_binom(tab: &[Vec<BigInt>], n: u64, k: i64) -> BigInt {
    if k < 0 || (k as u64) > n {
        BigInt::zero()
    } else {
        tab[n as usize][k as usize].clone()
    }
}

/// Inner alternating convolution sum_{i=0}^{p} C(m-k, i) C(k, p-i) (-1)^i.
fn inner_sum(tab: &[Vec<BigInt>], m: u64, k: u64, p: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=p {
        let term = tab_binom(tab, m - k, i as i64) * tab_binom(tab, k, p as i64 - i as i64);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Off-diagonal double sum
/// sum_k C(m,k) (-1)^{m-k} { sum_i C(m-k,i) C(k,p-i) (-1)^i }
///                         { sum_j C(m-k,j) C(k,q-j) (-1)^j },
/// which vanishes exactly whenever p + q != m.
///
/// Enumeration order is fixed (k outer, i/j inner) so intermediate traces
/// are reproducible.
///
/// # Panics
/// Panics when p or q lies outside [0, m].
pub fn lemma_offdiag_sum(m: u64, p: u64, q: u64) -> BigInt {
    assert!(p <= m && q <= m, "p and q must lie in [0, m]");
    let tab = binom_table(m);
    offdiag_with_table(&tab, m, p, q)
}

fn offdiag_with_table(tab: &[Vec<BigInt>], m: u64, p: u64, q: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=m {
        let term = tab_binom(tab, m, k as i64) * inner_sum(tab, m, k, p) * inner_sum(tab, m, k, q);
        if (m - k) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Diagonal sum sum_k C(m,k) { sum_i C(m-k,i) C(k,q-i) (-1)^i }^2,
/// which equals 2^m C(m, q) exactly.
///
/// # Panics
/// Panics when q lies outside [0, m].
pub fn lemma_diag_sum(m: u64, q: u64) -> BigInt {
    assert!(q <= m, "q must lie in [0, m]");
    let tab = binom_table(m);
    diag_with_table(&tab, m, q)
}

fn diag_with_table(tab: &[Vec<BigInt>], m: u64, q: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=m {
        let inner = inner_sum(tab, m, k, q);
        acc += tab_binom(tab, m, k as i64) * (&inner * &inner);
    }
    acc
}

/// The closed form 2^m C(m, q) the diagonal sum must match.
pub fn diag_expected(m: u64, q: u64) -> BigInt {
    (BigInt::one() << m) * binom(m, q as i64)
}

/// One row of the lemma-verification sweep.
#[derive(Debug, Clone)]
pub struct LemmaRow {
    pub m: u64,
    pub p: u64,
    pub q: u64,
    pub value: BigInt,
    pub expected: BigInt,
    pub pass: bool,
}

/// Exhaustive sweep of both identities for all m <= m_max and 0 <= p, q <= m.
///
/// Off-diagonal cells (p + q != m) must be zero; diagonal cells carry the
/// value of the squared sum against 2^m C(m, q).
pub fn lemma_sweep(m_max: u64) -> Vec<LemmaRow> {
    let mut rows = Vec::new();
    for m in 1..=m_max {
        let tab = binom_table(m);
        // cache the inner sums; the off-diagonal loop reuses each one m times
        let inner: Vec<Vec<BigInt>> = (0..=m)
            .map(|k| (0..=m).map(|p| inner_sum(&tab, m, k, p)).collect())
            .collect();
        for p in 0..=m {
            for q in 0..=m {
                let (value, expected) = if p + q == m {
                    (diag_with_table(&tab, m, q), diag_expected(m, q))
                } else {
                    let mut acc = BigInt::zero();
                    for k in 0..=m as usize {
                        let term =
                            &tab[m as usize][k] * (&inner[k][p as usize] * &inner[k][q as usize]);
                        if (m as usize - k) % 2 == 0 {
                            acc += term;
                        } else {
                            acc -= term;
                        }
                    }
                    (acc, BigInt::zero())
                };
                let pass = value == expected;
                rows.push(LemmaRow {
                    m,
                    p,
                    q,
                    value,
                    expected,
                    pass,
                });
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_standard_value() {
        assert_eq!(binom(5, 2), BigInt::from(10));
    }

    #[test]
    fn binom_zero_conventions() {
        assert_eq!(binom(2, 5), BigInt::zero());
        assert_eq!(binom(3, -1), BigInt::zero());
    }

    #[test]
    fn binom_pascal_recurrence() {
        for m in 1..=30u64 {
            for k in -1..=(m as i64 + 1) {
                assert_eq!(binom(m, k), binom(m - 1, k - 1) + binom(m - 1, k));
            }
        }
    }

    #[test]
    fn binom_matches_factorial_oracle() {
        let fact = |n: u64| -> BigInt { (1..=n).map(BigInt::from).product::<BigInt>().max(BigInt::one()) };
        for m in 0..=20u64 {
            for k in 0..=m {
                let oracle = fact(m) / (fact(k) * fact(m - k));
                assert_eq!(binom(m, k as i64), oracle);
            }
        }
    }

    #[test]
    fn offdiag_examples_vanish() {
        assert_eq!(lemma_offdiag_sum(2, 0, 1), BigInt::zero());
        assert_eq!(lemma_offdiag_sum(3, 1, 1), BigInt::zero());
        assert_eq!(lemma_offdiag_sum(1, 0, 0), BigInt::zero());
    }

    #[test]
    fn diag_examples() {
        assert_eq!(lemma_diag_sum(0, 0), BigInt::one());
        assert_eq!(lemma_diag_sum(2, 1), BigInt::from(8));
        assert_eq!(lemma_diag_sum(3, 1), BigInt::from(24));
    }

    #[test]
    fn diag_sum_enumerated_independently() {
        // Brute-force oracle: expand the full triple sum term by term,
        // without the table helpers, for a handful of cases.
        for (m, q) in [(2u64, 1u64), (3, 1), (4, 2), (5, 0)] {
            let mut acc = BigInt::zero();
            for k in 0..=m {
                let mut inner = BigInt::zero();
                for i in 0..=q {
                    let t = binom(m - k, i as i64) * binom(k, q as i64 - i as i64);
                    if i % 2 == 0 {
                        inner += t;
                    } else {
                        inner -= t;
                    }
                }
                acc += binom(m, k as i64) * (&inner * &inner);
            }
            assert_eq!(acc, lemma_diag_sum(m, q));
            assert_eq!(acc, diag_expected(m, q));
        }
    }

    #[test]
    fn identities_hold_to_m_30() {
        for row in lemma_sweep(30) {
            assert!(row.pass, "m={} p={} q={}", row.m, row.p, row.q);
        }
        // symmetry in q <-> m - q
        for m in 1..=30u64 {
            for q in 0..=m {
                assert_eq!(lemma_diag_sum(m, q), lemma_diag_sum(m, m - q));
            }
        }
    }

    #[test]
    #[should_panic(expected = "[0, m]")]
    fn diag_rejects_q_out_of_range() {
        lemma_diag_sum(3, 4);
    }
}
