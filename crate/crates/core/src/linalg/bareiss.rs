//! Fraction-free (Bareiss) elimination with full pivoting.
//!
//! Every intermediate entry is a minor of the input, so the division at each
//! step is exact and no rationals are needed.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntegerMatrix;

struct Reduced {
    rank: usize,
    last_pivot: BigInt,
    swaps: usize,
}

fn eliminate(m: &IntegerMatrix) -> Reduced {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone().into_rows();
    let mut prev = BigInt::one();
    let mut swaps = 0;
    let mut rank = 0;

    for k in 0..rows.min(cols) {
        // largest-magnitude pivot in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if a[bi][bj].magnitude() >= x.magnitude() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        if pi != k {
            a.swap(pi, k);
            swaps += 1;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            swaps += 1;
        }

        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..cols {
                let mut t = pivot * &row[j];
                if !lead.is_zero() {
                    t -= &lead * &pivot_row[j];
                }
                row[j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
        rank += 1;
    }
    Reduced {
        rank,
        last_pivot: prev,
        swaps,
    }
}

/// Rank over ℚ (equivalently over ℝ).
pub fn rank_rational(m: &IntegerMatrix) -> usize {
    eliminate(m).rank
}

/// Exact determinant of a square matrix.
///
/// # Panics
///
/// Panics if the matrix is not square.
pub fn determinant(m: &IntegerMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    if m.rows() == 0 {
        return BigInt::one();
    }
    let r = eliminate(m);
    if r.rank < m.rows() {
        return BigInt::zero();
    }
    let det = r.last_pivot;
    if r.swaps % 2 == 1 {
        -det
    } else {
        det
    }
}
