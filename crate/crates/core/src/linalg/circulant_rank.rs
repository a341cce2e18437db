//! Exact ranks of circulant matrices from their first row alone.
//!
//! A circulant with first row `a` acts on `F[x]/(x^n − 1)` as multiplication
//! by `a(x) = Σ a_j x^j`, so over any field its rank is
//! `n − deg gcd(a(x), x^n − 1)`. Over ℚ the gcd is a product of cyclotomic
//! factors `Φ_d` (`d | n`), and `Φ_d | a(x)` is an exact integer test. Over
//! 𝔽_q the gcd is computed with Euclid's algorithm.
//!
//! Both routes are `O(n²)` and never materialize the matrix, which is what
//! makes orders in the thousands tractable.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{inv_mod, OddPrime};

fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Coefficients (lowest degree first) of the `d`-th cyclotomic polynomial,
/// via `Φ_d = Π_{e | d} (x^e − 1)^{μ(d/e)}`.
pub fn cyclotomic_polynomial(d: usize) -> Vec<BigInt> {
    assert!(d >= 1);
    let divs = divisors(d);
    let mut poly = vec![BigInt::from(1)];
    // multiply first so every division below is exact
    for &e in &divs {
        if mobius(d / e) == 1 {
            let mut next = vec![BigInt::zero(); poly.len() + e];
            for (i, c) in poly.iter().enumerate() {
                next[i + e] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &e in &divs {
        if mobius(d / e) == -1 {
            // poly = q · (x^e − 1)  ⇒  q_i = q_{i−e} − poly_i
            let qlen = poly.len() - e;
            let mut q: Vec<BigInt> = Vec::with_capacity(qlen);
            for i in 0..qlen {
                let prev = if i >= e {
                    q[i - e].clone()
                } else {
                    BigInt::zero()
                };
                q.push(prev - &poly[i]);
            }
            poly = q;
        }
    }
    poly
}

/// Whether the monic `divisor` divides `poly` in ℤ[x].
fn divides_monic(divisor: &[BigInt], mut poly: Vec<BigInt>) -> bool {
    let deg = divisor.len() - 1;
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    if deg == 0 {
        return true;
    }
    while poly.len() > deg {
        let lead = poly.pop().expect("non-empty");
        if lead.is_zero() {
            continue;
        }
        let shift = poly.len() - deg;
        for (t, c) in divisor[..deg].iter().enumerate() {
            if !c.is_zero() {
                poly[shift + t] -= &lead * c;
            }
        }
    }
    poly.iter().all(Zero::is_zero)
}

/// Rank over ℚ of the circulant with the given first row.
pub fn circulant_rank_rational(first_row: &[i64]) -> usize {
    let n = first_row.len();
    if n == 0 {
        return 0;
    }
    let mut deficiency = 0;
    for d in divisors(n) {
        // a(x) mod (x^d − 1), which Φ_d divides
        let mut folded = vec![BigInt::zero(); d];
        for (j, &a) in first_row.iter().enumerate() {
            folded[j % d] += a;
        }
        let phi = cyclotomic_polynomial(d);
        if divides_monic(&phi, folded) {
            deficiency += phi.len() - 1;
        }
    }
    n - deficiency
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// `a mod b` over 𝔽_q; `b` must be nonzero with no trailing zeros.
fn poly_rem(mut a: Vec<u64>, b: &[u64], q: u64) -> Vec<u64> {
    trim(&mut a);
    let db = b.len() - 1;
    let inv_lead = inv_mod(b[db], q);
    while a.len() > db {
        let lead = a.pop().expect("non-empty");
        if lead == 0 {
            continue;
        }
        let f = lead * inv_lead % q;
        let shift = a.len() - db;
        for (t, &c) in b[..db].iter().enumerate() {
            let x = &mut a[shift + t];
            *x = (*x + (q - f) * c % q) % q;
        }
        trim(&mut a);
    }
    trim(&mut a);
    a
}

/// Rank over 𝔽_q of the circulant with the given first row.
pub fn circulant_rank_mod(first_row: &[i64], q: OddPrime) -> usize {
    let n = first_row.len();
    if n == 0 {
        return 0;
    }
    let qv = q.get();
    let mut a: Vec<u64> = first_row
        .iter()
        .map(|&x| (x as i128).rem_euclid(qv as i128) as u64)
        .collect();
    trim(&mut a);
    if a.is_empty() {
        return 0;
    }
    let mut b = vec![0u64; n + 1];
    b[0] = qv - 1;
    b[n] = 1;
    // Euclid: gcd(x^n − 1, a)
    let (mut r0, mut r1) = (b, a);
    while !r1.is_empty() {
        let r2 = poly_rem(r0, &r1, qv);
        r0 = r1;
        r1 = r2;
    }
    n - (r0.len() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank_mod_p, rank_rational, IntegerMatrix};

    fn circulant(first_row: &[i64]) -> IntegerMatrix {
        let n = first_row.len();
        IntegerMatrix::from_fn(n, n, |i, j| BigInt::from(first_row[(j + n - i) % n]))
    }

    fn coeffs(p: &[BigInt]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(coeffs(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(coeffs(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        let c105 = coeffs(&cyclotomic_polynomial(105));
        assert_eq!(c105.len(), 49);
        assert_eq!(c105.iter().map(|c| c.abs()).max(), Some(2));
    }

    #[test]
    fn cyclotomic_product_is_xn_minus_one() {
        for n in 1..40 {
            let mut prod = vec![BigInt::from(1)];
            for d in divisors(n) {
                let phi = cyclotomic_polynomial(d);
                let mut next = vec![BigInt::zero(); prod.len() + phi.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in phi.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = next;
            }
            let mut expect = vec![BigInt::zero(); n + 1];
            expect[0] = BigInt::from(-1);
            expect[n] = BigInt::from(1);
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn t5_ranks() {
        let row = [1, 2, 4, 3];
        assert_eq!(circulant_rank_rational(&row), 3);
        assert_eq!(circulant_rank_mod(&row, OddPrime::new(5).unwrap()), 1);
        assert_eq!(
            circulant_rank_mod(&[0, 5, 10], OddPrime::new(5).unwrap()),
            0
        );
        assert_eq!(circulant_rank_rational(&[0, 0, 0]), 0);
        assert_eq!(circulant_rank_rational(&[1, 1, 1, 1]), 1);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(96))]
            #[test]
            fn agrees_with_elimination(row in proptest::collection::vec(-3i64..4, 1..13)) {
                let m = circulant(&row);
                prop_assert_eq!(circulant_rank_rational(&row), rank_rational(&m));
                for q in [3u64, 5, 7] {
                    let q = OddPrime::new(q).unwrap();
                    prop_assert_eq!(circulant_rank_mod(&row, q), rank_mod_p(&m, q));
                }
            }
        }
    }
}
