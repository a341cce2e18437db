//! Smith normal form over ℤ by repeated gcd pivoting.
//!
//! The pivot is always the smallest nonzero entry (by absolute value) of the
//! trailing block, ties going to the lowest `(row, col)`. Its column and row
//! are reduced with rounded quotients; any nonzero remainder triggers a new
//! pivot search. Once the cross is clear, an entry of the trailing block not
//! divisible by the pivot has its row added to the pivot row and the search
//! restarts. This keeps the output deterministic.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::{determinant, IntegerMatrix};

/// Diagonal of a Smith normal form: non-negative, nonzeros first, each
/// nonzero entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantFactors(Vec<BigInt>);

impl InvariantFactors {
    pub fn new(diagonal: Vec<BigInt>) -> Self {
        InvariantFactors(diagonal)
    }

    pub fn from_u64(diagonal: &[u64]) -> Self {
        InvariantFactors(diagonal.iter().map(|&d| BigInt::from(d)).collect())
    }

    pub fn diagonal(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nonzero_count(&self) -> usize {
        self.0.iter().filter(|d| !d.is_zero()).count()
    }

    /// Checks sign, ordering and the divisibility chain.
    pub fn is_well_formed(&self) -> bool {
        let nz = self.nonzero_count();
        self.0.iter().all(|d| !d.is_negative())
            && self.0[..nz].iter().all(|d| !d.is_zero())
            && self.0[nz..].iter().all(Zero::is_zero)
            && self.0[..nz].windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }

    /// The diagonal as `u64`s, if every entry fits.
    pub fn to_u64_vec(&self) -> Option<Vec<u64>> {
        self.0.iter().map(ToPrimitive::to_u64).collect()
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A JSON integer list. Entries too large for `u64` are written as decimal
/// strings.
impl Serialize for InvariantFactors {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for d in &self.0 {
            match d.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&d.to_string())?,
            }
        }
        seq.end()
    }
}

/// `left · M · right = diag(factors)` with unimodular `left`, `right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub factors: InvariantFactors,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithDecomposition {
    /// Recomputes `left · m · right` exactly and checks it against the
    /// diagonal, and that both multipliers have determinant ±1.
    pub fn verify(&self, m: &IntegerMatrix) -> bool {
        let diag = IntegerMatrix::diagonal(m.rows(), m.cols(), self.factors.diagonal());
        let product = self
            .left
            .mul(m)
            .and_then(|lm| lm.mul(&self.right))
            .map(|p| p == diag)
            .unwrap_or(false);
        product
            && determinant(&self.left).abs() == BigInt::from(1)
            && determinant(&self.right).abs() == BigInt::from(1)
    }
}

/// Invariant factors of `m`.
pub fn smith_normal_form(m: &IntegerMatrix) -> InvariantFactors {
    Reducer::new(m, false).run().0
}

/// Invariant factors together with the unimodular multipliers.
pub fn smith_normal_form_with_multipliers(m: &IntegerMatrix) -> SmithDecomposition {
    let (factors, left, right) = Reducer::new(m, true).run();
    SmithDecomposition {
        factors,
        left: left.expect("tracked"),
        right: right.expect("tracked"),
    }
}

/// Quotient rounded to nearest, so the remainder has |r| ≤ |b|/2.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    let twice = r.abs() * 2u32;
    if twice > b.abs() {
        if r.is_negative() == b.is_negative() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

struct Reducer {
    a: Vec<Vec<BigInt>>,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
    rows: usize,
    cols: usize,
}

impl Reducer {
    fn new(m: &IntegerMatrix, track: bool) -> Self {
        let (rows, cols) = (m.rows(), m.cols());
        Reducer {
            a: m.clone().into_rows(),
            u: track.then(|| IntegerMatrix::identity(rows).into_rows()),
            v: track.then(|| IntegerMatrix::identity(cols).into_rows()),
            rows,
            cols,
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = &mut self.u {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            if let Some(v) = &mut self.v {
                for row in v {
                    row.swap(i, j);
                }
            }
        }
    }

    /// row[dst] += f · row[src], starting at column `from` in `a`.
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt, from: usize) {
        fn axpy(rows: &mut [Vec<BigInt>], dst: usize, src: usize, f: &BigInt, from: usize) {
            let (s, d) = if src < dst {
                let (lo, hi) = rows.split_at_mut(dst);
                (&lo[src], &mut hi[0])
            } else {
                let (lo, hi) = rows.split_at_mut(src);
                (&hi[0], &mut lo[dst])
            };
            for (x, y) in d[from..].iter_mut().zip(&s[from..]) {
                if !y.is_zero() {
                    *x += f * y;
                }
            }
        }
        axpy(&mut self.a, dst, src, f, from);
        if let Some(u) = &mut self.u {
            axpy(u, dst, src, f, 0);
        }
    }

    /// col[dst] += f · col[src], over rows `from..` in `a`.
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt, from: usize) {
        for row in &mut self.a[from..] {
            if !row[src].is_zero() {
                let t = f * &row[src];
                row[dst] += t;
            }
        }
        if let Some(v) = &mut self.v {
            for row in v {
                if !row[src].is_zero() {
                    let t = f * &row[src];
                    row[dst] += t;
                }
            }
        }
    }

    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.a[bi][bj].magnitude() <= x.magnitude() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Clears row and column `t` against the pivot; true if all remainders vanished.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.rows {
            if self.a[i][t].is_zero() {
                continue;
            }
            let q = round_div(&self.a[i][t], &self.a[t][t]);
            self.add_row(i, t, &-q, t);
            clean &= self.a[i][t].is_zero();
        }
        for j in t + 1..self.cols {
            if self.a[t][j].is_zero() {
                continue;
            }
            let q = round_div(&self.a[t][j], &self.a[t][t]);
            self.add_col(j, t, &-q, t);
            clean &= self.a[t][j].is_zero();
        }
        clean
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let pivot = &self.a[t][t];
        (t + 1..self.rows).find(|&i| {
            self.a[i][t + 1..]
                .iter()
                .any(|x| !x.is_zero() && !(x % pivot).is_zero())
        })
    }

    #[allow(clippy::type_complexity)]
    fn run(
        mut self,
    ) -> (
        InvariantFactors,
        Option<IntegerMatrix>,
        Option<IntegerMatrix>,
    ) {
        let n = self.rows.min(self.cols);
        let mut rank = 0;
        'outer: for t in 0..n {
            loop {
                let Some((pi, pj)) = self.smallest_in_block(t) else {
                    break 'outer;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                if !self.clear_cross(t) {
                    continue;
                }
                match self.non_divisible_row(t) {
                    Some(i) => self.add_row(t, i, &BigInt::from(1), t),
                    None => break,
                }
            }
            rank += 1;
        }

        for t in 0..rank {
            if self.a[t][t].is_negative() {
                self.a[t][t] = -std::mem::take(&mut self.a[t][t]);
                if let Some(u) = &mut self.u {
                    for x in &mut u[t] {
                        *x = -std::mem::take(x);
                    }
                }
            }
        }

        let diagonal = (0..n)
            .map(|i| {
                if i < rank {
                    self.a[i][i].clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        (
            InvariantFactors(diagonal),
            self.u.map(|u| IntegerMatrix::from_row_vecs(u, rows)),
            self.v.map(|v| IntegerMatrix::from_row_vecs(v, cols)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_rational;

    fn mat(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn ifs(d: &[u64]) -> InvariantFactors {
        InvariantFactors::from_u64(d)
    }

    #[test]
    fn t5_table_row() {
        let t5 = mat(&[
            vec![1, 2, 4, 3],
            vec![3, 1, 2, 4],
            vec![4, 3, 1, 2],
            vec![2, 4, 3, 1],
        ]);
        assert_eq!(smith_normal_form(&t5), ifs(&[1, 5, 5, 0]));
        let dec = smith_normal_form_with_multipliers(&t5);
        assert_eq!(dec.factors, ifs(&[1, 5, 5, 0]));
        assert!(dec.verify(&t5));
    }

    #[test]
    fn classic_examples() {
        // diag(2, 4) shuffled: gcd structure gives (2, 4)
        assert_eq!(
            smith_normal_form(&mat(&[vec![4, 0], vec![0, 2]])),
            ifs(&[2, 4])
        );
        // diag(2, 3) → (1, 6)
        assert_eq!(
            smith_normal_form(&mat(&[vec![2, 0], vec![0, 3]])),
            ifs(&[1, 6])
        );
        assert_eq!(smith_normal_form(&mat(&[vec![-3]])), ifs(&[3]));
        assert_eq!(smith_normal_form(&IntegerMatrix::zeros(2, 3)), ifs(&[0, 0]));
        assert_eq!(
            smith_normal_form(&mat(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])),
            ifs(&[2, 6, 12])
        );
        let wide = mat(&[vec![6, 4, 2], vec![3, 2, 1]]);
        let dec = smith_normal_form_with_multipliers(&wide);
        assert_eq!(dec.factors, ifs(&[1, 0]));
        assert!(dec.verify(&wide));
    }

    #[test]
    fn round_div_keeps_remainder_small() {
        for a in -20i64..=20 {
            for b in [-7i64, -4, -1, 1, 3, 6] {
                let q = round_div(&BigInt::from(a), &BigInt::from(b));
                let r = BigInt::from(a) - &q * b;
                assert!(r.abs() * 2 <= BigInt::from(b).abs(), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn well_formed_checks() {
        assert!(ifs(&[1, 5, 5, 0]).is_well_formed());
        assert!(!ifs(&[2, 3]).is_well_formed());
        assert!(!ifs(&[0, 3]).is_well_formed());
        assert!(InvariantFactors::new(vec![BigInt::from(-1)]).nonzero_count() == 1);
        assert!(!InvariantFactors::new(vec![BigInt::from(-1)]).is_well_formed());
        assert_eq!(ifs(&[1, 5, 5, 0]).to_string(), "(1, 5, 5, 0)");
        assert_eq!(
            serde_json::to_string(&ifs(&[1, 5, 5, 0])).unwrap(),
            "[1,5,5,0]"
        );
        let big = InvariantFactors::new(vec![BigInt::from(u64::MAX) * 3]);
        assert_eq!(
            serde_json::to_string(&big).unwrap(),
            "[\"55340232221128654845\"]"
        );
    }

    /// Product of the first k invariant factors equals the gcd of all k×k
    /// minors; checked for k = 1 (gcd of entries).
    fn gcd_of_entries(m: &IntegerMatrix) -> BigInt {
        m.entries().iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn snf_invariants(rows in 1usize..5, cols in 1usize..5,
                              seed in proptest::collection::vec(-9i64..10, 16)) {
                let m = IntegerMatrix::from_fn(rows, cols, |i, j| BigInt::from(seed[i * 4 + j]));
                let dec = smith_normal_form_with_multipliers(&m);
                prop_assert!(dec.factors.is_well_formed());
                prop_assert_eq!(dec.factors.nonzero_count(), rank_rational(&m));
                prop_assert!(dec.verify(&m));
                prop_assert_eq!(&dec.factors, &smith_normal_form(&m));
                let first = dec.factors.diagonal()[0].clone();
                prop_assert_eq!(first, gcd_of_entries(&m));
                if rows == cols {
                    let prod: BigInt = dec.factors.diagonal().iter().product();
                    prop_assert_eq!(prod, determinant(&m).abs());
                }
            }
        }
    }
}
