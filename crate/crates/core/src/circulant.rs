//! The circulant `T_p` built from the powers of a primitive root, and its
//! complex spectrum.
//!
//! Row `i` is the `i`-fold right cyclic shift of the first row, so entry
//! `(i, j)` is `first_row[(j − i) mod (p−1)]`. With this convention the
//! eigenvector `(ω^{jk})_j` has eigenvalue `λ_k = Σ_j first_row[j]·ω^{jk}`,
//! `ω = e^{2πi/(p−1)}`, which is the first moment `S(χ_k)`.

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::arith::{inv_mod, PrimitiveRoot};
use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::linalg::{circulant_rank_mod, circulant_rank_rational, IntegerMatrix};
use crate::tolerance::zero_tolerance;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantMatrix {
    root: PrimitiveRoot,
    first_row: Vec<u64>,
}

/// One row of `T_p`, with the scalar `s` such that the row is `s` times the
/// first row modulo `p` (if such a scalar exists).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedRow {
    pub values: Vec<u64>,
    pub scalar: Option<u64>,
}

/// `T_p = circ(g^0, g^1, …, g^{p−2})` with entries in `{1, …, p−1}`.
pub fn build_tp(root: PrimitiveRoot) -> CirculantMatrix {
    CirculantMatrix {
        root,
        first_row: root.powers(),
    }
}

impl CirculantMatrix {
    pub fn root(&self) -> PrimitiveRoot {
        self.root
    }

    pub fn p(&self) -> u64 {
        self.root.p()
    }

    pub fn g(&self) -> u64 {
        self.root.g()
    }

    /// Order `p − 1`.
    pub fn order(&self) -> usize {
        self.first_row.len()
    }

    pub fn first_row(&self) -> &[u64] {
        &self.first_row
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        let n = self.order();
        self.first_row[(j + n - i % n) % n]
    }

    /// Row `i` and its scalar relation to row 0 modulo `p`.
    pub fn row(&self, i: usize) -> Result<ShiftedRow> {
        let n = self.order();
        if i >= n {
            return Err(Error::RowIndex { index: i, order: n });
        }
        let p = self.p();
        let values: Vec<u64> = (0..n).map(|j| self.entry(i, j)).collect();
        let s = values[0] * inv_mod(self.first_row[0], p) % p;
        let holds = values
            .iter()
            .zip(&self.first_row)
            .all(|(&v, &r)| v % p == s * r % p);
        Ok(ShiftedRow {
            values,
            scalar: holds.then_some(s),
        })
    }

    pub fn to_integer_matrix(&self) -> IntegerMatrix {
        let n = self.order();
        IntegerMatrix::from_fn(n, n, |i, j| BigInt::from(self.entry(i, j)))
    }

    /// Rows of space-separated integers, each newline-terminated.
    pub fn to_text(&self) -> String {
        let n = self.order();
        let mut s = String::new();
        for i in 0..n {
            let line: Vec<String> = (0..n).map(|j| self.entry(i, j).to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// `λ_k = Σ_j first_row[j] · ω^{jk}` by direct `O(n²)` evaluation, with
    /// the default zero tolerance `1e-9·p·(p−1)`.
    pub fn eigenvalues(&self) -> Spectrum {
        self.eigenvalues_with_tolerance(zero_tolerance(self.p()))
    }

    pub fn eigenvalues_with_tolerance(&self, zero_tolerance: f64) -> Spectrum {
        let n = self.order();
        let eigenvalues: Vec<Complex64> = (0..n)
            .map(|k| {
                self.first_row
                    .iter()
                    .enumerate()
                    .map(|(j, &a)| {
                        let m = (j * k) % n;
                        Complex64::from_polar(a as f64, TAU * m as f64 / n as f64)
                    })
                    .sum()
            })
            .collect();
        let nonzero_count = eigenvalues
            .iter()
            .filter(|z| z.norm() > zero_tolerance)
            .count();
        Spectrum {
            eigenvalues,
            nonzero_count,
            zero_tolerance,
        }
    }

    /// Exact rank over ℚ from the first row (cyclotomic divisibility).
    pub fn rank_rational_structural(&self) -> usize {
        circulant_rank_rational(&self.signed_row())
    }

    /// Exact rank over 𝔽_p from the first row (polynomial gcd).
    pub fn rank_mod_p_structural(&self) -> usize {
        circulant_rank_mod(&self.signed_row(), self.root.prime())
    }

    fn signed_row(&self) -> Vec<i64> {
        self.first_row.iter().map(|&x| x as i64).collect()
    }
}

impl Serialize for CirculantMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CirculantMatrix", 4)?;
        st.serialize_field("p", &self.p())?;
        st.serialize_field("g", &self.g())?;
        st.serialize_field("first_row", &self.first_row)?;
        st.serialize_field("order", &self.order())?;
        st.end()
    }
}

/// Eigenvalues indexed by `k`, with the count above the zero tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<Complex64>,
    pub nonzero_count: usize,
    pub zero_tolerance: f64,
}

impl Spectrum {
    pub fn zero_multiplicity(&self) -> usize {
        self.eigenvalues.len() - self.nonzero_count
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.eigenvalues.iter().map(|z| [z.re, z.im]).collect();
        let mut st = s.serialize_struct("Spectrum", 3)?;
        st.serialize_field("eigenvalues", &pairs)?;
        st.serialize_field("nonzero_count", &self.nonzero_count)?;
        st.serialize_field("zero_tolerance", &self.zero_tolerance)?;
        st.end()
    }
}

/// `max_k |λ_k − S(χ_k)|`, the DFT of the first row against the first
/// moments summed over the field.
pub fn crosscheck_spectrum(root: PrimitiveRoot) -> f64 {
    let spectrum = build_tp(root).eigenvalues();
    let table = CharacterTable::new(root);
    table
        .characters()
        .zip(&spectrum.eigenvalues)
        .map(|(chi, &lambda)| (lambda - chi.first_moment()).norm())
        .fold(0.0, f64::max)
}
