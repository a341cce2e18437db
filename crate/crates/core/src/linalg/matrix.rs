use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::Shape(format!(
                "{rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntegerMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntegerMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let entries = rows.iter().flatten().map(|&x| x.into()).collect();
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = IntegerMatrix::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.entries[i * cols + i] = d.clone();
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<BigInt>> {
        let cols = self.cols;
        if cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        let mut it = self.entries.into_iter();
        (0..self.rows)
            .map(|_| it.by_ref().take(cols).collect())
            .collect()
    }

    pub(crate) fn from_row_vecs(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let n = rows.len();
        IntegerMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(IntegerMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .filter(|&t| !self.get(i, t).is_zero())
                .map(|t| self.get(i, t) * other.get(t, j))
                .sum()
        }))
    }

    pub fn transpose(&self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Parses `"rows cols"` on the first line followed by row-major entries
    /// separated by any whitespace.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let mut dim = |what: &str| -> Result<usize> {
            tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("missing {what}")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
        };
        let rows = dim("row count")?;
        let cols = dim("column count")?;
        let entries = tokens
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad entry '{t}': {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntegerMatrix::from_entries(rows, cols, entries)
    }

    /// Inverse of [`IntegerMatrix::parse_text`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
