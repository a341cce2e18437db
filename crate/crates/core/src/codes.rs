//! Linear codes over 𝔽_p generated by rows of `T_p`.
//!
//! Reduced mod `p`, `T_p` has rank one, so its first row alone generates a
//! one-dimensional code. Placing that row on each block of a block-diagonal
//! generator gives a code of dimension equal to the number of blocks.

use serde::Serialize;

use crate::arith::{OddPrime, PrimitiveRoot};
use crate::error::{Error, Result};

/// Upper bound on `p^dimension` for exhaustive enumeration.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearCode {
    pub p: OddPrime,
    pub length: usize,
    pub dimension: usize,
    /// `dimension × length`, entries in `0..p`.
    pub generator: Vec<Vec<u64>>,
}

/// `[length, dimension, minimum distance]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParameters {
    pub length: usize,
    pub dimension: usize,
    pub min_distance: usize,
}

/// The one-dimensional code spanned by the first row of `T_p` mod `p`.
pub fn generate_code(root: PrimitiveRoot) -> LinearCode {
    LinearCode {
        p: root.prime(),
        length: (root.p() - 1) as usize,
        dimension: 1,
        generator: vec![root.powers()],
    }
}

/// `blocks` copies of the rank-one generator on the diagonal.
pub fn block_diagonal_code(root: PrimitiveRoot, blocks: usize) -> Result<LinearCode> {
    if blocks == 0 {
        return Err(Error::ZeroBlocks);
    }
    let row = root.powers();
    let n = row.len();
    let generator = (0..blocks)
        .map(|b| {
            let mut g = vec![0u64; blocks * n];
            g[b * n..(b + 1) * n].copy_from_slice(&row);
            g
        })
        .collect();
    Ok(LinearCode {
        p: root.prime(),
        length: blocks * n,
        dimension: blocks,
        generator,
    })
}

impl LinearCode {
    fn codeword_count(&self) -> Result<u64> {
        let p = self.p.get();
        let count = u32::try_from(self.dimension)
            .ok()
            .and_then(|d| p.checked_pow(d))
            .filter(|&c| c <= ENUMERATION_LIMIT);
        count.ok_or(Error::EnumerationBound {
            p,
            dimension: self.dimension,
            limit: ENUMERATION_LIMIT,
        })
    }

    /// Number of codewords of each Hamming weight `0..=length`, by walking
    /// every message vector in base-`p` odometer order.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let total = self.codeword_count()?;
        let p = self.p.get();
        let mut counts = vec![0u64; self.length + 1];
        let mut digits = vec![0u64; self.dimension];
        let mut word = vec![0u64; self.length];
        counts[0] += 1;
        for _ in 1..total {
            // Bumping digit i by one (including the wrap p−1 → 0) adds
            // row i to the codeword modulo p.
            for (i, d) in digits.iter_mut().enumerate() {
                for (w, &g) in word.iter_mut().zip(&self.generator[i]) {
                    *w = (*w + g) % p;
                }
                *d += 1;
                if *d < p {
                    break;
                }
                *d = 0;
            }
            counts[word.iter().filter(|&&w| w != 0).count()] += 1;
        }
        Ok(counts)
    }

    /// Minimum Hamming weight of a nonzero codeword; `None` for the zero code.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        let dist = self.weight_distribution()?;
        Ok(dist.iter().skip(1).position(|&c| c > 0).map(|w| w + 1))
    }

    pub fn parameters(&self) -> Result<CodeParameters> {
        Ok(CodeParameters {
            length: self.length,
            dimension: self.dimension,
            min_distance: self.min_distance()?.unwrap_or(0),
        })
    }

    /// Generator rows as space-separated lines.
    pub fn generator_text(&self) -> String {
        let mut s = String::new();
        for row in &self.generator {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}
