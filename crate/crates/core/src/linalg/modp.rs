//! Gaussian elimination over 𝔽_q.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::IntegerMatrix;
use crate::arith::{inv_mod, OddPrime};

/// Rank after reducing every entry modulo `q`.
pub fn rank_mod_p(m: &IntegerMatrix, q: OddPrime) -> usize {
    let modulus = BigInt::from(q.get());
    let rows: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| {
                    let r = ((x % &modulus) + &modulus) % &modulus;
                    r.to_u64().expect("residue fits in u64")
                })
                .collect()
        })
        .collect();
    rank_of_residue_rows(rows, q.get())
}

/// Rank of a matrix whose entries are already reduced into `0..q`, `q` prime.
pub fn rank_of_residue_rows(mut a: Vec<Vec<u64>>, q: u64) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = inv_mod(a[rank][col], q);
        for x in a[rank][col..].iter_mut() {
            *x = *x * inv % q;
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&prow[col..]) {
                *x = (*x + (q - f) * y) % q;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}
