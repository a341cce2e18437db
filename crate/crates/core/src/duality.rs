//! Rank over ℚ versus rank over 𝔽_p, and the Smith-form pattern of `T_p`.

use serde::Serialize;

use crate::arith::{OddPrime, PrimitiveRoot};
use crate::circulant::build_tp;
use crate::error::{Error, Result};
use crate::linalg::{rank_mod_p, rank_rational, smith_normal_form, InvariantFactors};

/// Largest `p` for which the Smith form (and generic elimination) is run.
pub const SNF_MAX_P: u64 = 200;

/// Largest `p` accepted by rank scans.
pub const RANK_MAX_P: u64 = 10_000;

/// How ranks were computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankRoute {
    /// Bareiss over ℤ and Gaussian elimination over 𝔽_p on the full matrix.
    Elimination,
    /// Polynomial gcds on the first row (circulant structure).
    Structural,
}

impl RankRoute {
    /// Elimination up to [`SNF_MAX_P`], structural beyond.
    pub fn default_for(p: OddPrime) -> Self {
        if p.get() <= SNF_MAX_P {
            RankRoute::Elimination
        } else {
            RankRoute::Structural
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankDuality {
    pub p: u64,
    pub g: u64,
    pub rank_real: usize,
    pub rank_mod_p: usize,
    pub expected_rank_real: usize,
    pub route: RankRoute,
}

impl RankDuality {
    pub fn holds(&self) -> bool {
        self.rank_real == self.expected_rank_real && self.rank_mod_p == 1
    }
}

pub fn rank_duality(root: PrimitiveRoot) -> Result<RankDuality> {
    rank_duality_via(root, RankRoute::default_for(root.prime()))
}

pub fn rank_duality_via(root: PrimitiveRoot, route: RankRoute) -> Result<RankDuality> {
    let p = root.prime();
    if p.get() > RANK_MAX_P {
        return Err(Error::OutOfRange {
            p: p.get(),
            what: "rank",
            max: RANK_MAX_P,
        });
    }
    let t = build_tp(root);
    let (rank_real, rank_mod) = match route {
        RankRoute::Elimination => {
            let m = t.to_integer_matrix();
            (rank_rational(&m), rank_mod_p(&m, p))
        }
        RankRoute::Structural => (t.rank_rational_structural(), t.rank_mod_p_structural()),
    };
    Ok(RankDuality {
        p: p.get(),
        g: root.g(),
        rank_real,
        rank_mod_p: rank_mod,
        expected_rank_real: p.expected_real_rank(),
        route,
    })
}

/// `(1, p, …, p, 0, …, 0)` with `(p−1)/2` copies of `p` and `(p−3)/2` zeros.
pub fn conjectured_snf(p: OddPrime) -> InvariantFactors {
    let pv = p.get();
    let half = ((pv - 1) / 2) as usize;
    let mut d = vec![1u64];
    d.extend(std::iter::repeat_n(pv, half));
    d.extend(std::iter::repeat_n(0, half - 1));
    InvariantFactors::from_u64(&d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnfConjectureReport {
    pub p: u64,
    pub g: u64,
    pub holds: bool,
    pub diagonal: InvariantFactors,
}

/// Computes the Smith form of `T_p` and compares it with
/// [`conjectured_snf`]. Only a report; a `false` is a counterexample.
pub fn check_snf_conjecture(root: PrimitiveRoot) -> Result<SnfConjectureReport> {
    let p = root.prime();
    if p.get() > SNF_MAX_P {
        return Err(Error::OutOfRange {
            p: p.get(),
            what: "Smith normal form",
            max: SNF_MAX_P,
        });
    }
    let diagonal = smith_normal_form(&build_tp(root).to_integer_matrix());
    Ok(SnfConjectureReport {
        p: p.get(),
        g: root.g(),
        holds: diagonal == conjectured_snf(p),
        diagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(p: u64) -> PrimitiveRoot {
        PrimitiveRoot::smallest(OddPrime::new(p).unwrap())
    }

    #[test]
    fn duality_small_primes() {
        let r5 = rank_duality(root(5)).unwrap();
        assert_eq!(
            (r5.rank_real, r5.rank_mod_p, r5.expected_rank_real),
            (3, 1, 3)
        );
        assert!(r5.holds());
        let r11 = rank_duality(root(11)).unwrap();
        assert_eq!((r11.rank_real, r11.rank_mod_p), (6, 1));
        let r3 = rank_duality(root(3)).unwrap();
        assert_eq!((r3.rank_real, r3.rank_mod_p), (2, 1));
        assert_eq!(
            rank_duality(root(211)).unwrap().route,
            RankRoute::Structural
        );
        assert!(rank_duality(root(10_007)).is_err());
    }

    #[test]
    fn routes_agree() {
        for p in crate::arith::odd_primes_up_to(60) {
            let a = rank_duality_via(root(p.get()), RankRoute::Elimination).unwrap();
            let b = rank_duality_via(root(p.get()), RankRoute::Structural).unwrap();
            assert_eq!((a.rank_real, a.rank_mod_p), (b.rank_real, b.rank_mod_p));
        }
    }

    #[test]
    fn conjectured_pattern() {
        assert_eq!(
            conjectured_snf(OddPrime::new(5).unwrap()),
            InvariantFactors::from_u64(&[1, 5, 5, 0])
        );
        assert_eq!(
            conjectured_snf(OddPrime::new(3).unwrap()),
            InvariantFactors::from_u64(&[1, 3])
        );
        assert_eq!(conjectured_snf(OddPrime::new(13).unwrap()).len(), 12);
    }

    #[test]
    fn snf_table_rows() {
        let r = check_snf_conjecture(root(5)).unwrap();
        assert!(r.holds);
        assert_eq!(r.diagonal, InvariantFactors::from_u64(&[1, 5, 5, 0]));
        assert!(check_snf_conjecture(root(7)).unwrap().holds);
        assert_eq!(
            check_snf_conjecture(root(11)).unwrap().diagonal,
            InvariantFactors::from_u64(&[1, 11, 11, 11, 11, 11, 0, 0, 0, 0])
        );
        assert!(matches!(
            check_snf_conjecture(root(211)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn snf_at_13_is_reported() {
        let r = check_snf_conjecture(root(13)).unwrap();
        assert!(r.diagonal.is_well_formed());
        assert_eq!(r.diagonal.nonzero_count(), 7);
        assert_eq!(
            r.holds,
            r.diagonal == conjectured_snf(OddPrime::new(13).unwrap())
        );
    }
}
