//! Multiplicative and additive characters of 𝔽_p and the sums built on them.
//!
//! A [`CharacterTable`] fixes a prime `p` and a generator `g` and precomputes
//! the discrete-log table together with the `(p−1)`-th and `p`-th roots of
//! unity, so evaluating `χ_k(x)` is two lookups. The character `χ_k` sends
//! `g^j` to `exp(2πi·kj/(p−1))` and `0` to `0`.
//!
//! Gauss sums, Jacobi sums and first moments are all direct `O(p)` sums in
//! double precision.

mod audit;

pub use audit::{
    audit_lemma_formula, check_gauss_magnitude, check_jacobi_gauss, check_parity_identity,
    classify_first_moments, ClassifiedMoment, FirstMomentTable, IdentityAuditReport, MomentClass,
    Verdict,
};

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::arith::{pow_mod, OddPrime, PrimitiveRoot};
use crate::error::{Error, Result};

/// `exp(2πi·(t mod p)/p)`, computed directly.
pub fn additive_char(p: OddPrime, t: i64) -> Complex64 {
    let r = (t as i128).rem_euclid(p.get() as i128) as f64;
    Complex64::from_polar(1.0, TAU * r / p.get() as f64)
}

/// Precomputed data for all characters of `𝔽_p^×` relative to one generator.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    root: PrimitiveRoot,
    dlog: Vec<u32>,
    unit_roots: Vec<Complex64>,
    additive: Vec<Complex64>,
}

impl CharacterTable {
    /// Builds the tables and checks that `χ_{(p−1)/2}` agrees with Euler's
    /// criterion on every unit.
    pub fn new(root: PrimitiveRoot) -> Self {
        let p = root.p();
        let n = p - 1;
        let unit_roots = (0..n)
            .map(|m| Complex64::from_polar(1.0, TAU * m as f64 / n as f64))
            .collect();
        let additive = (0..p)
            .map(|t| Complex64::from_polar(1.0, TAU * t as f64 / p as f64))
            .collect();
        let table = CharacterTable {
            root,
            dlog: root.discrete_logs(),
            unit_roots,
            additive,
        };
        assert!(
            table.quadratic_matches_legendre(),
            "quadratic character disagrees with Euler's criterion for p = {p}, g = {}",
            root.g()
        );
        table
    }

    pub fn root(&self) -> PrimitiveRoot {
        self.root
    }

    pub fn p(&self) -> u64 {
        self.root.p()
    }

    pub fn g(&self) -> u64 {
        self.root.g()
    }

    /// Number of characters, `p − 1`.
    pub fn order(&self) -> u64 {
        self.root.p() - 1
    }

    pub fn character(&self, k: u64) -> Result<MultChar<'_>> {
        if k >= self.order() {
            return Err(Error::CharacterIndex { p: self.p(), k });
        }
        Ok(MultChar { table: self, k })
    }

    pub fn trivial(&self) -> MultChar<'_> {
        MultChar { table: self, k: 0 }
    }

    /// The Legendre character `ρ = χ_{(p−1)/2}`.
    pub fn quadratic(&self) -> MultChar<'_> {
        MultChar {
            table: self,
            k: self.order() / 2,
        }
    }

    /// All `p − 1` characters, in index order.
    pub fn characters(&self) -> impl Iterator<Item = MultChar<'_>> + '_ {
        (0..self.order()).map(move |k| MultChar { table: self, k })
    }

    /// `e_p(t)`, from the precomputed table.
    pub fn additive_char(&self, t: i64) -> Complex64 {
        self.additive[(t as i128).rem_euclid(self.p() as i128) as usize]
    }

    /// Discrete log of a unit `x` (reduced mod p); `None` for the zero class.
    pub fn dlog(&self, x: i64) -> Option<u64> {
        let r = (x as i128).rem_euclid(self.p() as i128) as usize;
        (r != 0).then(|| self.dlog[r] as u64)
    }

    fn quadratic_matches_legendre(&self) -> bool {
        let p = self.p();
        let rho = self.quadratic();
        (1..p).all(|x| {
            let euler = if pow_mod(x as i64, (p - 1) / 2, p) == 1 {
                1.0
            } else {
                -1.0
            };
            (rho.eval(x as i64) - Complex64::new(euler, 0.0)).norm() < 1e-12
        })
    }

    fn same_group(&self, other: &CharacterTable) -> Result<()> {
        if self.p() == other.p() && self.g() == other.g() {
            Ok(())
        } else {
            Err(Error::MismatchedCharacters {
                p1: self.p(),
                g1: self.g(),
                p2: other.p(),
                g2: other.g(),
            })
        }
    }
}

/// The character `χ_k` of a particular [`CharacterTable`].
#[derive(Debug, Clone, Copy)]
pub struct MultChar<'a> {
    table: &'a CharacterTable,
    k: u64,
}

impl<'a> MultChar<'a> {
    pub fn index(self) -> u64 {
        self.k
    }

    pub fn table(self) -> &'a CharacterTable {
        self.table
    }

    pub fn p(self) -> u64 {
        self.table.p()
    }

    pub fn g(self) -> u64 {
        self.table.g()
    }

    pub fn is_trivial(self) -> bool {
        self.k == 0
    }

    /// Even characters satisfy `χ(−1) = 1`; that happens exactly for even `k`.
    pub fn is_even(self) -> bool {
        self.k.is_multiple_of(2)
    }

    /// `χ_k(x)`, with `χ_k(0) = 0`.
    pub fn eval(self, x: i64) -> Complex64 {
        match self.table.dlog(x) {
            None => Complex64::new(0.0, 0.0),
            Some(j) => self.table.unit_roots[((self.k * j) % self.table.order()) as usize],
        }
    }

    /// Pointwise product `χ_k · χ_l = χ_{k+l}`.
    pub fn product(self, other: MultChar<'_>) -> Result<MultChar<'a>> {
        self.table.same_group(other.table)?;
        Ok(MultChar {
            table: self.table,
            k: (self.k + other.k) % self.table.order(),
        })
    }

    /// The conjugate character `χ_{−k}`.
    pub fn conj(self) -> MultChar<'a> {
        let n = self.table.order();
        MultChar {
            table: self.table,
            k: (n - self.k) % n,
        }
    }

    /// `Σ_{x ∈ 𝔽_p^×} χ(x)`.
    pub fn sum_over_units(self) -> Complex64 {
        (1..self.p() as i64).map(|x| self.eval(x)).sum()
    }

    /// `G(χ) = Σ_{x ∈ 𝔽_p} χ(x) e_p(x)`.
    pub fn gauss_sum(self) -> Complex64 {
        (1..self.p() as i64)
            .map(|x| self.eval(x) * self.table.additive_char(x))
            .sum()
    }

    /// `S(χ) = Σ_{x=1}^{p−1} x · χ(x)` with integer weights.
    pub fn first_moment(self) -> Complex64 {
        (1..self.p() as i64).map(|x| self.eval(x) * x as f64).sum()
    }
}

/// `J(χ, ψ) = Σ_{x ∈ 𝔽_p} χ(x) ψ(1 − x)`.
pub fn jacobi_sum(chi: MultChar<'_>, psi: MultChar<'_>) -> Result<Complex64> {
    chi.table.same_group(psi.table)?;
    Ok((0..chi.p() as i64)
        .map(|x| chi.eval(x) * psi.eval(1 - x))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{all_primitive_roots, odd_primes_up_to};

    fn table(p: u64, g: u64) -> CharacterTable {
        let p = OddPrime::new(p).unwrap();
        CharacterTable::new(PrimitiveRoot::new(p, g).unwrap())
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn mult_char_examples() {
        let t = table(5, 2);
        assert!(close(t.character(1).unwrap().eval(2), c(0.0, 1.0), 1e-15));
        assert!(close(t.character(2).unwrap().eval(4), c(1.0, 0.0), 1e-15));
        assert_eq!(t.character(1).unwrap().eval(0), c(0.0, 0.0));
        assert_eq!(t.character(1).unwrap().eval(10), c(0.0, 0.0));
        assert!(close(t.character(1).unwrap().eval(-3), c(0.0, 1.0), 1e-15));
        assert!(t.character(4).is_err());
    }

    #[test]
    fn additive_char_examples() {
        let p = OddPrime::new(5).unwrap();
        assert!(close(additive_char(p, 0), c(1.0, 0.0), 1e-15));
        assert!(close(additive_char(p, 5), c(1.0, 0.0), 1e-15));
        assert!(close(additive_char(p, -4), additive_char(p, 1), 1e-15));
        for p in odd_primes_up_to(200) {
            let s: Complex64 = (0..p.get() as i64).map(|t| additive_char(p, t)).sum();
            assert!(s.norm() < 1e-12, "p = {p}");
        }
        let t = table(7, 3);
        for x in -20..20 {
            assert!(close(
                t.additive_char(x),
                additive_char(OddPrime::new(7).unwrap(), x),
                1e-15
            ));
        }
    }

    #[test]
    fn gauss_sum_examples() {
        let t = table(5, 2);
        assert!(close(t.trivial().gauss_sum(), c(-1.0, 0.0), 1e-12));
        assert!((t.character(1).unwrap().gauss_sum().norm() - 5f64.sqrt()).abs() < 1e-12);
        // direct summation of ρ(x)e_5(x) = e(1) - e(2) - e(3) + e(4) = 2cos(2π/5) - 2cos(4π/5)
        let oracle = 2.0 * (TAU / 5.0).cos() - 2.0 * (2.0 * TAU / 5.0).cos();
        assert!((oracle - 2.236_068_0).abs() < 1e-7);
        assert!(close(
            t.character(2).unwrap().gauss_sum(),
            c(oracle, 0.0),
            1e-12
        ));
    }

    #[test]
    fn jacobi_sum_examples() {
        let t = table(5, 2);
        let j = jacobi_sum(t.character(1).unwrap(), t.character(2).unwrap()).unwrap();
        assert!(close(j, c(1.0, 2.0), 1e-12), "{j}");
        let j0 = jacobi_sum(t.trivial(), t.trivial()).unwrap();
        assert!(close(j0, c(3.0, 0.0), 1e-12));

        let t7 = table(7, 3);
        let j = jacobi_sum(t7.character(1).unwrap(), t7.character(2).unwrap()).unwrap();
        assert!((j.norm() - 7f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn jacobi_rejects_mismatched_groups() {
        let a = table(5, 2);
        let b = table(5, 3);
        let c7 = table(7, 3);
        assert!(matches!(
            jacobi_sum(a.character(1).unwrap(), b.character(1).unwrap()),
            Err(Error::MismatchedCharacters { .. })
        ));
        assert!(jacobi_sum(a.character(1).unwrap(), c7.character(1).unwrap()).is_err());
        // a separately built table for the same (p, g) is the same group
        let a2 = table(5, 2);
        assert!(jacobi_sum(a.character(1).unwrap(), a2.character(2).unwrap()).is_ok());
    }

    #[test]
    fn first_moment_examples() {
        let t = table(5, 2);
        assert!(close(t.trivial().first_moment(), c(10.0, 0.0), 1e-12));
        assert!(t.character(2).unwrap().first_moment().norm() < 1e-12);
        // 1·1 + 2·i + 4·(−1) + 3·(−i)
        assert!(close(
            t.character(1).unwrap().first_moment(),
            c(-3.0, -1.0),
            1e-12
        ));
        assert!(close(
            t.character(3).unwrap().first_moment(),
            c(-3.0, 1.0),
            1e-12
        ));
    }

    #[test]
    fn character_group_properties() {
        for p in odd_primes_up_to(100) {
            for g in all_primitive_roots(p).into_iter().take(2) {
                let t = CharacterTable::new(PrimitiveRoot::new(p, g).unwrap());
                let pv = p.get() as i64;
                for chi in t.characters() {
                    let sign = if chi.is_even() { 1.0 } else { -1.0 };
                    assert!(close(chi.eval(-1), c(sign, 0.0), 1e-12));
                    if !chi.is_trivial() {
                        assert!(chi.sum_over_units().norm() < 1e-9);
                        let g2 = chi.gauss_sum().norm_sqr();
                        assert!((g2 - p.get() as f64).abs() <= 1e-6 * p.get() as f64);
                    }
                    let s = chi.first_moment();
                    let s_conj = chi.conj().first_moment();
                    assert!(close(s_conj, s.conj(), 1e-9));
                    for x in 1..pv.min(12) {
                        for y in 1..pv.min(12) {
                            let lhs = chi.eval(x) * chi.eval(y);
                            assert!(close(lhs, chi.eval(x * y), 1e-12));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn product_and_conj() {
        let t = table(7, 3);
        let a = t.character(4).unwrap();
        let b = t.character(5).unwrap();
        assert_eq!(a.product(b).unwrap().index(), 3);
        assert_eq!(a.conj().index(), 2);
        assert_eq!(t.trivial().conj().index(), 0);
        assert_eq!(t.quadratic().index(), 3);
        assert!(a.product(table(7, 5).character(1).unwrap()).is_err());
    }
}
