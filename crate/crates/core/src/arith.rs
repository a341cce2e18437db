//! Prime-field arithmetic: primality, factorization, modular powers and
//! primitive roots.
//!
//! Everything here works on `u64` and is deterministic. Trial division is
//! plenty for the moduli this crate targets (p ≤ 10^6).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Deterministic primality test by trial division over 6k ± 1.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factors of `n` with multiplicity, ascending.
pub fn factorize(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::FactorizeTooSmall(n));
    }
    let mut out = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        while rest.is_multiple_of(d) {
            out.push(d);
            rest /= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push(rest);
    }
    Ok(out)
}

/// Distinct prime factors of `n`, ascending.
pub fn distinct_prime_factors(n: u64) -> Result<Vec<u64>> {
    let mut f = factorize(n)?;
    f.dedup();
    Ok(f)
}

/// `base^exp mod m` by square-and-multiply. `base` may be negative.
///
/// # Panics
///
/// Panics if `m < 2`.
pub fn pow_mod(base: i64, exp: u64, m: u64) -> u64 {
    assert!(m >= 2, "modulus must be at least 2");
    let m128 = m as u128;
    let mut b = (base as i128).rem_euclid(m as i128) as u128;
    let mut e = exp;
    let mut acc: u128 = 1 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo the prime `p`, for `a ≢ 0`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a as i64, p - 2, p)
}

/// All odd primes `p` with `3 ≤ p ≤ max`, ascending.
pub fn odd_primes_up_to(max: u64) -> Vec<OddPrime> {
    (3..=max)
        .step_by(2)
        .filter(|&n| is_prime(n))
        .map(OddPrime)
        .collect()
}

/// An odd prime, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(value: u64) -> Result<Self> {
        if !is_prime(value) {
            return Err(Error::NotPrime(value));
        }
        if value == 2 {
            return Err(Error::EvenPrime(value));
        }
        Ok(OddPrime(value))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Order of the multiplicative group, `p − 1`.
    #[inline]
    pub fn group_order(self) -> u64 {
        self.0 - 1
    }

    /// The rank of `T_p` over the reals predicted by the character-sum count.
    #[inline]
    pub fn expected_real_rank(self) -> usize {
        self.0.div_ceil(2) as usize
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A generator `g` of the multiplicative group modulo an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimitiveRoot {
    p: OddPrime,
    g: u64,
}

impl PrimitiveRoot {
    /// Validates `g` as a generator mod `p`. `g` is taken as given, not
    /// reduced; it must lie in `2..p` (for `p = 3` the only root is 2).
    pub fn new(p: OddPrime, g: u64) -> Result<Self> {
        let factors = distinct_prime_factors(p.group_order())?;
        if (2..p.get()).contains(&g) && generates(p.get(), g, &factors) {
            Ok(PrimitiveRoot { p, g })
        } else {
            Err(Error::NotPrimitiveRoot { p: p.get(), g })
        }
    }

    /// The smallest primitive root modulo `p`.
    pub fn smallest(p: OddPrime) -> Self {
        find_primitive_root(p)
    }

    /// `g` if given, otherwise the smallest primitive root.
    pub fn resolve(p: OddPrime, g: Option<u64>) -> Result<Self> {
        match g {
            Some(g) => PrimitiveRoot::new(p, g),
            None => Ok(PrimitiveRoot::smallest(p)),
        }
    }

    #[inline]
    pub fn prime(self) -> OddPrime {
        self.p
    }

    #[inline]
    pub fn p(self) -> u64 {
        self.p.get()
    }

    #[inline]
    pub fn g(self) -> u64 {
        self.g
    }

    /// `g^0, g^1, …, g^(p−2)` reduced into `{1, …, p−1}`.
    pub fn powers(self) -> Vec<u64> {
        let p = self.p();
        let mut out = Vec::with_capacity((p - 1) as usize);
        let mut acc = 1u64;
        for _ in 0..p - 1 {
            out.push(acc);
            acc = acc * self.g % p;
        }
        out
    }

    /// Discrete-log table: `table[x] = j` with `g^j ≡ x`, for `x` in `1..p`.
    /// Entry 0 is unused and holds `u32::MAX`.
    pub fn discrete_logs(self) -> Vec<u32> {
        let p = self.p() as usize;
        let mut table = vec![u32::MAX; p];
        for (j, x) in self.powers().into_iter().enumerate() {
            table[x as usize] = j as u32;
        }
        table
    }
}

fn generates(p: u64, g: u64, factors_of_order: &[u64]) -> bool {
    let order = p - 1;
    factors_of_order
        .iter()
        .all(|&q| pow_mod(g as i64, order / q, p) != 1)
}

/// Smallest primitive root modulo `p`.
pub fn find_primitive_root(p: OddPrime) -> PrimitiveRoot {
    let factors = distinct_prime_factors(p.group_order()).expect("p − 1 ≥ 2");
    let g = (2..p.get())
        .find(|&g| generates(p.get(), g, &factors))
        .expect("every prime has a primitive root");
    PrimitiveRoot { p, g }
}

/// Every primitive root modulo `p`, ascending. There are φ(p − 1) of them.
pub fn all_primitive_roots(p: OddPrime) -> Vec<u64> {
    let factors = distinct_prime_factors(p.group_order()).expect("p − 1 ≥ 2");
    (2..p.get())
        .filter(|&g| generates(p.get(), g, &factors))
        .collect()
}

/// Canonical representative of a nonzero residue class, in `{1, …, p−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    p: OddPrime,
    rep: u64,
}

impl Residue {
    #[inline]
    pub fn rep(self) -> u64 {
        self.rep
    }

    #[inline]
    pub fn prime(self) -> OddPrime {
        self.p
    }
}

/// The unique element of `{1, …, p−1}` congruent to `x`.
pub fn canonical_rep(x: i64, p: OddPrime) -> Result<Residue> {
    let r = (x as i128).rem_euclid(p.get() as i128) as u64;
    if r == 0 {
        return Err(Error::ZeroResidue { x, p: p.get() });
    }
    Ok(Residue { p, rep: r })
}
