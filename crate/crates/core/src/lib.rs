//! Circulant matrices built from primitive roots modulo an odd prime.
//!
//! For an odd prime `p` with primitive root `g`, `T_p` is the `(p−1)×(p−1)`
//! circulant whose first row is `g^0, g^1, …, g^{p−2}` reduced into
//! `{1, …, p−1}`. Its complex eigenvalues are the first moments
//! `S(χ_k) = Σ x·χ_k(x)` of the multiplicative characters, which vanish
//! exactly for the nontrivial even characters; so the real rank is
//! `(p+1)/2`, while modulo `p` every row is a multiple of the first and the
//! rank is 1.
//!
//! Modules:
//! - [`arith`]: primes, factorization, modular powers, primitive roots
//! - [`characters`]: characters, Gauss/Jacobi sums, first moments, audits
//! - [`circulant`]: construction of `T_p` and its spectrum
//! - [`linalg`]: exact rank over ℚ and 𝔽_p, Smith normal form
//! - [`duality`]: rank duality and Smith-form pattern checks for `T_p`
//! - [`codes`], [`graph`]: the code and graph readings of `T_p`
//! - [`scan`]: batch verification over many primes

pub mod arith;
pub mod characters;
pub mod circulant;
pub mod codes;
pub mod duality;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod scan;
pub mod tolerance;

pub use arith::{OddPrime, PrimitiveRoot};
pub use error::{Error, Result};
