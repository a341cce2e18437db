//! Numeric thresholds shared by the character-sum and spectrum code.
//!
//! All floating-point work is double-precision direct summation of at most
//! `p` terms of size at most `p`, so rounding error scales like
//! `p² · ε ≈ 2e-8` at `p = 10^4`, far below the `√p`-sized quantities that
//! decide any verdict.

/// Magnitude below which a first moment or eigenvalue counts as zero:
/// `1e-9 · p · (p − 1)`, the scale of the summands.
pub fn zero_tolerance(p: u64) -> f64 {
    1e-9 * (p as f64) * ((p - 1) as f64)
}

/// Residual allowed by an identity audit: `1e-8 · max(|lhs|, |rhs|, 1)`.
pub fn audit_tolerance(lhs_abs: f64, rhs_abs: f64) -> f64 {
    1e-8 * lhs_abs.max(rhs_abs).max(1.0)
}

/// Relative tolerance on `|G(χ)|² = p`.
pub const GAUSS_MAGNITUDE_REL: f64 = 1e-6;

/// Bound on `max_k |λ_k − S(χ_k)|`: `1e-9 · p²`.
pub fn spectrum_crosscheck_tolerance(p: u64) -> f64 {
    1e-9 * (p as f64) * (p as f64)
}

/// Required ratio between the smallest odd-character moment and the zero
/// tolerance before the classification is trusted.
pub const SEPARATION_FACTOR: f64 = 10.0;
