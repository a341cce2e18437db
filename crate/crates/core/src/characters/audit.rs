//! Numerical audits of character-sum identities.
//!
//! Each audit evaluates both sides of an identity independently by direct
//! summation and reports them with the residual. Nothing here assumes the
//! identity holds; the verdict is whatever the numbers say.

use num_complex::Complex64;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::{jacobi_sum, CharacterTable, MultChar};
use crate::error::Result;
use crate::tolerance::{audit_tolerance, zero_tolerance, GAUSS_MAGNITUDE_REL, SEPARATION_FACTOR};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        }
    }

    pub fn is_failure(self) -> bool {
        self == Verdict::Mismatch
    }
}

/// Both sides of one identity at one character (or pair of characters).
///
/// For `NOT_APPLICABLE` rows the right-hand side and residual are absent.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityAuditReport {
    pub p: u64,
    pub g: u64,
    pub k: u64,
    pub k2: Option<u64>,
    pub lhs: Complex64,
    pub rhs: Option<Complex64>,
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub verdict: Verdict,
}

impl IdentityAuditReport {
    fn judged(
        chi: MultChar<'_>,
        k2: Option<u64>,
        lhs: Complex64,
        rhs: Complex64,
        tol: f64,
    ) -> Self {
        let residual = (lhs - rhs).norm();
        let ok = residual.is_finite() && residual <= tol;
        IdentityAuditReport {
            p: chi.p(),
            g: chi.g(),
            k: chi.index(),
            k2,
            lhs,
            rhs: Some(rhs),
            residual: Some(residual),
            tolerance: tol,
            verdict: if ok {
                Verdict::Match
            } else {
                Verdict::Mismatch
            },
        }
    }

    fn not_applicable(chi: MultChar<'_>, k2: Option<u64>, lhs: Complex64) -> Self {
        IdentityAuditReport {
            p: chi.p(),
            g: chi.g(),
            k: chi.index(),
            k2,
            lhs,
            rhs: None,
            residual: None,
            tolerance: 0.0,
            verdict: Verdict::NotApplicable,
        }
    }
}

impl Serialize for IdentityAuditReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pair = |z: Complex64| [z.re, z.im];
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("p", &self.p)?;
        m.serialize_entry("g", &self.g)?;
        m.serialize_entry("k", &self.k)?;
        if let Some(k2) = self.k2 {
            m.serialize_entry("k2", &k2)?;
        }
        m.serialize_entry("lhs", &pair(self.lhs))?;
        m.serialize_entry("rhs", &self.rhs.map(pair))?;
        m.serialize_entry("residual", &self.residual)?;
        m.serialize_entry("verdict", &self.verdict)?;
        m.end()
    }
}

/// `(1 + χ(−1)) S(χ)` against `p χ(−1) Σ_{x≠0} χ(x)`. Holds for every `k`.
pub fn check_parity_identity(chi: MultChar<'_>) -> IdentityAuditReport {
    let at_minus_one = chi.eval(-1);
    let p = chi.p() as f64;
    let lhs = (Complex64::new(1.0, 0.0) + at_minus_one) * chi.first_moment();
    let rhs = at_minus_one * chi.sum_over_units() * p;
    IdentityAuditReport::judged(chi, None, lhs, rhs, audit_tolerance(lhs.norm(), rhs.norm()))
}

/// `J(χ, ψ)` against `G(χ) G(ψ) / G(χψ)`, applicable when `χ`, `ψ` and
/// `χψ` are all nontrivial.
pub fn check_jacobi_gauss(chi: MultChar<'_>, psi: MultChar<'_>) -> Result<IdentityAuditReport> {
    let j = jacobi_sum(chi, psi)?;
    let prod = chi.product(psi)?;
    let k2 = Some(psi.index());
    if chi.is_trivial() || psi.is_trivial() || prod.is_trivial() {
        return Ok(IdentityAuditReport::not_applicable(chi, k2, j));
    }
    let rhs = chi.gauss_sum() * psi.gauss_sum() / prod.gauss_sum();
    Ok(IdentityAuditReport::judged(
        chi,
        k2,
        j,
        rhs,
        audit_tolerance(j.norm(), rhs.norm()),
    ))
}

/// `|G(χ)|²` against `p` for nontrivial `χ`, at relative tolerance 1e-6.
pub fn check_gauss_magnitude(chi: MultChar<'_>) -> IdentityAuditReport {
    let lhs = Complex64::new(chi.gauss_sum().norm_sqr(), 0.0);
    if chi.is_trivial() {
        return IdentityAuditReport::not_applicable(chi, None, lhs);
    }
    let p = chi.p() as f64;
    IdentityAuditReport::judged(
        chi,
        None,
        lhs,
        Complex64::new(p, 0.0),
        GAUSS_MAGNITUDE_REL * p,
    )
}

/// The closed form offered for odd characters: `S(χ)` against
/// `−G(χ) G(χρ) / G(ρ)` with `ρ` the quadratic character.
///
/// This does not reproduce under direct summation (at p = 5, k = 1 the two
/// sides have moduli √10 and √5); callers should treat a mismatch as a
/// finding, not a bug.
pub fn audit_lemma_formula(chi: MultChar<'_>) -> IdentityAuditReport {
    let s = chi.first_moment();
    if chi.is_even() {
        return IdentityAuditReport::not_applicable(chi, None, s);
    }
    let rho = chi.table().quadratic();
    let chi_rho = chi.product(rho).expect("same table");
    let rhs = -(chi.gauss_sum() * chi_rho.gauss_sum()) / rho.gauss_sum();
    IdentityAuditReport::judged(chi, None, s, rhs, audit_tolerance(s.norm(), rhs.norm()))
}

/// Theoretical class of `S(χ_k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MomentClass {
    TrivialNonzero,
    EvenZero,
    OddNonzero,
}

impl MomentClass {
    pub fn of_index(k: u64) -> Self {
        if k == 0 {
            MomentClass::TrivialNonzero
        } else if k.is_multiple_of(2) {
            MomentClass::EvenZero
        } else {
            MomentClass::OddNonzero
        }
    }

    pub fn is_zero(self) -> bool {
        self == MomentClass::EvenZero
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MomentClass::TrivialNonzero => "TRIVIAL_NONZERO",
            MomentClass::EvenZero => "EVEN_ZERO",
            MomentClass::OddNonzero => "ODD_NONZERO",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifiedMoment {
    pub k: u64,
    pub value: Complex64,
    pub class: MomentClass,
    /// Whether `|value|` falls on the side of the zero tolerance the class predicts.
    pub consistent: bool,
}

/// `S(χ_k)` for every `k`, classified by parity and checked numerically.
#[derive(Debug, Clone, PartialEq)]
pub struct FirstMomentTable {
    pub p: u64,
    pub g: u64,
    pub zero_tolerance: f64,
    pub entries: Vec<ClassifiedMoment>,
}

impl FirstMomentTable {
    /// Entries whose class predicts a nonzero value; `(p+1)/2` by construction.
    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.class.is_zero()).count()
    }

    /// Entries whose magnitude actually exceeds the zero tolerance.
    pub fn numeric_nonzero_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.value.norm() > self.zero_tolerance)
            .count()
    }

    /// Indices whose numeric magnitude contradicts their class.
    pub fn contradictions(&self) -> Vec<u64> {
        self.entries
            .iter()
            .filter(|e| !e.consistent)
            .map(|e| e.k)
            .collect()
    }

    /// Smallest `|S(χ_k)|` over odd `k`.
    pub fn min_odd_magnitude(&self) -> f64 {
        self.entries
            .iter()
            .filter(|e| e.class == MomentClass::OddNonzero)
            .map(|e| e.value.norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest `|S(χ_k)|` over even `k ≠ 0`; zero when there are none.
    pub fn max_even_magnitude(&self) -> f64 {
        self.entries
            .iter()
            .filter(|e| e.class == MomentClass::EvenZero)
            .map(|e| e.value.norm())
            .fold(0.0, f64::max)
    }

    /// Odd moments clear the zero tolerance by the required margin.
    pub fn well_separated(&self) -> bool {
        self.min_odd_magnitude() > SEPARATION_FACTOR * self.zero_tolerance
    }

    pub fn is_consistent(&self) -> bool {
        self.contradictions().is_empty() && self.well_separated()
    }
}

pub fn classify_first_moments(table: &CharacterTable) -> FirstMomentTable {
    let tol = zero_tolerance(table.p());
    let entries = table
        .characters()
        .map(|chi| {
            let value = chi.first_moment();
            let class = MomentClass::of_index(chi.index());
            let consistent = class.is_zero() == (value.norm() <= tol);
            ClassifiedMoment {
                k: chi.index(),
                value,
                class,
                consistent,
            }
        })
        .collect();
    FirstMomentTable {
        p: table.p(),
        g: table.g(),
        zero_tolerance: tol,
        entries,
    }
}
