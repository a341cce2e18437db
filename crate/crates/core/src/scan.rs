//! Batch verification over all odd primes up to a bound.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{odd_primes_up_to, OddPrime, PrimitiveRoot};
use crate::characters::{audit_lemma_formula, classify_first_moments, CharacterTable, Verdict};
use crate::circulant::crosscheck_spectrum;
use crate::duality::{check_snf_conjecture, rank_duality, RankRoute, RANK_MAX_P, SNF_MAX_P};
use crate::error::{Error, Result};
use crate::linalg::InvariantFactors;
use crate::tolerance::spectrum_crosscheck_tolerance;

/// Which optional checks a scan runs. Ranks are always computed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanChecks {
    pub snf: bool,
    pub spectrum: bool,
    pub lemma: bool,
}

impl FromStr for ScanChecks {
    type Err = String;

    /// Comma-separated subset of `rank,snf,spectrum,lemma`.
    fn from_str(s: &str) -> Result<Self, String> {
        let mut checks = ScanChecks::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "rank" => {}
                "snf" => checks.snf = true,
                "spectrum" => checks.spectrum = true,
                "lemma" => checks.lemma = true,
                other => return Err(format!("unknown check '{other}'")),
            }
        }
        Ok(checks)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ScanStatus {
    Ok,
    Deviation,
}

impl ScanStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ScanStatus::Ok => "OK",
            ScanStatus::Deviation => "DEVIATION",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaVerdict {
    pub k: u64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumCheck {
    pub nonzero_count: usize,
    pub crosscheck_deviation: f64,
    pub classification_consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub p: u64,
    pub g: u64,
    pub rank_real: usize,
    pub rank_real_expected: usize,
    pub rank_mod_p: usize,
    pub rank_route: RankRoute,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub snf_diagonal: Option<InvariantFactors>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub snf_conjecture_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumCheck>,
    /// Reported only; never affects `status`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma_audit_verdicts: Option<Vec<LemmaVerdict>>,
    pub status: ScanStatus,
}

impl ScanRow {
    fn settle(mut self) -> Self {
        let rank_ok = self.rank_real == self.rank_real_expected && self.rank_mod_p == 1;
        let snf_ok = self.snf_conjecture_holds.unwrap_or(true);
        let spectrum_ok = self.spectrum.as_ref().is_none_or(|s| {
            s.nonzero_count == self.rank_real_expected
                && s.classification_consistent
                && s.crosscheck_deviation <= spectrum_crosscheck_tolerance(self.p)
        });
        self.status = if rank_ok && snf_ok && spectrum_ok {
            ScanStatus::Ok
        } else {
            ScanStatus::Deviation
        };
        self
    }
}

/// All checks for one prime with the smallest primitive root.
pub fn scan_prime(p: OddPrime, checks: ScanChecks) -> Result<ScanRow> {
    let root = PrimitiveRoot::smallest(p);
    let duality = rank_duality(root)?;
    let mut row = ScanRow {
        p: p.get(),
        g: root.g(),
        rank_real: duality.rank_real,
        rank_real_expected: duality.expected_rank_real,
        rank_mod_p: duality.rank_mod_p,
        rank_route: duality.route,
        snf_diagonal: None,
        snf_conjecture_holds: None,
        spectrum: None,
        lemma_audit_verdicts: None,
        status: ScanStatus::Ok,
    };
    if checks.snf {
        let snf = check_snf_conjecture(root)?;
        row.snf_conjecture_holds = Some(snf.holds);
        row.snf_diagonal = Some(snf.diagonal);
    }
    if checks.spectrum || checks.lemma {
        let table = CharacterTable::new(root);
        if checks.spectrum {
            let moments = classify_first_moments(&table);
            row.spectrum = Some(SpectrumCheck {
                nonzero_count: moments.numeric_nonzero_count(),
                crosscheck_deviation: crosscheck_spectrum(root),
                classification_consistent: moments.is_consistent(),
            });
        }
        if checks.lemma {
            row.lemma_audit_verdicts = Some(
                table
                    .characters()
                    .filter(|chi| !chi.is_even())
                    .map(|chi| LemmaVerdict {
                        k: chi.index(),
                        verdict: audit_lemma_formula(chi).verdict,
                    })
                    .collect(),
            );
        }
    }
    Ok(row.settle())
}

/// One row per odd prime `≤ max_p`, ascending, computed in parallel.
pub fn scan(max_p: u64, checks: ScanChecks) -> Result<Vec<ScanRow>> {
    if max_p > RANK_MAX_P {
        return Err(Error::OutOfRange {
            p: max_p,
            what: "rank scan",
            max: RANK_MAX_P,
        });
    }
    if checks.snf && max_p > SNF_MAX_P {
        return Err(Error::OutOfRange {
            p: max_p,
            what: "Smith normal form",
            max: SNF_MAX_P,
        });
    }
    odd_primes_up_to(max_p)
        .into_par_iter()
        .map(|p| scan_prime(p, checks))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub rows: usize,
    pub ok: usize,
    pub deviation: usize,
}

pub fn summarize(rows: &[ScanRow]) -> ScanSummary {
    let ok = rows.iter().filter(|r| r.status == ScanStatus::Ok).count();
    ScanSummary {
        rows: rows.len(),
        ok,
        deviation: rows.len() - ok,
    }
}

pub const CSV_HEADER: &str =
    "p,g,rank_real,rank_real_expected,rank_mod_p,snf_diagonal,snf_conjecture_holds,status";

/// Fixed-column CSV with a header row; SNF cells are empty when not computed.
pub fn to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let snf = r
            .snf_diagonal
            .as_ref()
            .map(|d| {
                d.diagonal()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        let holds = r
            .snf_conjecture_holds
            .map(|h| h.to_string())
            .unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.p,
            r.g,
            r.rank_real,
            r.rank_real_expected,
            r.rank_mod_p,
            snf,
            holds,
            r.status.as_str()
        )
        .expect("write to String");
    }
    out
}

/// Formats a float with 12 significant digits.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{x:.11e}");
    let magnitude: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("exponent");
    if (-4..12).contains(&magnitude) {
        let decimals = (11 - magnitude) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_checks() {
        assert_eq!("rank".parse::<ScanChecks>().unwrap(), ScanChecks::default());
        let c: ScanChecks = "rank,snf,lemma".parse().unwrap();
        assert!(c.snf && c.lemma && !c.spectrum);
        assert!("rank,bogus".parse::<ScanChecks>().is_err());
    }

    #[test]
    fn scan_to_eleven() {
        let rows = scan(11, "rank,snf".parse().unwrap()).unwrap();
        let ps: Vec<u64> = rows.iter().map(|r| r.p).collect();
        assert_eq!(ps, vec![3, 5, 7, 11]);
        assert!(rows.iter().all(|r| r.status == ScanStatus::Ok));
        let csv = to_csv(&rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[1], "3,2,2,2,1,1;3,true,OK");
        assert_eq!(lines[2], "5,2,3,3,1,1;5;5;0,true,OK");
        assert_eq!(lines[4], "11,2,6,6,1,1;11;11;11;11;11;0;0;0;0,true,OK");
        assert!(csv.ends_with('\n'));
    }

    #[test]
    fn deviation_detection() {
        let mut row = scan_prime(OddPrime::new(7).unwrap(), ScanChecks::default()).unwrap();
        assert_eq!(row.status, ScanStatus::Ok);
        row.rank_mod_p = 2;
        assert_eq!(row.settle().status, ScanStatus::Deviation);
    }

    #[test]
    fn lemma_verdicts_do_not_affect_status() {
        let checks = ScanChecks {
            lemma: true,
            spectrum: true,
            ..Default::default()
        };
        let row = scan_prime(OddPrime::new(5).unwrap(), checks).unwrap();
        let v = row.lemma_audit_verdicts.as_ref().unwrap();
        assert_eq!(v.iter().map(|l| l.k).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(v[0].verdict, Verdict::Mismatch);
        assert_eq!(row.status, ScanStatus::Ok);
    }

    #[test]
    fn range_limits() {
        assert!(scan(10_001, ScanChecks::default()).is_err());
        assert!(scan(211, "snf".parse().unwrap()).is_err());
    }

    #[test]
    fn sig12() {
        assert_eq!(format_sig12(10.0), "10.0000000000");
        assert_eq!(format_sig12(3.1622776601683795), "3.16227766017");
        assert_eq!(format_sig12(-0.5), "-0.500000000000");
        assert_eq!(format_sig12(0.0), "0");
        assert_eq!(format_sig12(1.5e-10), "1.50000000000e-10");
        assert_eq!(format_sig12(-0.9999999999999998), "-1.00000000000");
        assert_eq!(format_sig12(999999999999.9), "1.00000000000e12");
    }
}
