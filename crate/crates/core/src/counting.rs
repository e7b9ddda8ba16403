//! Exact prime counts per candidate class, the closed-form estimates for
//! the same counts, and the report that puts them side by side.
//!
//! The closed forms subtract a rule-solution estimate (index-bound
//! products, duplicates and all) from the candidate count `k`, so they
//! drift from the truth and even go negative as `k` grows. They are kept
//! verbatim as estimators; the report quantifies their signed deviation
//! against exact counts instead of pretending they agree.

use std::fmt;
use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::residue::CandidateClass;
use crate::selectors::{formula_selector_count, SelectorKind};
use crate::table::CompositeIndexTable;

/// How many candidates the first `s` generators of each rule family cut,
/// counted with multiplicity: `s^2` ordered A-by-B products for class A,
/// two unordered-with-repetition families totalling `s^2 + s` for class B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutCounts {
    pub s: u64,
    pub a_cuts: u64,
    pub b_cuts: u64,
}

/// Cut counts from the first `s` generators: `(s^2, s^2 + s)`.
pub fn cut_counts(s: u64) -> Result<CutCounts> {
    if s == 0 {
        return Err(Error::TooSmall {
            what: "s",
            min: 1,
            got: 0,
        });
    }
    let sq = s.checked_mul(s).ok_or(Error::Overflow { what: "s^2" })?;
    let b_cuts = sq.checked_add(s).ok_or(Error::Overflow { what: "s^2 + s" })?;
    Ok(CutCounts {
        s,
        a_cuts: sq,
        b_cuts,
    })
}

/// An exact nonnegative rational, always in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    /// Reduce `num / den`; `den` must be nonzero.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// The exact ratio of B cuts to A cuts from the first `s` generators:
/// `(s^2 + s) / s^2 = (s + 1) / s`, which tends to 1.
pub fn cut_ratio(s: u64) -> Result<Ratio> {
    if s == 0 {
        return Err(Error::TooSmall {
            what: "s",
            min: 1,
            got: 0,
        });
    }
    Ok(Ratio::new(s.saturating_add(1), s))
}

/// The closed-form estimate of how many candidates of `class` with wheel
/// index `<= k` are prime: `k` minus the rule-count formulas. Exact
/// integer arithmetic; the result goes negative once the estimate
/// overshoots.
pub fn formula_prime_count(class: CandidateClass, k: u64) -> i128 {
    let k = k as i128;
    match class {
        CandidateClass::A => k - formula_selector_count(SelectorKind::S1, k as u64) as i128,
        CandidateClass::B => {
            k - formula_selector_count(SelectorKind::S2, k as u64) as i128
                - formula_selector_count(SelectorKind::S3, k as u64) as i128
        }
    }
}

/// The exact number of wheel indices `k' <= k` whose candidate in `class`
/// no rule marks — equivalently, the count of primes `6k' -/+ 1`.
pub fn exact_prime_count(class: CandidateClass, k: u64) -> Result<u64> {
    let table = CompositeIndexTable::build(k)?;
    Ok(k - table.composite_count(class))
}

/// One row of the count report: both candidates at `k`, their table bits,
/// the running exact counts, the closed-form estimates and the signed
/// deviations `exact - estimate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountReportRow {
    pub k: u64,
    pub n_a: u64,
    pub a_composite: bool,
    pub n_b: u64,
    pub b_composite: bool,
    pub exact_a: u64,
    pub formula_a: i128,
    pub dev_a: i128,
    pub exact_b: u64,
    pub formula_b: i128,
    pub dev_b: i128,
    /// Running `exact_b / exact_a`, exact.
    pub ratio_ba: Ratio,
}

/// The full report for `k in 1..=kmax`.
pub fn count_report(kmax: u64) -> Result<Vec<CountReportRow>> {
    let table = CompositeIndexTable::build(kmax)?;
    let mut rows = Vec::with_capacity(kmax as usize);
    let mut exact_a = 0u64;
    let mut exact_b = 0u64;
    for k in 1..=kmax {
        let a_composite = table.is_composite(CandidateClass::A, k)?;
        let b_composite = table.is_composite(CandidateClass::B, k)?;
        exact_a += u64::from(!a_composite);
        exact_b += u64::from(!b_composite);
        let formula_a = formula_prime_count(CandidateClass::A, k);
        let formula_b = formula_prime_count(CandidateClass::B, k);
        rows.push(CountReportRow {
            k,
            n_a: 6 * k - 1,
            a_composite,
            n_b: 6 * k + 1,
            b_composite,
            exact_a,
            formula_a,
            dev_a: exact_a as i128 - formula_a,
            exact_b,
            formula_b,
            dev_b: exact_b as i128 - formula_b,
            // exact_a >= 1 from k = 1 on (5 is prime).
            ratio_ba: Ratio::new(exact_b, exact_a),
        });
    }
    Ok(rows)
}

/// Render a value with 12 significant digits in plain decimal notation.
fn format_sig12(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

/// CSV header of the count report.
pub const COUNT_REPORT_HEADER: &str =
    "k,n_A,a_composite,n_B,b_composite,exact_A,paper_A,dev_A,exact_B,paper_B,dev_B,ratio_BA";

/// Format one report row as its CSV line (no terminator).
pub fn count_report_csv_row(row: &CountReportRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        row.k,
        row.n_a,
        u8::from(row.a_composite),
        row.n_b,
        u8::from(row.b_composite),
        row.exact_a,
        row.formula_a,
        row.dev_a,
        row.exact_b,
        row.formula_b,
        row.dev_b,
        format_sig12(row.ratio_ba.to_f64()),
    )
}

/// Write the whole report as CSV: UTF-8, LF line endings, no trailing
/// comma.
pub fn write_count_report_csv<W: Write>(rows: &[CountReportRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{COUNT_REPORT_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", count_report_csv_row(row))?;
    }
    Ok(())
}
