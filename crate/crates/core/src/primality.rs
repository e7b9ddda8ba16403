//! Two deterministic primality tests over the wheel representation.
//!
//! [`is_prime_naive`] settles a candidate by scanning a bounded block of
//! rule solutions for its wheel index: a hit is a compositeness
//! certificate, a clean sweep is a proof of primality. The scan walks the
//! whole block without shortcuts, so its cost grows quadratically in the
//! input — that growth is the point of keeping it around, and the bench
//! subcommand measures it.
//!
//! [`is_prime_table`] answers the same question with one bit read from a
//! prebuilt [`CompositeIndexTable`], after the two residue checks that
//! dispose of non-candidates.

use crate::error::{Error, Result};
use crate::selectors::{SelectorKind, SelectorWitness};
use crate::table::CompositeIndexTable;

/// The three possible answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Prime,
    Composite,
    Unit,
}

/// Why a number was judged composite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// A rule solution with the induced factor pair.
    Selector(SelectorWitness),
    /// The residue class alone forces the divisor 2 or 3.
    SmallDivisor(u64),
    /// A precomputed table marked the index; no factors materialised.
    SelectionRule,
}

/// A test outcome plus, for composites, its justification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl PrimalityVerdict {
    fn prime() -> Self {
        PrimalityVerdict {
            verdict: Verdict::Prime,
            witness: None,
        }
    }

    fn composite(witness: Witness) -> Self {
        PrimalityVerdict {
            verdict: Verdict::Composite,
            witness: Some(witness),
        }
    }

    pub fn is_prime(&self) -> bool {
        self.verdict == Verdict::Prime
    }

    /// A factor pair for `n` when the witness carries one.
    pub fn factors(&self, n: u64) -> Option<(u64, u64)> {
        match self.witness? {
            Witness::Selector(w) => Some((w.factor_lo, w.factor_hi)),
            Witness::SmallDivisor(d) => Some((d, n / d)),
            Witness::SelectionRule => None,
        }
    }
}

fn reject_below_two(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::TooSmall {
            what: "n",
            min: 2,
            got: n,
        });
    }
    Ok(())
}

/// Dispatch on `n mod 6`; `None` means `n` is a candidate and carries the
/// class-specific scan to run.
enum Residue {
    ClassA { k: u64 },
    ClassB { k: u64 },
    Divisible(u64),
}

fn residue_of(n: u64) -> Residue {
    match n % 6 {
        5 => Residue::ClassA { k: (n + 1) / 6 },
        1 => Residue::ClassB { k: (n - 1) / 6 },
        3 => Residue::Divisible(3),
        _ => Residue::Divisible(2),
    }
}

/// Bounded-scan primality test.
///
/// For `n = 6k - 1` the scan covers the rectangle `r in 0..=(k-6)/5`,
/// `s in 0..=(k-6)/7` of the shifted S1 form `6 + 7s + (5 + 6s)r`. For
/// `n = 6k + 1` it covers the `l >= m` triangle of the shifted S3 form
/// `4 + 5m + (5 + 6m)l` with `l <= (k-4)/5`, then the `c >= d` triangle
/// of the shifted S2 form `8 + 7d + (7 + 6d)c` with `c <= (k-8)/7` (the
/// rules are symmetric, so half of each grid suffices). Any solution
/// equal to `k` proves `n` composite; only a completed scan answers
/// prime. Empty ranges (small `k`) mean no solution can exist.
pub fn is_prime_naive(n: u64) -> Result<PrimalityVerdict> {
    reject_below_two(n)?;
    if n == 2 || n == 3 {
        return Ok(PrimalityVerdict::prime());
    }
    Ok(match residue_of(n) {
        Residue::ClassA { k } => scan_class_a(k),
        Residue::ClassB { k } => scan_class_b(k),
        Residue::Divisible(d) => PrimalityVerdict::composite(Witness::SmallDivisor(d)),
    })
}

fn scan_class_a(k: u64) -> PrimalityVerdict {
    if k < 6 {
        return PrimalityVerdict::prime();
    }
    let r_max = (k - 6) / 5;
    let s_max = (k - 6) / 7;
    for s in 0..=s_max {
        for r in 0..=r_max {
            // 6 + 7s + (5 + 6s)r, saturating: real hits never overflow.
            let v = (5u64.saturating_add(6u64.saturating_mul(s)))
                .saturating_mul(r)
                .saturating_add(7u64.saturating_mul(s))
                .saturating_add(6);
            if v == k {
                let w = SelectorWitness::new(SelectorKind::S1, r + 1, s + 1)
                    .expect("hit stays in range");
                return PrimalityVerdict::composite(Witness::Selector(w));
            }
        }
    }
    PrimalityVerdict::prime()
}

fn scan_class_b(k: u64) -> PrimalityVerdict {
    // First triangle: S3 in shifted coordinates (l, m).
    if k >= 4 {
        let l_max = (k - 4) / 5;
        let m_max = l_max + 1;
        for m in 0..=m_max {
            for l in m..=l_max {
                let v = (5u64.saturating_add(6u64.saturating_mul(m)))
                    .saturating_mul(l)
                    .saturating_add(5u64.saturating_mul(m))
                    .saturating_add(4);
                if v == k {
                    let w = SelectorWitness::new(SelectorKind::S3, l + 1, m + 1)
                        .expect("hit stays in range");
                    return PrimalityVerdict::composite(Witness::Selector(w));
                }
            }
        }
    }
    // Second triangle: S2 in shifted coordinates (c, d).
    if k >= 8 {
        let c_max = (k - 8) / 7;
        let d_max = c_max + 1;
        for d in 0..=d_max {
            for c in d..=c_max {
                let v = (7u64.saturating_add(6u64.saturating_mul(d)))
                    .saturating_mul(c)
                    .saturating_add(7u64.saturating_mul(d))
                    .saturating_add(8);
                if v == k {
                    let w = SelectorWitness::new(SelectorKind::S2, c + 1, d + 1)
                        .expect("hit stays in range");
                    return PrimalityVerdict::composite(Witness::Selector(w));
                }
            }
        }
    }
    PrimalityVerdict::prime()
}

/// Table-lookup primality test: two residue checks and one bit read.
///
/// Errors with [`Error::OutOfTableRange`] when the candidate's wheel
/// index is beyond `table.kmax()`; the caller must rebuild a larger
/// table, there is no fallback scan.
pub fn is_prime_table(n: u64, table: &CompositeIndexTable) -> Result<PrimalityVerdict> {
    reject_below_two(n)?;
    if n == 2 || n == 3 {
        return Ok(PrimalityVerdict::prime());
    }
    let (class, k) = match residue_of(n) {
        Residue::ClassA { k } => (crate::residue::CandidateClass::A, k),
        Residue::ClassB { k } => (crate::residue::CandidateClass::B, k),
        Residue::Divisible(d) => {
            return Ok(PrimalityVerdict::composite(Witness::SmallDivisor(d)))
        }
    };
    if table.is_composite(class, k)? {
        Ok(PrimalityVerdict::composite(Witness::SelectionRule))
    } else {
        Ok(PrimalityVerdict::prime())
    }
}
