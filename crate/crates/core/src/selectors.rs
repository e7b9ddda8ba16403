//! The three quadratic selection rules that pick out every composite
//! wheel index in the candidate classes.
//!
//! A product of two candidates lands back in a candidate class, and the
//! wheel index of the product is a quadratic form in the factor indices:
//!
//! * `S1(i, j) = 6ij - i + j` marks class A: `(6i + 1)(6j - 1) = 6 S1 - 1`.
//! * `S2(i, j) = 6ij + i + j` marks class B: `(6i + 1)(6j + 1) = 6 S2 + 1`.
//! * `S3(i, j) = 6ij - i - j` marks class B: `(6i - 1)(6j - 1) = 6 S3 + 1`.
//!
//! Conversely, any nontrivial factorisation of a candidate splits into one
//! of these shapes, so a candidate is composite exactly when its wheel
//! index is hit by the matching rule(s). A hit, packaged as a
//! [`SelectorWitness`], is a checkable certificate of compositeness.
//!
//! S2 and S3 are symmetric in `(i, j)`; witnesses and enumerations use the
//! canonical order `i <= j` for those kinds.

use crate::error::{Error, Result};
use crate::residue::{CandidateClass, MAX_WHEEL_INDEX};

/// Which of the three selection rules produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SelectorKind {
    S1,
    S2,
    S3,
}

impl SelectorKind {
    pub const ALL: [SelectorKind; 3] = [SelectorKind::S1, SelectorKind::S2, SelectorKind::S3];

    /// The candidate class whose indices this rule marks.
    pub fn target(self) -> CandidateClass {
        match self {
            SelectorKind::S1 => CandidateClass::A,
            SelectorKind::S2 | SelectorKind::S3 => CandidateClass::B,
        }
    }
}

impl std::fmt::Display for SelectorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SelectorKind::S1 => "S1",
            SelectorKind::S2 => "S2",
            SelectorKind::S3 => "S3",
        })
    }
}

/// A concrete `(rule, i, j)` solution certifying a wheel index composite,
/// together with the factorisation it induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectorWitness {
    pub kind: SelectorKind,
    pub i: u64,
    pub j: u64,
    /// The wheel index the rule hits: `selector_value(kind, i, j)`.
    pub k: u64,
    pub factor_lo: u64,
    pub factor_hi: u64,
}

impl SelectorWitness {
    /// Build a witness from a rule solution, deriving `k` and the factor
    /// pair. Fails on `i = 0`, `j = 0` or values outside the 64-bit range.
    pub fn new(kind: SelectorKind, i: u64, j: u64) -> Result<Self> {
        let k = selector_value(kind, i, j)?;
        let (a, b) = match kind {
            SelectorKind::S1 => (6 * i + 1, 6 * j - 1),
            SelectorKind::S2 => (6 * i + 1, 6 * j + 1),
            SelectorKind::S3 => (6 * i - 1, 6 * j - 1),
        };
        let (factor_lo, factor_hi) = if a <= b { (a, b) } else { (b, a) };
        Ok(SelectorWitness {
            kind,
            i,
            j,
            k,
            factor_lo,
            factor_hi,
        })
    }

    /// The composite number this witness factors: `6k - 1` or `6k + 1`.
    pub fn witnessed_value(&self) -> u64 {
        self.factor_lo * self.factor_hi
    }

    /// The candidate class the witnessed number belongs to.
    pub fn class(&self) -> CandidateClass {
        self.kind.target()
    }
}

/// Evaluate a rule at `i, j >= 1`, returning the wheel index it marks.
pub fn selector_value(kind: SelectorKind, i: u64, j: u64) -> Result<u64> {
    if i == 0 {
        return Err(Error::TooSmall {
            what: "i",
            min: 1,
            got: 0,
        });
    }
    if j == 0 {
        return Err(Error::TooSmall {
            what: "j",
            min: 1,
            got: 0,
        });
    }
    let overflow = Error::Overflow {
        what: "selector value",
    };
    let six_ij = (i as u128)
        .checked_mul(j as u128)
        .and_then(|ij| ij.checked_mul(6))
        .ok_or(overflow)?;
    let v = match kind {
        SelectorKind::S1 => (six_ij - i as u128)
            .checked_add(j as u128)
            .ok_or(overflow)?,
        SelectorKind::S2 => six_ij
            .checked_add(i as u128 + j as u128)
            .ok_or(overflow)?,
        SelectorKind::S3 => six_ij - i as u128 - j as u128,
    };
    u64::try_from(v).map_err(|_| overflow)
}

/// Evaluate a rule in the shifted coordinates `r = i - 1`, `s = j - 1`
/// (both allowed to be 0); equals `selector_value(kind, r + 1, s + 1)`.
///
/// These are the affine forms the bounded primality scan iterates:
/// `6 + 7s + (5 + 6s)r`, `8 + 7s + (7 + 6s)r` and `4 + 5s + (5 + 6s)r`.
pub fn selector_value_shifted(kind: SelectorKind, r: u64, s: u64) -> Result<u64> {
    let (r, s) = (r as u128, s as u128);
    let v = match kind {
        SelectorKind::S1 => 6 + 7 * s + (5 + 6 * s) * r,
        SelectorKind::S2 => 8 + 7 * s + (7 + 6 * s) * r,
        SelectorKind::S3 => 4 + 5 * s + (5 + 6 * s) * r,
    };
    u64::try_from(v).map_err(|_| Error::Overflow {
        what: "selector value",
    })
}

/// Search for a certificate that the candidate at wheel index `k` is
/// composite: S1 solutions for class A, S3 then S2 solutions for class B.
///
/// Returns the witness with the smallest low factor, or `None` when no
/// rule hits `k` — which, for candidates, means the number is prime.
/// Every solution pairs a factor with its cofactor, so each index loop
/// stops as soon as its factor passes the square root of the candidate;
/// by monotonicity no later index can still hit `k`.
pub fn find_composite_witness(class: CandidateClass, k: u64) -> Option<SelectorWitness> {
    assert!(
        k >= 1 && k <= MAX_WHEEL_INDEX,
        "wheel index {k} outside supported range"
    );
    let n = class.value(k);
    let mut best: Option<SelectorWitness> = None;
    let mut consider = |kind: SelectorKind, i: u64, j: u64| {
        let w = SelectorWitness::new(kind, i, j).expect("in-range solution");
        debug_assert_eq!(w.k, k);
        if best.map_or(true, |b| w.factor_lo < b.factor_lo) {
            best = Some(w);
        }
    };

    match class {
        CandidateClass::A => {
            // k = 6ij - i + j  <=>  k + i = j(6i + 1)  <=>  k - j = i(6j - 1)
            let mut i = 1u64;
            while (6 * i + 1) * (6 * i + 1) <= n {
                let d = 6 * i + 1;
                if (k + i) % d == 0 {
                    let j = (k + i) / d;
                    if j >= 1 {
                        consider(SelectorKind::S1, i, j);
                    }
                }
                i += 1;
            }
            let mut j = 1u64;
            while (6 * j - 1) * (6 * j - 1) <= n {
                let d = 6 * j - 1;
                if k >= j && (k - j) % d == 0 {
                    let i = (k - j) / d;
                    if i >= 1 {
                        consider(SelectorKind::S1, i, j);
                    }
                }
                j += 1;
            }
        }
        CandidateClass::B => {
            // S3: k = 6ij - i - j  <=>  k + i = j(6i - 1), canonical i <= j
            let mut i = 1u64;
            while (6 * i - 1) * (6 * i - 1) <= n {
                let d = 6 * i - 1;
                if (k + i) % d == 0 {
                    let j = (k + i) / d;
                    if j >= i {
                        consider(SelectorKind::S3, i, j);
                    }
                }
                i += 1;
            }
            // S2: k = 6ij + i + j  <=>  k - i = j(6i + 1), canonical i <= j
            let mut i = 1u64;
            while (6 * i + 1) * (6 * i + 1) <= n {
                let d = 6 * i + 1;
                if k >= i && (k - i) % d == 0 {
                    let j = (k - i) / d;
                    if j >= i {
                        consider(SelectorKind::S2, i, j);
                    }
                }
                i += 1;
            }
        }
    }
    best
}

/// A single `(i, j)` solution of a rule, with the wheel index it marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectorSolution {
    pub i: u64,
    pub j: u64,
    pub k: u64,
}

/// Visit every rule solution with value `<= kmax`.
///
/// S1 walks the full `(i, j)` grid; S2 and S3 walk only `j >= i` since
/// swapped pairs repeat the same value. Each inner walk stops as soon as
/// the value passes `kmax` (the rules are strictly increasing in each
/// index), and the outer walk stops when even the smallest value for the
/// current `i` is already too big.
fn for_each_solution(kind: SelectorKind, kmax: u64, mut f: impl FnMut(u64, u64, u64)) {
    let bound = kmax as u128;
    let mut i = 1u64;
    loop {
        let iu = i as u128;
        // Smallest value in row i, the per-step increase along j, and the
        // j that smallest value belongs to.
        let (start, step, j0) = match kind {
            // S1(i, 1) = 5i + 1
            SelectorKind::S1 => (5 * iu + 1, 6 * iu + 1, 1),
            // S2(i, i) = 6i^2 + 2i
            SelectorKind::S2 => (6 * iu * iu + 2 * iu, 6 * iu + 1, i),
            // S3(i, i) = 6i^2 - 2i
            SelectorKind::S3 => (6 * iu * iu - 2 * iu, 6 * iu - 1, i),
        };
        if start > bound {
            break;
        }
        let mut v = start;
        let mut j = j0;
        while v <= bound {
            f(i, j, v as u64);
            v += step;
            j += 1;
        }
        i += 1;
    }
}

/// All wheel indices `<= kmax` a rule can produce, ascending and without
/// duplicates. These are exactly the composite indices of the rule's
/// target class that the rule accounts for.
pub fn enumerate_selector_indices(kind: SelectorKind, kmax: u64) -> Vec<u64> {
    let mut ks = Vec::new();
    for_each_solution(kind, kmax, |_, _, v| ks.push(v));
    ks.sort_unstable();
    ks.dedup();
    ks
}

/// Every `(i, j)` solution with value `<= kmax`, sorted by `(k, i, j)`.
/// Keeps duplicate hits on the same `k` (distinct factorisations).
pub fn selector_solutions(kind: SelectorKind, kmax: u64) -> Vec<SelectorSolution> {
    let mut out = Vec::new();
    for_each_solution(kind, kmax, |i, j, k| out.push(SelectorSolution { i, j, k }));
    out.sort_unstable_by_key(|s| (s.k, s.i, s.j));
    out
}

/// The closed-form index bounds `(i_max, j_max)` for solutions up to `k`,
/// evaluated exactly as stated:
///
/// * S1: `(floor((k-1)/5), floor((k+1)/7))`
/// * S2: `(floor((k-1)/7), ceil((k-1)/7))`
/// * S3: `(floor((k+1)/5), ceil((k+1)/5))`
///
/// These are estimators used by the counting formulas, not tight bounds;
/// nothing correctness-critical loops over them.
pub fn formula_index_bounds(kind: SelectorKind, k: u64) -> (u64, u64) {
    let km1 = k.saturating_sub(1);
    match kind {
        SelectorKind::S1 => (km1 / 5, ((k as u128 + 1) / 7) as u64),
        SelectorKind::S2 => (km1 / 7, km1.div_ceil(7)),
        SelectorKind::S3 => (
            ((k as u128 + 1) / 5) as u64,
            ((k as u128 + 1).div_ceil(5)) as u64,
        ),
    }
}

/// The closed-form solution count up to `k`: the plain product of the
/// [`formula_index_bounds`] pair, counting duplicates and out-of-range
/// pairs just as the bounds imply.
pub fn formula_selector_count(kind: SelectorKind, k: u64) -> u128 {
    let (imax, jmax) = formula_index_bounds(kind, k);
    imax as u128 * jmax as u128
}
