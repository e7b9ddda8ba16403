//! The wheel-6 partition of the naturals.
//!
//! Every `n >= 2` lands in exactly one of six arithmetic progressions
//! indexed by a wheel index `k >= 1`:
//!
//! | class | formula  | first values      |
//! |-------|----------|-------------------|
//! | TWO   | `6k - 4` | 2, 8, 14, 20, ... |
//! | THREE | `6k - 3` | 3, 9, 15, 21, ... |
//! | FOUR  | `6k - 2` | 4, 10, 16, ...    |
//! | A     | `6k - 1` | 5, 11, 17, ...    |
//! | SIX   | `6k`     | 6, 12, 18, ...    |
//! | B     | `6k + 1` | 7, 13, 19, ...    |
//!
//! `n = 1` stands alone as the unit. Only A and B can contain primes
//! beyond the two exceptions 2 and 3: everything in TWO, FOUR and SIX is
//! even, and everything in THREE is an odd multiple of 3.

use crate::error::{Error, Result};

/// Largest `n` the library accepts. Keeps `6k + 1` and every selector
/// factor product representable in unsigned 64-bit arithmetic.
pub const MAX_N: u64 = 1 << 62;

/// Largest wheel index with `6k + 1 <= MAX_N`.
pub const MAX_WHEEL_INDEX: u64 = (MAX_N - 1) / 6;

/// One of the seven classes in the canonical decomposition of the naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidueClass {
    /// `n = 1` only.
    Unit,
    /// `6k - 4`
    Two,
    /// `6k - 3`
    Three,
    /// `6k - 2`
    Four,
    /// `6k - 1`, prime candidates
    A,
    /// `6k`
    Six,
    /// `6k + 1` with `n >= 7`, prime candidates
    B,
}

impl ResidueClass {
    /// Canonical upper-case name, as printed by the CLI.
    pub fn name(self) -> &'static str {
        match self {
            ResidueClass::Unit => "UNIT",
            ResidueClass::Two => "TWO",
            ResidueClass::Three => "THREE",
            ResidueClass::Four => "FOUR",
            ResidueClass::A => "A",
            ResidueClass::Six => "SIX",
            ResidueClass::B => "B",
        }
    }
}

impl std::fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The two classes that can hold primes greater than 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CandidateClass {
    /// `6k - 1`
    A,
    /// `6k + 1`
    B,
}

impl CandidateClass {
    pub fn residue_class(self) -> ResidueClass {
        match self {
            CandidateClass::A => ResidueClass::A,
            CandidateClass::B => ResidueClass::B,
        }
    }

    /// Candidate value at wheel index `k`: `6k - 1` for A, `6k + 1` for B.
    ///
    /// Callers must keep `k` within [`MAX_WHEEL_INDEX`]; use [`value_of`]
    /// for checked construction.
    pub fn value(self, k: u64) -> u64 {
        debug_assert!(k >= 1 && k <= MAX_WHEEL_INDEX);
        match self {
            CandidateClass::A => 6 * k - 1,
            CandidateClass::B => 6 * k + 1,
        }
    }
}

impl std::fmt::Display for CandidateClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.residue_class().name())
    }
}

/// A natural number together with its class and wheel index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifiedNumber {
    pub n: u64,
    pub class: ResidueClass,
    /// Wheel index; `None` exactly for the unit.
    pub k: Option<u64>,
}

impl ClassifiedNumber {
    /// What the class alone says about primality of this number.
    pub fn trivial_status(&self) -> TrivialStatus {
        // (class, k) pairs built by `classify` are always valid.
        trivial_status(self.class, self.k.unwrap_or(0)).expect("classified pair is valid")
    }
}

/// What membership in a class decides about primality before any
/// selector runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialStatus {
    /// The one prime its class admits: 2 = 6*1 - 4 or 3 = 6*1 - 3.
    PrimeException,
    /// Composite by the class formula alone (even, or an odd multiple of 3).
    AlwaysComposite,
    /// Class A or B: primality requires a selector check.
    Candidate,
    /// n = 1, neither prime nor composite.
    Unit,
}

/// Decompose `n >= 1` into its unique (class, wheel index) pair.
///
/// `n = 1` is the unit and carries no index. Numbers `n ≡ 1 (mod 6)`
/// with `n >= 7` classify as B with `k = (n - 1) / 6`.
pub fn classify(n: u64) -> Result<ClassifiedNumber> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "n",
            min: 1,
            got: 0,
        });
    }
    if n > MAX_N {
        return Err(Error::Overflow { what: "n" });
    }
    if n == 1 {
        return Ok(ClassifiedNumber {
            n,
            class: ResidueClass::Unit,
            k: None,
        });
    }
    let (class, k) = match n % 6 {
        0 => (ResidueClass::Six, n / 6),
        1 => (ResidueClass::B, (n - 1) / 6),
        2 => (ResidueClass::Two, (n + 4) / 6),
        3 => (ResidueClass::Three, (n + 3) / 6),
        4 => (ResidueClass::Four, (n + 2) / 6),
        5 => (ResidueClass::A, (n + 1) / 6),
        _ => unreachable!(),
    };
    Ok(ClassifiedNumber {
        n,
        class,
        k: Some(k),
    })
}

/// Evaluate the class formula at wheel index `k >= 1`.
///
/// Inverse of [`classify`] on everything except the unit.
pub fn value_of(class: ResidueClass, k: u64) -> Result<u64> {
    if class == ResidueClass::Unit {
        return Err(Error::UnitHasNoFormula);
    }
    if k == 0 {
        return Err(Error::TooSmall {
            what: "k",
            min: 1,
            got: 0,
        });
    }
    let six_k = k.checked_mul(6).ok_or(Error::Overflow { what: "6k" })?;
    let n = match class {
        ResidueClass::Two => six_k - 4,
        ResidueClass::Three => six_k - 3,
        ResidueClass::Four => six_k - 2,
        ResidueClass::A => six_k - 1,
        ResidueClass::Six => six_k,
        ResidueClass::B => six_k.checked_add(1).ok_or(Error::Overflow { what: "6k + 1" })?,
        ResidueClass::Unit => unreachable!(),
    };
    if n > MAX_N {
        return Err(Error::Overflow { what: "value" });
    }
    Ok(n)
}

/// What the class alone decides for the number at `(class, k)`.
///
/// TWO and THREE keep their first element (2 and 3) as the only primes;
/// FOUR and SIX never contain primes; A and B stay candidates.
pub fn trivial_status(class: ResidueClass, k: u64) -> Result<TrivialStatus> {
    if class == ResidueClass::Unit {
        return Ok(TrivialStatus::Unit);
    }
    if k == 0 {
        return Err(Error::TooSmall {
            what: "k",
            min: 1,
            got: 0,
        });
    }
    Ok(match class {
        ResidueClass::Two | ResidueClass::Three if k == 1 => TrivialStatus::PrimeException,
        ResidueClass::Two | ResidueClass::Three | ResidueClass::Four | ResidueClass::Six => {
            TrivialStatus::AlwaysComposite
        }
        ResidueClass::A | ResidueClass::B => TrivialStatus::Candidate,
        ResidueClass::Unit => unreachable!(),
    })
}
