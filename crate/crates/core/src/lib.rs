//! A prime engine built on the wheel-6 representation of the naturals.
//!
//! Numbers sort into six arithmetic progressions plus the unit; only the
//! two progressions `6k - 1` (class A) and `6k + 1` (class B) can hold
//! primes past 2 and 3. Three quadratic selection rules mark exactly the
//! composite wheel indices in those classes, which yields:
//!
//! * [`residue`] — the partition itself: classify, reconstruct, and read
//!   off what a class already decides about primality;
//! * [`selectors`] — the rules, compositeness witnesses with explicit
//!   factors, rule-image enumeration, and the closed-form estimates of
//!   rule counts;
//! * [`primality`] — a bounded-scan test (quadratic, self-contained) and
//!   a constant-time lookup against a precomputed table;
//! * [`table`] — the composite-index bitmaps and their cache-file codec;
//! * [`sieve`] — full prime generation through the wheel;
//! * [`counting`] — exact per-class prime counts versus the closed-form
//!   estimates, with signed deviations;
//! * [`oracle`] — an independent classical sieve and trial division that
//!   the test suites check everything against.
//!
//! The companion guide in `book/` walks through each concept; its code
//! blocks compile and run as doctests of this crate.

pub mod counting;
pub mod error;
pub mod oracle;
pub mod primality;
pub mod residue;
pub mod selectors;
pub mod sieve;
pub mod table;

pub use error::Error;
pub use primality::{is_prime_naive, is_prime_table, PrimalityVerdict, Verdict, Witness};
pub use residue::{
    classify, trivial_status, value_of, CandidateClass, ClassifiedNumber, ResidueClass,
    TrivialStatus, MAX_N, MAX_WHEEL_INDEX,
};
pub use selectors::{
    enumerate_selector_indices, find_composite_witness, formula_index_bounds,
    formula_selector_count, selector_solutions, selector_value, selector_value_shifted,
    SelectorKind, SelectorSolution, SelectorWitness,
};
pub use sieve::{primes_up_to, PrimeList, MAX_SIEVE_LIMIT};
pub use table::{CodecError, CompositeIndexTable, MAX_TABLE_KMAX};

#[cfg(doctest)]
mod book {
    //! Runs every code block in the guide as a doctest.
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(ResidueClasses, "../../../book/src/residue-classes.md");
    chapter!(SelectionRules, "../../../book/src/selection-rules.md");
    chapter!(Primality, "../../../book/src/primality-testing.md");
    chapter!(Sieving, "../../../book/src/sieving.md");
    chapter!(Counting, "../../../book/src/counting.md");
    chapter!(TableFormat, "../../../book/src/table-format.md");
    chapter!(Cli, "../../../book/src/cli.md");
}
