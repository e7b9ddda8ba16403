use thiserror::Error;

/// Domain and range validation failures shared across the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument fell below the smallest value an operation accepts.
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: u64,
        got: u64,
    },

    /// `value_of` was asked for the unit 1, which has no wheel formula.
    #[error("the unit 1 has no (class, k) formula")]
    UnitHasNoFormula,

    /// A computation would leave the supported integer range.
    #[error("{what} exceeds the supported range (n is capped at 2^62)")]
    Overflow { what: &'static str },

    /// A sieve or table request is beyond the configured desk-scale ceiling.
    #[error("{what} {got} exceeds the supported ceiling {max}")]
    TooLarge {
        what: &'static str,
        got: u64,
        max: u64,
    },

    /// A lookup needed a wheel index the table does not cover. The caller
    /// must rebuild a larger table; there is no silent fallback.
    #[error("wheel index {k} is outside the table bound {kmax}; rebuild with a larger kmax")]
    OutOfTableRange { k: u64, kmax: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
