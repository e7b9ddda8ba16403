//! Classical reference implementations: a plain sieve of Eratosthenes and
//! trial division.
//!
//! Everything the wheel machinery claims is checked against this module in
//! the test suites, so it deliberately shares no helper code with the
//! selector-based paths and is written for obviousness, not speed.

use crate::error::{Error, Result};
use crate::primality::Verdict;
use crate::sieve::{PrimeList, MAX_SIEVE_LIMIT};

/// A trial-division answer, with the smallest factor when composite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleVerdict {
    pub verdict: Verdict,
    /// Present iff composite; always the smallest prime factor, which
    /// divides `n` and is at most `sqrt(n)`.
    pub smallest_factor: Option<u64>,
}

/// All primes `<= limit` by the textbook sieve of Eratosthenes.
pub fn eratosthenes(limit: u64) -> Result<PrimeList> {
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::TooLarge {
            what: "limit",
            got: limit,
            max: MAX_SIEVE_LIMIT,
        });
    }
    if limit < 2 {
        return Ok(PrimeList {
            limit,
            primes: Vec::new(),
        });
    }
    let len = (limit + 1) as usize;
    let mut is_prime = vec![true; len];
    is_prime[0] = false;
    is_prime[1] = false;
    let mut p = 2usize;
    while p * p < len {
        if is_prime[p] {
            let mut m = p * p;
            while m < len {
                is_prime[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    let primes = is_prime
        .iter()
        .enumerate()
        .filter(|(_, &flag)| flag)
        .map(|(n, _)| n as u64)
        .collect();
    Ok(PrimeList { limit, primes })
}

/// Decide `n >= 1` by dividing by every candidate up to `sqrt(n)`.
pub fn trial_division(n: u64) -> Result<OracleVerdict> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "n",
            min: 1,
            got: 0,
        });
    }
    if n == 1 {
        return Ok(OracleVerdict {
            verdict: Verdict::Unit,
            smallest_factor: None,
        });
    }
    if n % 2 == 0 && n > 2 {
        return Ok(OracleVerdict {
            verdict: Verdict::Composite,
            smallest_factor: Some(2),
        });
    }
    let mut m = 3u64;
    while m <= n / m {
        if n % m == 0 {
            return Ok(OracleVerdict {
                verdict: Verdict::Composite,
                smallest_factor: Some(m),
            });
        }
        m += 2;
    }
    Ok(OracleVerdict {
        verdict: Verdict::Prime,
        smallest_factor: None,
    })
}

/// Convenience wrapper for tests: `true` iff [`trial_division`] says prime.
pub fn is_prime(n: u64) -> bool {
    matches!(
        trial_division(n),
        Ok(OracleVerdict {
            verdict: Verdict::Prime,
            ..
        })
    )
}
