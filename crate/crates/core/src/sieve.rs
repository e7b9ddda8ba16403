//! Prime generation through the wheel representation.
//!
//! The full prime set decomposes as 2 and 3 plus the candidates the
//! selection rules never hit. [`primes_up_to`] builds the composite-index
//! table for the covering range and streams out the survivors in order.

use crate::error::{Error, Result};
use crate::residue::CandidateClass;
use crate::table::CompositeIndexTable;

/// Ceiling on sieve limits: outputs stay desk-scale, no segmentation.
pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;

/// All primes up to a limit, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeList {
    pub limit: u64,
    pub primes: Vec<u64>,
}

/// Generate all primes `<= limit` from the wheel: 2, then 3, then every
/// `6k - 1` and `6k + 1` whose wheel index no rule marks, interleaved by
/// value.
pub fn primes_up_to(limit: u64) -> Result<PrimeList> {
    if limit < 2 {
        return Err(Error::TooSmall {
            what: "limit",
            min: 2,
            got: limit,
        });
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::TooLarge {
            what: "limit",
            got: limit,
            max: MAX_SIEVE_LIMIT,
        });
    }
    // Ceiling so the last partial wheel turn is covered; values past the
    // limit are filtered below.
    let kmax = (limit + 1).div_ceil(6).max(1);
    let table = CompositeIndexTable::build(kmax)?;

    let mut primes = vec![2];
    if limit >= 3 {
        primes.push(3);
    }
    for k in 1..=kmax {
        let a = 6 * k - 1;
        if a <= limit && !table.is_composite(CandidateClass::A, k)? {
            primes.push(a);
        }
        let b = 6 * k + 1;
        if b <= limit && !table.is_composite(CandidateClass::B, k)? {
            primes.push(b);
        }
    }
    Ok(PrimeList { limit, primes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn first_primes() {
        assert_eq!(primes_up_to(10).unwrap().primes, vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(2).unwrap().primes, vec![2]);
        assert_eq!(primes_up_to(3).unwrap().primes, vec![2, 3]);
        assert_eq!(primes_up_to(4).unwrap().primes, vec![2, 3]);
        assert_eq!(primes_up_to(5).unwrap().primes, vec![2, 3, 5]);
    }

    #[test]
    fn first_sixteen_candidates_after_three() {
        let expect = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61];
        let got = primes_up_to(61).unwrap().primes;
        assert_eq!(&got[..2], &[2, 3]);
        assert_eq!(&got[2..], &expect);
    }

    #[test]
    fn hundred_has_twenty_five_primes() {
        let got = primes_up_to(100).unwrap();
        assert_eq!(got.primes.len(), 25);
        assert_eq!(got.primes, oracle::eratosthenes(100).unwrap().primes);
    }

    #[test]
    fn limit_validation() {
        assert!(primes_up_to(1).is_err());
        assert!(primes_up_to(0).is_err());
        assert!(matches!(
            primes_up_to(MAX_SIEVE_LIMIT + 1),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn ascending_and_wheel_shaped() {
        let got = primes_up_to(10_000).unwrap().primes;
        for pair in got.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        for &p in &got[2..] {
            assert!(p % 6 == 1 || p % 6 == 5, "p = {p}");
        }
    }
}
