//! Cross-module invariants, each checked against the classical oracle or
//! an independent brute-force computation.

use proptest::prelude::*;

use sixwheel::counting::{self, count_report};
use sixwheel::oracle;
use sixwheel::residue::{classify, trivial_status, value_of, ResidueClass, TrivialStatus};
use sixwheel::selectors::{
    enumerate_selector_indices, find_composite_witness, selector_solutions, selector_value,
    selector_value_shifted, SelectorKind,
};
use sixwheel::table::CompositeIndexTable;
use sixwheel::{is_prime_naive, is_prime_table, primes_up_to, CandidateClass, Verdict};

#[test]
fn partition_is_exact_to_1e6() {
    for n in 1..=1_000_000u64 {
        let c = classify(n).unwrap();
        match c.k {
            None => assert_eq!((n, c.class), (1, ResidueClass::Unit)),
            Some(k) => {
                assert!(k >= 1);
                assert_eq!(value_of(c.class, k).unwrap(), n, "n = {n}");
            }
        }
    }
}

#[test]
fn always_composite_classes_are_composite_to_1e6() {
    for n in 4..=1_000_000u64 {
        let c = classify(n).unwrap();
        if c.trivial_status() == TrivialStatus::AlwaysComposite {
            assert_eq!(
                oracle::trial_division(n).unwrap().verdict,
                Verdict::Composite,
                "n = {n}"
            );
        }
    }
}

#[test]
fn prime_exceptions_are_exactly_two_and_three() {
    assert_eq!(value_of(ResidueClass::Two, 1).unwrap(), 2);
    assert_eq!(value_of(ResidueClass::Three, 1).unwrap(), 3);
    assert!(oracle::is_prime(2));
    assert!(oracle::is_prime(3));
    // No other (class, k) pair may claim the exception status.
    for class in [
        ResidueClass::Two,
        ResidueClass::Three,
        ResidueClass::Four,
        ResidueClass::A,
        ResidueClass::Six,
        ResidueClass::B,
    ] {
        for k in 1..=1000u64 {
            let status = trivial_status(class, k).unwrap();
            let expected_exception =
                (class == ResidueClass::Two || class == ResidueClass::Three) && k == 1;
            assert_eq!(status == TrivialStatus::PrimeException, expected_exception);
        }
    }
}

#[test]
fn shifted_forms_equal_unshifted_on_the_grid() {
    for kind in SelectorKind::ALL {
        for r in 0..=1000u64 {
            for s in 0..=1000u64 {
                assert_eq!(
                    selector_value_shifted(kind, r, s).unwrap(),
                    selector_value(kind, r + 1, s + 1).unwrap(),
                );
            }
        }
    }
}

#[test]
fn s1_swap_images_coincide() {
    // {6ij - i + j} and {6ij + i - j} over the same square are one set.
    let m = 200u64;
    let mut minus: Vec<u64> = Vec::new();
    let mut plus: Vec<u64> = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            minus.push(6 * i * j - i + j);
            plus.push(6 * i * j + i - j);
        }
    }
    minus.sort_unstable();
    minus.dedup();
    plus.sort_unstable();
    plus.dedup();
    assert_eq!(minus, plus);
}

/// Does the candidate at `k` factor into a pair with the residue shape of
/// this rule? Decided by plain divisor search, independent of the rule
/// machinery.
fn admits_factor_pair(kind: SelectorKind, k: u64) -> bool {
    let n = kind.target().value(k);
    let want = match kind {
        SelectorKind::S1 => (1, 5),
        SelectorKind::S2 => (1, 1),
        SelectorKind::S3 => (5, 5),
    };
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let pair = (d % 6, (n / d) % 6);
            if pair == want || (pair.1, pair.0) == want {
                return true;
            }
        }
        d += 1;
    }
    false
}

#[test]
fn enumeration_equals_factor_pair_membership_to_1e4() {
    let kmax = 10_000u64;
    for kind in SelectorKind::ALL {
        let image = enumerate_selector_indices(kind, kmax);
        let expect: Vec<u64> = (1..=kmax).filter(|&k| admits_factor_pair(kind, k)).collect();
        assert_eq!(image, expect, "{kind}");
    }
}

#[test]
fn witness_existence_matches_trial_division_to_1e5() {
    for k in 1..=100_000u64 {
        for class in [CandidateClass::A, CandidateClass::B] {
            let n = class.value(k);
            let composite = !oracle::is_prime(n);
            let witness = find_composite_witness(class, k);
            assert_eq!(witness.is_some(), composite, "class {class:?}, k = {k}");
            if let Some(w) = witness {
                assert_eq!(w.factor_lo * w.factor_hi, n);
                assert_eq!(w.factor_lo, oracle::trial_division(n).unwrap().smallest_factor.unwrap());
            }
        }
    }
}

#[test]
fn scan_blocks_cover_every_solution_to_1e4() {
    // Every rule solution must fall inside the block the bounded scan
    // walks for its k, otherwise the scan could miss a composite.
    let kmax = 10_000u64;
    for sol in selector_solutions(SelectorKind::S1, kmax) {
        let k = sol.k;
        let (r, s) = (sol.i - 1, sol.j - 1);
        assert!(k >= 6);
        assert!(r <= (k - 6) / 5 && s <= (k - 6) / 7, "S1 {sol:?}");
    }
    for sol in selector_solutions(SelectorKind::S3, kmax) {
        let k = sol.k;
        // canonical i <= j maps to the l >= m triangle as (j-1, i-1)
        let (l, m) = (sol.j - 1, sol.i - 1);
        assert!(k >= 4);
        assert!(l <= (k - 4) / 5 && m <= (k - 4) / 5 + 1, "S3 {sol:?}");
        assert!(l >= m);
    }
    for sol in selector_solutions(SelectorKind::S2, kmax) {
        let k = sol.k;
        let (c, d) = (sol.j - 1, sol.i - 1);
        assert!(k >= 8);
        assert!(c <= (k - 8) / 7 && d <= (k - 8) / 7 + 1, "S2 {sol:?}");
        assert!(c >= d);
    }
}

#[test]
fn naive_and_table_verdicts_agree_to_1e5() {
    let table = CompositeIndexTable::build((100_000 + 1) / 6 + 1).unwrap();
    for n in 2..=100_000u64 {
        let naive = is_prime_naive(n).unwrap();
        let looked_up = is_prime_table(n, &table).unwrap();
        assert_eq!(naive.verdict, looked_up.verdict, "n = {n}");
    }
}

#[test]
fn naive_agrees_with_trial_division_to_1e5() {
    for n in 2..=100_000u64 {
        let naive = is_prime_naive(n).unwrap();
        let reference = oracle::trial_division(n).unwrap();
        assert_eq!(naive.verdict, reference.verdict, "n = {n}");
    }
}

#[test]
fn table_bits_complement_prime_counts_to_1e4() {
    let kmax = 10_000u64;
    let table = CompositeIndexTable::build(kmax).unwrap();
    let limit = 6 * kmax + 1;
    let primes = oracle::eratosthenes(limit).unwrap().primes;
    let prime_set: std::collections::HashSet<u64> = primes.into_iter().collect();

    let mut a_composites = 0u64;
    let mut b_composites = 0u64;
    let mut a_primes = 0u64;
    let mut b_primes = 0u64;
    for k in 1..=kmax {
        a_composites += u64::from(table.is_composite(CandidateClass::A, k).unwrap());
        b_composites += u64::from(table.is_composite(CandidateClass::B, k).unwrap());
        a_primes += u64::from(prime_set.contains(&(6 * k - 1)));
        b_primes += u64::from(prime_set.contains(&(6 * k + 1)));
        assert_eq!(a_composites + a_primes, k, "A split at k = {k}");
        assert_eq!(b_composites + b_primes, k, "B split at k = {k}");
    }
}

#[test]
fn wheel_sieve_equals_classical_sieve_small() {
    for limit in [100u64, 10_000] {
        assert_eq!(
            primes_up_to(limit).unwrap().primes,
            oracle::eratosthenes(limit).unwrap().primes,
        );
    }
}

#[test]
fn wheel_sieve_equals_set_difference_construction() {
    let limit = 10_000u64;
    let kmax = (limit + 1).div_ceil(6);
    let wheel = primes_up_to(limit).unwrap().primes;

    let s1: std::collections::HashSet<u64> =
        enumerate_selector_indices(SelectorKind::S1, kmax).into_iter().collect();
    let mut b_image: std::collections::HashSet<u64> =
        enumerate_selector_indices(SelectorKind::S2, kmax).into_iter().collect();
    b_image.extend(enumerate_selector_indices(SelectorKind::S3, kmax));

    let mut expect = vec![2u64, 3];
    for k in 1..=kmax {
        if 6 * k - 1 <= limit && !s1.contains(&k) {
            expect.push(6 * k - 1);
        }
        if 6 * k + 1 <= limit && !b_image.contains(&k) {
            expect.push(6 * k + 1);
        }
    }
    expect.sort_unstable();
    assert_eq!(wheel, expect);
}

#[test]
fn report_counts_match_oracle_to_1e4() {
    let kmax = 10_000u64;
    let rows = count_report(kmax).unwrap();
    let prime_set: std::collections::HashSet<u64> = oracle::eratosthenes(6 * kmax + 1)
        .unwrap()
        .primes
        .into_iter()
        .collect();
    let mut exact_a = 0u64;
    let mut exact_b = 0u64;
    for row in &rows {
        exact_a += u64::from(prime_set.contains(&row.n_a));
        exact_b += u64::from(prime_set.contains(&row.n_b));
        assert_eq!(row.exact_a, exact_a, "k = {}", row.k);
        assert_eq!(row.exact_b, exact_b, "k = {}", row.k);
        assert_eq!(row.a_composite, !prime_set.contains(&row.n_a));
        assert_eq!(row.b_composite, !prime_set.contains(&row.n_b));
        assert_eq!(row.dev_a, row.exact_a as i128 - row.formula_a);
        assert_eq!(row.dev_b, row.exact_b as i128 - row.formula_b);
    }
}

#[test]
fn cut_ratio_offset_is_exactly_one_over_s() {
    for s in [1u64, 10, 1_000, 10_000] {
        let r = counting::cut_ratio(s).unwrap();
        // r - 1 = 1/s as exact rationals
        assert_eq!(r.num() - r.den(), r.den() / s);
        assert_eq!(r.den(), s);
        assert_eq!(r.num(), s + 1);
    }
}

proptest! {
    #[test]
    fn shifted_equivalence_sampled(kind_idx in 0usize..3, r in 0u64..1_000_000, s in 0u64..1_000_000) {
        let kind = SelectorKind::ALL[kind_idx];
        prop_assert_eq!(
            selector_value_shifted(kind, r, s).unwrap(),
            selector_value(kind, r + 1, s + 1).unwrap()
        );
    }

    #[test]
    fn symmetric_rules_ignore_argument_order(kind_idx in 1usize..3, i in 1u64..100_000, j in 1u64..100_000) {
        let kind = SelectorKind::ALL[kind_idx];
        prop_assert_eq!(
            selector_value(kind, i, j).unwrap(),
            selector_value(kind, j, i).unwrap()
        );
    }

    #[test]
    fn witnesses_are_sound(class_a in any::<bool>(), k in 1u64..1_000_000) {
        let class = if class_a { CandidateClass::A } else { CandidateClass::B };
        if let Some(w) = find_composite_witness(class, k) {
            prop_assert_eq!(w.k, k);
            prop_assert_eq!(w.factor_lo * w.factor_hi, class.value(k));
            prop_assert!(w.factor_lo >= 5);
            prop_assert!(w.factor_lo <= w.factor_hi);
            // both factors are genuine nontrivial divisors
            let n = class.value(k);
            prop_assert_eq!(n % w.factor_lo, 0);
            prop_assert_eq!(n % w.factor_hi, 0);
        } else {
            prop_assert!(oracle::is_prime(class.value(k)));
        }
    }

    #[test]
    fn table_files_round_trip(kmax in 1u64..600) {
        let table = CompositeIndexTable::build(kmax).unwrap();
        let bytes = table.serialize();
        let back = CompositeIndexTable::deserialize(&bytes).unwrap();
        prop_assert_eq!(&back, &table);
        prop_assert_eq!(back.serialize(), bytes);
    }

    #[test]
    fn any_single_bit_flip_is_rejected(kmax in 1u64..300, pick in any::<(usize, u8)>()) {
        let mut bytes = CompositeIndexTable::build(kmax).unwrap().serialize();
        let (byte, bit) = (pick.0 % bytes.len(), pick.1 % 8);
        bytes[byte] ^= 1 << bit;
        prop_assert!(CompositeIndexTable::deserialize(&bytes).is_err());
    }
}
