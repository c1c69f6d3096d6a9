//! Exact methods checked against independent exhaustive enumeration.

mod common;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;

use rookshuffle::boards::{
    adjacency_hit_numbers, adjacency_hit_numbers_bruteforce, avoiders_bruteforce,
    generalized_rook_polynomial, hit_numbers_bruteforce, hit_numbers_from_rook, rook_numbers,
    rook_polynomial, AdjacencyConditionSet, Board,
};
use rookshuffle::exactnum::{binomial, factorial, BigInteger};
use rookshuffle::shuffle::{
    adjacency_distribution, bruteforce_distribution, generalized_derangement_count,
    perfect_shuffle_count, perfect_shuffle_report, DeckComposition,
};

#[test]
fn helper_sanity() {
    assert_eq!(compositions(4).len(), 8);
    assert_eq!(partitions(8).len(), 22);
    let mut visits = 0;
    each_permutation(5, |_| visits += 1);
    assert_eq!(visits, 120);
    assert_eq!(brute_perfect(&[2, 2]), BigInteger::from(8));
    assert_eq!(brute_derangements(&[1, 1, 1, 1]), BigInteger::from(9));
}

#[test]
fn distribution_matches_enumeration_for_every_composition_up_to_8() {
    for n in 1..=8 {
        for counts in compositions(n) {
            let d = deck(&counts);
            let exact = adjacency_distribution(&d);
            assert_eq!(exact, bruteforce_distribution(&d).unwrap(), "deck {counts:?}");
            assert_eq!(exact.count(0), perfect_shuffle_count(&d), "deck {counts:?}");
            assert_eq!(exact.total(), factorial(n as u64), "deck {counts:?}");
        }
    }
}

#[test]
fn perfect_count_matches_independent_enumeration() {
    for n in 1..=8 {
        for counts in partitions(n) {
            assert_eq!(perfect_shuffle_count(&deck(&counts)), brute_perfect(&counts), "deck {counts:?}");
        }
    }
}

#[test]
fn derangements_match_independent_enumeration() {
    for n in 1..=8 {
        for counts in partitions(n) {
            let d = deck(&counts);
            let brute = brute_derangements(&counts);
            assert_eq!(generalized_derangement_count(&d), brute, "deck {counts:?}");
            // The same count as the avoiders of the block-diagonal board.
            assert_eq!(hit_numbers_bruteforce(&d.value_block_board()).unwrap().get(0), brute);
        }
    }
}

#[test]
fn distribution_sums_to_n_factorial_up_to_standard_deck() {
    for values in 1..=13 {
        for per_value in 1..=4 {
            let d = DeckComposition::uniform(values, per_value).unwrap();
            assert_eq!(adjacency_distribution(&d).total(), factorial(d.cards() as u64), "{d}");
        }
    }
}

#[test]
fn standard_deck_probability_times_total_is_the_count() {
    let report = perfect_shuffle_report(&DeckComposition::standard());
    let scaled = report.probability * rookshuffle::exactnum::BigRational::from_integer(factorial(52));
    assert!(scaled.is_integer());
    assert_eq!(scaled.to_integer(), report.count);
}

#[test]
fn full_adjacency_sets_and_closed_form_agree_up_to_7() {
    for n in 0..=7 {
        let set = AdjacencyConditionSet::full(n);
        assert_eq!(
            generalized_rook_polynomial(&set).unwrap(),
            rookshuffle::closedforms::full_adjacency_poly(n as u64),
            "n = {n}"
        );
    }
}

fn board_strategy() -> impl Strategy<Value = Board> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::btree_set((1..=n, 1..=n), 0..=12.min(n * n))
            .prop_map(move |cells| Board::with_cells(n, cells).unwrap())
    })
}

fn adjacency_strategy() -> impl Strategy<Value = AdjacencyConditionSet> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::btree_set((1..=n, 1..=n), 0..=(n * n).min(16)).prop_map(move |pairs| {
            AdjacencyConditionSet::with_pairs(n, pairs.into_iter().filter(|(i, j)| i != j)).unwrap()
        })
    })
}

/// Independent rook-number count: all subsets of cells with distinct rows and columns.
fn subset_rook_numbers(b: &Board) -> Vec<u64> {
    let cells: Vec<_> = b.cells().collect();
    let mut counts = vec![0u64; cells.len() + 1];
    for mask in 0u32..1 << cells.len() {
        let chosen: Vec<_> = (0..cells.len()).filter(|&i| mask & (1 << i) != 0).map(|i| cells[i]).collect();
        let rows_ok = chosen.iter().all(|a| chosen.iter().filter(|b| b.0 == a.0).count() == 1);
        let cols_ok = chosen.iter().all(|a| chosen.iter().filter(|b| b.1 == a.1).count() == 1);
        if rows_ok && cols_ok {
            counts[chosen.len()] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rook_numbers_match_subset_enumeration(b in board_strategy()) {
        let expected: Vec<BigInteger> = subset_rook_numbers(&b).into_iter().map(Into::into).collect();
        prop_assert_eq!(rook_numbers(&b).into_vec(), expected);
    }

    #[test]
    fn hit_numbers_by_inversion_match_enumeration(b in board_strategy()) {
        let brute = hit_numbers_bruteforce(&b).unwrap();
        prop_assert_eq!(&hit_numbers_from_rook(&b), &brute);
        prop_assert_eq!(brute.total(), factorial(b.n() as u64));
        prop_assert_eq!(rook_polynomial(&b).phi(), brute.get(0));
    }

    #[test]
    fn hit_rook_identity(b in board_strategy()) {
        let h = hit_numbers_bruteforce(&b).unwrap();
        let r = rook_numbers(&b);
        let n = b.n();
        for j in 0..=n {
            let lhs: BigInteger = h.as_slice().iter().enumerate()
                .map(|(i, hi)| hi * binomial(i as u64, j as i64))
                .sum();
            prop_assert_eq!(lhs, r.get(j) * factorial((n - j) as u64), "j = {}", j);
        }
    }

    #[test]
    fn direct_sum_multiplies_rook_polynomials(a in board_strategy(), b in board_strategy()) {
        let sum = a.direct_sum(&b);
        prop_assert_eq!(rook_polynomial(&sum), &rook_polynomial(&a) * &rook_polynomial(&b));
    }

    #[test]
    fn generalized_polynomial_counts_avoiders(set in adjacency_strategy()) {
        let p = generalized_rook_polynomial(&set).unwrap();
        prop_assert_eq!(p.phi(), avoiders_bruteforce(&set).unwrap());
        prop_assert_eq!(adjacency_hit_numbers(&set).unwrap(), adjacency_hit_numbers_bruteforce(&set).unwrap());
    }

    #[test]
    fn perfect_count_ignores_value_order(mut counts in prop::collection::vec(1usize..=6, 1..=6), seed in any::<u64>()) {
        let before = perfect_shuffle_count(&deck(&counts));
        let mut rng = rookshuffle::verify::Xoshiro256StarStar::seed_from_u64(seed);
        rookshuffle::verify::shuffle(&mut counts, &mut rng);
        prop_assert_eq!(perfect_shuffle_count(&deck(&counts)), before);
    }

    #[test]
    fn distribution_entries_are_non_negative(counts in prop::collection::vec(1usize..=8, 1..=8)) {
        let dist = adjacency_distribution(&deck(&counts));
        prop_assert!(dist.counts_by_k.iter().all(|c| *c >= BigInteger::zero()));
        prop_assert_eq!(dist.total(), factorial(counts.iter().sum::<usize>() as u64));
    }
}

#[test]
fn rencontres_numbers_for_diagonals() {
    // h_k of the diagonal board: permutations of [n] with exactly k fixed points.
    for n in 1..=7 {
        let hits = hit_numbers_from_rook(&Board::diagonal(n));
        for k in 0..=n {
            let mut fixed = vec![0u64; n + 1];
            each_permutation(n, |p| fixed[p.iter().enumerate().filter(|(i, &v)| *i == v).count()] += 1);
            assert_eq!(hits.get(k), BigInteger::from(fixed[k]), "n = {n}, k = {k}");
        }
    }
    assert_eq!(hit_numbers_from_rook(&Board::diagonal(4)).into_vec(), ints(&[9, 8, 6, 0, 1]));
}
