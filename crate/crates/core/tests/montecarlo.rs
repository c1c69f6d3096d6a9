mod common;

use std::collections::HashMap;

use common::*;
use rookshuffle::shuffle::{approximate, perfect_shuffle_report};
use rookshuffle::verify::{shuffle, simulate, Xoshiro256StarStar};

#[test]
fn shuffle_is_unbiased_over_s4() {
    const TRIALS: u64 = 1_000_000;
    let mut rng = Xoshiro256StarStar::seed_from_u64(2024);
    let mut freq: HashMap<[u8; 4], u64> = HashMap::new();
    for _ in 0..TRIALS {
        let mut p = [0u8, 1, 2, 3];
        shuffle(&mut p, &mut rng);
        *freq.entry(p).or_default() += 1;
    }
    assert_eq!(freq.len(), 24);
    let p = 1.0 / 24.0;
    let sd = (TRIALS as f64 * p * (1.0 - p)).sqrt();
    for (perm, count) in freq {
        let z = (count as f64 - TRIALS as f64 * p) / sd;
        assert!(z.abs() < 5.0, "{perm:?}: {count} ({z:.2} sd)");
    }
}

#[test]
fn estimates_track_exact_probabilities_for_small_decks() {
    const TRIALS: u64 = 100_000;
    for n in 1..=8 {
        for counts in partitions(n) {
            let d = deck(&counts);
            let exact = approximate(&perfect_shuffle_report(&d).probability);
            let sim = simulate(&d, TRIALS, 7 + n as u64).unwrap();
            if exact == 0.0 || exact == 1.0 {
                assert_eq!(sim.estimate, exact, "deck {counts:?}");
                continue;
            }
            let dev = (sim.estimate - exact).abs();
            assert!(dev <= 4.0 * sim.stderr, "deck {counts:?}: {} vs {exact} (stderr {})", sim.estimate, sim.stderr);
        }
    }
}

#[test]
fn fixed_seed_reproduces_exactly() {
    let d = deck(&[4, 4, 4, 4]);
    let a = simulate(&d, 200_000, 31337).unwrap();
    let b = simulate(&d, 200_000, 31337).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.estimate.to_bits(), b.estimate.to_bits());
}

#[test]
fn pinned_success_count() {
    // Frozen output of the pinned generator and block layout; changes here
    // break cross-platform reproducibility.
    let r = simulate(&deck(&[2, 2, 2]), 100_000, 1).unwrap();
    assert_eq!(r.successes, PINNED_SUCCESSES_222_SEED1);
}

// Independently reproduced with a line-by-line transliteration of the generator.
const PINNED_SUCCESSES_222_SEED1: u64 = 33300;
