//! Monte Carlo cross-check of the exact perfect-shuffle probability.
//!
//! The generator is pinned so results are reproducible everywhere:
//! xoshiro256** 1.0 with its four state words taken from SplitMix64 seeded
//! with the user's seed. Trials are cut into fixed blocks of
//! [`BLOCK_TRIALS`]; block `b` runs on the master generator advanced by `b`
//! calls to `jump()` (2^128 steps each), so blocks never overlap and the
//! merged count does not depend on how many worker threads run them.
//!
//! Shuffling is Fisher–Yates from the last position down, drawing
//! `j ∈ [0, i]` with Lemire's multiply-and-reject bounded sampler.

use serde_json::{json, Value};
use thiserror::Error;

use rayon::prelude::*;

use crate::shuffle::DeckComposition;

pub const BLOCK_TRIALS: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimulationError {
    #[error("trials must be at least 1")]
    ZeroTrials,
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

/// SplitMix64, used only to expand a 64-bit seed into xoshiro state.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xoshiro256StarStar {
    s: [u64; 4],
}

impl Xoshiro256StarStar {
    pub fn seed_from_u64(seed: u64) -> Self {
        let mut sm = SplitMix64::new(seed);
        Self { s: [sm.next_u64(), sm.next_u64(), sm.next_u64(), sm.next_u64()] }
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Advances the state by 2^128 steps.
    pub fn jump(&mut self) {
        const JUMP: [u64; 4] =
            [0x180e_c6d3_3cfd_0aba, 0xd5a6_1266_f0c9_392c, 0xa958_2618_e03f_c9aa, 0x39ab_dc45_29b1_661c];
        let mut acc = [0u64; 4];
        for word in JUMP {
            for bit in 0..64 {
                if word & (1 << bit) != 0 {
                    for (a, s) in acc.iter_mut().zip(self.s) {
                        *a ^= s;
                    }
                }
                self.next_u64();
            }
        }
        self.s = acc;
    }

    /// Uniform in `[0, bound)`; `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let mut m = u128::from(self.next_u64()) * u128::from(bound);
        if (m as u64) < bound {
            let threshold = bound.wrapping_neg() % bound;
            while (m as u64) < threshold {
                m = u128::from(self.next_u64()) * u128::from(bound);
            }
        }
        (m >> 64) as u64
    }
}

/// Fisher–Yates, walking `i` from the last index down to 1.
pub fn shuffle<T>(items: &mut [T], rng: &mut Xoshiro256StarStar) {
    for i in (1..items.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    pub trials: u64,
    pub successes: u64,
    /// `successes / trials`
    pub estimate: f64,
    /// `sqrt(p̂(1 − p̂) / trials)`
    pub stderr: f64,
    pub seed: u64,
}

impl SimulationResult {
    fn new(trials: u64, successes: u64, seed: u64) -> Self {
        let estimate = successes as f64 / trials as f64;
        let stderr = (estimate * (1.0 - estimate) / trials as f64).sqrt();
        Self { trials, successes, estimate, stderr, seed }
    }

    pub fn to_text(&self) -> String {
        format!(
            "trials: {}\nsuccesses: {}\nestimate: {:?}\nstderr: {:?}\nseed: {}\n",
            self.trials, self.successes, self.estimate, self.stderr, self.seed
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "trials": self.trials,
            "successes": self.successes,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "seed": self.seed.to_string(),
        })
    }
}

fn run_block(values: &[u16], trials: u64, mut rng: Xoshiro256StarStar) -> u64 {
    let mut cards = values.to_vec();
    let mut successes = 0;
    for _ in 0..trials {
        shuffle(&mut cards, &mut rng);
        if cards.windows(2).all(|w| w[0] != w[1]) {
            successes += 1;
        }
    }
    successes
}

/// Estimates the perfect-shuffle probability from `trials` uniform shuffles
/// of the labeled deck, using the global worker pool.
pub fn simulate(deck: &DeckComposition, trials: u64, seed: u64) -> Result<SimulationResult, SimulationError> {
    simulate_with_threads(deck, trials, seed, None)
}

/// As [`simulate`], on a dedicated pool of `threads` workers when given.
/// The result is identical for every thread count.
pub fn simulate_with_threads(
    deck: &DeckComposition,
    trials: u64,
    seed: u64,
    threads: Option<usize>,
) -> Result<SimulationResult, SimulationError> {
    if trials == 0 {
        return Err(SimulationError::ZeroTrials);
    }
    // Deck size is capped well below u16::MAX.
    let values: Vec<u16> = deck.card_values().into_iter().map(|v| v as u16).collect();

    let blocks = trials.div_ceil(BLOCK_TRIALS);
    let mut master = Xoshiro256StarStar::seed_from_u64(seed);
    let work: Vec<(u64, Xoshiro256StarStar)> = (0..blocks)
        .map(|b| {
            let size = BLOCK_TRIALS.min(trials - b * BLOCK_TRIALS);
            let rng = master.clone();
            master.jump();
            (size, rng)
        })
        .collect();

    let run = || work.into_par_iter().map(|(size, rng)| run_block(&values, size, rng)).sum::<u64>();
    let successes = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| SimulationError::ThreadPool(e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(SimulationResult::new(trials, successes, seed))
}
