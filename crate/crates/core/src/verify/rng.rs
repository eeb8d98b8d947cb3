//! Seeded randomness for replayable property runs.
//!
//! The generator is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`).
//! A uniform draw from `0..k` is `(next_u64() as u128 * k as u128) >> 64`,
//! one word per draw, so any implementation of ChaCha8 with the same seeding
//! reproduces the same streams.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub(crate) struct Rng(ChaCha8Rng);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in `0..k`; `k` must be positive.
    pub fn below(&mut self, k: usize) -> usize {
        debug_assert!(k > 0);
        ((self.0.next_u64() as u128 * k as u128) >> 64) as usize
    }

    /// First `k` entries of a uniformly random permutation of `0..n`.
    pub fn sample(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut items: Vec<usize> = (0..n).collect();
        for i in 0..k.min(n) {
            let j = i + self.below(n - i);
            items.swap(i, j);
        }
        items.truncate(k.min(n));
        items
    }
}
