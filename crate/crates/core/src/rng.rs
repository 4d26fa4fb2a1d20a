//! Seeded random stream shared by generators, root selection and sweeps.
//!
//! The stream is SplitMix64 (Steele, Lea and Flood), so a given seed yields the
//! same sequence on every platform. All randomness in the crate flows through
//! [`Rng`].

use rand::{Rng as _, RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

/// Deterministic SplitMix64 stream.
#[derive(Clone, Debug)]
pub struct Rng {
    seed: u64,
    inner: SplitMix64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            seed,
            inner: SplitMix64::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform integer in `0..bound`. `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        self.inner.gen_range(0..bound)
    }

    /// Uniform index in `0..len` for slices of 32-bit-addressable size.
    pub fn index(&mut self, len: usize) -> usize {
        self.below(len as u64) as usize
    }

    /// Independent child stream, used to give each seed-run of a sweep its own
    /// randomness while keeping the whole sweep a function of one seed.
    pub fn fork(&mut self) -> Rng {
        Rng::new(self.next_u64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs of SplitMix64 seeded with 0 (reference implementation).
        let mut r = Rng::new(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(r.next_u64(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = Rng::new(9);
        for bound in 1..50u64 {
            for _ in 0..20 {
                assert!(r.below(bound) < bound);
            }
        }
    }
}
