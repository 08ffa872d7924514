//! Seeded rational sampling. Every draw gets its own stream so batches give the
//! same values whatever the execution policy.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Q;

pub const DEFAULT_SEED: u64 = 20240917;
pub const BOUND: i64 = 100;

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: BOUND,
        }
    }

    /// Independent stream for draw `k` of a batch seeded with `seed`.
    pub fn for_draw(seed: u64, k: usize) -> Self {
        let mut z = seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        Sampler::new(z ^ (z >> 31))
    }

    pub fn with_bound(mut self, bound: i64) -> Self {
        assert!(bound >= 1);
        self.bound = bound;
        self
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn index(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    /// Numerator in [-bound, bound], denominator in [1, bound].
    pub fn rational(&mut self) -> Q {
        let n = self.int(-self.bound, self.bound);
        let d = self.int(1, self.bound);
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn nonzero(&mut self) -> Q {
        loop {
            let x = self.rational();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn positive(&mut self) -> Q {
        let n = self.int(1, self.bound);
        let d = self.int(1, self.bound);
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn vec(&mut self, len: usize) -> Vec<Q> {
        (0..len).map(|_| self.rational()).collect()
    }
}
