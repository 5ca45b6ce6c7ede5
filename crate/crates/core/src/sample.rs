//! Deterministic sampling of small-height rationals and vectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Vector;
use crate::rational::{qr, Q};

#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    height: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            height: 4,
        }
    }

    /// Sampler with numerators in `[-height, height]`.
    pub fn with_height(seed: u64, height: i64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            height: height.max(1),
        }
    }

    /// Independent child stream, so adding draws in one place does not shift another.
    pub fn fork(&mut self, tag: u64) -> Sampler {
        let seed = self.rng.gen::<u64>() ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        Sampler::with_height(seed, self.height)
    }

    pub fn rational(&mut self) -> Q {
        let n = self.rng.gen_range(-self.height..=self.height);
        let d = self.rng.gen_range(1..=3);
        qr(n, d)
    }

    pub fn nonzero_rational(&mut self) -> Q {
        loop {
            let x = self.rational();
            if x != 0 {
                return x;
            }
        }
    }

    pub fn integer(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn vector(&mut self, dim: usize) -> Vector {
        Vector::new((0..dim).map(|_| self.rational()).collect())
    }

    /// Vector whose entries are zero with probability about one half.
    pub fn sparse_vector(&mut self, dim: usize) -> Vector {
        Vector::new(
            (0..dim)
                .map(|_| {
                    if self.rng.gen_bool(0.5) {
                        Q::from(0)
                    } else {
                        self.rational()
                    }
                })
                .collect(),
        )
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}
