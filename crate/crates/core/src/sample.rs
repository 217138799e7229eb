//! Seeded random sampling of group elements for pointwise checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::words::{nested_commutator, Letter, Word};

/// Default bound on sampled word length.
pub const DEFAULT_MAX_WORD_LEN: usize = 12;

/// Deterministic sampler of free-group elements.
pub struct Sampler {
    rng: ChaCha8Rng,
    pub q: usize,
    pub max_len: usize,
}

impl Sampler {
    pub fn new(seed: u64, q: usize) -> Self {
        Sampler::with_max_len(seed, q, DEFAULT_MAX_WORD_LEN)
    }

    pub fn with_max_len(seed: u64, q: usize, max_len: usize) -> Self {
        assert!((1..=255).contains(&q));
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            q,
            max_len,
        }
    }

    /// Independent sampler for shard `shard` of a sweep seeded with `seed`.
    pub fn shard(seed: u64, shard: u64, q: usize, max_len: usize) -> Self {
        let mixed = seed ^ shard.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        Sampler::with_max_len(mixed, q, max_len)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn letter(&mut self) -> Letter {
        let g = self.rng.gen_range(1..=self.q) as u8;
        Letter::new(g, self.rng.gen_bool(0.5))
    }

    /// Reduced word of length at most `max_len`, letters uniform over
    /// generators and inverses.
    pub fn word(&mut self) -> Word {
        let len = self.rng.gen_range(0..=self.max_len);
        self.word_of_len(len)
    }

    pub fn word_of_len(&mut self, len: usize) -> Word {
        let letters = (0..len).map(|_| self.letter()).collect();
        crate::words::normalize(&Word::from_letters(letters))
    }

    pub fn words(&mut self, n: usize) -> Vec<Word> {
        (0..n).map(|_| self.word()).collect()
    }

    /// Left-normed commutator of `weight` short random words; lies in `F_weight`.
    pub fn commutator(&mut self, weight: usize) -> Word {
        let parts: Vec<Word> = (0..weight)
            .map(|_| {
                let len = self.rng.gen_range(1..=2);
                self.word_of_len(len)
            })
            .collect();
        nested_commutator(&parts)
    }

    /// Product of one to three weight-`k` commutators (or their inverses).
    pub fn lower_central_element(&mut self, k: usize) -> Word {
        let n = self.rng.gen_range(1..=3);
        let mut out = Word::identity();
        for _ in 0..n {
            let c = self.commutator(k);
            out = if self.rng.gen_bool(0.5) {
                out.mul(&c)
            } else {
                out.mul(&c.inverse())
            };
        }
        out
    }

    pub fn gen_range(&mut self, range: std::ops::Range<usize>) -> usize {
        self.rng.gen_range(range)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magnus::in_lower_central_term;

    #[test]
    fn deterministic() {
        let a: Vec<Word> = Sampler::new(7, 3).words(20);
        let b: Vec<Word> = Sampler::new(7, 3).words(20);
        assert_eq!(a, b);
    }

    #[test]
    fn lower_central_samples_lie_in_fk() {
        let mut s = Sampler::new(1, 2);
        for k in 2..=4 {
            for _ in 0..20 {
                assert!(in_lower_central_term(&s.lower_central_element(k), k));
            }
        }
    }

    #[test]
    fn words_are_reduced_and_bounded() {
        let mut s = Sampler::with_max_len(3, 2, 8);
        for w in s.words(50) {
            assert!(w.is_reduced());
            assert!(w.len() <= 8);
            assert!(w.check_rank(2).is_ok());
        }
    }
}
