use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::magnus::magnus_expand;
use crate::words::Word;

/// An endomorphism of the free group given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeEndomorphism {
    images: Vec<Word>,
}

impl FreeEndomorphism {
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let q = images.len();
        for w in &images {
            w.check_rank(q)?;
        }
        Ok(FreeEndomorphism { images })
    }

    pub fn identity(q: usize) -> Self {
        FreeEndomorphism {
            images: (1..=q as u8).map(Word::generator).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeEndomorphism) -> Result<FreeEndomorphism> {
        if self.rank() != other.rank() {
            return Err(Error::InvalidParameter(format!(
                "rank mismatch: {} vs {}",
                self.rank(),
                other.rank()
            )));
        }
        Ok(FreeEndomorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        })
    }

    /// `f(x_i) x_i^{-1}` for each generator.
    pub fn displacements(&self) -> Vec<Word> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, w)| w.mul(&Word::generator(i as u8 + 1).inverse()))
            .collect()
    }
}

impl fmt::Display for FreeEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{} -> {w}", i + 1)?;
        }
        Ok(())
    }
}

/// Largest `k ≤ max_k` with `f ∈ T(k)`, i.e. `f(x_i) x_i^{-1} ∈ F_k` for every `i`.
pub fn torelli_depth(f: &FreeEndomorphism, max_k: usize) -> usize {
    let max_k = max_k.max(1);
    f.displacements()
        .iter()
        .map(|d| {
            magnus_expand(d, max_k)
                .lowest_nonconstant_degree()
                .unwrap_or(max_k)
                .min(max_k)
        })
        .min()
        .unwrap_or(max_k)
}

/// `τ_k(f)`: per generator, the degree-`k` part of `M(f(x_i) x_i^{-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JohnsonValue {
    pub k: usize,
    pub per_generator: Vec<BTreeMap<Vec<u8>, BigInt>>,
}

impl JohnsonValue {
    pub fn is_zero(&self) -> bool {
        self.per_generator.iter().all(BTreeMap::is_empty)
    }

    pub fn coefficient(&self, generator: usize, index: &[u8]) -> BigInt {
        self.per_generator
            .get(generator.wrapping_sub(1))
            .and_then(|m| m.get(index))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add(&self, other: &JohnsonValue) -> Result<JohnsonValue> {
        if self.k != other.k || self.per_generator.len() != other.per_generator.len() {
            return Err(Error::LevelMismatch {
                left: self.k,
                right: other.k,
            });
        }
        let per_generator = self
            .per_generator
            .iter()
            .zip(&other.per_generator)
            .map(|(a, b)| {
                let mut sum = a.clone();
                for (key, v) in b {
                    let e = sum.entry(key.clone()).or_default();
                    *e += v;
                }
                sum.retain(|_, v| !v.is_zero());
                sum
            })
            .collect();
        Ok(JohnsonValue {
            k: self.k,
            per_generator,
        })
    }
}

pub fn johnson_tau(f: &FreeEndomorphism, k: usize) -> Result<JohnsonValue> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let depth = torelli_depth(f, k);
    if depth < k {
        return Err(Error::InsufficientDepth { depth, required: k });
    }
    let per_generator = f
        .displacements()
        .iter()
        .map(|d| magnus_expand(d, k + 1).homogeneous(k))
        .collect();
    Ok(JohnsonValue { k, per_generator })
}

/// The vanishing criterion for the Morita lift of `τ_k`: `f ∈ T(2k−1)`.
pub fn morita_vanishes(f: &FreeEndomorphism, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    let depth = torelli_depth(f, k);
    if depth < k {
        return Err(Error::InsufficientDepth { depth, required: k });
    }
    Ok(torelli_depth(f, 2 * k - 1) >= 2 * k - 1)
}
