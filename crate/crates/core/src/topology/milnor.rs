use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::magnus::{in_lower_central_term, magnus_expand, TruncatedPolynomial};
use crate::words::{commutator, Word};

/// Longitude words `w_ℓ`, one per link component, in the free group on the meridians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongitudeSystem {
    q: usize,
    longitudes: Vec<Word>,
}

impl LongitudeSystem {
    pub fn new(longitudes: Vec<Word>) -> Result<Self> {
        let q = longitudes.len();
        for w in &longitudes {
            w.check_rank(q)?;
        }
        Ok(LongitudeSystem { q, longitudes })
    }

    pub fn components(&self) -> usize {
        self.q
    }

    /// Longitude of component `l` (one-based).
    pub fn longitude(&self, l: usize) -> Result<&Word> {
        if l == 0 || l > self.q {
            return Err(Error::GeneratorOutOfRange { index: l, rank: self.q });
        }
        Ok(&self.longitudes[l - 1])
    }

    /// Assumption `A_k`, per component: `w_ℓ ∈ F_k`.
    pub fn check_assumption(&self, k: usize) -> Vec<bool> {
        self.longitudes.iter().map(|w| in_lower_central_term(w, k)).collect()
    }

    fn checked(&self, index: &[u8], l: usize) -> Result<&Word> {
        let w = self.longitude(l)?;
        if index.is_empty() || index.iter().any(|&i| i == 0 || i as usize > self.q) {
            return Err(Error::InvalidParameter(format!(
                "index entries must lie in 1..={}",
                self.q
            )));
        }
        if !in_lower_central_term(w, index.len()) {
            return Err(Error::NotInLowerCentralTerm { level: index.len() });
        }
        Ok(w)
    }

    /// `μ(i_1⋯i_k; ℓ)`: the coefficient of `X_{i_1}⋯X_{i_k}` in `M(w_ℓ)`.
    pub fn milnor_mu(&self, index: &[u8], l: usize) -> Result<BigInt> {
        let w = self.checked(index, l)?;
        Ok(magnus_expand(w, index.len() + 1).coeff(index))
    }

    /// Second path through the relator `[w_ℓ, x_ℓ]` of the link group presentation.
    pub fn mu_pairing_crosscheck(&self, index: &[u8], l: usize) -> Result<MuCrosscheck> {
        let w = self.checked(index, l)?;
        let k = index.len();
        let expansions = CrosscheckExpansions::new(w, l, k);
        Ok(expansions.at(index, l))
    }

    /// [`mu_pairing_crosscheck`](Self::mu_pairing_crosscheck) for every index of length `k`.
    pub fn mu_pairing_crosscheck_all(&self, k: usize, l: usize) -> Result<Vec<(Vec<u8>, MuCrosscheck)>> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        let first = vec![1u8; k];
        let w = self.checked(&first, l)?;
        let expansions = CrosscheckExpansions::new(w, l, k);
        let mut out = Vec::new();
        let mut index = first;
        loop {
            out.push((index.clone(), expansions.at(&index, l)));
            // odometer over {1..q}^k
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if (index[pos] as usize) < self.q {
                    index[pos] += 1;
                    break;
                }
                index[pos] = 1;
            }
        }
    }
}

struct CrosscheckExpansions {
    longitude: TruncatedPolynomial,
    relator: TruncatedPolynomial,
}

impl CrosscheckExpansions {
    fn new(w: &Word, l: usize, k: usize) -> Self {
        let relator = commutator(w, &Word::generator(l as u8));
        CrosscheckExpansions {
            longitude: magnus_expand(w, k + 1),
            relator: magnus_expand(&relator, k + 2),
        }
    }

    fn at(&self, index: &[u8], l: usize) -> MuCrosscheck {
        let mut extended = index.to_vec();
        extended.push(l as u8);
        // M([w, x_ℓ]) = 1 + P X_ℓ − X_ℓ P + (degree ≥ k+2) where M(w) = 1 + P.
        let correction = if index[0] as usize == l {
            self.longitude.coeff(&extended[1..])
        } else {
            BigInt::from(0)
        };
        MuCrosscheck {
            mu: self.longitude.coeff(index),
            relator_coefficient: self.relator.coeff(&extended),
            correction,
        }
    }
}

/// The two sides of the μ cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuCrosscheck {
    pub mu: BigInt,
    /// Coefficient of `X_{i_1}⋯X_{i_k}X_ℓ` in `M([w_ℓ, x_ℓ])`.
    pub relator_coefficient: BigInt,
    /// `c_{i_2⋯i_k ℓ}(w_ℓ)` when `i_1 = ℓ`, otherwise zero.
    pub correction: BigInt,
}

impl MuCrosscheck {
    pub fn pairing(&self) -> BigInt {
        &self.relator_coefficient + &self.correction
    }

    pub fn agree(&self) -> bool {
        self.mu == self.pairing()
    }
}
