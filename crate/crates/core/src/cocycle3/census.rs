use crate::error::{Error, Result};
use crate::words::{is_standard, standard_sequences, witt_number, StandardSequence};

use super::{corrected_3cocycle, gamma3, ThreeCocycleSpec};

/// One filtration level `ℓ` of the degree-3 basis.
#[derive(Clone, Debug)]
pub struct CensusSlice {
    pub ell: usize,
    /// `q·N_ℓ − N_{ℓ+1}`.
    pub rank: i128,
    /// Pairs `(I, s)` with `I ∈ 𝔘_ℓ` and `I·s ∉ 𝔘_{ℓ+1}`.
    pub entries: Vec<(StandardSequence, u8)>,
    /// Whether explicit cocycles are available at this level (`ℓ ∈ {k, k+1}`, `k ≥ 3`).
    pub emitted: bool,
}

impl CensusSlice {
    pub fn filter_count(&self) -> usize {
        self.entries.len()
    }

    pub fn counts_agree(&self) -> bool {
        self.entries.len() as i128 == self.rank
    }
}

#[derive(Clone, Debug)]
pub struct Census {
    pub q: usize,
    pub k: usize,
    pub slices: Vec<CensusSlice>,
}

impl Census {
    /// `Σ_{ℓ=k}^{2k−2} (q·N_ℓ − N_{ℓ+1})`.
    pub fn total_rank(&self) -> i128 {
        self.slices.iter().map(|s| s.rank).sum()
    }

    pub fn total_filter_count(&self) -> usize {
        self.slices.iter().map(CensusSlice::filter_count).sum()
    }

    /// Explicit cocycles for the emitted slices.
    pub fn expressions(&self) -> Result<Vec<ThreeCocycleSpec>> {
        let mut out = Vec::new();
        for slice in self.slices.iter().filter(|s| s.emitted) {
            for (seq, s) in &slice.entries {
                out.push(if slice.ell == self.k {
                    gamma3(*s, seq.indices(), self.k)?
                } else {
                    corrected_3cocycle(*s, seq.indices(), self.k)?
                });
            }
        }
        Ok(out)
    }
}

pub fn census_basis3(q: usize, k: usize) -> Result<Census> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    if q == 0 || q > u8::MAX as usize {
        return Err(Error::InvalidParameter(format!("rank {q} out of range")));
    }
    let mut slices = Vec::new();
    for ell in k..=2 * k - 2 {
        let n = witt_number(q, ell)?.value as i128;
        let n_next = witt_number(q, ell + 1)?.value as i128;
        let mut entries = Vec::new();
        for seq in standard_sequences(q, ell)? {
            for s in 1..=q as u8 {
                let mut longer = seq.indices().to_vec();
                longer.push(s);
                if !is_standard(&longer) {
                    entries.push((seq.clone(), s));
                }
            }
        }
        slices.push(CensusSlice {
            ell,
            rank: q as i128 * n - n_next,
            entries,
            emitted: k >= 3 && ell <= k + 1,
        });
    }
    Ok(Census { q, k, slices })
}
