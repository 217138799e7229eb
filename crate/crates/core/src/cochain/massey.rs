use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::CochainExpr;
use crate::error::{Error, Result};

/// How to read the sign in the compatibility equation
/// `∂a_{s,t} = Σ_r ε · a_{s,r} ⌣ a_{r+1,t}` for degree-one inputs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// `ε = (−1)^{p_s + (p_{t+1} + ⋯ + p_t) − t + s}` with the inner sum empty,
    /// i.e. `(−1)^{1 + s − t}`. Holds only for `t − s = 1`.
    Verbatim,
    /// `ε = +1`, which is what the coefficient functionals satisfy.
    #[default]
    Repaired,
}

impl SignConvention {
    fn epsilon(self, s: usize, t: usize) -> i32 {
        match self {
            SignConvention::Verbatim => {
                if (1 + t - s).is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
            SignConvention::Repaired => 1,
        }
    }
}

/// The grid `a_{s,t} = c_{i_s⋯i_t}` for `1 ≤ s ≤ t ≤ k`, `(s,t) ≠ (1,k)`.
#[derive(Clone, Debug)]
pub struct DefiningSystem {
    index: Vec<u8>,
    entries: BTreeMap<(usize, usize), CochainExpr>,
}

pub fn defining_system(index: &[u8], k: usize) -> Result<DefiningSystem> {
    check_length(index, k)?;
    let mut entries = BTreeMap::new();
    for s in 1..=k {
        for t in s..=k {
            if (s, t) != (1, k) {
                entries.insert((s, t), CochainExpr::c(&index[s - 1..t]));
            }
        }
    }
    Ok(DefiningSystem {
        index: index.to_vec(),
        entries,
    })
}

impl DefiningSystem {
    pub fn index(&self) -> &[u8] {
        &self.index
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// `a_{s,t}`, one-based.
    pub fn get(&self, s: usize, t: usize) -> Option<&CochainExpr> {
        self.entries.get(&(s, t))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &CochainExpr)> {
        self.entries.iter().map(|(&st, e)| (st, e))
    }

    /// Pairs `(s,t)` for which the compatibility equation is non-trivial.
    pub fn conditions(&self) -> Vec<(usize, usize)> {
        self.entries.keys().copied().filter(|&(s, t)| t > s).collect()
    }

    /// Both sides `(∂a_{s,t}, Σ_r ε a_{s,r} ⌣ a_{r+1,t})` of the compatibility equation.
    pub fn condition(&self, s: usize, t: usize, convention: SignConvention) -> Result<(CochainExpr, CochainExpr)> {
        let a = self
            .get(s, t)
            .filter(|_| t > s)
            .ok_or_else(|| Error::InvalidParameter(format!("no compatibility condition at ({s},{t})")))?;
        let eps = BigInt::from(convention.epsilon(s, t));
        let terms = (s..t)
            .map(|r| (eps.clone(), self.entries[&(s, r)].cup(&self.entries[&(r + 1, t)])))
            .collect();
        Ok((a.coboundary(), CochainExpr::linear(terms)?))
    }

    /// The associated 2-cocycle `Σ_r (−1)^{p_1+⋯+p_r−r+1} a_{1,r} ⌣ a_{r+1,k}`.
    pub fn massey_cocycle(&self) -> CochainExpr {
        let k = self.len();
        let terms = (1..k)
            .map(|r| (BigInt::from(-1), self.entries[&(1, r)].cup(&self.entries[&(r + 1, k)])))
            .collect();
        CochainExpr::linear(terms).expect("non-empty for k ≥ 2")
    }
}

/// `(x, y) ↦ Σ_{ℓ=1}^{k−1} c_{i_1⋯i_ℓ}(x) c_{i_{ℓ+1}⋯i_k}(y)`.
pub fn massey2(index: &[u8], k: usize) -> Result<CochainExpr> {
    check_length(index, k)?;
    Ok(split_sum(index))
}

/// The split sum for an arbitrary index of length ≥ 2, without a level check.
///
/// For a sub-index `J` of length `j < k` this equals `−∂c_J`, so the
/// corresponding lower Massey product vanishes.
pub fn split_sum(index: &[u8]) -> CochainExpr {
    let parts = (1..index.len())
        .map(|l| {
            CochainExpr::product(vec![
                CochainExpr::coeff(2, 0, &index[..l]),
                CochainExpr::coeff(2, 1, &index[l..]),
            ])
            .expect("same degree")
        })
        .collect();
    CochainExpr::sum(2, parts).expect("same degree")
}

fn check_length(index: &[u8], k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    if index.len() != k {
        return Err(Error::InvalidParameter(format!(
            "index has length {}, expected {k}",
            index.len()
        )));
    }
    if index.contains(&0) {
        return Err(Error::InvalidParameter("generator indices start at 1".into()));
    }
    Ok(())
}
