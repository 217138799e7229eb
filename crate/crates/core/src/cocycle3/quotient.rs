use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cochain::{s_map, split_sum, CochainExpr, NilpotentElement};
use crate::error::{Error, Result};
use crate::magnus::in_lower_central_term;
use crate::words::{format_index, standard_commutator, standard_sequences, StandardSequence, Word};

/// `G = F/⟨F_{k+1}, W_1, …, W_t⟩` with `W_j` the standard commutator of `I^{(j)} ∈ 𝔘_k`.
#[derive(Clone, Debug)]
pub struct CentralQuotientGroup {
    q: usize,
    k: usize,
    relators: Vec<StandardSequence>,
    /// For each coordinate of `𝔘_k`, whether it is killed by a relator.
    killed: Vec<bool>,
}

impl CentralQuotientGroup {
    pub fn new(q: usize, k: usize, relators: Vec<StandardSequence>) -> Result<Self> {
        if k <= 2 {
            return Err(Error::InvalidParameter(format!("k must exceed 2, got {k}")));
        }
        let mut seen = BTreeSet::new();
        for r in &relators {
            if r.len() != k {
                return Err(Error::InvalidParameter(format!(
                    "relator {} has length {}, expected {k}",
                    format_index(r.indices()),
                    r.len()
                )));
            }
            if r.indices().iter().any(|&i| i as usize > q) {
                return Err(Error::GeneratorOutOfRange {
                    index: *r.indices().iter().max().unwrap_or(&0) as usize,
                    rank: q,
                });
            }
            if !seen.insert(r.indices().to_vec()) {
                return Err(Error::DuplicateRelator(format_index(r.indices())));
            }
        }
        let killed = standard_sequences(q, k)?
            .iter()
            .map(|s| seen.contains(s.indices()))
            .collect();
        Ok(CentralQuotientGroup { q, k, relators, killed })
    }

    pub fn rank(&self) -> usize {
        self.q
    }

    pub fn level(&self) -> usize {
        self.k
    }

    pub fn relators(&self) -> &[StandardSequence] {
        &self.relators
    }

    pub fn relator_word(&self, j: usize) -> Result<Word> {
        Ok(standard_commutator(self.relator(j)?))
    }

    fn relator(&self, j: usize) -> Result<&StandardSequence> {
        self.relators.get(j).ok_or_else(|| {
            Error::InvalidParameter(format!("relator index {j} out of range (have {})", self.relators.len()))
        })
    }

    pub fn element(&self, w: Word) -> NilpotentElement {
        NilpotentElement::new(w, self.k + 1)
    }

    /// `u = v` in `G`: `u v^{-1} ∈ F_k` and its `F_k/F_{k+1}` coordinates lie on relator axes.
    ///
    /// The relator vectors are distinct coordinate vectors, so lattice membership
    /// reduces to vanishing of the remaining coordinates.
    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        let d = u.mul(&v.inverse());
        if !in_lower_central_term(&d, self.k) {
            return Ok(false);
        }
        let coords = s_map(&d, self.q, self.k)?;
        Ok(coords
            .iter()
            .zip(&self.killed)
            .all(|(c, &killed)| killed || c.is_zero()))
    }

    /// `φ_{Λ_j}(X, Y) = Σ_ℓ c_{I≤ℓ}(X) c_{I>ℓ}(Y)` for `I = I^{(j)}`.
    pub fn phi_cocycle(&self, j: usize) -> Result<CochainExpr> {
        Ok(split_sum(self.relator(j)?.indices()))
    }

    /// `f` with `∂f = α_r ⌣ φ_{Λ_j}`: `f(x,y) = −Σ_{1≤ℓ<k} c_{r i_1⋯i_ℓ}(x) c_{i_{ℓ+1}⋯i_k}(y)`.
    pub fn cobounding_left(&self, r: u8, j: usize) -> Result<CochainExpr> {
        let index = self.relator(j)?.indices();
        Ok(left_sum(r, index, 1..self.k, -1))
    }

    /// `g` with `∂g = φ_{Λ_j} ⌣ α_s`: `g(x,y) = Σ_{1≤ℓ<k} c_{i_1⋯i_ℓ}(x) c_{i_{ℓ+1}⋯i_k s}(y)`.
    pub fn cobounding_right(&self, j: usize, s: u8) -> Result<CochainExpr> {
        let index = self.relator(j)?.indices();
        Ok(right_sum(index, s, 1..self.k))
    }

    /// The cobounding cochains with the signs and ranges as printed:
    /// `+Σ_{1≤ℓ<k}` on the left and `Σ_{1<ℓ≤k}` on the right.
    pub fn cobounding_printed(&self, r: u8, j: usize, s: u8) -> Result<(CochainExpr, CochainExpr)> {
        let index = self.relator(j)?.indices();
        Ok((left_sum(r, index, 1..self.k, 1), right_sum(index, s, 2..self.k + 1)))
    }

    fn check_triple(&self, r: u8, j: usize, s: u8) -> Result<()> {
        let index = self.relator(j)?.indices();
        for g in [r, s] {
            if g == 0 || g as usize > self.q {
                return Err(Error::GeneratorOutOfRange {
                    index: g as usize,
                    rank: self.q,
                });
            }
        }
        let mut left = vec![r];
        left.extend_from_slice(&index[..self.k - 1]);
        let mut right = index[1..].to_vec();
        right.push(s);
        for (jj, rel) in self.relators.iter().enumerate() {
            if jj == j {
                continue;
            }
            if rel.indices() == left.as_slice() || rel.indices() == right.as_slice() {
                return Err(Error::MasseyUndefined(format!(
                    "{} coincides with relator {}",
                    if rel.indices() == left.as_slice() {
                        format_index(&left)
                    } else {
                        format_index(&right)
                    },
                    format_index(rel.indices())
                )));
            }
        }
        Ok(())
    }

    /// `⟨α_r, φ_{Λ_j}, α_s⟩` represented by
    /// `c_r(x) Σ_{1≤ℓ<k} c_{i_1⋯i_ℓ}(y) c_{i_{ℓ+1}⋯i_k s}(z) − (Σ_{1≤ℓ<k} c_{r i_1⋯i_ℓ}(x) c_{i_{ℓ+1}⋯i_k}(y)) c_s(z)`.
    pub fn triple_massey(&self, r: u8, j: usize, s: u8) -> Result<CochainExpr> {
        self.check_triple(r, j, s)?;
        let index = self.relator(j)?.indices();
        triple(r, index, s, 1..self.k)
    }

    /// As [`triple_massey`](Self::triple_massey) with the second sum over `1 < ℓ ≤ k` as printed.
    pub fn triple_massey_printed(&self, r: u8, j: usize, s: u8) -> Result<CochainExpr> {
        self.check_triple(r, j, s)?;
        let index = self.relator(j)?.indices();
        triple(r, index, s, 2..self.k + 1)
    }
}

fn left_sum(r: u8, index: &[u8], range: std::ops::Range<usize>, sign: i64) -> CochainExpr {
    let terms: Vec<CochainExpr> = range
        .map(|l| {
            let mut head = vec![r];
            head.extend_from_slice(&index[..l]);
            CochainExpr::monomial(2, &[(0, &head), (1, &index[l..])])
        })
        .collect();
    CochainExpr::sum(2, terms).expect("degree 2").scale(sign)
}

fn right_sum(index: &[u8], s: u8, range: std::ops::Range<usize>) -> CochainExpr {
    let terms: Vec<CochainExpr> = range
        .map(|l| {
            let mut tail = index[l..].to_vec();
            tail.push(s);
            CochainExpr::monomial(2, &[(0, &index[..l]), (1, &tail)])
        })
        .collect();
    CochainExpr::sum(2, terms).expect("degree 2")
}

fn triple(r: u8, index: &[u8], s: u8, second: std::ops::Range<usize>) -> Result<CochainExpr> {
    let k = index.len();
    let rv = [r];
    let sv = [s];
    let mut terms = Vec::new();
    for l in 1..k {
        let mut tail = index[l..].to_vec();
        tail.push(s);
        terms.push((
            BigInt::from(1),
            CochainExpr::monomial(3, &[(0, &rv), (1, &index[..l]), (2, &tail)]),
        ));
    }
    for l in second {
        let mut head = vec![r];
        head.extend_from_slice(&index[..l]);
        terms.push((
            BigInt::from(-1),
            CochainExpr::monomial(3, &[(0, &head), (1, &index[l..]), (2, &sv)]),
        ));
    }
    CochainExpr::linear(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;

    fn group() -> CentralQuotientGroup {
        CentralQuotientGroup::new(2, 3, vec![StandardSequence::new(vec![1, 1, 2]).unwrap()]).unwrap()
    }

    #[test]
    fn phi_example() {
        let g = group();
        let phi = g.phi_cocycle(0).unwrap();
        let x: Word = "a".parse().unwrap();
        let y: Word = "abAB".parse().unwrap();
        assert_eq!(phi.eval_words(&[x, y]).unwrap(), 1.into());
    }

    #[test]
    fn duplicate_relators_rejected() {
        let r = StandardSequence::new(vec![1, 1, 2]).unwrap();
        assert!(matches!(
            CentralQuotientGroup::new(2, 3, vec![r.clone(), r]),
            Err(Error::DuplicateRelator(_))
        ));
    }

    #[test]
    fn relator_is_trivial() {
        let g = group();
        let w = g.relator_word(0).unwrap();
        let x: Word = "ab".parse().unwrap();
        assert!(g.equal(&x.mul(&w), &x).unwrap());
        let other = standard_commutator(&StandardSequence::new(vec![1, 2, 2]).unwrap());
        assert!(!g.equal(&x.mul(&other), &x).unwrap());
    }

    #[test]
    fn cobounding_identities() {
        let g = group();
        let phi = g.phi_cocycle(0).unwrap();
        let left = CochainExpr::alpha(2).cup(&phi);
        let right = phi.cup(&CochainExpr::alpha(1));
        let f = g.cobounding_left(2, 0).unwrap().coboundary();
        let h = g.cobounding_right(0, 1).unwrap().coboundary();
        let t = g.triple_massey(2, 0, 1).unwrap().coboundary();
        let mut sampler = Sampler::new(5, 2);
        for _ in 0..60 {
            let p = [sampler.word(), sampler.word(), sampler.word()];
            assert_eq!(left.eval_words(&p).unwrap(), f.eval_words(&p).unwrap());
            assert_eq!(right.eval_words(&p).unwrap(), h.eval_words(&p).unwrap());
            let q4 = [sampler.word(), sampler.word(), sampler.word(), sampler.word()];
            assert!(t.eval_words(&q4).unwrap().is_zero());
        }
    }
}
