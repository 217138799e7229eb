//! Shuffles with overlap and the shuffle relations cutting out the image of
//! the Magnus expansion.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::magnus::poly::TruncatedPolynomial;

/// Multiset of resulting shuffles, one count per pair of index maps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShuffleSet {
    counts: BTreeMap<Vec<u8>, usize>,
}

impl ShuffleSet {
    pub fn multiplicity(&self, seq: &[u8]) -> usize {
        self.counts.get(seq).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u8>, usize)> {
        self.counts.iter().map(|(s, &n)| (s, n))
    }

    /// Total count with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }
}

/// All resulting shuffles of `i` and `j`: every position of the result comes
/// from `i`, from `j`, or from both when the letters agree.
pub fn shuffles(i: &[u8], j: &[u8]) -> ShuffleSet {
    let mut set = ShuffleSet::default();
    let mut prefix = Vec::with_capacity(i.len() + j.len());
    walk(i, j, &mut prefix, &mut set.counts);
    set
}

fn walk(i: &[u8], j: &[u8], prefix: &mut Vec<u8>, out: &mut BTreeMap<Vec<u8>, usize>) {
    match (i.split_first(), j.split_first()) {
        (None, None) => *out.entry(prefix.clone()).or_default() += 1,
        (Some((&a, rest_i)), None) => {
            prefix.push(a);
            walk(rest_i, j, prefix, out);
            prefix.pop();
        }
        (None, Some((&b, rest_j))) => {
            prefix.push(b);
            walk(i, rest_j, prefix, out);
            prefix.pop();
        }
        (Some((&a, rest_i)), Some((&b, rest_j))) => {
            prefix.push(a);
            walk(rest_i, j, prefix, out);
            prefix.pop();
            prefix.push(b);
            walk(i, rest_j, prefix, out);
            prefix.pop();
            if a == b {
                prefix.push(a);
                walk(rest_i, rest_j, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// Returns the first pair `(J, K)` violating `β_J·β_K = Σ_{L ∈ Sh(J,K)} β_L`,
/// or `None` if every relation with `|J| + |K| < bound` holds.
///
/// The alphabet is read off the polynomial; letters that never occur give
/// relations of the form `0 = 0`.
pub fn first_shuffle_violation(p: &TruncatedPolynomial) -> Option<(Vec<u8>, Vec<u8>)> {
    assert!(
        p.constant().is_one(),
        "shuffle relations are stated for constant term 1"
    );
    let q = p.terms().flat_map(|(m, _)| m.0.iter().copied()).max().unwrap_or(0);
    let bound = p.bound();
    if q == 0 || bound < 3 {
        return None;
    }
    let words = all_words(q, bound - 2);
    for a in &words {
        for b in &words {
            if a.len() + b.len() >= bound {
                continue;
            }
            let lhs = p.coeff(a) * p.coeff(b);
            let rhs: BigInt = shuffles(a, b)
                .iter()
                .map(|(l, n)| p.coeff(l) * BigInt::from(n))
                .fold(BigInt::zero(), |acc, x| acc + x);
            if lhs != rhs {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

pub fn satisfies_shuffle_relations(p: &TruncatedPolynomial) -> bool {
    first_shuffle_violation(p).is_none()
}

/// Nonempty words over `{1..q}` of length at most `max_len`.
pub(crate) fn all_words(q: u8, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (1..=q).map(move |c| {
                    let mut n = w.clone();
                    n.push(c);
                    n
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
