//! Standard (Lyndon) sequences, Witt numbers and standard commutators.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::magnus::magnus_expand;
use crate::words::word::{commutator, Word};

/// Refuse to enumerate more than this many candidate sequences by default.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1 << 26;

/// A nonempty sequence over `{1, …, q}` that is strictly smaller than each
/// of its proper suffixes (a proper prefix counts as smaller).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardSequence(Vec<u8>);

impl StandardSequence {
    pub fn new(indices: Vec<u8>) -> Result<Self> {
        if is_standard(&indices) {
            Ok(StandardSequence(indices))
        } else {
            Err(Error::NotStandard(format_index(&indices)))
        }
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Splits `I = J·K` with `K` the longest proper standard suffix.
    /// Returns `None` for single letters.
    pub fn standard_factorization(&self) -> Option<(StandardSequence, StandardSequence)> {
        if self.0.len() < 2 {
            return None;
        }
        let split = (1..self.0.len())
            .find(|&s| is_standard(&self.0[s..]))
            .expect("the last letter is always standard");
        Some((
            StandardSequence(self.0[..split].to_vec()),
            StandardSequence(self.0[split..].to_vec()),
        ))
    }
}

impl fmt::Display for StandardSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_index(&self.0))
    }
}

/// Formats an index sequence as digits (`112`), falling back to commas once
/// an index exceeds 9.
pub fn format_index(indices: &[u8]) -> String {
    if indices.iter().all(|&i| i <= 9) {
        indices.iter().map(|i| i.to_string()).collect()
    } else {
        indices.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses `112`, `1,1,2` or letter form `aab`.
pub fn parse_index(s: &str) -> Result<Vec<u8>> {
    let err = |reason: &str| Error::IndexSyntax {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    if t.is_empty() {
        return Err(err("empty"));
    }
    if t.contains(',') {
        return t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u8>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| err("expected positive integers"))
            })
            .collect();
    }
    t.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '1'..='9' => Ok(c as u8 - b'0'),
            'a'..='z' => Ok(c as u8 - b'a' + 1),
            _ => Err(err(&format!("unexpected character {c:?}"))),
        })
        .collect()
}

/// Membership predicate: `I < I[s..]` for every proper suffix.
pub fn is_standard(indices: &[u8]) -> bool {
    !indices.is_empty() && (1..indices.len()).all(|s| indices < &indices[s..])
}

/// All standard sequences of length `k` over `{1..q}` in lexicographic order.
pub fn standard_sequences(q: usize, k: usize) -> Result<Vec<StandardSequence>> {
    standard_sequences_bounded(q, k, DEFAULT_ENUMERATION_BOUND)
}

pub fn standard_sequences_bounded(q: usize, k: usize, bound: u64) -> Result<Vec<StandardSequence>> {
    if q == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "standard sequences need q >= 1 and k >= 1 (got q={q}, k={k})"
        )));
    }
    if q > u8::MAX as usize {
        return Err(Error::InvalidParameter(format!("rank {q} exceeds 255")));
    }
    let exceeds = (q as u64).checked_pow(k as u32).is_none_or(|total| total > bound);
    if exceeds {
        return Err(Error::EnumerationBound {
            rank: q,
            weight: k,
            bound,
        });
    }
    // Duval's generation of Lyndon words up to length k, in lexicographic order.
    let q = q as u8;
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![1];
    loop {
        if w.len() == k {
            out.push(StandardSequence(w.clone()));
        }
        let m = w.len();
        while w.len() < k {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&q) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    Ok(out)
}

/// Witt number `N_k = (1/k) Σ_{d|k} μ(k/d) q^d`, the rank of `F_k/F_{k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WittNumber {
    pub q: usize,
    pub k: usize,
    pub value: u128,
}

pub fn witt_number(q: usize, k: usize) -> Result<WittNumber> {
    if q == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "Witt numbers need q >= 1 and k >= 1 (got q={q}, k={k})"
        )));
    }
    let overflow = || Error::InvalidParameter(format!("q^k overflows for q={q}, k={k}"));
    let mut sum: i128 = 0;
    for d in (1..=k).filter(|d| k.is_multiple_of(*d)) {
        let power = (q as i128).checked_pow(d as u32).ok_or_else(overflow)?;
        sum += mobius(k / d) as i128 * power;
    }
    debug_assert_eq!(sum % k as i128, 0);
    Ok(WittNumber {
        q,
        k,
        value: (sum / k as i128) as u128,
    })
}

/// The Möbius function.
pub fn mobius(mut n: usize) -> i32 {
    assert!(n >= 1);
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Recursive bracketing along the standard factorization: `W_I = [W_J, W_K]`.
pub fn standard_bracket(seq: &StandardSequence) -> Word {
    match seq.standard_factorization() {
        None => Word::generator(seq.0[0]),
        Some((j, k)) => commutator(&standard_bracket(&j), &standard_bracket(&k)),
    }
}

/// A word `W_I ∈ F_{|I|}` whose Magnus coefficients on standard sequences of
/// length `|I|` are the Kronecker delta at `I`.
///
/// Starts from [`standard_bracket`], whose coordinate vector is unitriangular
/// (leading term `I`, other entries only at larger standard sequences), and
/// clears the entries above the diagonal by multiplying with powers of the
/// already-corrected commutators of larger sequences.
pub fn standard_commutator(seq: &StandardSequence) -> Word {
    let mut memo = HashMap::new();
    corrected(seq, &mut memo)
}

fn corrected(seq: &StandardSequence, memo: &mut HashMap<StandardSequence, Word>) -> Word {
    if let Some(w) = memo.get(seq) {
        return w.clone();
    }
    let k = seq.len();
    let mut word = standard_bracket(seq);
    if k >= 2 {
        let q = *seq.0.iter().max().unwrap() as usize;
        let poly = magnus_expand(&word, k + 1);
        let mut corrections = Vec::new();
        for other in standard_sequences(q, k).expect("small enumeration") {
            let coeff = poly.coeff(other.indices());
            if other == *seq {
                assert_eq!(coeff, 1.into(), "leading coefficient of {seq} must be 1");
            } else if coeff != 0.into() {
                assert!(other > *seq, "bracket of {seq} is not triangular at {other}");
                corrections.push((other, coeff));
            }
        }
        for (other, coeff) in corrections {
            let n: i64 = (&coeff).try_into().expect("coefficient fits in i64");
            word = word.mul(&corrected(&other, memo).pow(-n));
        }
    }
    memo.insert(seq.clone(), word.clone());
    word
}
