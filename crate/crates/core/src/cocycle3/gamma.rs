use num_bigint::BigInt;

use crate::cochain::CochainExpr;
use crate::error::{Error, Result};
use crate::words::{format_index, is_standard};

/// A 3-cochain attached to `(s, I)` at ambient level `k`.
#[derive(Clone, Debug)]
pub struct ThreeCocycleSpec {
    pub s: u8,
    pub index: Vec<u8>,
    pub k: usize,
    pub expr: CochainExpr,
}

impl ThreeCocycleSpec {
    pub fn ell(&self) -> usize {
        self.index.len()
    }
}

type Term<'a> = (i64, Vec<(usize, &'a [u8])>);

fn build(degree: usize, terms: Vec<Term<'_>>) -> CochainExpr {
    let terms = terms
        .into_iter()
        .map(|(c, f)| (BigInt::from(c), CochainExpr::monomial(degree, &f)))
        .collect();
    CochainExpr::linear(terms).unwrap_or_else(|_| CochainExpr::zero(degree))
}

/// `Γ_{sI}(x,y,z) = c_s(x) Σ_j c_{i_1⋯i_j}(y) c_{i_{j+1}⋯i_ℓ}(z)` for any `|I| ≥ 2`.
pub fn gamma_map(s: u8, index: &[u8]) -> CochainExpr {
    let s = [s];
    let terms = (1..index.len())
        .map(|j| (1, vec![(0, &s[..]), (1, &index[..j]), (2, &index[j..])]))
        .collect();
    build(3, terms)
}

fn check(s: u8, index: &[u8], k: usize, len: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k must be at least 3, got {k}")));
    }
    if s == 0 || index.contains(&0) {
        return Err(Error::InvalidParameter("generator indices start at 1".into()));
    }
    if index.len() != len {
        return Err(Error::InvalidParameter(format!(
            "index has length {}, expected {len}",
            index.len()
        )));
    }
    if !is_standard(index) {
        return Err(Error::NotStandard(format_index(index)));
    }
    Ok(())
}

/// `Γ_{sI}` for `|I| = k`, a 3-cocycle on `F/F_k`.
pub fn gamma3(s: u8, index: &[u8], k: usize) -> Result<ThreeCocycleSpec> {
    check(s, index, k, k)?;
    Ok(ThreeCocycleSpec {
        s,
        index: index.to_vec(),
        k,
        expr: gamma_map(s, index),
    })
}

fn b_terms(s: u8, index: &[u8], k: usize, b_sign: i64) -> Result<CochainExpr> {
    if index.len() != k + 1 {
        return Err(Error::InvalidParameter(format!(
            "index has length {}, expected {}",
            index.len(),
            k + 1
        )));
    }
    let last = index[k];
    let sv = [s];
    let s_first = [s, index[0]];
    let s_last = [s, last];
    let lastv = [last];
    let terms = vec![
        (1, vec![(0, &sv[..]), (1, &index[..k]), (1, &lastv[..])]),
        (b_sign, vec![(0, &s_first[..]), (1, &index[1..])]),
        (1, vec![(0, &s_last[..]), (1, &index[..k])]),
    ];
    Ok(build(2, terms))
}

/// The correction `𝔟(x,y) = c_s(x) c_{i_1⋯i_k}(y) c_{i_{k+1}}(y) − c_{s i_1}(x) c_{i_2⋯i_{k+1}}(y) + c_{s i_{k+1}}(x) c_{i_1⋯i_k}(y)`
/// for `|I| = k+1`, chosen so that `Γ_{sI} − ∂𝔟` only reads coefficients of length `< k`.
pub fn b_correction(s: u8, index: &[u8], k: usize) -> Result<CochainExpr> {
    b_terms(s, index, k, -1)
}

/// The same three terms, all with sign `+`. Its coboundary does not cancel the length-`k` reads of `Γ`.
pub fn b_correction_printed(s: u8, index: &[u8], k: usize) -> Result<CochainExpr> {
    b_terms(s, index, k, 1)
}

/// `Γ_{sI} − ∂𝔟` for `|I| = k+1`, a 3-cocycle on `F/F_k`.
pub fn corrected_3cocycle(s: u8, index: &[u8], k: usize) -> Result<ThreeCocycleSpec> {
    check(s, index, k, k + 1)?;
    let expr = gamma_map(s, index).sub(&b_correction(s, index, k)?.coboundary())?;
    Ok(ThreeCocycleSpec {
        s,
        index: index.to_vec(),
        k,
        expr,
    })
}

/// Closed form of `Γ_{sI} − ∂𝔟` in which every coefficient index has length `< k`:
///
/// ```text
///   c_s(x) Σ_{j=2}^{k−1} c_{i_1⋯i_j}(y) c_{i_{j+1}⋯i_{k+1}}(z)
/// − c_s(x) Σ_{j=1}^{k−1} c_{i_1⋯i_j}(y) c_{i_{j+1}⋯i_k}(z) (c_{i_{k+1}}(y) + c_{i_{k+1}}(z))
/// + c_{s i_1}(x) Σ_{j=2}^{k} c_{i_2⋯i_j}(y) c_{i_{j+1}⋯i_{k+1}}(z)
/// − c_{s i_{k+1}}(x) Σ_{j=1}^{k−1} c_{i_1⋯i_j}(y) c_{i_{j+1}⋯i_k}(z)
/// ```
pub fn corrected_3cocycle_expanded(s: u8, index: &[u8], k: usize) -> Result<CochainExpr> {
    check(s, index, k, k + 1)?;
    let sv = [s];
    let s_first = [s, index[0]];
    let s_last = [s, index[k]];
    let lastv = [index[k]];
    let mut terms: Vec<Term<'_>> = Vec::new();
    for j in 2..k {
        terms.push((1, vec![(0, &sv[..]), (1, &index[..j]), (2, &index[j..])]));
    }
    for j in 1..k {
        terms.push((
            -1,
            vec![(0, &sv[..]), (1, &index[..j]), (2, &index[j..k]), (1, &lastv[..])],
        ));
        terms.push((
            -1,
            vec![(0, &sv[..]), (1, &index[..j]), (2, &index[j..k]), (2, &lastv[..])],
        ));
        terms.push((-1, vec![(0, &s_last[..]), (1, &index[..j]), (2, &index[j..k])]));
    }
    for j in 2..=k {
        terms.push((1, vec![(0, &s_first[..]), (1, &index[1..j]), (2, &index[j..])]));
    }
    Ok(build(3, terms))
}

/// The two-line closed form with the summation ranges and signs exactly as printed
/// (`ℓ = 2..k`, leading `−` on the `c_{s i_1}` and `c_{s i_{k+1}}` terms).
pub fn corrected_3cocycle_printed(s: u8, index: &[u8], k: usize) -> Result<CochainExpr> {
    check(s, index, k, k + 1)?;
    let i = |a: usize, b: usize| -> &[u8] {
        // one-based inclusive range i_a..i_b, empty when b < a
        if b < a {
            &[]
        } else {
            &index[a - 1..b]
        }
    };
    let sv = [s];
    let s_first = [s, index[0]];
    let s_last = [s, index[k]];
    let lastv = [index[k]];
    let mut terms: Vec<Term<'_>> = Vec::new();
    for l in 2..=k {
        terms.push((1, vec![(0, &sv[..]), (1, i(1, l)), (2, i(l + 1, k + 1))]));
        terms.push((
            -1,
            vec![(0, &sv[..]), (1, i(1, l - 1)), (2, i(l, k + 1)), (1, &lastv[..])],
        ));
        terms.push((
            -1,
            vec![(0, &sv[..]), (1, i(1, l - 1)), (2, i(l, k + 1)), (2, &lastv[..])],
        ));
        terms.push((-1, vec![(0, &s_first[..]), (1, i(2, l)), (2, i(l + 1, k + 1))]));
        terms.push((-1, vec![(0, &s_last[..]), (1, i(2, l - 1)), (2, i(l, k))]));
    }
    Ok(build(3, terms))
}
