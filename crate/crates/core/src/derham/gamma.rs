use num_bigint::BigInt;

use super::forms::{Action, BetaPolynomial, DifferentialForm};
use crate::error::{Error, Result};
use crate::magnus::magnus_expand;
use crate::words::Word;

/// `Σ_{compositions C of w} (−1)^{|C|} Π_{blocks} β_block`, the `w`-coefficient of `P⁻¹`.
fn inverse_coefficient(w: &[u8]) -> BetaPolynomial {
    if w.is_empty() {
        return BetaPolynomial::one();
    }
    // Recursion on the first block.
    let mut out = BetaPolynomial::zero();
    for first in 1..=w.len() {
        let rest = inverse_coefficient(&w[first..]);
        out = out.add(&BetaPolynomial::var(&w[..first]).mul(&rest).neg());
    }
    out
}

/// The invariant 1-form `γ_J`.
///
/// `Right`: `γ_J = Σ_{k_0=1}^{t} [P⁻¹]_{j_{k_0+1}⋯j_t} dX_{j_1⋯j_{k_0}}`.
/// `Left`: `γ_J = Σ_{m=0}^{t−1} [P⁻¹]_{j_1⋯j_m} dX_{j_{m+1}⋯j_t}`.
pub fn gamma_form(index: &[u8], action: Action) -> Result<DifferentialForm> {
    if index.is_empty() || index.contains(&0) {
        return Err(Error::InvalidParameter(
            "γ needs a nonempty index with entries ≥ 1".into(),
        ));
    }
    let t = index.len();
    let mut out = DifferentialForm::zero(1);
    for cut in 0..t {
        let (coeff, frame) = match action {
            Action::Right => (inverse_coefficient(&index[cut + 1..]), &index[..cut + 1]),
            Action::Left => (inverse_coefficient(&index[..cut]), &index[cut..]),
        };
        out = out.add(&DifferentialForm::dx(frame).mul_beta(&coeff))?;
    }
    Ok(out)
}

/// `Σ_{r=1}^{t−1} γ_{j_1⋯j_r} ∧ γ_{j_{r+1}⋯j_t}`.
pub fn split_wedge(index: &[u8], action: Action) -> Result<DifferentialForm> {
    let mut out = DifferentialForm::zero(2);
    for r in 1..index.len() {
        let term = gamma_form(&index[..r], action)?.wedge(&gamma_form(&index[r..], action)?);
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Sign `σ` in the structure equation `dγ_J = σ Σ_r γ_{J≤r} ∧ γ_{J>r}`.
pub fn structure_sign(action: Action) -> i32 {
    match action {
        Action::Right => 1,
        Action::Left => -1,
    }
}

/// The 2-form representing the `k`-fold Massey product of `α_{i_1}, …, α_{i_k}`.
pub fn massey_2form(index: &[u8], action: Action) -> Result<DifferentialForm> {
    if index.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "index must have length at least 2, got {}",
            index.len()
        )));
    }
    split_wedge(index, action)
}

/// Evaluates `Σ_r γ_{I≤r} ⊗ γ_{I>r}` at the pair `(g, h)` on Magnus coordinates.
///
/// Each factor is a 1-form evaluated at a base point on the coordinate increment
/// of one group element. For `Left` the first factor sits at `1` with increment
/// `M(g) − 1` and the second at `M(g)` with increment `M(gh) − M(g)`; for `Right`
/// the roles of the slots are mirrored (`M(h)` with `M(gh) − M(h)`, then `1` with
/// `M(h) − 1`). The result equals `Σ_r c_{I≤r}(g) c_{I>r}(h)`.
pub fn massey_bridge(index: &[u8], g: &Word, h: &Word, action: Action) -> Result<BigInt> {
    let depth = index.len() + 1;
    let one = magnus_expand(&Word::identity(), depth);
    let mg = magnus_expand(g, depth);
    let mh = magnus_expand(h, depth);
    let mgh = mg.mul(&mh);
    let mut total = BigInt::from(0);
    for r in 1..index.len() {
        let left = gamma_form(&index[..r], action)?;
        let right = gamma_form(&index[r..], action)?;
        let (a, b) = match action {
            Action::Left => (
                left.evaluate(&one, &[&mg.sub(&one)])?,
                right.evaluate(&mg, &[&mgh.sub(&mg)])?,
            ),
            Action::Right => (
                left.evaluate(&mh, &[&mgh.sub(&mh)])?,
                right.evaluate(&one, &[&mh.sub(&one)])?,
            ),
        };
        total += a * b;
    }
    Ok(total)
}
