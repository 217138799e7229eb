use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::magnus::{in_lower_central_term, magnus_expand, TruncatedPolynomial};
use crate::words::{standard_sequences, Letter, StandardSequence, Word};

/// An element of `F/F_k`, identified by its Magnus expansion modulo degree `k`.
#[derive(Clone, Debug)]
pub struct NilpotentElement {
    level: usize,
    rep: Word,
    normal_form: TruncatedPolynomial,
}

impl NilpotentElement {
    pub fn new(rep: Word, level: usize) -> Self {
        let normal_form = magnus_expand(&rep, level);
        NilpotentElement {
            level,
            rep,
            normal_form,
        }
    }

    pub fn identity(level: usize) -> Self {
        NilpotentElement::new(Word::identity(), level)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn rep(&self) -> &Word {
        &self.rep
    }

    pub fn normal_form(&self) -> &TruncatedPolynomial {
        &self.normal_form
    }

    pub fn is_identity(&self) -> bool {
        self.normal_form.is_one()
    }

    pub fn mul(&self, other: &NilpotentElement) -> Result<NilpotentElement> {
        check_level(self.level, other.level)?;
        Ok(NilpotentElement {
            level: self.level,
            rep: self.rep.mul(&other.rep),
            normal_form: self.normal_form.mul(&other.normal_form),
        })
    }

    pub fn inverse(&self) -> NilpotentElement {
        NilpotentElement {
            level: self.level,
            rep: self.rep.inverse(),
            normal_form: self.normal_form.inverse(),
        }
    }
}

impl PartialEq for NilpotentElement {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.normal_form == other.normal_form
    }
}

impl Eq for NilpotentElement {}

/// Coordinates of the fiber `ℤ^{N_k}`: the standard sequences of length `k` in lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionBasis {
    q: usize,
    k: usize,
    sequences: Vec<StandardSequence>,
}

impl ExtensionBasis {
    pub fn new(q: usize, k: usize) -> Result<Arc<Self>> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
        }
        Ok(Arc::new(ExtensionBasis {
            q,
            k,
            sequences: standard_sequences(q, k)?,
        }))
    }

    pub fn rank(&self) -> usize {
        self.q
    }

    pub fn level(&self) -> usize {
        self.k
    }

    pub fn sequences(&self) -> &[StandardSequence] {
        &self.sequences
    }

    pub fn position(&self, index: &[u8]) -> Option<usize> {
        self.sequences.iter().position(|s| s.indices() == index)
    }
}

/// An element `(g, α)` of the central extension `ℤ^{N_k} → F/F_{k+1} → F/F_k`.
#[derive(Clone, Debug)]
pub struct ExtensionElement {
    basis: Arc<ExtensionBasis>,
    base: TruncatedPolynomial,
    fiber: Vec<BigInt>,
}

impl ExtensionElement {
    pub fn identity(basis: &Arc<ExtensionBasis>) -> Self {
        ExtensionElement {
            base: TruncatedPolynomial::one(basis.k),
            fiber: vec![BigInt::zero(); basis.sequences.len()],
            basis: Arc::clone(basis),
        }
    }

    /// `(e, v)` with `v` central.
    pub fn central(basis: &Arc<ExtensionBasis>, fiber: Vec<BigInt>) -> Result<Self> {
        if fiber.len() != basis.sequences.len() {
            return Err(Error::InvalidParameter(format!(
                "fiber has length {}, expected {}",
                fiber.len(),
                basis.sequences.len()
            )));
        }
        Ok(ExtensionElement {
            fiber,
            ..ExtensionElement::identity(basis)
        })
    }

    /// The lift `(x̄_i, 0)`.
    pub fn lift(basis: &Arc<ExtensionBasis>, generator: u8) -> Result<Self> {
        if generator == 0 || generator as usize > basis.q {
            return Err(Error::GeneratorOutOfRange {
                index: generator as usize,
                rank: basis.q,
            });
        }
        Ok(ExtensionElement {
            base: TruncatedPolynomial::generator(generator, basis.k),
            ..ExtensionElement::identity(basis)
        })
    }

    pub fn basis(&self) -> &Arc<ExtensionBasis> {
        &self.basis
    }

    pub fn base(&self) -> &TruncatedPolynomial {
        &self.base
    }

    pub fn fiber(&self) -> &[BigInt] {
        &self.fiber
    }

    pub fn base_is_identity(&self) -> bool {
        self.base.is_one()
    }

    /// `(g, α)·(h, β) = (gh, α + β + (Σ_ℓ c_{I≤ℓ}(g) c_{I>ℓ}(h))_I)`.
    pub fn multiply(&self, other: &ExtensionElement) -> Result<ExtensionElement> {
        check_level(self.basis.k, other.basis.k)?;
        if self.basis != other.basis {
            return Err(Error::InvalidParameter(
                "extension elements over different bases".into(),
            ));
        }
        let fiber = self
            .basis
            .sequences
            .iter()
            .zip(self.fiber.iter().zip(&other.fiber))
            .map(|(seq, (a, b))| a + b + cocycle_value(seq.indices(), &self.base, &other.base))
            .collect();
        Ok(ExtensionElement {
            basis: Arc::clone(&self.basis),
            base: self.base.mul(&other.base),
            fiber,
        })
    }

    pub fn inverse(&self) -> ExtensionElement {
        let base = self.base.inverse();
        let fiber = self
            .basis
            .sequences
            .iter()
            .zip(&self.fiber)
            .map(|(seq, a)| -a - cocycle_value(seq.indices(), &self.base, &base))
            .collect();
        ExtensionElement {
            basis: Arc::clone(&self.basis),
            base,
            fiber,
        }
    }
}

impl PartialEq for ExtensionElement {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.base == other.base && self.fiber == other.fiber
    }
}

impl Eq for ExtensionElement {}

impl fmt::Display for ExtensionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, (", self.base)?;
        for (i, v) in self.fiber.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "))")
    }
}

fn cocycle_value(index: &[u8], g: &TruncatedPolynomial, h: &TruncatedPolynomial) -> BigInt {
    (1..index.len()).fold(BigInt::zero(), |acc, l| {
        let a = g.coeff(&index[..l]);
        if a.is_zero() {
            acc
        } else {
            acc + a * h.coeff(&index[l..])
        }
    })
}

fn check_level(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LevelMismatch { left, right });
    }
    Ok(())
}

/// Result of evaluating a word letter by letter in the extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionEvaluation {
    pub element: ExtensionElement,
    /// Whether the word lies in `F_k`; only then is the fiber a pairing.
    pub in_lower_central_term: bool,
}

pub fn evaluate_word_in_extension(w: &Word, basis: &Arc<ExtensionBasis>) -> Result<ExtensionEvaluation> {
    w.check_rank(basis.q)?;
    let mut acc = ExtensionElement::identity(basis);
    let mut lifts: Vec<Option<(ExtensionElement, ExtensionElement)>> = vec![None; basis.q + 1];
    for &Letter { generator, inverse } in w.letters() {
        let slot = &mut lifts[generator as usize];
        if slot.is_none() {
            let x = ExtensionElement::lift(basis, generator)?;
            let xi = x.inverse();
            *slot = Some((x, xi));
        }
        let (x, xi) = slot.as_ref().expect("filled above");
        acc = acc.multiply(if inverse { xi } else { x })?;
    }
    let in_fk = acc.base_is_identity();
    Ok(ExtensionEvaluation {
        element: acc,
        in_lower_central_term: in_fk,
    })
}

/// `[⟨α_{i_1},…,α_{i_k}⟩, w] = c_I(w)` for `w ∈ F_k`, `k = |I|`.
pub fn pairing(index: &StandardSequence, w: &Word) -> Result<BigInt> {
    let k = index.len();
    if !in_lower_central_term(w, k) {
        return Err(Error::NotInLowerCentralTerm { level: k });
    }
    Ok(magnus_expand(w, k + 1).coeff(index.indices()))
}

/// Both evaluation paths of the pairing: Magnus coefficient and extension fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingPaths {
    pub magnus: BigInt,
    pub extension: BigInt,
}

impl PairingPaths {
    pub fn agree(&self) -> bool {
        self.magnus == self.extension
    }
}

pub fn pairing_paths(index: &StandardSequence, w: &Word, q: usize) -> Result<PairingPaths> {
    let magnus = pairing(index, w)?;
    let basis = ExtensionBasis::new(q, index.len())?;
    let pos = basis
        .position(index.indices())
        .ok_or_else(|| Error::GeneratorOutOfRange {
            index: *index.indices().iter().max().unwrap_or(&0) as usize,
            rank: q,
        })?;
    let eval = evaluate_word_in_extension(w, &basis)?;
    Ok(PairingPaths {
        magnus,
        extension: eval.element.fiber[pos].clone(),
    })
}

/// `𝒮 = ⊕_{I} c_I : F_k/F_{k+1} → ℤ^{N_k}`.
pub fn s_map(w: &Word, q: usize, k: usize) -> Result<Vec<BigInt>> {
    w.check_rank(q)?;
    if !in_lower_central_term(w, k) {
        return Err(Error::NotInLowerCentralTerm { level: k });
    }
    let p = magnus_expand(w, k + 1);
    Ok(standard_sequences(q, k)?.iter().map(|s| p.coeff(s.indices())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{commutator, standard_commutator};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn seq(v: &[u8]) -> StandardSequence {
        StandardSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn central_fiber() {
        let b = ExtensionBasis::new(2, 2).unwrap();
        let v = ExtensionElement::central(&b, vec![5.into()]).unwrap();
        let e = ExtensionElement::identity(&b);
        assert_eq!(e.multiply(&v).unwrap(), v);
    }

    #[test]
    fn one_step_accrues_cocycle() {
        let b = ExtensionBasis::new(2, 2).unwrap();
        let x1 = ExtensionElement::lift(&b, 1).unwrap();
        let x2 = ExtensionElement::lift(&b, 2).unwrap();
        let p = x1.multiply(&x2).unwrap();
        assert_eq!(p.fiber(), &[BigInt::from(1)]);
        assert_eq!(p.base(), &magnus_expand(&w("ab"), 2));
    }

    #[test]
    fn commutator_fibers() {
        let b = ExtensionBasis::new(2, 2).unwrap();
        let e = evaluate_word_in_extension(&w("abAB"), &b).unwrap();
        assert!(e.in_lower_central_term);
        assert_eq!(e.element.fiber(), &[BigInt::from(1)]);

        let b = ExtensionBasis::new(2, 3).unwrap();
        let e = evaluate_word_in_extension(&standard_commutator(&seq(&[1, 1, 2])), &b).unwrap();
        let expected: Vec<BigInt> = b
            .sequences()
            .iter()
            .map(|s| BigInt::from(i32::from(s.indices() == [1, 1, 2])))
            .collect();
        assert_eq!(e.element.fiber(), expected.as_slice());

        let b = ExtensionBasis::new(2, 2).unwrap();
        assert!(!evaluate_word_in_extension(&w("a"), &b).unwrap().in_lower_central_term);
    }

    #[test]
    fn pairing_examples() {
        let x1 = w("a");
        let x2 = w("b");
        let c12 = commutator(&x1, &x2);
        assert_eq!(pairing(&seq(&[1, 2]), &c12).unwrap(), 1.into());
        let v = commutator(&x2, &c12);
        assert_eq!(pairing(&seq(&[1, 1, 2]), &v).unwrap(), 0.into());
        let u = commutator(&c12, &x2);
        let paths = pairing_paths(&seq(&[1, 2, 2]), &u, 2).unwrap();
        assert!(paths.agree());
        assert_eq!(paths.magnus.magnitude(), &1u8.into());
        assert!(pairing(&seq(&[1, 2]), &x1).is_err());
    }

    #[test]
    fn s_map_examples() {
        assert_eq!(
            s_map(&standard_commutator(&seq(&[1, 2])), 2, 2).unwrap(),
            vec![BigInt::from(1)]
        );
        let c = standard_commutator(&seq(&[1, 1, 2]));
        let v = s_map(&c.mul(&c), 2, 3).unwrap();
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(0)]);
        assert!(s_map(&w("a"), 2, 2).is_err());
    }

    #[test]
    fn nilpotent_equality() {
        let a = NilpotentElement::new(w("ab"), 2);
        let b = NilpotentElement::new(w("ba"), 2);
        assert_eq!(a, b);
        assert_ne!(NilpotentElement::new(w("ab"), 3), NilpotentElement::new(w("ba"), 3));
        assert!(a.mul(&a.inverse()).unwrap().is_identity());
    }
}
