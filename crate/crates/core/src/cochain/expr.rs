use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::magnus::{magnus_expand, TruncatedPolynomial};
use crate::words::Word;

/// An evaluable `n`-cochain with integer values.
///
/// Arguments are supplied as Magnus expansions truncated at
/// [`required_depth`](CochainExpr::required_depth) or deeper; group products
/// inside coboundaries are products of those expansions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CochainExpr {
    Const {
        degree: usize,
        value: BigInt,
    },
    /// `c_I(g_slot)`; the empty index reads the constant term `1`.
    Coeff {
        degree: usize,
        slot: usize,
        index: Vec<u8>,
    },
    /// Integer linear combination of cochains of the same degree.
    Linear {
        degree: usize,
        terms: Vec<(BigInt, CochainExpr)>,
    },
    /// Pointwise product of cochains of the same degree.
    Product {
        degree: usize,
        factors: Vec<CochainExpr>,
    },
    /// `(u ⌣ v)(g_1..g_{p+q}) = (−1)^{pq} u(g_1..g_p) v(g_{p+1}..g_{p+q})`.
    Cup(Box<CochainExpr>, Box<CochainExpr>),
    Coboundary(Box<CochainExpr>),
}

impl CochainExpr {
    pub fn zero(degree: usize) -> Self {
        CochainExpr::Const {
            degree,
            value: BigInt::zero(),
        }
    }

    pub fn constant(degree: usize, value: impl Into<BigInt>) -> Self {
        CochainExpr::Const {
            degree,
            value: value.into(),
        }
    }

    /// `c_I` applied to argument `slot` of a `degree`-cochain.
    pub fn coeff(degree: usize, slot: usize, index: &[u8]) -> Self {
        assert!(slot < degree, "slot {slot} out of range for degree {degree}");
        CochainExpr::Coeff {
            degree,
            slot,
            index: index.to_vec(),
        }
    }

    /// The 1-cochain `c_I`.
    pub fn c(index: &[u8]) -> Self {
        CochainExpr::coeff(1, 0, index)
    }

    /// Product of coefficient functionals `Π c_{I_m}(g_{slot_m})` as a `degree`-cochain.
    pub fn monomial(degree: usize, factors: &[(usize, &[u8])]) -> Self {
        CochainExpr::Product {
            degree,
            factors: factors
                .iter()
                .map(|&(slot, index)| CochainExpr::coeff(degree, slot, index))
                .collect(),
        }
    }

    /// The abelianization class `α_t`, i.e. `c_{(t)}`.
    pub fn alpha(t: u8) -> Self {
        CochainExpr::c(&[t])
    }

    pub fn degree(&self) -> usize {
        match self {
            CochainExpr::Const { degree, .. }
            | CochainExpr::Coeff { degree, .. }
            | CochainExpr::Linear { degree, .. }
            | CochainExpr::Product { degree, .. } => *degree,
            CochainExpr::Cup(u, v) => u.degree() + v.degree(),
            CochainExpr::Coboundary(f) => f.degree() + 1,
        }
    }

    /// Smallest truncation at which every coefficient read is defined.
    pub fn required_depth(&self) -> usize {
        match self {
            CochainExpr::Const { .. } => 1,
            CochainExpr::Coeff { index, .. } => index.len() + 1,
            CochainExpr::Linear { terms, .. } => terms.iter().map(|(_, e)| e.required_depth()).max().unwrap_or(1),
            CochainExpr::Product { factors, .. } => factors.iter().map(CochainExpr::required_depth).max().unwrap_or(1),
            CochainExpr::Cup(u, v) => u.required_depth().max(v.required_depth()),
            CochainExpr::Coboundary(f) => f.required_depth(),
        }
    }

    /// Longest coefficient index read by the expression.
    pub fn max_index_len(&self) -> usize {
        self.required_depth() - 1
    }

    pub fn cup(&self, other: &CochainExpr) -> CochainExpr {
        CochainExpr::Cup(Box::new(self.clone()), Box::new(other.clone()))
    }

    pub fn coboundary(&self) -> CochainExpr {
        CochainExpr::Coboundary(Box::new(self.clone()))
    }

    pub fn scale(&self, factor: impl Into<BigInt>) -> CochainExpr {
        CochainExpr::Linear {
            degree: self.degree(),
            terms: vec![(factor.into(), self.clone())],
        }
    }

    pub fn add(&self, other: &CochainExpr) -> Result<CochainExpr> {
        CochainExpr::linear(vec![(BigInt::one(), self.clone()), (BigInt::one(), other.clone())])
    }

    pub fn sub(&self, other: &CochainExpr) -> Result<CochainExpr> {
        CochainExpr::linear(vec![(BigInt::one(), self.clone()), (-BigInt::one(), other.clone())])
    }

    pub fn linear(terms: Vec<(BigInt, CochainExpr)>) -> Result<CochainExpr> {
        let degree = terms
            .first()
            .map(|(_, e)| e.degree())
            .ok_or_else(|| Error::InvalidParameter("empty linear combination".into()))?;
        check_degrees(degree, terms.iter().map(|(_, e)| e))?;
        Ok(CochainExpr::Linear { degree, terms })
    }

    /// Sum of same-degree cochains; `degree` is needed for the empty sum.
    pub fn sum(degree: usize, parts: Vec<CochainExpr>) -> Result<CochainExpr> {
        check_degrees(degree, parts.iter())?;
        Ok(CochainExpr::Linear {
            degree,
            terms: parts.into_iter().map(|e| (BigInt::one(), e)).collect(),
        })
    }

    pub fn product(factors: Vec<CochainExpr>) -> Result<CochainExpr> {
        let degree = factors
            .first()
            .map(CochainExpr::degree)
            .ok_or_else(|| Error::InvalidParameter("empty product".into()))?;
        check_degrees(degree, factors.iter())?;
        Ok(CochainExpr::Product { degree, factors })
    }

    /// Evaluates at a tuple of Magnus expansions.
    ///
    /// # Panics
    /// If the arity is wrong or an argument is truncated too shallowly.
    pub fn eval(&self, args: &[TruncatedPolynomial]) -> BigInt {
        debug_assert_eq!(args.len(), self.degree());
        match self {
            CochainExpr::Const { value, .. } => value.clone(),
            CochainExpr::Coeff { slot, index, .. } => {
                let p = &args[*slot];
                assert!(
                    index.len() < p.bound(),
                    "argument truncated at {} cannot read a length-{} coefficient",
                    p.bound(),
                    index.len()
                );
                p.coeff(index)
            }
            CochainExpr::Linear { terms, .. } => {
                terms.iter().fold(BigInt::zero(), |acc, (c, e)| acc + c * e.eval(args))
            }
            CochainExpr::Product { factors, .. } => {
                let mut acc = BigInt::one();
                for f in factors {
                    let v = f.eval(args);
                    if v.is_zero() {
                        return v;
                    }
                    acc *= v;
                }
                acc
            }
            CochainExpr::Cup(u, v) => {
                let p = u.degree();
                let left = u.eval(&args[..p]);
                if left.is_zero() {
                    return left;
                }
                let value = left * v.eval(&args[p..]);
                if (p * v.degree()) % 2 == 1 {
                    -value
                } else {
                    value
                }
            }
            CochainExpr::Coboundary(f) => coboundary_eval(f, args),
        }
    }

    /// Evaluates at words, expanding each to the required depth.
    pub fn eval_words(&self, words: &[Word]) -> Result<BigInt> {
        if words.len() != self.degree() {
            return Err(Error::Arity {
                expected: self.degree(),
                found: words.len(),
            });
        }
        let depth = self.required_depth();
        let args: Vec<TruncatedPolynomial> = words.iter().map(|w| magnus_expand(w, depth)).collect();
        Ok(self.eval(&args))
    }
}

fn check_degrees<'a>(degree: usize, exprs: impl Iterator<Item = &'a CochainExpr>) -> Result<()> {
    for e in exprs {
        if e.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: e.degree(),
            });
        }
    }
    Ok(())
}

/// `(∂f)(g_1..g_n) = f(g_2..g_n) + Σ_{i=1}^{n−1} (−1)^i f(.., g_i g_{i+1}, ..) + (−1)^n f(g_1..g_{n−1})`.
fn coboundary_eval(f: &CochainExpr, args: &[TruncatedPolynomial]) -> BigInt {
    let n = args.len();
    if n == 1 {
        // f is a 0-cochain: a constant.
        return BigInt::zero();
    }
    let mut total = f.eval(&args[1..]);
    let last = f.eval(&args[..n - 1]);
    if n.is_multiple_of(2) {
        total += last;
    } else {
        total -= last;
    }
    for i in 0..n - 1 {
        let mut merged: Vec<TruncatedPolynomial> = Vec::with_capacity(n - 1);
        merged.extend_from_slice(&args[..i]);
        merged.push(args[i].mul(&args[i + 1]));
        merged.extend_from_slice(&args[i + 2..]);
        let v = f.eval(&merged);
        if i % 2 == 0 {
            total -= v;
        } else {
            total += v;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn cup_sign() {
        let cup = CochainExpr::alpha(1).cup(&CochainExpr::alpha(2));
        assert_eq!(cup.degree(), 2);
        assert_eq!(cup.eval_words(&[w("a"), w("b")]).unwrap(), (-1).into());
        assert_eq!(cup.eval_words(&[w("b"), w("a")]).unwrap(), 0.into());
        let zero = CochainExpr::alpha(1).cup(&CochainExpr::zero(1));
        assert_eq!(zero.eval_words(&[w("ab"), w("ab")]).unwrap(), 0.into());
    }

    #[test]
    fn coboundary_of_homomorphism_vanishes() {
        let d = CochainExpr::alpha(1).coboundary();
        assert_eq!(d.eval_words(&[w("aab"), w("Aba")]).unwrap(), 0.into());
        let d0 = CochainExpr::constant(0, 5).coboundary();
        assert_eq!(d0.eval_words(&[w("ab")]).unwrap(), 0.into());
    }

    #[test]
    fn coboundary_of_c12_is_minus_product() {
        let d = CochainExpr::c(&[1, 2]).coboundary();
        for (x, y) in [("a", "b"), ("aab", "bbA"), ("ab", "ab")] {
            let (x, y) = (w(x), w(y));
            let expected = -(crate::c(&[1], &x, 2).unwrap() * crate::c(&[2], &y, 2).unwrap());
            assert_eq!(d.eval_words(&[x, y]).unwrap(), expected);
        }
    }

    #[test]
    fn degree_checks() {
        assert!(CochainExpr::alpha(1).add(&CochainExpr::zero(2)).is_err());
        assert!(CochainExpr::product(vec![]).is_err());
        assert!(CochainExpr::alpha(1).eval_words(&[]).is_err());
    }
}
