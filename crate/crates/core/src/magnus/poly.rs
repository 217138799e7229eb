use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::format_index;

/// A word in the noncommuting indeterminates `X_1, …, X_q`, stored as its
/// index sequence. Ordered by length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of `ℤ⟨X_1, …, X_q⟩ / 𝒥_k`: monomials of length `>= bound` are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    bound: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedPolynomial {
    pub fn zero(bound: usize) -> Self {
        TruncatedPolynomial {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bound: usize) -> Self {
        let mut p = Self::zero(bound);
        p.add_term(Monomial::one(), BigInt::one());
        p
    }

    /// `1 + X_i`.
    pub fn generator(i: u8, bound: usize) -> Self {
        let mut p = Self::one(bound);
        p.add_term(Monomial(vec![i]), BigInt::one());
        p
    }

    pub fn from_terms<I>(bound: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u8>, BigInt)>,
    {
        let mut p = Self::zero(bound);
        for (m, c) in terms {
            p.add_term(Monomial(m), c);
        }
        p
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c·m`, ignoring monomials at or beyond the bound.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if m.len() >= self.bound || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The coefficient `β_I(p)`; undefined once `|I| >= bound`.
    pub fn coefficient(&self, index: &[u8]) -> Result<BigInt> {
        if index.len() >= self.bound {
            return Err(Error::CoefficientOutOfRange {
                len: index.len(),
                bound: self.bound,
            });
        }
        Ok(self.coeff(index))
    }

    /// Like [`coefficient`](Self::coefficient) but reads zero past the bound.
    pub fn coeff(&self, index: &[u8]) -> BigInt {
        self.terms.get(&Monomial(index.to_vec())).cloned().unwrap_or_default()
    }

    pub fn constant(&self) -> BigInt {
        self.coeff(&[])
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant().is_one()
    }

    pub fn truncate(&self, bound: usize) -> Self {
        let bound = bound.min(self.bound);
        TruncatedPolynomial {
            bound,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.len() < bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of exactly length `degree`.
    pub fn homogeneous(&self, degree: usize) -> BTreeMap<Vec<u8>, BigInt> {
        self.terms
            .iter()
            .filter(|(m, _)| m.len() == degree)
            .map(|(m, c)| (m.0.clone(), c.clone()))
            .collect()
    }

    /// Smallest length carrying a nonzero coefficient, excluding the constant term.
    pub fn lowest_nonconstant_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::len).find(|&l| l > 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.bound);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TruncatedPolynomial {
            bound: self.bound,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        let mut out = Self::zero(bound);
        for (a, ca) in &self.terms {
            if a.len() >= bound {
                break;
            }
            for (b, cb) in &other.terms {
                if a.len() + b.len() >= bound {
                    break;
                }
                let mut m = a.0.clone();
                m.extend_from_slice(&b.0);
                out.add_term(Monomial(m), ca * cb);
            }
        }
        out
    }

    /// Right multiplication by `1 + X_i`.
    pub fn mul_generator(&self, i: u8) -> Self {
        let mut out = self.clone();
        for (m, c) in &self.terms {
            if m.len() + 1 < self.bound {
                let mut n = m.0.clone();
                n.push(i);
                out.add_term(Monomial(n), c.clone());
            }
        }
        out
    }

    /// Right multiplication by `(1 + X_i)⁻¹ = 1 − X_i + X_i² − ⋯`.
    pub fn mul_generator_inverse(&self, i: u8) -> Self {
        // q = p − q·X_i, solved by increasing monomial length.
        let mut out = Self::zero(self.bound);
        let mut pending: BTreeMap<Monomial, BigInt> = self.terms.clone();
        while let Some((m, c)) = pending.pop_first() {
            if m.len() + 1 < self.bound {
                let mut n = m.0.clone();
                n.push(i);
                let entry = pending.entry(Monomial(n)).or_default();
                *entry -= &c;
            }
            out.add_term(m, c);
        }
        out
    }

    /// Multiplicative inverse; requires constant term 1.
    pub fn inverse(&self) -> Self {
        assert!(self.constant().is_one(), "only unipotent elements are inverted");
        let nil = self.sub(&Self::one(self.bound));
        let mut out = Self::one(self.bound);
        let mut power = Self::one(self.bound);
        for n in 1..self.bound {
            power = power.mul(&nil);
            if power.terms.is_empty() {
                break;
            }
            if n % 2 == 1 {
                out = out.sub(&power);
            } else {
                out = out.add(&power);
            }
        }
        out
    }

    /// Map from index strings (`"12"` for `X1X2`, `""` for the constant) to coefficients.
    pub fn index_map(&self) -> Vec<(String, BigInt)> {
        self.terms
            .iter()
            .map(|(m, c)| (format_index(&m.0), c.clone()))
            .collect()
    }
}

impl fmt::Display for TruncatedPolynomial {
    /// Canonical monomial order, e.g. `1 + X1X2 - X2X1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            let mono: String = m.0.iter().map(|i| format!("X{i}")).collect();
            if m.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}
