//! The unipotent representation `Υ_k : F → GL_k(Ω_k)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::words::Word;

/// The indeterminate `λ_i^{(j)}`: superdiagonal position `i`, generator `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lambda {
    pub position: u8,
    pub generator: u8,
}

/// Commutative monomial as a sorted multiset of indeterminates; graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CommMonomial(Vec<Lambda>);

impl Ord for CommMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for CommMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `Ω_k = ℤ[λ_i^{(j)}]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommPoly {
    terms: BTreeMap<CommMonomial, BigInt>,
}

impl CommPoly {
    pub fn zero() -> Self {
        CommPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = CommPoly::zero();
        p.add_term(CommMonomial(Vec::new()), c.into());
        p
    }

    pub fn var(l: Lambda) -> Self {
        let mut p = CommPoly::zero();
        p.add_term(CommMonomial(vec![l]), BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: CommMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_assign(&mut self, other: &CommPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut m = a.0.clone();
                m.extend_from_slice(&b.0);
                m.sort();
                out.add_term(CommMonomial(m), ca * cb);
            }
        }
        out
    }

    pub fn neg(&self) -> CommPoly {
        CommPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Coefficient of the monomial given as a list of indeterminates.
    pub fn coefficient(&self, vars: &[Lambda]) -> BigInt {
        let mut m = vars.to_vec();
        m.sort();
        self.terms.get(&CommMonomial(m)).cloned().unwrap_or_default()
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            let mono: Vec<String> = m.0.iter().map(|l| format!("l{}^{}", l.position, l.generator)).collect();
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Upper unitriangular `k × k` matrix over `Ω_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitriangularMatrix {
    size: usize,
    /// Row-major strictly-upper entries; `(a, b)` with `a < b`, zero-based.
    upper: Vec<Vec<CommPoly>>,
}

impl UnitriangularMatrix {
    pub fn identity(size: usize) -> Self {
        UnitriangularMatrix {
            size,
            upper: (0..size).map(|a| vec![CommPoly::zero(); size - a - 1]).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry in row `a`, column `b` (zero-based).
    pub fn entry(&self, a: usize, b: usize) -> CommPoly {
        match a.cmp(&b) {
            Ordering::Equal => CommPoly::constant(1),
            Ordering::Greater => CommPoly::zero(),
            Ordering::Less => self.upper[a][b - a - 1].clone(),
        }
    }

    fn entry_mut(&mut self, a: usize, b: usize) -> &mut CommPoly {
        &mut self.upper[a][b - a - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.upper.iter().flatten().all(CommPoly::is_zero)
    }

    /// `Υ_k(x_j)`: ones on the diagonal, `λ_i^{(j)}` on the superdiagonal.
    pub fn generator(j: u8, size: usize) -> Self {
        let mut m = Self::identity(size);
        for a in 0..size.saturating_sub(1) {
            *m.entry_mut(a, a + 1) = CommPoly::var(Lambda {
                position: a as u8 + 1,
                generator: j,
            });
        }
        m
    }

    /// `Υ_k(x_j)⁻¹`, entry `(a, b)` equal to `(−1)^{b−a} λ_a^{(j)} ⋯ λ_{b−1}^{(j)}`.
    pub fn generator_inverse(j: u8, size: usize) -> Self {
        let mut m = Self::identity(size);
        for a in 0..size {
            let mut acc = CommPoly::constant(1);
            for b in a + 1..size {
                acc = acc
                    .mul(&CommPoly::var(Lambda {
                        position: b as u8,
                        generator: j,
                    }))
                    .neg();
                *m.entry_mut(a, b) = acc.clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Self::identity(n);
        for a in 0..n {
            for b in a + 1..n {
                let mut acc = CommPoly::zero();
                for m in a..=b {
                    let left = self.entry(a, m);
                    let right = other.entry(m, b);
                    if left.is_zero() || right.is_zero() {
                        continue;
                    }
                    acc.add_assign(&left.mul(&right));
                }
                *out.entry_mut(a, b) = acc;
            }
        }
        out
    }

    /// Inverse by forward substitution of `B·A = 1`.
    pub fn inverse(&self) -> Self {
        let n = self.size;
        let mut out = Self::identity(n);
        for a in 0..n {
            for b in a + 1..n {
                let mut acc = CommPoly::zero();
                for m in a..b {
                    let l = out.entry(a, m);
                    let r = self.entry(m, b);
                    if !l.is_zero() && !r.is_zero() {
                        acc.add_assign(&l.mul(&r));
                    }
                }
                *out.entry_mut(a, b) = acc.neg();
            }
        }
        out
    }
}

impl fmt::Display for UnitriangularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|b| self.entry(a, b).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `Υ_k(w)`, the product of generator matrices (inverses for inverse letters).
pub fn upsilon(w: &Word, k: usize) -> UnitriangularMatrix {
    assert!(k >= 2, "Υ_k needs k >= 2");
    w.letters().iter().fold(UnitriangularMatrix::identity(k), |acc, l| {
        let g = if l.inverse {
            UnitriangularMatrix::generator_inverse(l.generator, k)
        } else {
            UnitriangularMatrix::generator(l.generator, k)
        };
        acc.mul(&g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::nested_commutator;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lam(position: u8, generator: u8) -> Lambda {
        Lambda { position, generator }
    }

    #[test]
    fn generator_matrix_shape() {
        let m = upsilon(&w("a"), 3);
        assert_eq!(m.entry(0, 1), CommPoly::var(lam(1, 1)));
        assert_eq!(m.entry(1, 2), CommPoly::var(lam(2, 1)));
        assert!(m.entry(0, 2).is_zero());
        assert!(upsilon(&Word::identity(), 3).is_identity());
    }

    #[test]
    fn inverse_generator() {
        for k in 2..=5 {
            let g = UnitriangularMatrix::generator(2, k);
            assert!(g.mul(&UnitriangularMatrix::generator_inverse(2, k)).is_identity());
            assert_eq!(g.inverse(), UnitriangularMatrix::generator_inverse(2, k));
        }
    }

    #[test]
    fn weight_three_commutator_is_killed() {
        let c = nested_commutator(&[w("a"), w("a"), w("b")]);
        assert!(upsilon(&c, 3).is_identity());
        assert!(!upsilon(&c, 4).is_identity());
    }

    #[test]
    fn entries_carry_magnus_coefficients() {
        // Entry (0, 2) of Υ_3(x1 x2) is λ_1^{(1)} λ_2^{(2)}, matching c_12 = 1.
        let m = upsilon(&w("ab"), 3);
        assert_eq!(m.entry(0, 2).coefficient(&[lam(1, 1), lam(2, 2)]), 1.into());
        assert_eq!(m.entry(0, 2).coefficient(&[lam(1, 2), lam(2, 1)]), 0.into());
    }
}
