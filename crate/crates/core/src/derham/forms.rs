use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::magnus::TruncatedPolynomial;

/// A nonempty index word, ordered by length and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexWord(pub Vec<u8>);

impl Ord for IndexWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for IndexWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IndexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", letters(&self.0))
    }
}

fn letters(w: &[u8]) -> String {
    if w.iter().all(|&i| (1..=26).contains(&i)) {
        w.iter().map(|&i| (b'a' + i - 1) as char).collect()
    } else {
        let parts: Vec<String> = w.iter().map(u8::to_string).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Which multiplication the invariant forms are adapted to.
///
/// `Right` forms are the coefficients of `dP·P⁻¹`, invariant under `P ↦ P·M(x_h)`,
/// whose pullback rule shifts the last letter. `Left` forms are the coefficients of
/// `P⁻¹·dP`, invariant under `P ↦ M(x_h)·P`, shifting the first letter.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Action {
    #[default]
    Right,
    Left,
}

impl Action {
    /// The word obtained by removing the letter the action shifts, if that letter is `h`.
    fn shifted(self, w: &[u8], h: u8) -> Option<&[u8]> {
        match self {
            Action::Right if w.last() == Some(&h) => Some(&w[..w.len() - 1]),
            Action::Left if w.first() == Some(&h) => Some(&w[1..]),
            _ => None,
        }
    }
}

/// A multiset of β-variables, sorted.
type BetaMonomial = Vec<IndexWord>;

fn monomial_cmp(a: &BetaMonomial, b: &BetaMonomial) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct MonoKey(BetaMonomial);

impl MonoKey {
    fn ordered(&self, other: &Self) -> Ordering {
        monomial_cmp(&self.0, &other.0)
    }
}

/// Integer polynomial in the commuting coordinates `β_w`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BetaPolynomial {
    terms: BTreeMap<MonoKey, BigInt>,
}

impl BetaPolynomial {
    pub fn zero() -> Self {
        BetaPolynomial::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = BetaPolynomial::zero();
        p.add_term(Vec::new(), c.into());
        p
    }

    pub fn one() -> Self {
        BetaPolynomial::constant(1)
    }

    /// `β_w`; the empty word gives the constant `1`.
    pub fn var(w: &[u8]) -> Self {
        if w.is_empty() {
            return BetaPolynomial::one();
        }
        let mut p = BetaPolynomial::zero();
        p.add_term(vec![IndexWord(w.to_vec())], BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, mut m: BetaMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        m.sort();
        let key = MonoKey(m);
        let e = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Terms in canonical order: by degree, then by the sorted variable list.
    pub fn terms(&self) -> Vec<(Vec<IndexWord>, BigInt)> {
        let mut v: Vec<(&MonoKey, &BigInt)> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.ordered(b.0));
        v.into_iter().map(|(m, c)| (m.0.clone(), c.clone())).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = BetaPolynomial::zero();
        for (m, v) in &self.terms {
            out.add_term(m.0.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BetaPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut m = a.0.clone();
                m.extend(b.0.iter().cloned());
                out.add_term(m, x * y);
            }
        }
        out
    }

    /// Value at the point whose coordinates are the coefficients of `p`.
    pub fn eval(&self, p: &TruncatedPolynomial) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (m, c)| {
            acc + m.0.iter().fold(c.clone(), |v, w| v * p.coeff(&w.0))
        })
    }

    /// Pullback along the action of `x_h`: `β_w ↦ β_w + β_{w'}` when the shifted letter of `w` is `h`.
    pub fn pullback(&self, h: u8, action: Action) -> Self {
        let mut out = BetaPolynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = BetaPolynomial::constant(c.clone());
            for w in &m.0 {
                let mut image = BetaPolynomial::var(&w.0);
                if let Some(rest) = action.shifted(&w.0, h) {
                    image = image.add(&BetaPolynomial::var(rest));
                }
                acc = acc.mul(&image);
            }
            out = out.add(&acc);
        }
        out
    }

    /// `∂/∂β_w`.
    pub fn derivative(&self, w: &IndexWord) -> Self {
        let mut out = BetaPolynomial::zero();
        for (m, c) in &self.terms {
            let count = m.0.iter().filter(|v| *v == w).count();
            if count == 0 {
                continue;
            }
            let mut rest = m.0.clone();
            let pos = rest.iter().position(|v| v == w).expect("counted");
            rest.remove(pos);
            out.add_term(rest, c * BigInt::from(count));
        }
        out
    }

    pub fn variables(&self) -> Vec<IndexWord> {
        let mut vars: Vec<IndexWord> = self.terms.keys().flat_map(|m| m.0.iter().cloned()).collect();
        vars.sort();
        vars.dedup();
        vars
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &[IndexWord]) -> fmt::Result {
    for (i, w) in m.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "β_{w}")?;
    }
    Ok(())
}

impl fmt::Display for BetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        DifferentialForm::from_beta(self.clone()).fmt(f)
    }
}

/// A differential form with `β`-polynomial coefficients on the dX coframe.
///
/// Each wedge monomial is stored with its factors strictly increasing in
/// [`IndexWord`] order; reordering is absorbed into the coefficient sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialForm {
    grade: usize,
    terms: BTreeMap<Vec<IndexWord>, BetaPolynomial>,
}

/// Sorts `factors` in place; returns the permutation sign or `None` on a repeated factor.
fn canonicalize(factors: &mut [IndexWord]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..factors.len() {
        let mut j = i;
        while j > 0 && factors[j - 1] > factors[j] {
            factors.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if factors.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl DifferentialForm {
    pub fn zero(grade: usize) -> Self {
        DifferentialForm {
            grade,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_beta(p: BetaPolynomial) -> Self {
        let mut out = DifferentialForm::zero(0);
        out.add_term(Vec::new(), p);
        out
    }

    /// `dX_w`; the empty word gives the zero form.
    pub fn dx(w: &[u8]) -> Self {
        let mut out = DifferentialForm::zero(1);
        if !w.is_empty() {
            out.add_term(vec![IndexWord(w.to_vec())], BetaPolynomial::one());
        }
        out
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.values().map(BetaPolynomial::num_terms).sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[IndexWord], &BetaPolynomial)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn add_term(&mut self, mut factors: Vec<IndexWord>, coeff: BetaPolynomial) {
        debug_assert_eq!(factors.len(), self.grade);
        let Some(sign) = canonicalize(&mut factors) else {
            return;
        };
        if coeff.is_zero() {
            return;
        }
        let coeff = if sign < 0 { coeff.neg() } else { coeff };
        let sum = match self.terms.remove(&factors) {
            Some(old) => old.add(&coeff),
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(factors, sum);
        }
    }

    fn check_grade(&self, other: &Self) -> Result<()> {
        if self.grade != other.grade {
            return Err(Error::DegreeMismatch {
                expected: self.grade,
                found: other.grade,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_grade(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.mul_beta(&BetaPolynomial::constant(-1))
    }

    pub fn mul_beta(&self, p: &BetaPolynomial) -> Self {
        let mut out = DifferentialForm::zero(self.grade);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul(p));
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = DifferentialForm::zero(self.grade + other.grade);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut factors = a.clone();
                factors.extend(b.iter().cloned());
                out.add_term(factors, x.mul(y));
            }
        }
        out
    }

    /// `d(f dX_{w_1} ∧ ⋯) = Σ_w ∂f/∂β_w dX_w ∧ dX_{w_1} ∧ ⋯`.
    pub fn exterior_d(&self) -> Self {
        let mut out = DifferentialForm::zero(self.grade + 1);
        for (k, f) in &self.terms {
            for w in f.variables() {
                let mut factors = vec![w.clone()];
                factors.extend(k.iter().cloned());
                out.add_term(factors, f.derivative(&w));
            }
        }
        out
    }

    /// Pullback along the action of `x_h`, applied to coefficients and coframe.
    pub fn pullback(&self, h: u8, action: Action) -> Self {
        let mut out = DifferentialForm::zero(self.grade);
        for (k, f) in &self.terms {
            let mut acc = DifferentialForm::from_beta(f.pullback(h, action));
            for w in k {
                let mut image = DifferentialForm::dx(&w.0);
                if let Some(rest) = action.shifted(&w.0, h) {
                    image = image.add(&DifferentialForm::dx(rest)).expect("grade 1");
                }
                acc = acc.wedge(&image);
            }
            out = out.add(&acc).expect("same grade");
        }
        out
    }

    /// Value at the point `base` on the tangent vectors `vectors`, i.e.
    /// `Σ f(base) · det(v_i(w_j))`.
    pub fn evaluate(&self, base: &TruncatedPolynomial, vectors: &[&TruncatedPolynomial]) -> Result<BigInt> {
        if vectors.len() != self.grade {
            return Err(Error::Arity {
                expected: self.grade,
                found: vectors.len(),
            });
        }
        let mut total = BigInt::zero();
        for (k, f) in &self.terms {
            let c = f.eval(base);
            if c.is_zero() {
                continue;
            }
            let matrix: Vec<Vec<BigInt>> = vectors
                .iter()
                .map(|v| k.iter().map(|w| v.coeff(&w.0)).collect())
                .collect();
            total += c * determinant(&matrix);
        }
        Ok(total)
    }
}

fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => (0..n).fold(BigInt::zero(), |acc, col| {
            if m[0][col].is_zero() {
                return acc;
            }
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][col] * determinant(&minor);
            if col % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        }),
    }
}

impl fmt::Display for DifferentialForm {
    /// Terms `± [c] β_… dX_… ∧ dX_…`, ordered by coframe monomial and then by β-monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, poly) in &self.terms {
            for (m, c) in poly.terms() {
                if first {
                    if c.is_negative() {
                        write!(f, "- ")?;
                    }
                } else {
                    write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
                }
                first = false;
                let abs = c.abs();
                let mut parts_written = false;
                if !abs.is_one() || (m.is_empty() && k.is_empty()) {
                    write!(f, "{abs}")?;
                    parts_written = true;
                }
                if !m.is_empty() {
                    if parts_written {
                        write!(f, " ")?;
                    }
                    write_monomial(f, &m)?;
                    parts_written = true;
                }
                for (i, w) in k.iter().enumerate() {
                    if i == 0 {
                        if parts_written {
                            write!(f, " ")?;
                        }
                    } else {
                        write!(f, " ∧ ")?;
                    }
                    write!(f, "dX_{w}")?;
                }
            }
        }
        Ok(())
    }
}

fn parse_letters(s: &str, input: &str) -> Result<Vec<u8>> {
    let word = if let Some(inner) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        inner
            .split(',')
            .map(|p| p.trim().parse::<u8>().ok().filter(|&i| i > 0))
            .collect::<Option<Vec<u8>>>()
    } else {
        s.chars()
            .map(|c| c.is_ascii_lowercase().then(|| c as u8 - b'a' + 1))
            .collect::<Option<Vec<u8>>>()
    };
    match word {
        Some(w) if !w.is_empty() => Ok(w),
        _ => Err(Error::WordSyntax {
            input: input.to_string(),
            reason: format!("bad index word '{s}'"),
        }),
    }
}

/// Coefficient, β-factors and dX-factors of one parsed term.
type ParsedTerm = (BigInt, Vec<Vec<u8>>, Vec<Vec<u8>>);

impl FromStr for DifferentialForm {
    type Err = Error;

    /// Parses the printed grammar: `±` separated terms of an optional integer,
    /// `β_w` (or `b_w`) factors, and `dX_w` factors joined by `∧` or juxtaposition.
    fn from_str(input: &str) -> Result<Self> {
        let syntax = |reason: String| Error::WordSyntax {
            input: input.to_string(),
            reason,
        };
        let normalized = input
            .replace(['−', '-'], " - ")
            .replace('+', " + ")
            .replace(['∧', '·', '(', ')'], " ");
        let mut terms: Vec<ParsedTerm> = Vec::new();
        let mut sign = BigInt::one();
        let mut current: Option<ParsedTerm> = None;
        for tok in normalized.split_whitespace() {
            match tok {
                "+" | "-" => {
                    if let Some(t) = current.take() {
                        terms.push(t);
                    }
                    if tok == "-" {
                        sign = -sign;
                    }
                }
                _ => {
                    let t = current.get_or_insert_with(|| {
                        let s = std::mem::replace(&mut sign, BigInt::one());
                        (s, Vec::new(), Vec::new())
                    });
                    if let Some(w) = tok.strip_prefix("dX_") {
                        t.2.push(parse_letters(w, input)?);
                    } else if let Some(w) = tok.strip_prefix("β_").or_else(|| tok.strip_prefix("b_")) {
                        t.1.push(parse_letters(w, input)?);
                    } else if let Ok(n) = tok.parse::<BigInt>() {
                        t.0 *= n;
                    } else {
                        return Err(syntax(format!("unexpected token '{tok}'")));
                    }
                }
            }
        }
        if let Some(t) = current.take() {
            terms.push(t);
        }
        if terms.is_empty() {
            return Err(syntax("empty form".into()));
        }
        let grade = terms[0].2.len();
        let mut out = DifferentialForm::zero(grade);
        for (c, betas, dxs) in terms {
            if dxs.len() != grade {
                return Err(syntax(format!("mixed grades {grade} and {}", dxs.len())));
            }
            let mut coeff = BetaPolynomial::constant(c);
            for b in &betas {
                coeff = coeff.mul(&BetaPolynomial::var(b));
            }
            out.add_term(dxs.into_iter().map(IndexWord).collect(), coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dx(s: &str) -> DifferentialForm {
        DifferentialForm::dx(&parse_letters(s, s).unwrap())
    }

    fn beta(s: &str) -> BetaPolynomial {
        BetaPolynomial::var(&parse_letters(s, s).unwrap())
    }

    #[test]
    fn wedge_antisymmetry() {
        assert!(dx("a").wedge(&dx("a")).is_zero());
        assert_eq!(dx("a").wedge(&dx("b")), dx("b").wedge(&dx("a")).neg());
        let w = dx("bc").wedge(&dx("a"));
        assert_eq!(w.to_string(), "- dX_a ∧ dX_bc");
    }

    #[test]
    fn coordinate_differential() {
        let b = DifferentialForm::from_beta(beta("a"));
        assert_eq!(b.exterior_d(), dx("a"));
        let bb = DifferentialForm::from_beta(beta("ab"));
        assert!(bb.exterior_d().exterior_d().is_zero());
    }

    #[test]
    fn beta_pullback() {
        let p = DifferentialForm::from_beta(beta("ab"));
        assert_eq!(p.pullback(2, Action::Right).to_string(), "β_a + β_ab");
        assert_eq!(dx("a").pullback(1, Action::Right), dx("a"));
    }

    #[test]
    fn parse_round_trip() {
        let s = "dX_a ∧ dX_bc + dX_ab ∧ dX_c − β_a dX_b dX_c − β_b dX_a dX_c";
        let f: DifferentialForm = s.parse().unwrap();
        assert_eq!(f.grade(), 2);
        let again: DifferentialForm = f.to_string().parse().unwrap();
        assert_eq!(f, again);
        assert!("dX_a + dX_a ∧ dX_b".parse::<DifferentialForm>().is_err());
        assert_eq!(
            "2 β_a β_a dX_b".parse::<DifferentialForm>().unwrap().to_string(),
            "2 β_a β_a dX_b"
        );
    }

    #[test]
    fn evaluate_determinant() {
        let f = dx("a").wedge(&dx("b"));
        let base = TruncatedPolynomial::one(3);
        let v = TruncatedPolynomial::generator(1, 3);
        let w = TruncatedPolynomial::generator(2, 3);
        assert_eq!(f.evaluate(&base, &[&v, &w]).unwrap(), 1.into());
        assert_eq!(f.evaluate(&base, &[&w, &v]).unwrap(), (-1).into());
    }
}
