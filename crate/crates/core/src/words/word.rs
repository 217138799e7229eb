use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator or its inverse. Generators are numbered from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: u8, inverse: bool) -> Self {
        assert!(generator >= 1, "generators are numbered from 1");
        Letter { generator, inverse }
    }

    pub fn gen(generator: u8) -> Self {
        Letter::new(generator, false)
    }

    pub fn inv(generator: u8) -> Self {
        Letter::new(generator, true)
    }

    pub fn inverted(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// An element of the free group, stored letter by letter.
///
/// Words built through [`Word::mul`], [`Word::inverse`] and [`commutator`] are
/// freely reduced; [`Word::from_letters`] keeps the input as given so that
/// [`normalize`] has something to do.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn generator(i: u8) -> Self {
        Word {
            letters: vec![Letter::gen(i)],
        }
    }

    /// Builds a reduced word from signed generator indices, e.g. `[1, 2, -1, -2]`.
    pub fn from_signed(indices: &[i32]) -> Self {
        let letters = indices
            .iter()
            .map(|&i| {
                assert!(i != 0 && i.unsigned_abs() <= u8::MAX as u32);
                Letter::new(i.unsigned_abs() as u8, i < 0)
            })
            .collect();
        normalize(&Word { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Largest generator index occurring in the word (0 for the identity).
    pub fn max_generator(&self) -> u8 {
        self.letters.iter().map(|l| l.generator).max().unwrap_or(0)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.letters.iter().find(|l| l.generator as usize > rank) {
            Some(l) => Err(Error::GeneratorOutOfRange {
                index: l.generator as usize,
                rank,
            }),
            None => Ok(()),
        }
    }

    /// Free-group product; the result is reduced when both factors are.
    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Exponent sum of generator `i` (the abelianization coordinate).
    pub fn exponent_sum(&self, i: u8) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == i)
            .map(|l| l.sign() as i64)
            .sum()
    }

    /// Substitutes `images[g - 1]` for every occurrence of generator `g`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for l in &self.letters {
            let img = &images[l.generator as usize - 1];
            if l.inverse {
                out = out.mul(&img.inverse());
            } else {
                out = out.mul(img);
            }
        }
        out
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if letters.last().is_some_and(|&last| last.cancels(l)) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

/// Freely reduces a word.
pub fn normalize(w: &Word) -> Word {
    let mut letters = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        push_reduced(&mut letters, l);
    }
    Word { letters }
}

/// The commutator `a b a⁻¹ b⁻¹`, reduced.
pub fn commutator(a: &Word, b: &Word) -> Word {
    normalize(a).mul(&normalize(b)).mul(&a.inverse()).mul(&b.inverse())
}

/// Left-normed commutator `[w_1, [w_2, … [w_{n-1}, w_n]]]`.
pub fn nested_commutator(parts: &[Word]) -> Word {
    match parts.split_last() {
        None => Word::identity(),
        Some((last, rest)) => rest.iter().rev().fold(last.clone(), |acc, w| commutator(w, &acc)),
    }
}

impl fmt::Display for Word {
    /// Letters `a, b, …` for generators up to 26 (uppercase for inverses);
    /// the explicit `x7^-1` form is used once any generator exceeds 26.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        if self.max_generator() <= 26 {
            for l in &self.letters {
                let c = (b'a' + l.generator - 1) as char;
                if l.inverse {
                    write!(f, "{}", c.to_ascii_uppercase())?;
                } else {
                    write!(f, "{c}")?;
                }
            }
            Ok(())
        } else {
            let parts: Vec<String> = self
                .letters
                .iter()
                .map(|l| {
                    if l.inverse {
                        format!("x{}^-1", l.generator)
                    } else {
                        format!("x{}", l.generator)
                    }
                })
                .collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `abAB`, `x1 x2 x1^-1 x2^-1`, `x1^3`, and `1`/`e` for the identity.
    /// The parsed word is kept exactly as written.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::WordSyntax {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() || chars == ['1'] || chars == ['e'] {
            return Ok(Word::identity());
        }
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c == 'x' || c == 'X' {
                let inverse_prefix = c == 'X';
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(err("expected generator number after 'x'"));
                }
                let num: String = chars[start..i].iter().collect();
                let generator: u8 = num
                    .parse()
                    .ok()
                    .filter(|&g| g >= 1)
                    .ok_or_else(|| err("generator number out of range"))?;
                let mut exp: i64 = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let start = i;
                    if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let e: String = chars[start..i].iter().collect();
                    exp = e.parse().map_err(|_| err("bad exponent"))?;
                }
                if inverse_prefix {
                    exp = -exp;
                }
                for _ in 0..exp.unsigned_abs() {
                    letters.push(Letter::new(generator, exp < 0));
                }
            } else if c.is_ascii_lowercase() {
                letters.push(Letter::gen(c as u8 - b'a' + 1));
                i += 1;
            } else if c.is_ascii_uppercase() {
                letters.push(Letter::inv(c.to_ascii_lowercase() as u8 - b'a' + 1));
                i += 1;
            } else {
                return Err(err(&format!("unexpected character {c:?}")));
            }
        }
        Ok(Word { letters })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_cases() {
        assert_eq!(normalize(&w("aA")), Word::identity());
        assert_eq!(normalize(&w("abBa")), w("aa"));
        assert_eq!(normalize(&w("abAB")), w("abAB"));
        assert_eq!(normalize(&w("abcCBA")), Word::identity());
    }

    #[test]
    fn commutator_cases() {
        assert_eq!(commutator(&w("a"), &w("b")), w("abAB"));
        assert!(commutator(&w("a"), &w("a")).is_empty());
        let c = commutator(&w("a"), &commutator(&w("a"), &w("b")));
        assert_eq!(c.len(), 10);
        assert!(c.is_reduced());
    }

    #[test]
    fn parse_syntaxes_agree() {
        assert_eq!(w("abAB"), w("x1 x2 x1^-1 x2^-1"));
        assert_eq!(w("x1^3"), w("aaa"));
        assert_eq!(w("X2"), w("B"));
        assert_eq!(w("1"), Word::identity());
        assert!("a?".parse::<Word>().is_err());
        assert!("x".parse::<Word>().is_err());
    }

    #[test]
    fn display_round_trip() {
        let u = w("abAB cC");
        assert_eq!(u.to_string(), "abABcC");
        let big = Word::from_letters(vec![Letter::gen(27), Letter::inv(1)]);
        assert_eq!(big.to_string(), "x27 x1^-1");
        assert_eq!(big.to_string().parse::<Word>().unwrap(), big);
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let images = [w("ab"), w("Ba")];
        let u = w("aB");
        assert_eq!(u.substitute(&images), w("ab").mul(&w("Ab")));
    }

    #[test]
    fn rank_check() {
        assert!(w("abc").check_rank(2).is_err());
        assert!(w("abc").check_rank(3).is_ok());
    }
}
