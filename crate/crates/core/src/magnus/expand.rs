use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::magnus::poly::TruncatedPolynomial;
use crate::words::Word;

/// The Magnus expansion `x_i ↦ 1 + X_i` of `w`, truncated below degree `k`.
pub fn magnus_expand(w: &Word, k: usize) -> TruncatedPolynomial {
    let mut p = TruncatedPolynomial::one(k);
    for l in w.letters() {
        p = if l.inverse {
            p.mul_generator_inverse(l.generator)
        } else {
            p.mul_generator(l.generator)
        };
    }
    p
}

/// `c_I(w)`: the `X_I` coefficient of the Magnus expansion mod degree `k`.
pub fn c(index: &[u8], w: &Word, k: usize) -> Result<BigInt> {
    if index.len() >= k {
        return Err(Error::CoefficientOutOfRange {
            len: index.len(),
            bound: k,
        });
    }
    Ok(magnus_expand(w, index.len() + 1).coeff(index))
}

/// Decides equality in `F/F_k` through the Magnus normal form.
pub fn equal_mod_fk(u: &Word, v: &Word, k: usize) -> bool {
    magnus_expand(u, k) == magnus_expand(v, k)
}

/// Whether `w ∈ F_k`, i.e. its expansion is `1` modulo degree `k`.
pub fn in_lower_central_term(w: &Word, k: usize) -> bool {
    magnus_expand(w, k).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{commutator, nested_commutator};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(magnus_expand(&w("a"), 3).to_string(), "1 + X1");
        assert!(magnus_expand(&Word::identity(), 5).is_one());
        assert_eq!(magnus_expand(&w("abAB"), 3).to_string(), "1 + X1X2 - X2X1");
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(magnus_expand(&w("ab"), 3).coeff(&[1, 2]), 1.into());
        assert_eq!(magnus_expand(&w("a"), 3).coeff(&[1, 1]), 0.into());
        assert_eq!(magnus_expand(&w("abAB"), 3).coeff(&[2, 1]), (-1).into());
        assert_eq!(c(&[1], &w("a"), 2).unwrap(), 1.into());
        assert_eq!(c(&[1, 2], &w("abAB"), 3).unwrap(), 1.into());
        assert_eq!(c(&[1, 2], &w("ba"), 3).unwrap(), 0.into());
        assert!(c(&[1, 2], &w("ab"), 2).is_err());
    }

    #[test]
    fn equality_examples() {
        assert!(equal_mod_fk(&w("ab"), &w("ba"), 2));
        assert!(!equal_mod_fk(&w("ab"), &w("ba"), 3));
        let f3 = nested_commutator(&[w("a"), w("a"), w("b")]);
        let u = w("abbAbA");
        assert!(equal_mod_fk(&u, &u.mul(&f3), 3));
        assert!(!equal_mod_fk(&u, &u.mul(&f3), 4));
    }

    #[test]
    fn commutator_of_depth_three_lies_in_f3() {
        let c3 = commutator(&w("a"), &commutator(&w("a"), &w("b")));
        assert!(in_lower_central_term(&c3, 3));
        assert!(!in_lower_central_term(&c3, 4));
    }
}
