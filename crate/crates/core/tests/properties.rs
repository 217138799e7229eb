use nilcoh::cochain::{massey2, s_map, CochainExpr};
use nilcoh::derham::{gamma_form, Action};
use nilcoh::magnus::{magnus_expand, satisfies_shuffle_relations, upsilon};
use nilcoh::topology::{johnson_tau, torelli_depth, FreeEndomorphism};
use nilcoh::words::{commutator, nested_commutator, normalize, Letter, Word};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn raw_word(q: u8, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=q, any::<bool>()), 0..=max)
        .prop_map(|v| Word::from_letters(v.into_iter().map(|(g, i)| Letter::new(g, i)).collect()))
}

fn word(q: u8, max: usize) -> impl Strategy<Value = Word> {
    raw_word(q, max).prop_map(|w| normalize(&w))
}

fn index(q: u8, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1..=q, len)
}

fn concat(u: &Word, v: &Word) -> Word {
    let mut letters = u.letters().to_vec();
    letters.extend_from_slice(v.letters());
    Word::from_letters(letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalize_is_a_homomorphism(u in raw_word(3, 14), v in raw_word(3, 14)) {
        let n = normalize(&concat(&u, &v));
        prop_assert_eq!(&n, &normalize(&u).mul(&normalize(&v)));
        prop_assert!(n.is_reduced());
        prop_assert_eq!(normalize(&n), n);
    }

    #[test]
    fn magnus_multiplicative_and_invertible(u in word(3, 12), v in word(3, 12), k in 1usize..6) {
        let mu = magnus_expand(&u, k);
        prop_assert_eq!(magnus_expand(&u.mul(&v), k), mu.mul(&magnus_expand(&v, k)));
        prop_assert_eq!(magnus_expand(&u.inverse(), k), mu.inverse());
    }

    #[test]
    fn coefficient_splitting(u in word(2, 10), v in word(2, 10), idx in index(2, 1..=4)) {
        let k = idx.len() + 1;
        let (mu, mv) = (magnus_expand(&u, k), magnus_expand(&v, k));
        let lhs = magnus_expand(&u.mul(&v), k).coeff(&idx);
        let rhs: BigInt = (0..=idx.len()).map(|l| mu.coeff(&idx[..l]) * mv.coeff(&idx[l..])).sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn upsilon_is_a_representation(u in word(2, 8), v in word(2, 8), k in 2usize..5) {
        prop_assert_eq!(upsilon(&u.mul(&v), k), upsilon(&u, k).mul(&upsilon(&v, k)));
        prop_assert!(upsilon(&u, k).mul(&upsilon(&u.inverse(), k)).is_identity());
    }

    #[test]
    fn magnus_image_satisfies_shuffles(u in word(3, 12)) {
        prop_assert!(satisfies_shuffle_relations(&magnus_expand(&u, 5)));
    }

    #[test]
    fn coboundary_squares_to_zero(idx in index(2, 1..=3), x in word(2, 8), y in word(2, 8), z in word(2, 8)) {
        let dd = CochainExpr::c(&idx).coboundary().coboundary();
        prop_assert_eq!(dd.eval_words(&[x.clone(), y.clone(), z.clone()]).unwrap(), BigInt::from(0));
        if idx.len() >= 2 {
            let m = massey2(&idx, idx.len()).unwrap();
            let w = x.mul(&y);
            let value = m.coboundary().coboundary().eval_words(&[x, y, z, w]).unwrap();
            prop_assert_eq!(value, BigInt::from(0));
        }
    }

    #[test]
    fn s_map_is_additive(parts in prop::collection::vec(word(2, 2), 6), k in 2usize..4) {
        let a = nested_commutator(&parts[..k]);
        let b = nested_commutator(&parts[3..3 + k]);
        let sum: Vec<BigInt> = s_map(&a, 2, k).unwrap().iter().zip(s_map(&b, 2, k).unwrap()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(s_map(&a.mul(&b), 2, k).unwrap(), sum);
    }

    #[test]
    fn wedge_is_graded_commutative(j in index(3, 1..=3), l in index(3, 1..=3)) {
        let a = gamma_form(&j, Action::Right).unwrap();
        let b = gamma_form(&l, Action::Right).unwrap();
        prop_assert_eq!(a.wedge(&b), b.wedge(&a).neg());
        let da = a.exterior_d();
        prop_assert_eq!(da.wedge(&b), b.wedge(&da));
    }

    #[test]
    fn johnson_is_additive_under_composition(c1 in word(2, 3), c2 in word(2, 3), d1 in word(2, 3), d2 in word(2, 3)) {
        let x = |i: u8| Word::generator(i);
        let f = FreeEndomorphism::new(vec![x(1).mul(&commutator(&c1, &c2)), x(2)]).unwrap();
        let g = FreeEndomorphism::new(vec![x(1), commutator(&d1, &d2).mul(&x(2))]).unwrap();
        prop_assume!(torelli_depth(&f, 2) >= 2 && torelli_depth(&g, 2) >= 2);
        let fg = f.compose(&g).unwrap();
        let sum = johnson_tau(&f, 2).unwrap().add(&johnson_tau(&g, 2).unwrap()).unwrap();
        prop_assert_eq!(johnson_tau(&fg, 2).unwrap(), sum);
    }
}

#[test]
fn identity_word_expands_to_one() {
    assert!(magnus_expand(&Word::identity(), 4).is_one());
    assert!(BigInt::one() == magnus_expand(&Word::identity(), 4).constant());
}
