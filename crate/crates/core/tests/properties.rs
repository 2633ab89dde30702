use orbitlang::algebra::{canonicalize, is_canonical, word_matrix, Generator, Prime, VectorPair};
use orbitlang::bijection::{vector_to_word, word_to_orbit};
use orbitlang::formulas::{orbit_increment, r_closed, r_recursive};
use orbitlang::language::enumerate_words;
use proptest::prelude::*;

fn pair() -> impl Strategy<Value = VectorPair> {
    (prop::sample::select(vec![2u64, 3, 5, 7]), 0usize..=6).prop_flat_map(|(q, n)| {
        let p = Prime::new(q).unwrap();
        (
            prop::collection::vec(0..q as u32, n),
            prop::collection::vec(0..q as u32, n),
        )
            .prop_map(move |(u, v)| VectorPair::new(p, u, v).unwrap())
    })
}

fn gen_word() -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(prop::sample::select(Generator::ALL.to_vec()), 0..=8)
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent(x in pair()) {
        let c = canonicalize(&x);
        prop_assert!(is_canonical(c.inner()));
        prop_assert_eq!(canonicalize(c.inner()), c);
    }

    #[test]
    fn canonicalize_is_orbit_invariant(x in pair(), w in gen_word()) {
        let y = word_matrix(x.modulus(), &w).apply(&x).unwrap();
        prop_assert_eq!(canonicalize(&y), canonicalize(&x));
    }

    #[test]
    fn action_composes(x in pair(), a in gen_word(), b in gen_word()) {
        let p = x.modulus();
        let ab: Vec<_> = a.iter().chain(&b).copied().collect();
        let m = word_matrix(p, &a).compose(&word_matrix(p, &b)).unwrap();
        prop_assert_eq!(m.apply(&x).unwrap(), word_matrix(p, &ab).apply(&x).unwrap());
        let step = word_matrix(p, &a).apply(&word_matrix(p, &b).apply(&x).unwrap()).unwrap();
        prop_assert_eq!(m.apply(&x).unwrap(), step);
    }

    #[test]
    fn zero_columns_stay_zero(x in pair(), w in gen_word()) {
        let y = word_matrix(x.modulus(), &w).apply(&x).unwrap();
        for i in 0..x.len() {
            prop_assert_eq!(x.column(i) == (0, 0), y.column(i) == (0, 0));
        }
    }

    #[test]
    fn classifier_is_sound(x in pair()) {
        let w = vector_to_word(&x);
        prop_assert_eq!(word_to_orbit(&w).unwrap(), canonicalize(&x));
    }

    #[test]
    fn increments_telescope(q in prop::sample::select(vec![2u64, 3, 5, 7, 11]), n in 1usize..40) {
        let p = Prime::new(q).unwrap();
        prop_assert_eq!(r_closed(p, n + 1).unwrap() - r_closed(p, n).unwrap(), orbit_increment(p, n));
        prop_assert_eq!(r_recursive(p, n), r_closed(p, n).unwrap());
    }

    #[test]
    fn word_stream_is_strictly_increasing(q in prop::sample::select(vec![2u64, 3, 5]), n in 0usize..=4) {
        let words: Vec<_> = enumerate_words(Prime::new(q).unwrap(), n).collect();
        prop_assert!(words.windows(2).all(|w| w[0].letters() < w[1].letters()));
    }
}
