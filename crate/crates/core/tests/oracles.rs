use std::collections::BTreeSet;

use orbitlang::algebra::{canonicalize, is_canonical, Prime, VectorPair};
use orbitlang::bijection::word_to_vector;
use orbitlang::formulas::{moreira_reis_as, r_closed, r_closed_as};
use orbitlang::language::{count_words_as, enumerate_words, is_restricted_growth, is_word_letters};
use orbitlang::orbits::{
    count_canonical_census_as, enumerate_orbits, orbit_bfs, partition, same_orbit,
};
use orbitlang::polar::{build_dual_polar_space, closure, universal_embedding_dim};
use orbitlang::{Count128, Count64, Error};

fn prime(q: u64) -> Prime {
    Prime::new(q).unwrap()
}

#[test]
fn restricted_growth_matches_membership_for_p2() {
    let p = prime(2);
    for n in 0..=4 {
        for idx in 0..4u32.pow(n as u32) {
            let letters: Vec<u32> = (0..n).rev().map(|i| (idx >> (2 * i)) & 3).collect();
            assert_eq!(
                is_word_letters(p, &letters).unwrap(),
                is_restricted_growth(&letters),
                "{letters:?}"
            );
        }
    }
}

#[test]
fn canonical_forms_match_bfs_orbits() {
    for (q, n) in [(2, 3), (3, 2), (5, 1), (2, 4)] {
        let p = prime(q);
        let orbits = partition(p, n, 1 << 20).unwrap();
        let mut forms = BTreeSet::new();
        for o in &orbits {
            let members = orbit_bfs(o.representative().inner()).unwrap();
            for m in members.members().unwrap() {
                assert_eq!(&canonicalize(m), o.representative());
            }
            forms.insert(o.representative().clone());
        }
        let streamed: BTreeSet<_> = enumerate_orbits(p, n).collect();
        assert_eq!(forms, streamed);
        assert_eq!(forms.len(), enumerate_words(p, n).count());
    }
}

#[test]
fn same_orbit_agrees_with_canonical_forms() {
    let p = prime(3);
    let all: Vec<_> = (0..81)
        .map(|i| VectorPair::from_state_index(p, 2, i))
        .collect();
    for x in &all {
        for y in all.iter().step_by(7) {
            assert_eq!(
                same_orbit(x, y).unwrap(),
                canonicalize(x) == canonicalize(y)
            );
        }
    }
    let other = VectorPair::zero(p, 3);
    assert!(matches!(
        same_orbit(&all[0], &other),
        Err(Error::ShapeMismatch { .. })
    ));
}

#[test]
fn word_images_are_canonical() {
    for q in [2, 3, 5] {
        for n in 0..=3 {
            for w in enumerate_words(prime(q), n) {
                assert!(is_canonical(&word_to_vector(&w).unwrap()), "{w}");
            }
        }
    }
}

#[test]
fn fixed_width_counts_agree_with_bignum() {
    for q in [2, 3, 5, 7] {
        let p = prime(q);
        for n in 0..=8 {
            let big = r_closed(p, n).unwrap().to_string();
            assert_eq!(r_closed_as::<Count64>(p, n).unwrap().to_string(), big);
            assert_eq!(count_words_as::<Count128>(p, n).unwrap().to_string(), big);
            assert_eq!(
                count_canonical_census_as::<Count64>(p, n)
                    .unwrap()
                    .to_string(),
                big
            );
        }
    }
    assert_eq!(moreira_reis_as::<Count64>(4).unwrap(), 51);
    assert!(matches!(
        r_closed_as::<Count64>(prime(2), 40),
        Err(Error::Overflow(_))
    ));
}

#[test]
fn polar_closure_from_greedy_and_witness() {
    let cfg = build_dual_polar_space(2).unwrap();
    let greedy = orbitlang::polar::greedy_closure_set(&cfg);
    let marked: BTreeSet<usize> = greedy.iter().copied().collect();
    assert_eq!(closure(&marked, &cfg).len(), 15);
    let witness =
        orbitlang::polar::find_closure_witness(&cfg, universal_embedding_dim(&cfg)).unwrap();
    assert_eq!(witness.len(), 5);
    assert_eq!(closure(&witness.into_iter().collect(), &cfg).len(), 15);
    assert!(build_dual_polar_space(0).is_err());
    assert!(build_dual_polar_space(4).is_err());
}
