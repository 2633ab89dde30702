//! The correspondence between `W_p^n` and the orbit space: letters are read as
//! columns `a = u + v·p`, and a word's columns form exactly one normal form.

use crate::algebra::{canonicalize, CanonicalForm, Prime, VectorPair};
use crate::error::{Error, Result};
use crate::language::{is_word, Word};

/// Letter `a` as the column `(a mod p, a div p)`.
pub fn phi(a: u32, p: Prime) -> Result<(u32, u32)> {
    if a >= p.alphabet_size() {
        return Err(Error::InvalidLetter {
            letter: u64::from(a),
            alphabet: u64::from(p.alphabet_size()),
        });
    }
    Ok((a % p.get(), a / p.get()))
}

/// Column `(u, v)` as the letter `u + v·p`.
pub fn phi_inv((u, v): (u32, u32), p: Prime) -> u32 {
    debug_assert!(u < p.get() && v < p.get());
    u + v * p.get()
}

pub fn word_to_vector(w: &Word) -> Result<VectorPair> {
    if !is_word(w) {
        return Err(Error::NotInLanguage(w.to_string()));
    }
    let p = w.modulus();
    let (u, v) = w
        .letters()
        .iter()
        .map(|&a| phi(a, p).expect("letters are in range"))
        .unzip();
    Ok(VectorPair::from_rows_unchecked(p, u, v))
}

pub fn word_to_orbit(w: &Word) -> Result<CanonicalForm> {
    let x = word_to_vector(w)?;
    CanonicalForm::from_canonical(x).ok_or_else(|| {
        Error::InternalInvariantViolation(format!("image of word {w} is not a normal form"))
    })
}

/// The unique word whose orbit contains `x`.
pub fn vector_to_word(x: &VectorPair) -> Word {
    let p = x.modulus();
    let letters = canonicalize(x)
        .inner()
        .columns()
        .map(|c| phi_inv(c, p))
        .collect();
    let w = Word::from_letters_unchecked(p, letters);
    debug_assert!(is_word(&w), "{x} mapped outside the language");
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn word(q: u64, s: &str) -> Word {
        Word::parse(p(q), s).unwrap()
    }

    #[test]
    fn letter_map() {
        assert_eq!(phi(3, p(2)).unwrap(), (1, 1));
        assert_eq!(phi(2, p(2)).unwrap(), (0, 1));
        assert_eq!(phi(0, p(7)).unwrap(), (0, 0));
        assert!(matches!(phi(4, p(2)), Err(Error::InvalidLetter { .. })));
        assert_eq!(phi_inv((1, 0), p(2)), 1);
        assert_eq!(phi_inv((2, 1), p(3)), 5);
        assert_eq!(phi_inv((0, 0), p(2)), 0);
    }

    #[test]
    fn letter_map_is_bijective() {
        for q in [2, 3, 5, 7] {
            for a in 0..p(q).alphabet_size() {
                assert_eq!(phi_inv(phi(a, p(q)).unwrap(), p(q)), a);
            }
        }
    }

    #[test]
    fn words_to_vectors() {
        assert_eq!(
            word_to_vector(&word(2, "12")).unwrap().to_string(),
            "1,0|0,1"
        );
        assert_eq!(
            word_to_vector(&word(2, "11")).unwrap().to_string(),
            "1,1|0,0"
        );
        assert!(word_to_vector(&word(2, "00")).unwrap().is_zero());
        assert_eq!(
            word_to_vector(&word(2, "013")),
            Err(Error::NotInLanguage("013".into()))
        );
    }

    #[test]
    fn words_to_orbits() {
        let c = word_to_orbit(&word(2, "0")).unwrap();
        assert!(c.is_zero());
        let c = word_to_orbit(&word(2, "12")).unwrap();
        assert_eq!((c.lead(), c.pivot()), (Some(0), Some(1)));
    }

    #[test]
    fn vectors_to_words() {
        let x = VectorPair::parse(p(2), "0,1|1,0").unwrap();
        assert_eq!(vector_to_word(&x).to_string(), "12");
        assert_eq!(
            vector_to_word(&VectorPair::zero(p(2), 3)).to_string(),
            "000"
        );
        let x = VectorPair::parse(p(2), "1,1|1,1").unwrap();
        assert_eq!(vector_to_word(&x).to_string(), "11");
    }
}
