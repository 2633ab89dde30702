//! The word language `W_p^n` over the alphabet `{0, …, p² − 1}`.
//!
//! A word is either all zeros, or has the shape
//!
//! ```text
//! 0 … 0  1  (letters < p)*  [ m·p with 1 ≤ m < p  (any letter)* ]
//! ```
//!
//! i.e. leading zeros, a single `1`, a run of "small" letters, and optionally one
//! nonzero multiple of `p` after which anything goes.

use std::fmt;

use crate::algebra::Prime;
use crate::error::{Error, Result};
use crate::formulas::{self, Count};
use crate::BigCount;

/// A finite sequence of letters from `{0, …, p² − 1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    modulus: Prime,
    letters: Vec<u32>,
}

impl Word {
    pub fn new(modulus: Prime, letters: Vec<u32>) -> Result<Self> {
        let alphabet = modulus.alphabet_size();
        if let Some(&bad) = letters.iter().find(|&&a| a >= alphabet) {
            return Err(Error::InvalidLetter {
                letter: u64::from(bad),
                alphabet: u64::from(alphabet),
            });
        }
        Ok(Word { modulus, letters })
    }

    pub(crate) fn from_letters_unchecked(modulus: Prime, letters: Vec<u32>) -> Self {
        Word { modulus, letters }
    }

    /// Parses `"a1,a2,…"`. For `p ≤ 3` every letter is a single digit, so the
    /// compact form `"102"` is accepted as well. The empty string is the empty word.
    pub fn parse(modulus: Prime, text: &str) -> Result<Self> {
        let text = text.trim();
        let letters = if text.is_empty() {
            Vec::new()
        } else if !text.contains(',') && modulus.get() <= 3 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad letter {t:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        };
        Word::new(modulus, letters)
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Compact digits for `p ≤ 3`, comma-separated decimal otherwise.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.modulus.get() <= 3 { "" } else { "," };
        for (i, a) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Position in the rule pattern reached after reading a prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Phase {
    /// Only zeros so far.
    Leading,
    /// Read the `1`; only letters `< p` since.
    Small,
    /// Read a nonzero multiple of `p`; the rest is unrestricted.
    Free,
}

impl Phase {
    fn step(self, letter: u32, p: u32) -> Option<Phase> {
        match self {
            Phase::Leading => match letter {
                0 => Some(Phase::Leading),
                1 => Some(Phase::Small),
                _ => None,
            },
            Phase::Small if letter < p => Some(Phase::Small),
            Phase::Small if letter.is_multiple_of(p) => Some(Phase::Free),
            Phase::Small => None,
            Phase::Free => Some(Phase::Free),
        }
    }

    /// Smallest admissible letter greater than `letter` in this phase.
    fn successor(self, letter: u32, p: u32) -> Option<u32> {
        match self {
            Phase::Leading => (letter == 0).then_some(1),
            Phase::Small if letter + 1 < p => Some(letter + 1),
            Phase::Small => {
                let next = if letter < p { p } else { letter + p };
                (next < p * p).then_some(next)
            }
            Phase::Free => (letter + 1 < p * p).then_some(letter + 1),
        }
    }
}

fn accepts(p: u32, letters: &[u32]) -> bool {
    letters
        .iter()
        .try_fold(Phase::Leading, |phase, &a| phase.step(a, p))
        .is_some()
}

pub fn is_word(w: &Word) -> bool {
    accepts(w.modulus.get(), &w.letters)
}

/// Membership test on raw letters; rejects letters outside the alphabet.
pub fn is_word_letters(modulus: Prime, letters: &[u32]) -> Result<bool> {
    let alphabet = modulus.alphabet_size();
    if let Some(&bad) = letters.iter().find(|&&a| a >= alphabet) {
        return Err(Error::InvalidLetter {
            letter: u64::from(bad),
            alphabet: u64::from(alphabet),
        });
    }
    Ok(accepts(modulus.get(), letters))
}

/// Restricted-growth test for the four-letter case: every letter is at most one
/// more than the largest letter before it, taking that maximum as 0 for the first
/// letter.
pub fn is_restricted_growth(letters: &[u32]) -> bool {
    let mut max = 0;
    for &a in letters {
        if a > max + 1 {
            return false;
        }
        max = max.max(a);
    }
    true
}

/// Lexicographically increasing stream of every word in `W_p^n`.
#[derive(Debug, Clone)]
pub struct Words {
    p: u32,
    modulus: Prime,
    current: Option<Vec<u32>>,
    /// `phases[i]` is the phase before reading letter `i`.
    phases: Vec<Phase>,
    /// Positions before this one are never advanced.
    floor: usize,
}

impl Words {
    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        for pos in (self.floor..cur.len()).rev() {
            let phase = self.phases[pos];
            if let Some(next) = phase.successor(cur[pos], self.p) {
                cur[pos] = next;
                let after = phase.step(next, self.p).expect("successor is admissible");
                cur[pos + 1..].fill(0);
                self.phases[pos + 1..].fill(after);
                return;
            }
        }
        self.current = None;
    }
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let out = self.current.clone()?;
        self.advance();
        Some(Word::from_letters_unchecked(self.modulus, out))
    }
}

/// Walks the rule pattern directly; never filters candidate words.
pub fn enumerate_words(modulus: Prime, n: usize) -> Words {
    Words {
        p: modulus.get(),
        modulus,
        current: Some(vec![0; n]),
        phases: vec![Phase::Leading; n],
        floor: 0,
    }
}

/// Words whose first nonzero letter is at `lead` (0-based); `None` selects the
/// zero word alone. Chaining `None, Some(n − 1), …, Some(0)` reproduces
/// [`enumerate_words`].
pub fn enumerate_words_with_lead(modulus: Prime, n: usize, lead: Option<usize>) -> Words {
    let Some(lead) = lead.filter(|&j| j < n) else {
        return Words {
            p: modulus.get(),
            modulus,
            current: lead.is_none().then(|| vec![0; n]),
            phases: vec![Phase::Leading; n],
            floor: n,
        };
    };
    let mut current = vec![0; n];
    current[lead] = 1;
    let mut phases = vec![Phase::Leading; n];
    phases[lead + 1..].fill(Phase::Small);
    Words {
        p: modulus.get(),
        modulus,
        current: Some(current),
        phases,
        floor: lead + 1,
    }
}

/// Lead positions in stream order, for [`enumerate_words_with_lead`].
pub fn word_leads(n: usize) -> Vec<Option<usize>> {
    std::iter::once(None)
        .chain((0..n).rev().map(Some))
        .collect()
}

/// `|W_p^n|` by counting letter choices: the zero word, words without a multiple
/// of `p` after the `1` at position `j`, and words with the `1` at `j` and the
/// multiple of `p` at `k`.
pub fn count_words_as<T: Count>(modulus: Prime, n: usize) -> Result<T> {
    const CTX: &str = "count_words";
    let p = modulus.get();
    let mut total = T::one();
    for j in 1..=n {
        total = formulas::add(&total, &formulas::pow(p, n - j, CTX)?, CTX)?;
        for k in j + 1..=n {
            let small = formulas::pow::<T>(p, k - j - 1, CTX)?;
            let free = formulas::pow::<T>(p, 2 * (n - k), CTX)?;
            let term = formulas::mul(
                &formulas::mul(&small, &formulas::lit(p - 1), CTX)?,
                &free,
                CTX,
            )?;
            total = formulas::add(&total, &term, CTX)?;
        }
    }
    Ok(total)
}

pub fn count_words(modulus: Prime, n: usize) -> BigCount {
    count_words_as(modulus, n).expect("bignum arithmetic does not overflow")
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
    fn membership_examples() {
        assert!(is_word(&word(2, "12")));
        assert!(is_word(&word(2, "123")));
        assert!(!is_word(&word(2, "013")));
        assert!(is_word(&word(2, "00")));
        assert!(!is_word(&word(3, "20")));
        assert!(!is_word(&word(3, "2")));
        assert!(is_word(&word(5, "0,1,4,10,24")));
        assert!(!is_word(&word(5, "0,1,4,11,24")));
        assert!(is_word(&word(7, "")));
    }

    #[test]
    fn letters_out_of_range() {
        assert_eq!(
            Word::parse(p(2), "14"),
            Err(Error::InvalidLetter {
                letter: 4,
                alphabet: 4
            })
        );
        assert!(matches!(
            is_word_letters(p(3), &[1, 9]),
            Err(Error::InvalidLetter { letter: 9, .. })
        ));
        assert_eq!(is_word_letters(p(3), &[1, 8]), Ok(false));
        assert_eq!(is_word_letters(p(3), &[1, 6, 8]), Ok(true));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(word(3, "102").letters(), &[1, 0, 2]);
        assert_eq!(word(3, "1,0,2").letters(), &[1, 0, 2]);
        assert_eq!(word(3, "1,0,2").to_string(), "102");
        assert_eq!(word(5, "1,0,15").to_string(), "1,0,15");
        assert_eq!(word(5, "17").letters(), &[17]);
        assert!(Word::parse(p(2), "1x").is_err());
        assert!(word(2, "").is_empty());
    }

    #[test]
    fn enumeration_small() {
        let w1: Vec<String> = enumerate_words(p(2), 1).map(|w| w.to_string()).collect();
        assert_eq!(w1, ["0", "1"]);
        let w2: Vec<String> = enumerate_words(p(2), 2).map(|w| w.to_string()).collect();
        assert_eq!(w2, ["00", "01", "10", "11", "12"]);
        assert_eq!(enumerate_words(p(2), 3).count(), 15);
        assert_eq!(enumerate_words(p(3), 2).count(), 7);
        let empty: Vec<Word> = enumerate_words(p(5), 0).collect();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
    }

    #[test]
    fn lead_blocks_concatenate_to_the_stream() {
        for (q, n) in [(2, 0), (2, 3), (3, 3), (5, 2)] {
            let whole: Vec<Word> = enumerate_words(p(q), n).collect();
            let pieces: Vec<Word> = word_leads(n)
                .into_iter()
                .flat_map(|lead| enumerate_words_with_lead(p(q), n, lead))
                .collect();
            assert_eq!(whole, pieces);
        }
        assert_eq!(enumerate_words_with_lead(p(2), 2, Some(5)).count(), 0);
    }

    #[test]
    fn counts() {
        assert_eq!(count_words_as::<u64>(p(2), 2).unwrap(), 5);
        assert_eq!(count_words_as::<u64>(p(2), 5).unwrap(), 187);
        for q in [2, 3, 5, 7] {
            assert_eq!(count_words_as::<u64>(p(q), 0).unwrap(), 1);
            assert_eq!(count_words_as::<u64>(p(q), 1).unwrap(), 2);
        }
    }

    #[test]
    fn restricted_growth_matches_for_p2() {
        assert!(is_restricted_growth(&[0, 1, 2, 3]));
        assert!(is_restricted_growth(&[1]));
        assert!(!is_restricted_growth(&[2]));
        assert!(!is_restricted_growth(&[0, 2]));
        assert!(is_restricted_growth(&[]));
    }
}
