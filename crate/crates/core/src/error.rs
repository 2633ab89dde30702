use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} exceeds the supported maximum {max}", max = crate::algebra::MAX_PRIME)]
    PrimeTooLarge(u64),

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u32, modulus: u32 },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("shape mismatch: length {left} vs {right}")]
    ShapeMismatch { left: usize, right: usize },

    #[error("residue {value} out of range for modulus {modulus}")]
    ResidueOutOfRange { value: u64, modulus: u32 },

    #[error("determinant of ({a},{b};{c},{d}) is not 1 modulo {modulus}")]
    NotUnimodular {
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        modulus: u32,
    },

    #[error("letter {letter} is outside the alphabet 0..{alphabet}")]
    InvalidLetter { letter: u64, alphabet: u64 },

    #[error("word {0} is not in the language")]
    NotInLanguage(String),

    #[error("{what} exceeds the budget of {budget}")]
    BudgetExceeded { what: String, budget: u64 },

    #[error("rank {0} is outside the supported range")]
    InvalidRank(usize),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}
