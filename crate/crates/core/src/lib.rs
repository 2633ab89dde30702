//! Orbits of `SL(2, Z)` on `(Z_p × Z_p)^n`, the word language `W_p^n` that
//! indexes them, the closed and recursive formulas for their number `r(p, n)`,
//! and the GF(2) dual polar spaces whose universal embedding dimension is
//! `r(2, n)`.
//!
//! Counting functions are generic over the exact integer type through
//! [`formulas::Count`]; the non-suffixed variants return [`BigCount`].

pub mod algebra;
pub mod bijection;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod language;
pub mod orbits;
pub mod polar;
pub mod verify;

pub use algebra::{
    canonicalize, is_canonical, CanonicalForm, Prime, Residue, SL2Matrix, VectorPair,
};
pub use error::{Error, Result};
pub use language::Word;

/// Arbitrary-precision count.
pub type BigCount = num_bigint::BigUint;

/// Machine-word count; fine for `r(2, n)` up to `n = 32`.
pub type Count64 = u64;

/// Wide count; fine for `r(2, n)` up to `n = 64`.
pub type Count128 = u128;
