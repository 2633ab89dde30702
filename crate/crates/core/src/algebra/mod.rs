//! Arithmetic mod p, the `SL(2, Z_p)` action on `(Z_p × Z_p)^n`, and orbit normal forms.

mod canonical;
mod matrix;
mod pair;
mod prime;

pub use canonical::{canonicalize, is_canonical, CanonicalForm};
pub use matrix::{generators, word_matrix, Generator, SL2Matrix};
pub use pair::VectorPair;
pub use prime::{is_prime, mod_inverse, Prime, Residue, MAX_PRIME};
