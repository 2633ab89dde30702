//! Symplectic dual polar spaces over GF(2), their universal embedding dimension,
//! and the two-out-of-three marking closure.

mod config;
mod gf2;
mod subspace;

pub use config::{
    build_dual_polar_space, closure, find_closure_witness, greedy_closure_set,
    universal_embedding_dim, Configuration, MAX_POLAR_RANK,
};
pub use gf2::{symplectic_form, BitMatrix, GFVector};
pub use subspace::Subspace;
