//! Elements of `(Z_p × Z_p)^n`, stored as two rows of residues.

use std::fmt;

use crate::algebra::Prime;
use crate::error::{Error, Result};

/// A 2×n matrix over `Z_p` whose columns are the `n` components `(u_i, v_i)^t`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VectorPair {
    modulus: Prime,
    u: Vec<u32>,
    v: Vec<u32>,
}

impl VectorPair {
    pub fn new(modulus: Prime, u: Vec<u32>, v: Vec<u32>) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::ShapeMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        if let Some(&bad) = u.iter().chain(&v).find(|&&x| x >= modulus.get()) {
            return Err(Error::ResidueOutOfRange {
                value: u64::from(bad),
                modulus: modulus.get(),
            });
        }
        Ok(VectorPair { modulus, u, v })
    }

    /// Builds a pair from columns `(u_i, v_i)`.
    pub fn from_columns(modulus: Prime, columns: &[(u32, u32)]) -> Result<Self> {
        let (u, v) = columns.iter().copied().unzip();
        Self::new(modulus, u, v)
    }

    pub fn zero(modulus: Prime, n: usize) -> Self {
        VectorPair {
            modulus,
            u: vec![0; n],
            v: vec![0; n],
        }
    }

    /// Decodes a state index produced by [`VectorPair::state_index`].
    pub fn from_state_index(modulus: Prime, n: usize, mut index: u64) -> Self {
        let p = u64::from(modulus.get());
        let mut u = vec![0; n];
        let mut v = vec![0; n];
        for slot in v.iter_mut().rev().chain(u.iter_mut().rev()) {
            *slot = (index % p) as u32;
            index /= p;
        }
        VectorPair { modulus, u, v }
    }

    pub(crate) fn from_rows_unchecked(modulus: Prime, u: Vec<u32>, v: Vec<u32>) -> Self {
        debug_assert_eq!(u.len(), v.len());
        VectorPair { modulus, u, v }
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn u(&self) -> &[u32] {
        &self.u
    }

    pub fn v(&self) -> &[u32] {
        &self.v
    }

    pub(crate) fn rows_mut(&mut self) -> (&mut [u32], &mut [u32]) {
        (&mut self.u, &mut self.v)
    }

    #[inline]
    pub fn column(&self, i: usize) -> (u32, u32) {
        (self.u[i], self.v[i])
    }

    pub fn columns(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.u.iter().copied().zip(self.v.iter().copied())
    }

    pub fn is_zero(&self) -> bool {
        self.columns().all(|c| c == (0, 0))
    }

    /// Index of the leftmost column that is not `(0, 0)^t`.
    pub fn first_nonzero_column(&self) -> Option<usize> {
        self.columns().position(|c| c != (0, 0))
    }

    /// Base-p packing of `u_1 … u_n v_1 … v_n`, most significant digit first.
    /// `None` when `p^{2n}` does not fit in a `u64`.
    pub fn state_index(&self) -> Option<u64> {
        let p = u64::from(self.modulus.get());
        self.u.iter().chain(&self.v).try_fold(0u64, |acc, &d| {
            acc.checked_mul(p)?.checked_add(u64::from(d))
        })
    }

    pub fn same_shape(&self, other: &VectorPair) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    /// Parses `"u1,…,un|v1,…,vn"`; the empty pair is `"|"`.
    pub fn parse(modulus: Prime, text: &str) -> Result<Self> {
        let (top, bottom) = text
            .trim()
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected 'u-row|v-row', got {text:?}")))?;
        Self::new(modulus, parse_row(top)?, parse_row(bottom)?)
    }
}

fn parse_row(row: &str) -> Result<Vec<u32>> {
    let row = row.trim();
    if row.is_empty() {
        return Ok(Vec::new());
    }
    row.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad residue {t:?}")))
        })
        .collect()
}

fn write_row(f: &mut fmt::Formatter<'_>, row: &[u32]) -> fmt::Result {
    for (i, x) in row.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Orbit dump format: `u-row|v-row`.
impl fmt::Display for VectorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.u)?;
        f.write_str("|")?;
        write_row(f, &self.v)
    }
}
