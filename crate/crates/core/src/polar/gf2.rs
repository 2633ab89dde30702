//! Bit-packed vectors and matrices over GF(2).

use std::fmt;

use crate::error::{Error, Result};

const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

/// A vector of `F_2^{2n}`; coordinate `i` is bit `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GFVector {
    bits: u64,
    len: usize,
}

impl GFVector {
    pub const MAX_LEN: usize = 64;

    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if !len.is_multiple_of(2) || len > Self::MAX_LEN {
            return Err(Error::ShapeMismatch {
                left: len,
                right: Self::MAX_LEN,
            });
        }
        if len < 64 && bits >> len != 0 {
            return Err(Error::ShapeMismatch {
                left: 64 - bits.leading_zeros() as usize,
                right: len,
            });
        }
        Ok(GFVector { bits, len })
    }

    /// Unit vector `e_i`, 0-based.
    pub fn unit(i: usize, len: usize) -> Result<Self> {
        if i >= len {
            return Err(Error::ShapeMismatch {
                left: i,
                right: len,
            });
        }
        Self::new(1 << i, len)
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }
}

impl fmt::Display for GFVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `⟨x, y⟩ = Σ_i (x_{2i} y_{2i+1} + x_{2i+1} y_{2i})` with coordinates paired
/// `(0, 1), (2, 3), …` into hyperbolic planes.
pub fn symplectic_form(x: GFVector, y: GFVector) -> Result<u8> {
    if x.len != y.len {
        return Err(Error::ShapeMismatch {
            left: x.len,
            right: y.len,
        });
    }
    Ok(form_bits(x.bits, y.bits))
}

#[inline]
pub(crate) fn form_bits(x: u64, y: u64) -> u8 {
    let swapped = ((y & EVEN_BITS) << 1) | ((y >> 1) & EVEN_BITS);
    ((x & swapped).count_ones() & 1) as u8
}

/// Dense GF(2) matrix with rows packed into `u64` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![vec![0; cols.div_ceil(64)]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r][c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let mask = 1u64 << (c % 64);
        if value {
            self.rows[r][c / 64] |= mask;
        } else {
            self.rows[r][c / 64] &= !mask;
        }
    }

    /// Rank by Gaussian elimination, XOR-ing whole packed rows.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let (word, mask) = (c / 64, 1u64 << (c % 64));
            let Some(found) = (rank..rows.len()).find(|&r| rows[r][word] & mask != 0) else {
                continue;
            };
            rows.swap(rank, found);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[word] & mask != 0 {
                    row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
                }
            }
            rank += 1;
        }
        rank
    }
}
