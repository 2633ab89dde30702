use std::fmt;

use crate::polar::gf2::{form_bits, GFVector};

/// A subspace of `F_2^{len}` in reduced row echelon form.
///
/// Each basis row's pivot is its highest set bit, rows are sorted by decreasing
/// pivot, and no row has a bit set in another row's pivot. The representation is
/// therefore unique, so equality of subspaces is equality of values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    len: usize,
    basis: Vec<u64>,
}

fn pivot(row: u64) -> u32 {
    63 - row.leading_zeros()
}

impl Subspace {
    pub fn zero(len: usize) -> Self {
        Subspace {
            len,
            basis: Vec::new(),
        }
    }

    pub fn span(len: usize, vectors: impl IntoIterator<Item = u64>) -> Self {
        vectors
            .into_iter()
            .fold(Subspace::zero(len), |s, v| s.extended(v))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn basis(&self) -> impl Iterator<Item = GFVector> + '_ {
        self.basis
            .iter()
            .map(|&b| GFVector::new(b, self.len).expect("basis vectors fit the ambient space"))
    }

    /// `v` minus its projection onto the pivots; zero iff `v` lies in the subspace.
    fn reduce(&self, mut v: u64) -> u64 {
        for &row in &self.basis {
            if v >> pivot(row) & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|&b| other.contains(b))
    }

    /// `span(self ∪ {v})`, kept in reduced form.
    pub fn extended(&self, v: u64) -> Subspace {
        let r = self.reduce(v);
        if r == 0 {
            return self.clone();
        }
        let p = pivot(r);
        let mut basis: Vec<u64> = self
            .basis
            .iter()
            .map(|&row| if row >> p & 1 == 1 { row ^ r } else { row })
            .collect();
        let at = basis.partition_point(|&row| pivot(row) > p);
        basis.insert(at, r);
        Subspace {
            len: self.len,
            basis,
        }
    }

    /// Whether `v` is orthogonal to every basis vector.
    pub fn is_orthogonal_to(&self, v: u64) -> bool {
        self.basis.iter().all(|&b| form_bits(b, v) == 0)
    }

    pub fn is_totally_isotropic(&self) -> bool {
        self.basis
            .iter()
            .all(|&b| self.basis.iter().all(|&c| form_bits(b, c) == 0))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, b) in self.basis().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(">")
    }
}
