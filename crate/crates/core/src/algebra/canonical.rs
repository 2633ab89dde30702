//! Normal forms for `SL(2, Z_p)` orbits on `(Z_p × Z_p)^n`.
//!
//! Every orbit contains exactly one pair of one of three shapes (columns 0-based):
//!
//! * the zero pair;
//! * *flat*: columns before `lead` vanish, column `lead` is `(1, 0)^t`, and the
//!   whole `v` row is zero;
//! * *split*: as flat up to column `pivot > lead`, where `v` first becomes
//!   nonzero; column `pivot` is `(0, v_pivot)^t` and later columns are free.
//!
//! Uniqueness: a matrix mapping one such pair to another fixes `(1, 0)^t`, so it is
//! a shear `(1, b; 0, 1)`, and a nonzero `v_pivot` forces `b = 0`.

use std::fmt;

use crate::algebra::{generators, Prime, SL2Matrix, VectorPair};

/// The distinguished representative of an orbit, with its landmarks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    inner: VectorPair,
    lead: Option<usize>,
    pivot: Option<usize>,
}

impl CanonicalForm {
    pub fn zero(modulus: Prime, n: usize) -> Self {
        CanonicalForm {
            inner: VectorPair::zero(modulus, n),
            lead: None,
            pivot: None,
        }
    }

    /// Wraps `x` if it already is a normal form.
    pub fn from_canonical(x: VectorPair) -> Option<Self> {
        let (lead, pivot) = landmarks(&x)?;
        Some(CanonicalForm {
            inner: x,
            lead,
            pivot,
        })
    }

    pub fn inner(&self) -> &VectorPair {
        &self.inner
    }

    pub fn into_inner(self) -> VectorPair {
        self.inner
    }

    /// Column holding the leading `(1, 0)^t`; `None` for the zero orbit.
    pub fn lead(&self) -> Option<usize> {
        self.lead
    }

    /// First column after `lead` with nonzero `v`; `None` for flat forms.
    pub fn pivot(&self) -> Option<usize> {
        self.pivot
    }

    pub fn is_zero(&self) -> bool {
        self.lead.is_none()
    }

    pub fn modulus(&self) -> Prime {
        self.inner.modulus()
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

fn landmarks(x: &VectorPair) -> Option<(Option<usize>, Option<usize>)> {
    let Some(lead) = x.first_nonzero_column() else {
        return Some((None, None));
    };
    if x.column(lead) != (1, 0) {
        return None;
    }
    match (lead + 1..x.len()).find(|&i| x.v()[i] != 0) {
        None => Some((Some(lead), None)),
        Some(pivot) if x.u()[pivot] == 0 => Some((Some(lead), Some(pivot))),
        Some(_) => None,
    }
}

pub fn is_canonical(x: &VectorPair) -> bool {
    landmarks(x).is_some()
}

/// Reduces `x` to the normal form of its orbit.
///
/// The leading column is first rotated by `S` if its `u` entry vanishes, then sent
/// to `(1, 0)^t` by `(u⁻¹, 0; −v, u)`. The remaining freedom is the shear stabilizer
/// of `(1, 0)^t`, which is spent clearing `u` at the pivot column.
pub fn canonicalize(x: &VectorPair) -> CanonicalForm {
    let p = x.modulus();
    let Some(lead) = x.first_nonzero_column() else {
        return CanonicalForm::zero(p, x.len());
    };
    let mut y = x.clone();
    if y.column(lead).0 == 0 {
        let (s, _) = generators(p);
        s.apply_in_place(&mut y).expect("same modulus");
    }
    let (u, v) = y.column(lead);
    let u_inv = p.inv(u).expect("u is nonzero at the leading column");
    let normalize = SL2Matrix::new(p, u_inv.into(), 0, -i64::from(v), u.into())
        .expect("(u⁻¹, 0; −v, u) is unimodular");
    normalize.apply_in_place(&mut y).expect("same modulus");
    debug_assert_eq!(y.column(lead), (1, 0));

    let pivot = (lead + 1..y.len()).find(|&i| y.v()[i] != 0);
    if let Some(k) = pivot {
        let (uk, vk) = y.column(k);
        let r = p.neg(p.mul(uk, p.inv(vk).expect("v is nonzero at the pivot")));
        SL2Matrix::shear(p, r)
            .apply_in_place(&mut y)
            .expect("same modulus");
        debug_assert_eq!(y.u()[k], 0);
    }
    CanonicalForm {
        inner: y,
        lead: Some(lead),
        pivot,
    }
}
