//! `SL(2, Z_p)` and its left action on vector pairs.
//!
//! The integer group `SL(2, Z)` acts on `(Z_p × Z_p)^n` through reduction mod p,
//! and reduction onto `SL(2, Z_p)` is surjective, so orbits computed here are the
//! orbits of the integer group.

use std::fmt;

use crate::algebra::{Prime, VectorPair};
use crate::error::{Error, Result};

/// A 2×2 matrix over `Z_p` with determinant 1, row-major `(a, b; c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SL2Matrix {
    modulus: Prime,
    a: u32,
    b: u32,
    c: u32,
    d: u32,
}

impl SL2Matrix {
    /// Reduces the entries mod p and checks `ad − bc ≡ 1`.
    pub fn new(modulus: Prime, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let m = SL2Matrix {
            modulus,
            a: modulus.reduce(a),
            b: modulus.reduce(b),
            c: modulus.reduce(c),
            d: modulus.reduce(d),
        };
        if m.det() != 1 % modulus.get() {
            return Err(Error::NotUnimodular {
                a: m.a,
                b: m.b,
                c: m.c,
                d: m.d,
                modulus: modulus.get(),
            });
        }
        Ok(m)
    }

    pub fn identity(modulus: Prime) -> Self {
        SL2Matrix {
            modulus,
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        }
    }

    /// Upper unipotent `(1, r; 0, 1)`.
    pub fn shear(modulus: Prime, r: u32) -> Self {
        SL2Matrix {
            modulus,
            a: 1,
            b: r % modulus.get(),
            c: 0,
            d: 1,
        }
    }

    pub fn modulus(&self) -> Prime {
        self.modulus
    }

    pub fn entries(&self) -> [u32; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self) -> u32 {
        let p = self.modulus;
        p.sub(p.mul(self.a, self.d), p.mul(self.b, self.c))
    }

    /// Matrix product `self · rhs`.
    pub fn compose(&self, rhs: &SL2Matrix) -> Result<SL2Matrix> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: rhs.modulus.get(),
            });
        }
        let p = self.modulus;
        let dot = |x: u32, y: u32, z: u32, w: u32| p.add(p.mul(x, y), p.mul(z, w));
        let m = SL2Matrix {
            modulus: p,
            a: dot(self.a, rhs.a, self.b, rhs.c),
            b: dot(self.a, rhs.b, self.b, rhs.d),
            c: dot(self.c, rhs.a, self.d, rhs.c),
            d: dot(self.c, rhs.b, self.d, rhs.d),
        };
        assert_eq!(m.det(), 1 % p.get(), "product left SL(2, Z_p)");
        Ok(m)
    }

    /// `(d, −b; −c, a)`.
    pub fn inverse(&self) -> SL2Matrix {
        let p = self.modulus;
        SL2Matrix {
            modulus: p,
            a: self.d,
            b: p.neg(self.b),
            c: p.neg(self.c),
            d: self.a,
        }
    }

    #[inline]
    pub fn apply_column(&self, (u, v): (u32, u32)) -> (u32, u32) {
        let p = self.modulus;
        (
            p.add(p.mul(self.a, u), p.mul(self.b, v)),
            p.add(p.mul(self.c, u), p.mul(self.d, v)),
        )
    }

    /// Left action on every column of `x`.
    pub fn apply(&self, x: &VectorPair) -> Result<VectorPair> {
        let mut y = x.clone();
        self.apply_in_place(&mut y)?;
        Ok(y)
    }

    pub fn apply_in_place(&self, x: &mut VectorPair) -> Result<()> {
        if self.modulus != x.modulus() {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: x.modulus().get(),
            });
        }
        let (u, v) = x.rows_mut();
        for (ui, vi) in u.iter_mut().zip(v.iter_mut()) {
            (*ui, *vi) = self.apply_column((*ui, *vi));
        }
        Ok(())
    }
}

impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.a, self.b, self.c, self.d)
    }
}

/// `S = (0, 1; −1, 0)` and `T = (1, 1; 0, 1)` reduced mod p; together they generate the group.
pub fn generators(modulus: Prime) -> (SL2Matrix, SL2Matrix) {
    let s = SL2Matrix {
        modulus,
        a: 0,
        b: 1,
        c: modulus.get() - 1,
        d: 0,
    };
    (s, SL2Matrix::shear(modulus, 1))
}

/// Letters of a word in the generators and their inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    S,
    SInv,
    T,
    TInv,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::S, Generator::SInv, Generator::T, Generator::TInv];

    pub fn matrix(self, modulus: Prime) -> SL2Matrix {
        let (s, t) = generators(modulus);
        match self {
            Generator::S => s,
            Generator::SInv => s.inverse(),
            Generator::T => t,
            Generator::TInv => t.inverse(),
        }
    }
}

/// Product of a generator word, leftmost letter outermost.
pub fn word_matrix(modulus: Prime, word: &[Generator]) -> SL2Matrix {
    word.iter().fold(SL2Matrix::identity(modulus), |acc, g| {
        acc.compose(&g.matrix(modulus))
            .expect("generators share the modulus")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn generator_entries() {
        for (q, minus_one) in [(2, 1), (3, 2), (5, 4)] {
            let (s, t) = generators(p(q));
            assert_eq!(s.entries(), [0, 1, minus_one, 0]);
            assert_eq!(t.entries(), [1, 1, 0, 1]);
            assert_eq!(s.det(), 1);
            assert_eq!(t.det(), 1);
        }
    }

    #[test]
    fn s_has_order_four() {
        for q in [2, 3, 5, 7] {
            let m = p(q);
            let s = Generator::S.matrix(m);
            let s2 = s.compose(&s).unwrap();
            let s4 = s2.compose(&s2).unwrap();
            assert_eq!(s4, SL2Matrix::identity(m));
            assert_eq!(Generator::SInv.matrix(m), s2.compose(&s).unwrap());
        }
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(
            SL2Matrix::new(p(5), 2, 0, 0, 2),
            Err(Error::NotUnimodular { .. })
        ));
        assert!(SL2Matrix::new(p(5), 2, 0, 0, 3).is_ok());
        assert!(SL2Matrix::new(p(5), 0, 1, -1, 0).is_ok());
    }

    #[test]
    fn action_examples() {
        let m = p(2);
        let (s, t) = generators(m);
        let x = VectorPair::parse(m, "1,0|0,1").unwrap();
        assert_eq!(SL2Matrix::identity(m).apply(&x).unwrap(), x);
        assert_eq!(s.apply(&x).unwrap().to_string(), "0,1|1,0");

        let y = VectorPair::parse(m, "1,1|1,1").unwrap();
        assert_eq!(t.apply(&y).unwrap().to_string(), "0,0|1,1");
    }

    #[test]
    fn modulus_mismatch() {
        let x = VectorPair::zero(p(3), 2);
        assert_eq!(
            SL2Matrix::identity(p(5)).apply(&x),
            Err(Error::ModulusMismatch { left: 5, right: 3 })
        );
        assert!(SL2Matrix::identity(p(5))
            .compose(&SL2Matrix::identity(p(3)))
            .is_err());
    }

    #[test]
    fn whole_group_is_closed_for_p3() {
        let m = p(3);
        let mut count = 0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    for d in 0..3 {
                        if let Ok(g) = SL2Matrix::new(m, a, b, c, d) {
                            count += 1;
                            assert_eq!(g.compose(&g.inverse()).unwrap(), SL2Matrix::identity(m));
                        }
                    }
                }
            }
        }
        assert_eq!(count as u64, m.sl2_order());
    }
}
