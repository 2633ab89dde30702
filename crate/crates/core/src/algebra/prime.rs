//! Prime moduli and residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported modulus: the largest prime below 2^16, so every letter
/// `u + v·p < p²` fits in a `u32` and every product of two residues fits in a `u64`.
pub const MAX_PRIME: u32 = 65_521;

/// A validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u64::from(MAX_PRIME) {
            return Err(Error::PrimeTooLarge(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Size of the word alphabet, `p²`.
    #[inline]
    pub fn alphabet_size(self) -> u32 {
        self.0 * self.0
    }

    /// `|SL(2, Z_p)| = p(p² − 1)`.
    pub fn sl2_order(self) -> u64 {
        let p = u64::from(self.0);
        p * (p * p - 1)
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(i64::from(self.0)) as u32
    }

    #[inline]
    pub fn add(self, x: u32, y: u32) -> u32 {
        debug_assert!(x < self.0 && y < self.0);
        let s = x + y;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, x: u32, y: u32) -> u32 {
        debug_assert!(x < self.0 && y < self.0);
        if x >= y {
            x - y
        } else {
            x + self.0 - y
        }
    }

    #[inline]
    pub fn neg(self, x: u32) -> u32 {
        debug_assert!(x < self.0);
        if x == 0 {
            0
        } else {
            self.0 - x
        }
    }

    #[inline]
    pub fn mul(self, x: u32, y: u32) -> u32 {
        debug_assert!(x < self.0 && y < self.0);
        ((u64::from(x) * u64::from(y)) % u64::from(self.0)) as u32
    }

    /// Inverse of a nonzero residue by Fermat: `x^(p−2)`.
    pub fn inv(self, x: u32) -> Result<u32> {
        if x.is_multiple_of(self.0) {
            return Err(Error::NotInvertible {
                value: x,
                modulus: self.0,
            });
        }
        let mut base = u64::from(x % self.0);
        let m = u64::from(self.0);
        let mut e = self.0 - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Ok(acc as u32)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Trial division; moduli are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `Z_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u32,
    modulus: Prime,
}

impl Residue {
    pub fn new(value: u64, modulus: Prime) -> Result<Self> {
        if value >= u64::from(modulus.get()) {
            return Err(Error::ResidueOutOfRange {
                value,
                modulus: modulus.get(),
            });
        }
        Ok(Residue {
            value: value as u32,
            modulus,
        })
    }

    pub fn from_i64(value: i64, modulus: Prime) -> Self {
        Residue {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn zero(modulus: Prime) -> Self {
        Residue { value: 0, modulus }
    }

    pub fn one(modulus: Prime) -> Self {
        Residue {
            value: 1 % modulus.get(),
            modulus,
        }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Result<Self> {
        mod_inverse(self)
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "residue arithmetic across different moduli"
        );
    }
}

/// Multiplicative inverse in `Z_p`; zero has none.
pub fn mod_inverse(a: Residue) -> Result<Residue> {
    let value = a.modulus.inv(a.value)?;
    Ok(Residue {
        value,
        modulus: a.modulus,
    })
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        Residue {
            value: self.modulus.add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        Residue {
            value: self.modulus.sub(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        Residue {
            value: self.modulus.mul(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Self {
        Residue {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(v: u64, p: u64) -> Residue {
        Residue::new(v, Prime::new(p).unwrap()).unwrap()
    }

    #[test]
    fn rejects_composites_and_units() {
        for n in [0, 1, 4, 6, 9, 15, 25, 65_535] {
            assert_eq!(Prime::new(n), Err(Error::NotPrime(n)));
        }
        assert_eq!(Prime::new(65_537), Err(Error::PrimeTooLarge(65_537)));
        for p in [2, 3, 5, 7, 251, 65_521] {
            assert_eq!(Prime::new(p).unwrap().get() as u64, p);
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(res(1, 2)).unwrap().value(), 1);
        assert_eq!(mod_inverse(res(2, 5)).unwrap().value(), 3);
        assert_eq!(mod_inverse(res(4, 7)).unwrap().value(), 2);
    }

    #[test]
    fn zero_is_not_invertible() {
        assert_eq!(
            mod_inverse(res(0, 7)),
            Err(Error::NotInvertible {
                value: 0,
                modulus: 7
            })
        );
    }

    #[test]
    fn inverse_is_exhaustive_for_small_primes() {
        for p in [2u64, 3, 5, 7, 11, 13, 251] {
            let m = Prime::new(p).unwrap();
            for a in 1..p {
                let x = m.inv(a as u32).unwrap();
                assert_eq!(u64::from(x) * a % p, 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn residue_range_is_checked() {
        assert!(Residue::new(5, Prime::new(5).unwrap()).is_err());
        assert_eq!(Residue::from_i64(-1, Prime::new(5).unwrap()).value(), 4);
    }

    #[test]
    fn arithmetic_matches_integers() {
        let p = 7;
        for x in 0..p {
            for y in 0..p {
                let (a, b) = (res(x, p), res(y, p));
                assert_eq!((a + b).value() as u64, (x + y) % p);
                assert_eq!((a * b).value() as u64, (x * y) % p);
                assert_eq!((a - b).value() as u64, (x + p - y) % p);
                assert_eq!((-a + a).value(), 0);
            }
        }
    }
}
