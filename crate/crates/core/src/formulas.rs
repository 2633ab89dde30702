//! Closed and recursive formulas for the number of orbits `r(p, n)`.
//!
//! Every function is generic over the integer type. Fixed-width types report
//! [`Error::Overflow`] instead of wrapping; [`BigCount`](crate::BigCount) never overflows.
//! Counts at `n = 0` are 1: the empty pair is the only element and the empty word
//! the only word.

use std::fmt;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub};

use crate::algebra::Prime;
use crate::error::{Error, Result};
use crate::BigCount;

/// Exact unsigned integers usable as counting results (`u64`, `u128`, `BigUint`, …).
pub trait Count:
    Clone + Integer + CheckedAdd + CheckedSub + CheckedMul + From<u32> + fmt::Display + fmt::Debug
{
}

impl<T> Count for T where
    T: Clone
        + Integer
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + From<u32>
        + fmt::Display
        + fmt::Debug
{
}

pub(crate) fn lit<T: Count>(x: u32) -> T {
    T::from(x)
}

pub(crate) fn pow<T: Count>(base: u32, exp: usize, ctx: &'static str) -> Result<T> {
    num_traits::checked_pow(T::from(base), exp).ok_or(Error::Overflow(ctx))
}

pub(crate) fn add<T: Count>(a: &T, b: &T, ctx: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn mul<T: Count>(a: &T, b: &T, ctx: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

fn exact_div<T: Count>(num: &T, den: &T, ctx: &str) -> Result<T> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::InternalInvariantViolation(format!(
            "{ctx}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

/// `r(p, n) = (p^{2n−1} + p^{n+1} − p^{n−1} + p² − p − 1) / (p² − 1)`.
pub fn r_closed_as<T: Count>(p: Prime, n: usize) -> Result<T> {
    const CTX: &str = "r_closed";
    if n == 0 {
        return Ok(T::one());
    }
    let q = p.get();
    let positive = add(
        &add(&pow::<T>(q, 2 * n - 1, CTX)?, &pow(q, n + 1, CTX)?, CTX)?,
        &pow(q, 2, CTX)?,
        CTX,
    )?;
    let negative = add(&pow::<T>(q, n - 1, CTX)?, &lit(q + 1), CTX)?;
    let numerator = positive.checked_sub(&negative).ok_or_else(|| {
        Error::InternalInvariantViolation(format!("{CTX}: negative numerator at p={q}, n={n}"))
    })?;
    let denominator = pow::<T>(q, 2, CTX)? - T::one();
    exact_div(&numerator, &denominator, CTX)
}

/// Orbit-count increment `F(p, n) = r(p, n+1) − r(p, n) = p^{n−1}(p^n + p − 1)`.
///
/// `F(p, 0) = 1`, matching `r(p, 1) − r(p, 0)`.
pub fn orbit_increment_as<T: Count>(p: Prime, n: usize) -> Result<T> {
    const CTX: &str = "orbit_increment";
    if n == 0 {
        return Ok(T::one());
    }
    let q = p.get();
    let inner = add(&pow::<T>(q, n, CTX)?, &lit(q - 1), CTX)?;
    mul(&pow(q, n - 1, CTX)?, &inner, CTX)
}

/// `r(p, n)` by the recurrence `F(p, m) = p·F(p, m−1) + p^{2m−2}(p − 1)`,
/// starting from `r(p, 1) = 2`, `F(p, 1) = 2p − 1`.
pub fn r_recursive_as<T: Count>(p: Prime, n: usize) -> Result<T> {
    const CTX: &str = "r_recursive";
    if n == 0 {
        return Ok(T::one());
    }
    let q = p.get();
    let mut r: T = lit(2);
    let mut increment: T = lit(2 * q - 1);
    for m in 1..n {
        r = add(&r, &increment, CTX)?;
        let scaled = mul(&lit(q), &increment, CTX)?;
        let tail = mul(&pow::<T>(q, 2 * m, CTX)?, &lit(q - 1), CTX)?;
        increment = add(&scaled, &tail, CTX)?;
    }
    Ok(r)
}

/// `(2^n + 1)(2^{n−1} + 1) / 3`, the `p = 2` specialization.
pub fn moreira_reis_as<T: Count>(n: usize) -> Result<T> {
    const CTX: &str = "moreira_reis";
    if n == 0 {
        return Ok(T::one());
    }
    let a = add(&pow::<T>(2, n, CTX)?, &T::one(), CTX)?;
    let b = add(&pow::<T>(2, n - 1, CTX)?, &T::one(), CTX)?;
    exact_div(&mul(&a, &b, CTX)?, &lit(3), CTX)
}

pub fn r_closed(p: Prime, n: usize) -> Result<BigCount> {
    r_closed_as(p, n)
}

pub fn orbit_increment(p: Prime, n: usize) -> BigCount {
    orbit_increment_as(p, n).expect("bignum arithmetic does not overflow")
}

pub fn r_recursive(p: Prime, n: usize) -> BigCount {
    r_recursive_as(p, n).expect("bignum arithmetic does not overflow")
}

pub fn moreira_reis(n: usize) -> Result<BigCount> {
    moreira_reis_as(n)
}

/// Rank of the fundamental group of the classifying space of the `Z_p^n`-cobordism
/// category in dimension 1+1; numerically `r(p, n)`.
pub fn rank_of_fundamental_group(p: Prime, n: usize) -> Result<BigCount> {
    r_closed(p, n)
}
