//! Exact integer primitives: base-`n` length and floor/ceil `a`-th roots.
//!
//! Nothing here trusts floating point. Small inputs take an `f64` seed that
//! is then corrected by exact comparisons; large inputs use integer Newton
//! iteration started from a power of two above the root.

use crate::error::{Error, Result};
use crate::natural::{nat, Natural};

/// `base^exp` by square-and-multiply, `None` if it does not fit in `T`.
pub fn checked_pow<T: Natural>(base: &T, exp: u32) -> Option<T> {
    num_traits::checked_pow(base.clone(), exp as usize)
}

/// `base^exp`, reporting overflow as an error.
pub fn pow<T: Natural>(base: &T, exp: u32) -> Result<T> {
    checked_pow(base, exp).ok_or(Error::Overflow("power"))
}

/// Number of base-`n` digits of `x`; `len_base(n, 0) == 0`.
///
/// Satisfies `len_base(n, x) <= k` iff `x < n^k`.
pub fn len_base<T: Natural>(n: &T, x: &T) -> Result<u64> {
    if *n < nat(2)? {
        return Err(Error::domain(format!("base must be at least 2, got {n}")));
    }
    if *n == nat(2)? {
        return Ok(x.bit_len());
    }
    let mut rest = x.clone();
    let mut len = 0;
    while !rest.is_zero() {
        rest = rest / n.clone();
        len += 1;
    }
    Ok(len)
}

/// Largest `m` with `m^a <= x`.
pub fn floor_root<T: Natural>(x: &T, a: u32) -> Result<T> {
    if a == 0 {
        return Err(Error::domain("root index must be at least 1"));
    }
    if a == 1 || x.is_zero() || x.is_one() {
        return Ok(x.clone());
    }
    let bits = x.bit_len();
    // x < 2^bits <= 2^a, so the root is 1.
    if u64::from(a) >= bits {
        return Ok(T::one());
    }
    let guess = if bits <= 52 {
        float_seed(x, a)
    } else {
        newton_root(x, a)
    };
    Ok(correct_root(x, a, guess))
}

/// Smallest `m` with `m^a >= x`.
pub fn ceil_root<T: Natural>(x: &T, a: u32) -> Result<T> {
    let r = floor_root(x, a)?;
    if checked_pow(&r, a).as_ref() == Some(x) {
        Ok(r)
    } else {
        Ok(r + T::one())
    }
}

/// `m^a <= x`, treating overflow as "greater".
fn pow_le<T: Natural>(m: &T, a: u32, x: &T) -> bool {
    checked_pow(m, a).is_some_and(|p| p <= *x)
}

fn float_seed<T: Natural>(x: &T, a: u32) -> T {
    let xf = x.to_f64().expect("52-bit value converts to f64");
    T::from_f64(xf.powf(1.0 / f64::from(a)).floor()).unwrap_or_else(T::one)
}

fn newton_root<T: Natural>(x: &T, a: u32) -> T {
    let e = x.bit_len().div_ceil(u64::from(a)) as usize;
    // (2^e)^a >= 2^bits > x, so the iteration starts above the root.
    let mut r = T::one() << e;
    let a_t = T::from_u32(a).expect("root index fits");
    let a_m1 = T::from_u32(a - 1).expect("root index fits");
    loop {
        let q = match checked_pow(&r, a - 1) {
            Some(p) => x.clone() / p,
            None => T::zero(),
        };
        let next = (a_m1.clone() * r.clone() + q) / a_t.clone();
        if next >= r {
            return r;
        }
        r = next;
    }
}

fn correct_root<T: Natural>(x: &T, a: u32, mut r: T) -> T {
    while !r.is_zero() && !pow_le(&r, a, x) {
        r = r - T::one();
    }
    loop {
        let up = r.clone() + T::one();
        if pow_le(&up, a, x) {
            r = up;
        } else {
            return r;
        }
    }
}
