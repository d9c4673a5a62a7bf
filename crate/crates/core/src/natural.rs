//! The scalar abstraction every encoder is generic over.
//!
//! Fixed-width types (`u32`, `u64`, `u128`) are fast but report
//! [`Error::Overflow`](crate::Error::Overflow) when a result does not fit;
//! [`BigUint`] never overflows.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Shl, Shr};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive, Unsigned};

use crate::error::{Error, Result};

pub trait Natural:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Unsigned
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Shl<usize, Output = Self>
    + Shr<usize, Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Number of significant bits; zero for zero.
    fn bit_len(&self) -> u64;

    /// Largest representable value, if there is one.
    fn max_value() -> Option<Self>;
}

macro_rules! impl_natural_prim {
    ($($t:ty),*) => {$(
        impl Natural for $t {
            #[inline]
            fn bit_len(&self) -> u64 {
                u64::from(<$t>::BITS - self.leading_zeros())
            }

            #[inline]
            fn max_value() -> Option<Self> {
                Some(<$t>::MAX)
            }
        }
    )*};
}

impl_natural_prim!(u32, u64, u128);

impl Natural for BigUint {
    fn bit_len(&self) -> u64 {
        self.bits()
    }

    fn max_value() -> Option<Self> {
        None
    }
}

/// Converts a small machine integer into `T`.
pub fn nat<T: Natural>(v: u64) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow("constant conversion"))
}

pub(crate) fn add<T: Natural>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn mul<T: Natural>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// `a - b` for `a >= b`. Callers guarantee the ordering.
pub(crate) fn sub<T: Natural>(a: &T, b: &T) -> T {
    a.checked_sub(b).expect("subtraction underflow")
}

/// `a - b` clamped at zero.
pub(crate) fn saturating_sub<T: Natural>(a: &T, b: &T) -> T {
    a.checked_sub(b).unwrap_or_else(T::zero)
}

pub(crate) fn succ<T: Natural>(a: &T, what: &'static str) -> Result<T> {
    add(a, &T::one(), what)
}

/// Converts to `usize`, for values known to be small (digits, symbols).
pub(crate) fn small<T: Natural>(v: &T) -> usize {
    v.to_usize().expect("small value does not fit in usize")
}
