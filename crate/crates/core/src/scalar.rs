//! Exact integer scalars.
//!
//! Every algorithm in this crate is written against [`Scalar`]. Fixed-width
//! implementations (`i64`, `i128`) use checked arithmetic and surface
//! [`Error::Overflow`] instead of wrapping, so a computation either returns
//! the exact answer or fails loudly. `BigInt` never overflows.
//! [`with_overflow_fallback`] runs the cheap path first and retries exactly.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Send
    + Sync
    + 'static
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + ToBigInt
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("every scalar type holds an i64")
    }

    fn from_bigint(v: &BigInt) -> Result<Self>;

    fn to_big(&self) -> BigInt {
        self.to_bigint().expect("integer scalars convert to BigInt")
    }

    #[inline]
    fn add_c(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    #[inline]
    fn sub_c(&self, rhs: &Self) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Overflow)
    }

    #[inline]
    fn mul_c(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }

    /// Truncating division.
    #[inline]
    fn div_c(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs).ok_or(Error::Overflow)
    }

    #[inline]
    fn neg_c(&self) -> Result<Self> {
        Self::zero().sub_c(self)
    }

    #[inline]
    fn abs_c(&self) -> Result<Self> {
        if self.is_negative() {
            self.neg_c()
        } else {
            Ok(self.clone())
        }
    }
}

impl Scalar for i64 {
    fn from_bigint(v: &BigInt) -> Result<Self> {
        v.to_i64().ok_or(Error::Overflow)
    }
}

impl Scalar for i128 {
    fn from_bigint(v: &BigInt) -> Result<Self> {
        v.to_i128().ok_or(Error::Overflow)
    }
}

impl Scalar for BigInt {
    fn from_bigint(v: &BigInt) -> Result<Self> {
        Ok(v.clone())
    }
}

/// Run `fast` (typically instantiated at `i64`); if it overflows, run `exact`.
pub fn with_overflow_fallback<R>(
    fast: impl FnOnce() -> Result<R>,
    exact: impl FnOnce() -> Result<R>,
) -> Result<R> {
    match fast() {
        Err(Error::Overflow) => exact(),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_width_overflow_is_reported() {
        assert_eq!(i64::MAX.add_c(&1), Err(Error::Overflow));
        assert_eq!(i64::MIN.neg_c(), Err(Error::Overflow));
        assert_eq!((i64::MAX / 2).mul_c(&3), Err(Error::Overflow));
        let big = BigInt::from(i64::MAX);
        assert_eq!(big.add_c(&BigInt::from(1)).unwrap().to_string(), "9223372036854775808");
    }

    #[test]
    fn fallback_only_on_overflow() {
        let r = with_overflow_fallback(|| Err::<u8, _>(Error::Overflow), || Ok(7));
        assert_eq!(r, Ok(7));
        let r = with_overflow_fallback(|| Err::<u8, _>(Error::InvalidGroup("x".into())), || Ok(7));
        assert!(r.is_err());
    }
}
