//! Integer scalars for the exact linear-algebra kernels.
//!
//! All matrix code is generic over [`Scalar`] so the same routines run on
//! machine words and on arbitrary-precision integers. The `i64`
//! instantiation uses checked arithmetic and reports overflow instead of
//! wrapping; callers retry the whole computation over [`BigInt`], whose
//! checked operations never fail. Concrete aliases live at the crate root.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};
use std::fmt;
use std::hash::Hash;

/// Raised by the fixed-width instantiation when a value leaves the
/// representable range. Never raised over `BigInt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

impl fmt::Display for Overflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "integer overflow in fixed-width arithmetic")
    }
}

/// An exact integer scalar: ordered, signed, with Euclidean division and
/// checked ring operations.
pub trait Scalar:
    Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + Clone + Hash + fmt::Display + fmt::Debug + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Exact conversion to `i64` when the value fits.
    fn to_i64(&self) -> Option<i64>;

    fn checked_add_ref(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_add(other).ok_or(Overflow)
    }

    fn checked_sub_ref(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_sub(other).ok_or(Overflow)
    }

    fn checked_mul_ref(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_mul(other).ok_or(Overflow)
    }

    fn checked_neg_ref(&self) -> Result<Self, Overflow>;

    /// Quotient minimizing the remainder: `self = q * d + r` with
    /// `|r| <= |d| / 2`. Keeps entry growth down during elimination.
    fn rounded_div(&self, d: &Self) -> Result<Self, Overflow> {
        debug_assert!(!d.is_zero());
        let (mut q, r) = self.div_mod_floor(d); // 0 <= r < |d| for d > 0
        let two_r = r.checked_add(&r).ok_or(Overflow)?;
        if two_r.abs() > d.abs() {
            q = if d.is_positive() {
                q.checked_add(&Self::one()).ok_or(Overflow)?
            } else {
                q.checked_sub(&Self::one()).ok_or(Overflow)?
            };
        }
        Ok(q)
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }

    fn to_i64(&self) -> Option<i64> {
        Some(*self)
    }

    fn checked_neg_ref(&self) -> Result<Self, Overflow> {
        self.checked_neg().ok_or(Overflow)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn to_i64(&self) -> Option<i64> {
        num_traits::ToPrimitive::to_i64(self)
    }

    fn checked_neg_ref(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounded_div_minimizes_remainder() {
        for a in -20i64..=20 {
            for d in [-7i64, -3, -2, 2, 3, 7] {
                let q = a.rounded_div(&d).unwrap();
                let r = a - q * d;
                assert!(2 * r.abs() <= d.abs(), "a={a} d={d} q={q} r={r}");
            }
        }
    }

    #[test]
    fn i64_overflow_is_reported() {
        assert_eq!(i64::MAX.checked_add_ref(&1), Err(Overflow));
        assert_eq!((i64::MIN).checked_neg_ref(), Err(Overflow));
        assert!(BigInt::from(i64::MAX)
            .checked_add_ref(&BigInt::from(1))
            .is_ok());
    }
}
