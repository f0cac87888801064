//! Scalar field abstraction.
//!
//! Every structure in this crate is generic over an exact field. The
//! blanket implementation covers `num_rational::Ratio<T>` for signed
//! integer backends; [`crate::Scalar`] fixes the arbitrary-precision one.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{NumAssign, One, Signed, Zero};

/// An exact field of characteristic zero.
///
/// Equality must be decidable and exact: checks throughout the crate compare
/// scalars with `==`, so floating point types are deliberately not admitted.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + for<'r> AddAssign<&'r Self>
    + for<'r> SubAssign<&'r Self>
    + for<'r> MulAssign<&'r Self>
    + for<'r> DivAssign<&'r Self>
    + FromStr
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// Multiplicative inverse, `None` for zero.
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let mut t = a.clone();
        t *= b;
        *self += &t;
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + NumAssign
        + From<i64>
        + Debug
        + Display
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from(n))
    }
}
