//! Exact number types: arbitrary-precision rationals and the Eisenstein
//! rationals Q(w), w a primitive cube root of unity.

mod cyclo;
mod rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use cyclo::{epsilon, omega_pow, CycloRational};
pub use rational::Rational;

/// An associative ring with identity. Multiplication need not commute
/// (quaternions implement this trait too).
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// Image of an integer under the unique ring map from Z.
    fn from_i64(v: i64) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}
