//! Coefficient types for polynomials and series.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::bigfloat::BigFloat;

/// A field-like coefficient: exact rationals, [`BigFloat`], `f64` or `f32`.
///
/// Integer and rational scalings are separate methods so that exact
/// substitution coefficients never pass through a lossy conversion first.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_bigint(n: &BigInt) -> Self;
    fn scale_int(&self, n: &BigInt) -> Self;
    fn scale_ratio(&self, q: &BigRational) -> Self;
    fn to_f64(&self) -> f64;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// `|self|` as a double, used for residuals.
    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn scale_int(&self, n: &BigInt) -> Self {
        self * BigRational::from_integer(n.clone())
    }
    fn scale_ratio(&self, q: &BigRational) -> Self {
        self * q
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for BigFloat {
    fn from_bigint(n: &BigInt) -> Self {
        BigFloat::from_bigint(n)
    }
    fn scale_int(&self, n: &BigInt) -> Self {
        self.mul_int(n)
    }
    fn scale_ratio(&self, q: &BigRational) -> Self {
        self.mul_ratio(q)
    }
    fn to_f64(&self) -> f64 {
        BigFloat::to_f64(self)
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_bigint(n: &BigInt) -> Self {
                n.to_f64().unwrap_or(f64::NAN) as $t
            }
            fn scale_int(&self, n: &BigInt) -> Self {
                self * n.to_f64().unwrap_or(f64::NAN) as $t
            }
            fn scale_ratio(&self, q: &BigRational) -> Self {
                self * ToPrimitive::to_f64(q).unwrap_or(f64::NAN) as $t
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

float_scalar!(f64);
float_scalar!(f32);

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_of<S: Scalar>(x: S) -> S {
        x.scale_ratio(&rat(1, 2))
    }

    #[test]
    fn realizations_agree_on_rationals() {
        assert_eq!(half_of(int(3)), rat(3, 2));
        assert_eq!(half_of(BigFloat::from_i64(3)).to_f64(), 1.5);
        assert_eq!(half_of(3.0f64), 1.5);
        assert_eq!(half_of(3.0f32), 1.5);
        assert_eq!(<f64 as Scalar>::from_i64(-4).scale_int(&BigInt::from(3)), -12.0);
    }
}
