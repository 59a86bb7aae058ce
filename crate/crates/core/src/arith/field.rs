use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::Scalar;

/// An exact, computable field that embeds into the Gaussian rationals.
///
/// Every coefficient type of the symbolic layer implements this. The
/// embedding into [`Scalar`] is what printing and numeric evaluation go
/// through, so a new field only has to supply the ring operations, inversion
/// and the embedding.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    fn to_scalar(&self) -> Scalar;

    /// Inverse of [`Field::to_scalar`] where the value lies in `Self`.
    fn from_scalar(s: &Scalar) -> Option<Self>;

    /// Some `r` with `r^m == self`, if one exists in the field and can be found.
    fn nth_root(&self, m: u32) -> Option<Self>;

    fn to_complex(&self) -> Complex64 {
        self.to_scalar().to_complex()
    }

    /// `|self|^2` as an exact rational.
    fn norm_sqr(&self) -> BigRational {
        self.to_scalar().norm_sqr()
    }

    /// The value as an integer, if it is one.
    fn as_integer(&self) -> Option<BigInt> {
        let s = self.to_scalar();
        if s.im().is_zero() && s.re().is_integer() {
            Some(s.re().to_integer())
        } else {
            None
        }
    }

    fn pow_u32(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Exact `m`-th root of a rational number, `None` if it is not a perfect power.
pub(crate) fn rational_nth_root(x: &BigRational, m: u32) -> Option<BigRational> {
    if m == 0 {
        return None;
    }
    if m == 1 || x.is_zero() {
        return Some(x.clone());
    }
    if x.is_negative() && m.is_multiple_of(2) {
        return None;
    }
    let num = x.numer().abs();
    let den = x.denom().clone();
    let rn = num.nth_root(m);
    let rd = den.nth_root(m);
    if num_traits::pow(rn.clone(), m as usize) != num
        || num_traits::pow(rd.clone(), m as usize) != den
    {
        return None;
    }
    let r = BigRational::new(rn, rd);
    Some(if x.is_negative() { -r } else { r })
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::from_real(self.clone())
    }

    fn from_scalar(s: &Scalar) -> Option<Self> {
        if s.im().is_zero() {
            Some(s.re().clone())
        } else {
            None
        }
    }

    fn nth_root(&self, m: u32) -> Option<Self> {
        rational_nth_root(self, m)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn norm_sqr(&self) -> BigRational {
        self * self
    }

    fn as_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.to_integer())
        } else {
            None
        }
    }
}
