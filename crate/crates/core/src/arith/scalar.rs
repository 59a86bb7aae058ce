//! Gaussian rationals, the ground field ℚ(i).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{rational_nth_root, Field};
use crate::error::{Error, Result};

/// An exact complex number `re + im·i` with arbitrary-precision rational parts.
///
/// Both parts are always in lowest terms with a positive denominator, so
/// derived equality and hashing are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn from_real(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::from_real(BigRational::new(num.into(), den.into()))
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Scalar {
            re: BigRational::new(re.0.into(), re.1.into()),
            im: BigRational::new(im.0.into(), im.1.into()),
        }
    }

    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// `self / rhs`, failing on a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.clone() * inv)
    }

    /// Gaussian-integer `m`-th root of `n`, found by rounding the numeric
    /// candidates and confirming each one exactly.
    fn gaussian_integer_root(re: &BigInt, im: &BigInt, m: u32) -> Option<(BigInt, BigInt)> {
        let z = Complex64::new(re.to_f64()?, im.to_f64()?);
        if !z.re.is_finite() || !z.im.is_finite() {
            return None;
        }
        let (r, arg) = z.to_polar();
        let mag = r.powf(1.0 / m as f64);
        for k in 0..m {
            let phase = (arg + 2.0 * std::f64::consts::PI * k as f64) / m as f64;
            let c = Complex64::from_polar(mag, phase);
            let (cr, ci) = (
                BigInt::from(c.re.round() as i64),
                BigInt::from(c.im.round() as i64),
            );
            if mag > 2f64.powi(52) {
                return None;
            }
            let cand = Scalar::new(
                BigRational::from_integer(cr.clone()),
                BigRational::from_integer(ci.clone()),
            );
            let target = Scalar::new(
                BigRational::from_integer(re.clone()),
                BigRational::from_integer(im.clone()),
            );
            if cand.pow_u32(m) == target {
                return Some((cr, ci));
            }
        }
        None
    }
}

impl fmt::Display for Scalar {
    /// Prints in the expression grammar: `3/2`, `-i`, `1/2+3*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &BigRational| -> fmt::Result {
            if v.is_one() {
                write!(f, "i")
            } else {
                write!(f, "{}*i", v)
            }
        };
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-")?;
            }
            return imag(f, &self.im.abs());
        }
        write!(f, "{}", self.re)?;
        write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
        imag(f, &self.im.abs())
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::from_real(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_real(BigRational::one())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_real(self.re * rhs.re);
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for Scalar {
    type Output = Scalar;
    /// Panics on a zero divisor; use [`Scalar::checked_div`] for a fallible version.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Scalar) -> Scalar {
        self * rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_real(r)
    }
}

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Scalar::from_real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(Scalar {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    fn from_i64(n: i64) -> Self {
        Scalar::from_real(BigRational::from_integer(n.into()))
    }

    fn to_scalar(&self) -> Scalar {
        self.clone()
    }

    fn from_scalar(s: &Scalar) -> Option<Self> {
        Some(s.clone())
    }

    fn nth_root(&self, m: u32) -> Option<Self> {
        if m == 0 {
            return None;
        }
        if m == 1 || self.is_zero() {
            return Some(self.clone());
        }
        if self.im.is_zero() {
            if let Some(r) = rational_nth_root(&self.re, m) {
                return Some(Scalar::from_real(r));
            }
        }
        // self = N / D with N a Gaussian integer, so a root is root(N·D^(m-1)) / D.
        let d = self.re.denom().lcm(self.im.denom());
        let dq = BigRational::from_integer(d.clone());
        let scaled = self.clone() * Scalar::from_real(dq.clone()).pow_u32(m);
        let (nr, ni) = (scaled.re.to_integer(), scaled.im.to_integer());
        let (rr, ri) = Scalar::gaussian_integer_root(&nr, &ni, m)?;
        let root = Scalar::new(BigRational::new(rr, d.clone()), BigRational::new(ri, d));
        debug_assert!(root.pow_u32(m) == *self);
        Some(root)
    }

    fn to_complex(&self) -> Complex64 {
        Scalar::to_complex(self)
    }

    fn norm_sqr(&self) -> BigRational {
        Scalar::norm_sqr(self)
    }
}
