use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Float;

use crate::arith::fmt as pfmt;
use crate::arith::{Field, RationalFunction};
use crate::error::{Error, Result};

/// A polynomial in a formal variable `w` with rational-function coefficients.
///
/// `coeffs[k]` is the coefficient of `w^k`. The leading coefficient is never
/// zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<F: Field> {
    nvars: usize,
    coeffs: Vec<RationalFunction<F>>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(nvars: usize, mut coeffs: Vec<RationalFunction<F>>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.nvars() == nvars),
            "coefficient arity mismatch"
        );
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        UniPoly { nvars, coeffs }
    }

    pub fn zero(nvars: usize) -> Self {
        UniPoly {
            nvars,
            coeffs: vec![],
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(RationalFunction::one(nvars))
    }

    pub fn constant(c: RationalFunction<F>) -> Self {
        let n = c.nvars();
        Self::new(n, vec![c])
    }

    /// `c * w^k`.
    pub fn monomial(c: RationalFunction<F>, k: usize) -> Self {
        let n = c.nvars();
        let mut coeffs = vec![RationalFunction::zero(n); k];
        coeffs.push(c);
        Self::new(n, coeffs)
    }

    /// The variable `w` itself.
    pub fn w(nvars: usize) -> Self {
        Self::monomial(RationalFunction::one(nvars), 1)
    }

    /// `w + q`.
    pub fn linear(q: RationalFunction<F>) -> Self {
        let n = q.nvars();
        Self::new(n, vec![q, RationalFunction::one(n)])
    }

    /// Polynomial with scalar coefficients, lowest degree first.
    pub fn from_scalars(nvars: usize, cs: &[F]) -> Self {
        Self::new(
            nvars,
            cs.iter()
                .map(|c| RationalFunction::constant(nvars, c.clone()))
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeffs(&self) -> &[RationalFunction<F>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<RationalFunction<F>> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RationalFunction<F> {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.nvars))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `w`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> RationalFunction<F> {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.nvars))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(RationalFunction::is_one)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a.try_add(b)?,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Ok(Self::new(self.nvars, out))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let mut out =
            vec![RationalFunction::zero(self.nvars); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(Self::new(self.nvars, out))
    }

    pub fn scale(&self, c: &RationalFunction<F>) -> Self {
        Self::new(self.nvars, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `w^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![RationalFunction::zero(self.nvars); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.nvars, coeffs)
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self
            .leading_coeff()
            .inv()
            .expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Euclidean division: `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.leading_coeff().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RationalFunction::zero(self.nvars); rem.len().saturating_sub(db)];
        while rem.len() > db {
            let dr = rem.len() - 1;
            let t = rem[dr].try_mul(&lc_inv)?;
            if !t.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let k = dr - db + j;
                    rem[k] = rem[k].try_sub(&t.try_mul(b)?)?;
                }
            }
            quot[dr - db] = t;
            rem.pop();
            while rem.last().is_some_and(RationalFunction::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(self.nvars, quot), Self::new(self.nvars, rem)))
    }

    /// Exact quotient, `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Extended Euclid: `(g, u, v)` with `g` monic, `g = gcd(self, other)`
    /// and `u*self + v*other = g`.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let n = self.nvars;
        if self.is_zero() || other.is_zero() {
            let (nz, swapped) = if self.is_zero() {
                (other, true)
            } else {
                (self, false)
            };
            let inv = Self::constant(nz.leading_coeff().inv()?);
            let (u, v) = if swapped {
                (Self::zero(n), inv)
            } else {
                (inv, Self::zero(n))
            };
            return Ok((nz.monic(), u, v));
        }
        if let Some(out) = super::ffgcd::xgcd(self, other) {
            return Ok(out);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(n), Self::zero(n));
        let (mut t0, mut t1) = (Self::zero(n), Self::one(n));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.try_sub(&q.try_mul(&s1)?)?;
            let t = t0.try_sub(&q.try_mul(&t1)?)?;
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.leading_coeff().inv()?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        Ok(self.xgcd(other)?.0)
    }

    /// Horner evaluation at a rational function.
    pub fn eval(&self, x: &RationalFunction<F>) -> Result<RationalFunction<F>> {
        let mut acc = RationalFunction::zero(self.nvars);
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(x)?.try_add(c)?;
        }
        Ok(acc)
    }

    /// Substitutes `w -> other` (polynomial composition).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let mut acc = Self::zero(self.nvars);
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(other)?.try_add(&Self::constant(c.clone()))?;
        }
        Ok(acc)
    }

    /// `self(w + s)`.
    pub fn shift_arg(&self, s: &RationalFunction<F>) -> Result<Self> {
        self.compose(&Self::linear(s.clone()))
    }

    /// Numeric value at `z` (coefficients) and `w`.
    pub fn eval_complex<T: Float>(&self, z: &[Complex<T>], w: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc * w + c.eval_complex(z);
        }
        acc
    }

    pub fn to_string_with(&self, names: &[String], var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            c.push_scaled_term(&mut out, names, &body, "");
        }
        pfmt::finish(out)
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.to_string_with(&pfmt::default_var_names(self.nvars), "w")
        )
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, F: Field> $trait<&'a UniPoly<F>> for &'a UniPoly<F> {
            type Output = UniPoly<F>;
            fn $method(self, rhs: &'a UniPoly<F>) -> UniPoly<F> {
                self.$checked(rhs).expect("polynomial arity mismatch")
            }
        }
        impl<F: Field> $trait for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $method(self, rhs: UniPoly<F>) -> UniPoly<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<F: Field> Neg for UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        -&self
    }
}
