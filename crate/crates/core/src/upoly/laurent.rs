use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Float;

use super::dense::UniPoly;
use crate::arith::fmt as pfmt;
use crate::arith::{Field, RationalFunction};
use crate::error::{Error, Result};

/// A Laurent polynomial `sum_{k=lo}^{hi} c_k w^k` with rational-function
/// coefficients.
///
/// Both fringe coefficients are nonzero, so the representation of every
/// element is unique; zero is `lo = 0` with no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<F: Field> {
    nvars: usize,
    lo: i64,
    coeffs: Vec<RationalFunction<F>>,
}

impl<F: Field> Laurent<F> {
    pub fn new(nvars: usize, lo: i64, mut coeffs: Vec<RationalFunction<F>>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.nvars() == nvars),
            "coefficient arity mismatch"
        );
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        let lo = if coeffs.is_empty() {
            0
        } else {
            lo + lead as i64
        };
        Laurent { nvars, lo, coeffs }
    }

    pub fn zero(nvars: usize) -> Self {
        Laurent {
            nvars,
            lo: 0,
            coeffs: vec![],
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(RationalFunction::one(nvars), 0)
    }

    pub fn constant(c: RationalFunction<F>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * w^k`.
    pub fn monomial(c: RationalFunction<F>, k: i64) -> Self {
        let n = c.nvars();
        Self::new(n, k, vec![c])
    }

    pub fn from_upoly(p: &UniPoly<F>) -> Self {
        Self::new(p.nvars(), 0, p.coeffs().to_vec())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent (0 for the zero element).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest exponent, `None` for zero.
    pub fn hi(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[RationalFunction<F>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> RationalFunction<F> {
        let idx = k - self.lo;
        if idx < 0 {
            return RationalFunction::zero(self.nvars);
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.nvars))
    }

    /// Terms `(k, c_k)` with nonzero coefficient, lowest exponent first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &RationalFunction<F>)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// The element as an ordinary polynomial in `w`, if `lo >= 0`.
    pub fn to_upoly(&self) -> Option<UniPoly<F>> {
        if self.is_zero() {
            return Some(UniPoly::zero(self.nvars));
        }
        (self.lo >= 0)
            .then(|| UniPoly::new(self.nvars, self.coeffs.clone()).shift_up(self.lo as usize))
    }

    /// `(m, Q)` with `self = w^m * Q(w)` and `Q(0) != 0`.
    pub fn split_unit(&self) -> Result<(i64, UniPoly<F>)> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok((self.lo, UniPoly::new(self.nvars, self.coeffs.clone())))
    }

    /// Multiplies by `w^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Laurent {
            nvars: self.nvars,
            lo: self.lo + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &RationalFunction<F>) -> Self {
        Self::new(
            self.nvars,
            self.lo,
            self.coeffs.iter().map(|a| a * c).collect(),
        )
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
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().unwrap().max(other.hi().unwrap());
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        for k in lo..=hi {
            out.push(self.coeff(k).try_add(&other.coeff(k))?);
        }
        Ok(Self::new(self.nvars, lo, out))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let a = UniPoly::new(self.nvars, self.coeffs.clone());
        let b = UniPoly::new(other.nvars, other.coeffs.clone());
        let prod = a.try_mul(&b)?;
        Ok(Self::new(
            self.nvars,
            self.lo + other.lo,
            prod.into_coeffs(),
        ))
    }

    pub fn eval_complex<T: Float>(&self, z: &[Complex<T>], w: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (k, c) in self.terms() {
            acc = acc + c.eval_complex(z) * w.powi(k as i32);
        }
        acc
    }

    /// Prints negative powers as divisions, e.g. `1/2*w-1/2/w`.
    pub fn to_string_with(&self, names: &[String], var: &str) -> String {
        let mut out = String::new();
        let items: Vec<_> = self.terms().collect();
        for (k, c) in items.into_iter().rev() {
            let (body, div) = match k {
                0 => (String::new(), String::new()),
                1 => (var.to_string(), String::new()),
                -1 => (String::new(), var.to_string()),
                k if k > 0 => (format!("{var}^{k}"), String::new()),
                k => (String::new(), format!("{var}^{}", -k)),
            };
            c.push_scaled_term(&mut out, names, &body, &div);
        }
        pfmt::finish(out)
    }
}

impl<F: Field> fmt::Display for Laurent<F> {
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
        impl<'a, F: Field> $trait<&'a Laurent<F>> for &'a Laurent<F> {
            type Output = Laurent<F>;
            fn $method(self, rhs: &'a Laurent<F>) -> Laurent<F> {
                self.$checked(rhs).expect("Laurent arity mismatch")
            }
        }
        impl<F: Field> $trait for Laurent<F> {
            type Output = Laurent<F>;
            fn $method(self, rhs: Laurent<F>) -> Laurent<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<F: Field> Neg for &Laurent<F> {
    type Output = Laurent<F>;
    fn neg(self) -> Laurent<F> {
        Laurent {
            nvars: self.nvars,
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<F: Field> Neg for Laurent<F> {
    type Output = Laurent<F>;
    fn neg(self) -> Laurent<F> {
        -&self
    }
}
