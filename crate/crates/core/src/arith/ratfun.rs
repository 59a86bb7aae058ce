//! The field of rational functions, kept in reduced canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{Float, One};

use super::field::Field;
use super::fmt as pfmt;
use super::gcd::gcd;
use super::poly::Poly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A quotient `num / den` of polynomials.
///
/// Invariants: `den` is nonzero and monic under graded-lex, `gcd(num, den)`
/// is a unit, and zero is stored as `0/1`. Two rational functions are equal
/// exactly when their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalFunction<F> {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if num.nvars() != den.nvars() {
            return Err(Error::ArityMismatch {
                left: num.nvars(),
                right: den.nvars(),
            });
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero(num.nvars()));
        }
        if den.is_constant() {
            let c = den.leading_coeff();
            return Ok(Self::scaled(num, den, &c));
        }
        let g = gcd(&num, &den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let c = den.leading_coeff();
        Ok(Self::scaled(num, den, &c))
    }

    fn scaled(num: Poly<F>, den: Poly<F>, c: &F) -> Self {
        if c.is_one() {
            return RationalFunction { num, den };
        }
        let inv = c.inv().expect("nonzero leading coefficient");
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let n = p.nvars();
        RationalFunction {
            num: p,
            den: Poly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Poly::one(nvars))
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::from_poly(Poly::constant(nvars, c))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::from_poly(Poly::var(nvars, index))
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_constant() && self.num.is_constant()
    }

    pub fn constant_value(&self) -> Option<F> {
        if self.den.is_constant() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly<F>> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.nvars() != other.nvars() {
            return Err(Error::ArityMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            if self.is_polynomial() {
                return Ok(Self::from_poly(self.num.try_add(&other.num)?));
            }
            return Self::new(self.num.try_add(&other.num)?, self.den.clone());
        }
        if other.is_polynomial() {
            return Self::new(
                self.num.try_add(&(&other.num * &self.den))?,
                self.den.clone(),
            );
        }
        if self.is_polynomial() {
            return Self::new(
                (&self.num * &other.den).try_add(&other.num)?,
                other.den.clone(),
            );
        }
        let g = gcd(&self.den, &other.den)?;
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = other.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&other.num * &a);
        Self::new(num, &self.den * &b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other.clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.nvars() != other.nvars() {
            return Err(Error::ArityMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars()));
        }
        if self.is_polynomial() && other.is_polynomial() {
            return Ok(Self::from_poly(self.num.try_mul(&other.num)?));
        }
        // cross-cancel so the product is already reduced
        let g1 = gcd(&self.num, &other.den)?;
        let g2 = gcd(&other.num, &self.den)?;
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let den = &d1 * &d2;
        let c = den.leading_coeff();
        Ok(Self::scaled(&n1 * &n2, den, &c))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.num.leading_coeff();
        Ok(Self::scaled(self.den.clone(), self.num.clone(), &c))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Exact value at a point; a vanishing denominator is a pole.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        let d = self.den.eval(point)?;
        let n = self.num.eval(point)?;
        let inv = d.inv().ok_or(Error::PoleAtPoint)?;
        Ok(n * inv)
    }

    pub fn eval_complex<T: Float>(&self, point: &[Complex<T>]) -> Complex<T> {
        self.num.eval_complex(point) / self.den.eval_complex(point)
    }

    /// Exact `m`-th root in the field, when one exists and the leading scalar
    /// has a root in `F`.
    pub fn nth_root(&self, m: u32) -> Option<Self> {
        let num = super::root::poly_nth_root(&self.num, m)?;
        let den = super::root::poly_nth_root(&self.den, m)?;
        Self::new(num, den).ok()
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> RationalFunction<G> {
        RationalFunction::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
            .expect("coefficient map preserves nonzero denominators")
    }

    pub fn extend_vars(&self, nvars: usize) -> Self {
        RationalFunction {
            num: self.num.extend_vars(nvars),
            den: self.den.extend_vars(nvars),
        }
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let n = self.num.to_string_with(names);
        if self.is_polynomial() {
            return n;
        }
        let d = self.den.to_string_with(names);
        let wrap_num = n.starts_with('-') || n[1..].contains(['+', '-']);
        let wrap_den = d.contains(['+', '-', '*', '/']);
        let n = if wrap_num { format!("({n})") } else { n };
        let d = if wrap_den { format!("({d})") } else { d };
        format!("{n}/{d}")
    }

    /// Appends `self * body / div` to a sum being printed. Polynomial
    /// coefficients are expanded term by term; `body` and `div` may be empty.
    pub(crate) fn push_scaled_term(
        &self,
        out: &mut String,
        names: &[String],
        body: &str,
        div: &str,
    ) {
        let join = |mono: String| -> String {
            let mut s = match (mono.is_empty(), body.is_empty()) {
                (true, _) => body.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mono}*{body}"),
            };
            if !div.is_empty() && !s.is_empty() {
                s = format!("{s}/{div}");
            }
            s
        };
        let push = |out: &mut String, c: &Scalar, joined: String| {
            if joined.is_empty() && !div.is_empty() {
                // bare constant over a power: keep the constant grouped
                let mut tmp = String::new();
                pfmt::push_term(&mut tmp, c, "");
                let neg = tmp.starts_with('-');
                let mag = tmp.trim_start_matches('-');
                if neg {
                    out.push('-');
                } else if !out.is_empty() {
                    out.push('+');
                }
                if mag.contains(['/', '+', '-', '*']) {
                    out.push_str(&format!("({mag})/{div}"));
                } else {
                    out.push_str(&format!("{mag}/{div}"));
                }
            } else {
                pfmt::push_term(out, c, &joined);
            }
        };
        if let Some(p) = self.as_poly() {
            for (m, c) in p.terms().rev() {
                let joined = join(pfmt::monomial_string(m.exps(), names));
                push(out, &c.to_scalar(), joined);
            }
            return;
        }
        let s = self.to_string_with(names);
        let s = if s.starts_with('(') || !s.starts_with('-') {
            s
        } else {
            format!("({s})")
        };
        push(out, &Scalar::one(), join(s));
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.to_string_with(&pfmt::default_var_names(self.nvars()))
        )
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, F: Field> $trait<&'a RationalFunction<F>> for &'a RationalFunction<F> {
            type Output = RationalFunction<F>;
            fn $method(self, rhs: &'a RationalFunction<F>) -> RationalFunction<F> {
                self.$checked(rhs)
                    .expect("rational function arithmetic failed")
            }
        }
        impl<F: Field> $trait for RationalFunction<F> {
            type Output = RationalFunction<F>;
            fn $method(self, rhs: RationalFunction<F>) -> RationalFunction<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl<F: Field> Neg for RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Neg for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        -self.clone()
    }
}
