//! Normal form `sum_j r_j * exp(p_j)` of expressions built from rational
//! functions and exponentials of polynomials.

use num_complex::Complex;
use num_traits::Float;

use crate::arith::{Field, Poly, RationalFunction};
use crate::error::{Error, Result};
use crate::expr::{Expr, Var};

/// A finite sum of rational functions times exponentials of polynomials.
///
/// Exponents are pairwise distinct and coefficients nonzero; the exponent
/// `0` holds the purely rational part. Terms are kept sorted so that equal
/// sums compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpSum<F: Field> {
    nvars: usize,
    terms: Vec<(Poly<F>, RationalFunction<F>)>,
}

fn exponent_key<F: Field>(p: &Poly<F>) -> (u32, String) {
    (p.total_degree().unwrap_or(0), p.to_string())
}

impl<F: Field> ExpSum<F> {
    pub fn zero(nvars: usize) -> Self {
        ExpSum {
            nvars,
            terms: vec![],
        }
    }

    pub fn rational(r: RationalFunction<F>) -> Self {
        let n = r.nvars();
        Self::term(Poly::zero(n), r)
    }

    /// `exp(p)`.
    pub fn exp_of(p: Poly<F>) -> Self {
        let n = p.nvars();
        Self::term(p, RationalFunction::one(n))
    }

    pub fn term(exponent: Poly<F>, coeff: RationalFunction<F>) -> Self {
        let n = coeff.nvars();
        let mut s = ExpSum::zero(n);
        s.push(exponent, coeff);
        s
    }

    fn push(&mut self, exponent: Poly<F>, coeff: RationalFunction<F>) {
        if coeff.is_zero() {
            return;
        }
        if let Some(i) = self.terms.iter().position(|(e, _)| *e == exponent) {
            let sum = &self.terms[i].1 + &coeff;
            if sum.is_zero() {
                self.terms.remove(i);
            } else {
                self.terms[i].1 = sum;
            }
        } else {
            let key = exponent_key(&exponent);
            let at = self.terms.partition_point(|(e, _)| exponent_key(e) < key);
            self.terms.insert(at, (exponent, coeff));
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Poly<F>, RationalFunction<F>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when no exponential survives.
    pub fn as_rational(&self) -> Option<RationalFunction<F>> {
        match self.terms.as_slice() {
            [] => Some(RationalFunction::zero(self.nvars)),
            [(e, r)] if e.is_zero() => Some(r.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, r) in &other.terms {
            out.push(e.clone(), r.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        ExpSum {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, r)| (e.clone(), -r)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = ExpSum::zero(self.nvars);
        for (e1, r1) in &self.terms {
            for (e2, r2) in &other.terms {
                out.push(e1 + e2, r1 * r2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = ExpSum::rational(RationalFunction::one(self.nvars));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a single term `r*exp(p)`; sums with several terms have no
    /// inverse of this shape.
    pub fn inv(&self) -> Result<Self> {
        match self.terms.as_slice() {
            [] => Err(Error::DivisionByZero),
            [(e, r)] => Ok(Self::term(-e, r.inv()?)),
            _ => Err(Error::UnsupportedGenerator(
                "division by an expression containing exponentials".into(),
            )),
        }
    }

    /// Numeric value at a point.
    pub fn eval_complex<T: Float>(&self, z: &[Complex<T>]) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (e, r) in &self.terms {
            acc = acc + r.eval_complex(z) * e.eval_complex(z).exp();
        }
        acc
    }
}

/// Rewrites `expr` in exponential-sum normal form over `nvars` variables.
///
/// `assign` gives the meaning of every variable. `exp` must be applied to
/// something that normalizes to a polynomial, and only single terms
/// `r*exp(p)` may appear in a denominator.
pub fn lower<F: Field>(
    expr: &Expr<F>,
    nvars: usize,
    assign: &dyn Fn(Var) -> Result<ExpSum<F>>,
) -> Result<ExpSum<F>> {
    let rec = |e: &Expr<F>| lower(e, nvars, assign);
    Ok(match expr {
        Expr::Const(c) => ExpSum::rational(RationalFunction::constant(nvars, c.clone())),
        Expr::Var(v) => assign(*v)?,
        Expr::Add(a, b) => rec(a)?.add(&rec(b)?),
        Expr::Sub(a, b) => rec(a)?.add(&rec(b)?.neg()),
        Expr::Mul(a, b) => rec(a)?.mul(&rec(b)?),
        Expr::Div(a, b) => {
            let den = rec(b)?;
            rec(a)?.mul(&den.inv()?)
        }
        Expr::Neg(a) => rec(a)?.neg(),
        Expr::Pow(a, e) => rec(a)?.pow(*e),
        Expr::Exp(a) => {
            let arg = rec(a)?;
            let r = arg.as_rational().ok_or_else(|| {
                Error::UnsupportedGenerator(format!(
                    "exp applied to a non-polynomial argument: {a}"
                ))
            })?;
            let p = r.as_poly().cloned().ok_or_else(|| {
                Error::UnsupportedGenerator(format!(
                    "exp applied to a non-polynomial argument: {a}"
                ))
            })?;
            ExpSum::exp_of(p)
        }
    })
}

/// Variable assignment that maps `z_k` to itself and rejects everything else.
pub fn z_only<F: Field>(nvars: usize) -> impl Fn(Var) -> Result<ExpSum<F>> {
    move |v| match v {
        Var::Z(k) if k < nvars => Ok(ExpSum::rational(RationalFunction::var(nvars, k))),
        other => Err(Error::InvalidInput(format!(
            "variable '{other}' is not allowed here"
        ))),
    }
}
