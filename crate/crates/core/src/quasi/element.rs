use std::fmt;

use num_complex::Complex;
use num_traits::{Float, ToPrimitive};

use super::expsum::{lower, ExpSum};
use super::generator::GenDescriptor;
use crate::arith::fmt::default_var_names;
use crate::arith::{Field, Poly, RationalFunction};
use crate::error::{Error, Result};
use crate::expr::{Expr, Var};
use crate::upoly::{Laurent, UniPoly};

/// An element of `R^n[f]` (as a polynomial in `f`) or of `R^n[e^p, e^{-p}]`
/// (as a Laurent polynomial in `w = e^p`).
///
/// Both representations are unique: `f` is transcendental over `R^n` by
/// assertion, and `e^p` is transcendental for nonconstant `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraElement<F: Field> {
    Generic(UniPoly<F>),
    Exp(Laurent<F>),
}

impl<F: Field> AlgebraElement<F> {
    pub fn is_zero(&self) -> bool {
        match self {
            AlgebraElement::Generic(p) => p.is_zero(),
            AlgebraElement::Exp(l) => l.is_zero(),
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            AlgebraElement::Generic(p) => p.nvars(),
            AlgebraElement::Exp(l) => l.nvars(),
        }
    }

    pub fn basis_name(&self) -> &'static str {
        match self {
            AlgebraElement::Generic(_) => "generic",
            AlgebraElement::Exp(_) => "exp",
        }
    }

    fn same_basis<'a>(&'a self, other: &'a Self) -> Result<()> {
        match (self, other) {
            (AlgebraElement::Generic(_), AlgebraElement::Generic(_))
            | (AlgebraElement::Exp(_), AlgebraElement::Exp(_)) => Ok(()),
            _ => Err(Error::BasisMismatch),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        Ok(match (self, other) {
            (AlgebraElement::Generic(a), AlgebraElement::Generic(b)) => {
                AlgebraElement::Generic(a.try_mul(b)?)
            }
            (AlgebraElement::Exp(a), AlgebraElement::Exp(b)) => AlgebraElement::Exp(a.try_mul(b)?),
            _ => unreachable!(),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        Ok(match (self, other) {
            (AlgebraElement::Generic(a), AlgebraElement::Generic(b)) => {
                AlgebraElement::Generic(a.try_add(b)?)
            }
            (AlgebraElement::Exp(a), AlgebraElement::Exp(b)) => AlgebraElement::Exp(a.try_add(b)?),
            _ => unreachable!(),
        })
    }

    pub fn scale(&self, r: &RationalFunction<F>) -> Self {
        match self {
            AlgebraElement::Generic(p) => AlgebraElement::Generic(p.scale(r)),
            AlgebraElement::Exp(l) => AlgebraElement::Exp(l.scale(r)),
        }
    }

    /// Numeric value; `gen_value` is `f(z)` for the generic basis and
    /// `e^{p(z)}` for the exponential one.
    pub fn eval_complex<T: Float>(&self, z: &[Complex<T>], gen_value: Complex<T>) -> Complex<T> {
        match self {
            AlgebraElement::Generic(p) => p.eval_complex(z, gen_value),
            AlgebraElement::Exp(l) => l.eval_complex(z, gen_value),
        }
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        match self {
            AlgebraElement::Generic(p) => p.to_string_with(names, "f"),
            AlgebraElement::Exp(l) => l.to_string_with(names, "w"),
        }
    }
}

impl<F: Field> fmt::Display for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.to_string_with(&default_var_names(self.nvars()))
        )
    }
}

/// Rewrites a polynomial in `f = q1 w + q2` as a polynomial in `w = e^p`.
///
/// This is the ring isomorphism `R^n[f] -> R^n[e^p]`; the image has no
/// negative powers.
pub fn to_exp_basis<F: Field>(
    elem: &UniPoly<F>,
    q1: &RationalFunction<F>,
    q2: &RationalFunction<F>,
) -> Result<Laurent<F>> {
    if q1.is_zero() {
        return Err(Error::InvalidInput("q1 must be nonzero".into()));
    }
    let sub = UniPoly::new(elem.nvars(), vec![q2.clone(), q1.clone()]);
    Ok(Laurent::from_upoly(&elem.compose(&sub)?))
}

/// Inverse of [`to_exp_basis`] on elements without negative powers.
pub fn from_exp_basis<F: Field>(
    elem: &Laurent<F>,
    q1: &RationalFunction<F>,
    q2: &RationalFunction<F>,
) -> Result<Option<UniPoly<F>>> {
    let Some(p) = elem.to_upoly() else {
        return Ok(None);
    };
    let inv = q1.inv()?;
    let sub = UniPoly::new(elem.nvars(), vec![-(q2 * &inv), inv]);
    Ok(Some(p.compose(&sub)?))
}

/// The integer `k` with `e = k*p`, if there is one.
fn multiple_of<F: Field>(e: &Poly<F>, p: &Poly<F>) -> Option<i64> {
    if e.is_zero() {
        return Some(0);
    }
    let ratio = e.leading_coeff() / p.leading_coeff();
    let k = ratio.as_integer()?.to_i64()?;
    (*e == p.scale(&F::from_i64(k))).then_some(k)
}

/// Converts an exponential sum whose exponents are integer multiples of `p`
/// into a Laurent polynomial in `w = e^p`.
pub fn expsum_to_laurent<F: Field>(sum: &ExpSum<F>, p: &Poly<F>) -> Result<Laurent<F>> {
    let n = sum.nvars();
    let mut acc = Laurent::zero(n);
    for (e, r) in sum.terms() {
        let k = multiple_of(e, p).ok_or_else(|| {
            Error::InvalidInput(format!("exp({e}) is not an integer power of exp({p})"))
        })?;
        acc = acc.try_add(&Laurent::monomial(r.clone(), k))?;
    }
    Ok(acc)
}

/// Reads an element of the algebra generated by `gen` from an expression.
///
/// In element expressions `f` names the generator and `w` names `e^p`
/// (available only for an exponential generator); explicit `exp(..)` terms
/// are accepted when their exponents are integer multiples of `p`.
pub fn element_from_expr<F: Field>(
    expr: &Expr<F>,
    gen: &GenDescriptor<F>,
    nvars: usize,
) -> Result<AlgebraElement<F>> {
    let nvars = nvars.max(expr.z_arity()).max(1);
    if gen.nvars().is_some_and(|n| n != nvars) {
        return Err(Error::ArityMismatch {
            left: gen.nvars().unwrap(),
            right: nvars,
        });
    }
    let zvar = |k: usize, n: usize| -> Result<ExpSum<F>> {
        if k < nvars {
            Ok(ExpSum::rational(RationalFunction::var(n, k)))
        } else {
            Err(Error::InvalidInput(format!(
                "variable z{} out of range",
                k + 1
            )))
        }
    };
    match gen {
        GenDescriptor::Polynomial(q) => {
            let assign = |v: Var| match v {
                Var::Z(k) => zvar(k, nvars),
                Var::F => Ok(ExpSum::rational(q.clone())),
                Var::W => Err(Error::BasisMismatch),
                other => Err(Error::InvalidInput(format!(
                    "variable '{other}' is not allowed in an element"
                ))),
            };
            let r = lower(expr, nvars, &assign)?
                .as_rational()
                .ok_or(Error::BasisMismatch)?;
            Ok(AlgebraElement::Generic(UniPoly::constant(r)))
        }
        GenDescriptor::ExpAffine { q1, p, q2 } => {
            let assign = |v: Var| match v {
                Var::Z(k) => zvar(k, nvars),
                Var::W => Ok(ExpSum::exp_of(p.clone())),
                Var::F => {
                    Ok(ExpSum::term(p.clone(), q1.clone()).add(&ExpSum::rational(q2.clone())))
                }
                other => Err(Error::InvalidInput(format!(
                    "variable '{other}' is not allowed in an element"
                ))),
            };
            let sum = lower(expr, nvars, &assign)?;
            Ok(AlgebraElement::Exp(expsum_to_laurent(&sum, p)?))
        }
        GenDescriptor::Generic { .. } => {
            if expr.contains_exp() || expr.uses(Var::W) {
                return Err(Error::BasisMismatch);
            }
            Ok(AlgebraElement::Generic(upoly_from_expr(
                expr,
                Var::F,
                nvars,
            )?))
        }
    }
}

/// Reads a polynomial in `var` with coefficients in `R^n` from an expression
/// in `z1..zn` and `var`. `var` may not occur in a denominator.
pub fn upoly_from_expr<F: Field>(expr: &Expr<F>, var: Var, nvars: usize) -> Result<UniPoly<F>> {
    let nvars = nvars.max(expr.z_arity()).max(1);
    if expr.contains_exp() {
        return Err(Error::InvalidInput(format!("{expr} must not contain exp")));
    }
    // var becomes one extra polynomial variable
    let ext = nvars + 1;
    let assign = |v: Var| match v {
        Var::Z(k) if k < nvars => Ok(ExpSum::rational(RationalFunction::var(ext, k))),
        v if v == var => Ok(ExpSum::rational(RationalFunction::var(ext, nvars))),
        other => Err(Error::InvalidInput(format!(
            "variable '{other}' is not allowed here"
        ))),
    };
    let r = lower(expr, ext, &assign)?.as_rational().ok_or_else(|| {
        Error::Internal("exp-free expression lowered to a non-rational sum".into())
    })?;
    if r.den().involves(nvars) {
        return Err(Error::InvalidInput(format!(
            "{expr} is not a polynomial in {var} ({var} occurs in a denominator)"
        )));
    }
    let den = r
        .den()
        .truncate_vars(nvars)
        .expect("denominator is free of var");
    let coeffs = r
        .num()
        .coeffs_in(nvars)
        .into_iter()
        .map(|c| {
            RationalFunction::new(
                c.truncate_vars(nvars).expect("coefficient is free of var"),
                den.clone(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(nvars, coeffs))
}
