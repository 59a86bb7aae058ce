use num_bigint::BigInt;
use num_rational::BigRational;

use super::expsum::{lower, z_only};
use crate::arith::{Field, Poly, RationalFunction};
use crate::error::{Error, Result};
use crate::expr::Expr;

/// What the classifier can tell about a generator `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenDescriptor<F: Field> {
    /// `f` is itself a rational function, so `R^n[f] = R^n`.
    Polynomial(RationalFunction<F>),
    /// `f = q1 * e^p + q2` with `q1 != 0` and `p` nonconstant.
    ExpAffine {
        q1: RationalFunction<F>,
        p: Poly<F>,
        q2: RationalFunction<F>,
    },
    /// `f` is asserted to be transcendental over `R^n` and of finite order,
    /// and `R^n[f]` to contain no non-trivial invertible elements. Nothing
    /// here checks the assertion. `expr`, when present, is used only to
    /// evaluate `f` in numeric cross-checks.
    Generic {
        label: String,
        declared_order: BigRational,
        expr: Option<Expr<F>>,
    },
}

impl<F: Field> GenDescriptor<F> {
    /// A generator known only by assertion.
    pub fn generic(label: impl Into<String>, declared_order: BigRational) -> Self {
        GenDescriptor::Generic {
            label: label.into(),
            declared_order,
            expr: None,
        }
    }

    pub fn exp_affine(
        q1: RationalFunction<F>,
        p: Poly<F>,
        q2: RationalFunction<F>,
    ) -> Result<Self> {
        if q1.is_zero() {
            return Err(Error::InvalidInput("q1 must be nonzero".into()));
        }
        if p.is_constant() {
            return Err(Error::InvalidInput(
                "the exponent p must be nonconstant".into(),
            ));
        }
        Ok(GenDescriptor::ExpAffine { q1, p, q2 })
    }

    /// Short name used in reports.
    pub fn class_name(&self) -> &'static str {
        match self {
            GenDescriptor::Polynomial(_) => "polynomial",
            GenDescriptor::ExpAffine { .. } => "exp_affine",
            GenDescriptor::Generic { .. } => "generic",
        }
    }

    pub fn nvars(&self) -> Option<usize> {
        match self {
            GenDescriptor::Polynomial(q) => Some(q.nvars()),
            GenDescriptor::ExpAffine { q1, .. } => Some(q1.nvars()),
            GenDescriptor::Generic { .. } => None,
        }
    }
}

/// Classifies a generator given as an expression in `z1..zn`.
///
/// The expression is normalized to `sum_j r_j e^{p_j}`. With no surviving
/// exponential `f` is rational; with exactly one nonconstant exponent it is
/// `q1 e^p + q2`; otherwise it is reported as generic (the caller then takes
/// responsibility for the transcendence assertion).
pub fn classify_generator<F: Field>(expr: &Expr<F>, nvars: usize) -> Result<GenDescriptor<F>> {
    let nvars = nvars.max(expr.z_arity()).max(1);
    let sum = lower(expr, nvars, &z_only(nvars))?;
    let mut rational = RationalFunction::zero(nvars);
    let mut exps = Vec::new();
    for (e, r) in sum.terms() {
        if e.is_zero() {
            rational = r.clone();
        } else if e.is_constant() {
            return Err(Error::UnsupportedGenerator(format!(
                "exp({e}) is a constant outside the Gaussian rationals"
            )));
        } else {
            exps.push((e.clone(), r.clone()));
        }
    }
    match exps.len() {
        0 => Ok(GenDescriptor::Polynomial(rational)),
        1 => {
            let (p, q1) = exps.pop().unwrap();
            Ok(GenDescriptor::ExpAffine {
                q1,
                p,
                q2: rational,
            })
        }
        _ => {
            let order = exps
                .iter()
                .filter_map(|(e, _)| e.total_degree())
                .max()
                .unwrap_or(0);
            Ok(GenDescriptor::Generic {
                label: expr.to_string(),
                declared_order: BigRational::from_integer(BigInt::from(order)),
                expr: Some(expr.clone()),
            })
        }
    }
}
