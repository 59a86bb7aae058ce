use std::fmt;

use num_complex::Complex;
use num_traits::{Float, FloatConst};

use crate::arith::fmt::default_var_names;
use crate::arith::{Field, Poly, RationalFunction};
use crate::error::{Error, Result};
use crate::upoly::{perfect_power, UniPoly};

/// How the factor `u` with `u^m = unit_part` is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootWitness<F: Field> {
    /// `u` lies in `R^n`.
    Exact(RationalFunction<F>),
    /// No `m`-th root exists in `R^n`; a branch is chosen pointwise when
    /// the family is evaluated.
    Deferred,
}

/// All solutions `f = eps * u * e^{p/m} - q`, `eps^m = 1`, of
/// `P(f) = R e^p`, where `P = c (w + q)^m` and `u^m = R / c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFamily<F: Field> {
    pub m: u32,
    pub q: RationalFunction<F>,
    pub c: RationalFunction<F>,
    pub unit_part: RationalFunction<F>,
    pub p: Poly<F>,
    pub root: RootWitness<F>,
}

impl<F: Field> SolutionFamily<F> {
    /// Value of the member with `eps = e^{2 pi i k / m}` at `z`.
    pub fn eval_member<T: Float + FloatConst>(&self, k: u32, z: &[Complex<T>]) -> Complex<T> {
        self.eval_offset(k, z) - self.q.eval_complex(z)
    }

    /// Value of `f + q = eps * u * e^{p/m}` for the same member.
    pub fn eval_offset<T: Float + FloatConst>(&self, k: u32, z: &[Complex<T>]) -> Complex<T> {
        let m = T::from(self.m).unwrap();
        let angle = T::TAU() * T::from(k).unwrap() / m;
        let eps = Complex::from_polar(T::one(), angle);
        let u = match &self.root {
            RootWitness::Exact(u) => u.eval_complex(z),
            RootWitness::Deferred => self.unit_part.eval_complex(z).powf(T::one() / m),
        };
        let e = (self.p.eval_complex(z) / m).exp();
        eps * u * e
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        self.render(names, self.m > 1)
    }

    /// The member with `eps = 1`, as a parseable expression; only available
    /// when the root is exact.
    pub fn principal_member(&self, names: &[String]) -> Option<String> {
        matches!(self.root, RootWitness::Exact(_)).then(|| self.render(names, false))
    }

    fn render(&self, names: &[String], with_eps: bool) -> String {
        let exponent = if self.m == 1 {
            self.p.to_string_with(names)
        } else {
            let p = self.p.to_string_with(names);
            if self.p.num_terms() > 1 || p.starts_with('-') {
                format!("({p})/{}", self.m)
            } else {
                format!("{p}/{}", self.m)
            }
        };
        let unit = match &self.root {
            RootWitness::Exact(u) if u.is_one() => String::new(),
            RootWitness::Exact(u) => format!("({})*", u.to_string_with(names)),
            RootWitness::Deferred if self.m == 1 => {
                format!("({})*", self.unit_part.to_string_with(names))
            }
            RootWitness::Deferred => {
                format!("({})^(1/{})*", self.unit_part.to_string_with(names), self.m)
            }
        };
        let eps = if with_eps { "eps*" } else { "" };
        let mut s = format!("{eps}{unit}exp({exponent})");
        if !self.q.is_zero() {
            let neg = (-&self.q).to_string_with(names);
            if !neg.starts_with('-') {
                s.push('+');
            }
            s.push_str(&neg);
        }
        s
    }
}

impl<F: Field> fmt::Display for SolutionFamily<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.p.nvars();
        write!(f, "{}", self.to_string_with(&default_var_names(n)))
    }
}

/// Solves `P(f) = R e^p` for `f` entire of finite order.
///
/// A solution exists only when `P = c (w + q)^m`; `None` certifies that the
/// equation has no such solution.
pub fn solve_unit_equation<F: Field>(
    poly: &UniPoly<F>,
    r: &RationalFunction<F>,
    p: &Poly<F>,
) -> Result<Option<SolutionFamily<F>>> {
    if r.is_zero() {
        return Err(Error::ZeroUnit);
    }
    if p.is_constant() {
        return Err(Error::NotAUnit);
    }
    if poly.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidInput("P must have degree at least 1".into()));
    }
    let Some(cert) = perfect_power(poly) else {
        return Ok(None);
    };
    let unit_part = r.try_div(&cert.c)?;
    let root = match unit_part.nth_root(cert.m) {
        Some(u) => RootWitness::Exact(u),
        None => RootWitness::Deferred,
    };
    Ok(Some(SolutionFamily {
        m: cert.m,
        q: cert.q,
        c: cert.c,
        unit_part,
        p: p.clone(),
        root,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Scalar;

    type R = RationalFunction<Scalar>;

    fn z() -> Poly<Scalar> {
        Poly::var(1, 0)
    }

    #[test]
    fn square() {
        let p = UniPoly::from_scalars(1, &[Scalar::from(1), Scalar::from(2), Scalar::from(1)]);
        let fam = solve_unit_equation(&p, &R::one(1), &z()).unwrap().unwrap();
        assert_eq!(fam.m, 2);
        assert_eq!(fam.q, R::one(1));
        assert_eq!(fam.root, RootWitness::Exact(R::one(1)));
        assert_eq!(fam.to_string(), "eps*exp(z/2)-1");
        for k in 0..2 {
            let zz = [Complex::new(0.3, -0.7)];
            let f = fam.eval_member(k, &zz);
            let lhs = p.eval_complex(&zz, f);
            let rhs = zz[0].exp();
            assert!((lhs - rhs).norm() < 1e-12 * rhs.norm());
        }
    }

    #[test]
    fn no_solution() {
        let p = UniPoly::from_scalars(1, &[Scalar::from(1), Scalar::from(0), Scalar::from(1)]);
        assert_eq!(solve_unit_equation(&p, &R::one(1), &z()).unwrap(), None);
    }

    #[test]
    fn linear() {
        let p = UniPoly::monomial(R::var(1, 0), 1);
        let fam = solve_unit_equation(&p, &R::var(1, 0), &z().pow(2))
            .unwrap()
            .unwrap();
        assert_eq!((fam.m, fam.q.is_zero()), (1, true));
        assert_eq!(fam.root, RootWitness::Exact(R::one(1)));
        assert_eq!(fam.to_string(), "exp(z^2)");
    }

    #[test]
    fn deferred_root() {
        let p = UniPoly::w(1).pow(2);
        let fam = solve_unit_equation(&p, &R::var(1, 0), &z())
            .unwrap()
            .unwrap();
        assert_eq!(fam.root, RootWitness::Deferred);
        let zz = [Complex::new(1.1, 0.4)];
        let f = fam.eval_member(1, &zz);
        let rhs = zz[0] * zz[0].exp();
        assert!((f * f - rhs).norm() < 1e-12 * rhs.norm());
    }

    #[test]
    fn errors() {
        let p = UniPoly::w(1);
        assert_eq!(
            solve_unit_equation(&p, &R::zero(1), &z()),
            Err(Error::ZeroUnit)
        );
        assert_eq!(
            solve_unit_equation(&p, &R::one(1), &Poly::one(1)),
            Err(Error::NotAUnit)
        );
    }
}
