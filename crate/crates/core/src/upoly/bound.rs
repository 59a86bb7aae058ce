//! Annulus containing every root of a monic polynomial with constant coefficients.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::dense::UniPoly;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Exact data of the root annulus `|a0| / (m ||P||) <= |z| <= m ||P||`,
/// where `||P|| = max(1, |a0|, ..., |a_{m-1}|)`.
///
/// Moduli are kept squared so everything stays rational; square roots are
/// taken only when the bounds are read out as floats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBound {
    pub degree: usize,
    /// `|a0|^2`.
    pub a0_norm_sqr: BigRational,
    /// `||P||^2`.
    pub norm_sqr: BigRational,
}

impl RootBound {
    pub fn lo(&self) -> f64 {
        let a0 = self.a0_norm_sqr.to_f64().unwrap_or(f64::INFINITY).sqrt();
        a0 / (self.degree as f64 * self.norm())
    }

    pub fn hi(&self) -> f64 {
        self.degree as f64 * self.norm()
    }

    fn norm(&self) -> f64 {
        self.norm_sqr.to_f64().unwrap_or(f64::INFINITY).sqrt()
    }

    /// Squared bounds as exact rationals: `(lo^2, hi^2)`.
    pub fn exact_squares(&self) -> (BigRational, BigRational) {
        let m2 = BigRational::from_integer((self.degree * self.degree).into());
        let lo = &self.a0_norm_sqr / (&m2 * &self.norm_sqr);
        let hi = &m2 * &self.norm_sqr;
        (lo, hi)
    }
}

/// Root annulus of a monic polynomial whose coefficients are constants.
pub fn root_bound<F: Field>(p: &UniPoly<F>) -> Result<RootBound> {
    let m = match p.degree() {
        Some(m) if m >= 1 => m,
        _ => return Err(Error::InvalidInput("root bound needs degree >= 1".into())),
    };
    if !p.is_monic() {
        return Err(Error::InvalidInput(
            "root bound needs a monic polynomial".into(),
        ));
    }
    let mut norm_sqr = BigRational::one();
    let mut a0_norm_sqr = BigRational::zero();
    for (k, c) in p.coeffs()[..m].iter().enumerate() {
        let v = c
            .constant_value()
            .ok_or_else(|| Error::InvalidInput("root bound needs constant coefficients".into()))?;
        let n2 = v.norm_sqr();
        if k == 0 {
            a0_norm_sqr = n2.clone();
        }
        if n2 > norm_sqr {
            norm_sqr = n2;
        }
    }
    Ok(RootBound {
        degree: m,
        a0_norm_sqr,
        norm_sqr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{RationalFunction, Scalar};

    type U = UniPoly<Scalar>;

    fn poly(cs: &[i64]) -> U {
        U::from_scalars(1, &cs.iter().map(|&c| Scalar::from(c)).collect::<Vec<_>>())
    }

    #[test]
    fn difference_of_squares() {
        let b = root_bound(&poly(&[-1, 0, 1])).unwrap();
        assert_eq!((b.lo(), b.hi()), (0.5, 2.0));
    }

    #[test]
    fn pure_power_has_zero_lower_bound() {
        let b = root_bound(&poly(&[0, 0, 0, 1])).unwrap();
        assert_eq!((b.lo(), b.hi()), (0.0, 3.0));
    }

    #[test]
    fn factored_quadratic() {
        let b = root_bound(&poly(&[6, 5, 1])).unwrap();
        assert_eq!((b.lo(), b.hi()), (0.5, 12.0));
        let (lo2, hi2) = b.exact_squares();
        assert_eq!(lo2, BigRational::new(1.into(), 4.into()));
        assert_eq!(hi2, BigRational::from_integer(144.into()));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(root_bound(&poly(&[1, 1])).is_ok());
        assert!(matches!(
            root_bound(&poly(&[1, 2, 3])),
            Err(Error::InvalidInput(_))
        ));
        let z = RationalFunction::var(1, 0);
        let p = &U::w(1) + &U::constant(z);
        assert!(matches!(root_bound(&p), Err(Error::InvalidInput(_))));
    }
}
