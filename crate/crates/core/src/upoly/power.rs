//! Perfect-power recognition and the depressing (Tschirnhaus) shift.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dense::UniPoly;
use crate::arith::{Field, RationalFunction, Scalar};
use crate::error::{Error, Result};

/// Certificate that a polynomial equals `c * (w + q)^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectPowerCert<F: Field> {
    pub c: RationalFunction<F>,
    pub q: RationalFunction<F>,
    pub m: u32,
}

impl<F: Field> PerfectPowerCert<F> {
    pub fn expand(&self) -> UniPoly<F> {
        UniPoly::linear(self.q.clone()).pow(self.m).scale(&self.c)
    }
}

/// Recognizes `P = c * (w + q)^m`.
///
/// If such a form exists then `c` is the leading coefficient and
/// `m*c*q` is the coefficient of `w^(m-1)`, so the only candidate is checked
/// by expanding it.
pub fn perfect_power<F: Field>(p: &UniPoly<F>) -> Option<PerfectPowerCert<F>> {
    let m = p.degree().filter(|&m| m >= 1)?;
    let c = p.leading_coeff();
    let mc = c.scale(&F::from_i64(m as i64));
    let q = p.coeff(m - 1).try_div(&mc).ok()?;
    let cert = PerfectPowerCert { c, q, m: m as u32 };
    (cert.expand() == *p).then_some(cert)
}

/// Output of [`tschirnhaus`]: `depressed(w) = P(w - shift)`, equivalently
/// `P(w) = depressed(w + shift)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Depressed<F: Field> {
    pub shift: RationalFunction<F>,
    pub depressed: UniPoly<F>,
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn field_from_rational<F: Field>(r: BigRational) -> F {
    F::from_scalar(&Scalar::from_real(r)).expect("every field here contains the rationals")
}

/// Removes the `w^(m-1)` term of a monic polynomial of degree `m >= 2`.
///
/// With `s = P_{m-1}/m`, the new coefficients are
/// `R_k = sum_{j=k}^{m} C(j,k) (-1)^(j-k) m^(k-j) P_j P_{m-1}^(j-k)`.
pub fn tschirnhaus<F: Field>(p: &UniPoly<F>) -> Result<Depressed<F>> {
    let m = match p.degree() {
        Some(m) if m >= 2 => m,
        _ => return Err(Error::InvalidInput("depression needs degree >= 2".into())),
    };
    if !p.is_monic() {
        return Err(Error::InvalidInput(
            "depression needs a monic polynomial".into(),
        ));
    }
    let n = p.nvars();
    let pm1 = p.coeff(m - 1);
    let shift = pm1.scale(&F::from_i64(m as i64).inv().expect("m > 0"));
    let mut pm1_pows = vec![RationalFunction::one(n)];
    for _ in 0..m {
        let next = pm1_pows.last().unwrap() * &pm1;
        pm1_pows.push(next);
    }
    let mut coeffs = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let mut acc = RationalFunction::zero(n);
        for j in k..=m {
            let d = j - k;
            let sign = if d % 2 == 0 { 1 } else { -1 };
            let scal = BigRational::new(binomial(j, k) * sign, num_traits::pow(BigInt::from(m), d));
            let term = (&p.coeff(j) * &pm1_pows[d]).scale(&field_from_rational(scal));
            acc = &acc + &term;
        }
        coeffs.push(acc);
    }
    Ok(Depressed {
        shift,
        depressed: UniPoly::new(n, coeffs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type U = UniPoly<Scalar>;
    type R = RationalFunction<Scalar>;

    fn k(v: i64) -> R {
        R::constant(1, Scalar::from(v))
    }
    fn w() -> U {
        U::w(1)
    }
    fn c(v: i64) -> U {
        U::constant(k(v))
    }

    #[test]
    fn square_of_linear() {
        let p = &(&w().pow(2) + &w().scale(&k(2))) + &c(1);
        let cert = perfect_power(&p).unwrap();
        assert_eq!((cert.c, cert.q, cert.m), (k(1), k(1), 2));
    }

    #[test]
    fn distinct_roots_rejected() {
        assert_eq!(perfect_power(&(&w().pow(2) + &c(1))), None);
    }

    #[test]
    fn rational_function_shift() {
        // 4w^2 + 4z w + z^2 = 4 (w + z/2)^2
        let z = R::var(1, 0);
        let p = &(&w().pow(2).scale(&k(4)) + &w().scale(&z.scale(&Scalar::from(4))))
            + &U::constant(z.pow(2));
        let cert = perfect_power(&p).unwrap();
        assert_eq!(cert.c, k(4));
        assert_eq!(cert.q, z.scale(&Scalar::from_ratio(1, 2)));
        assert_eq!(cert.m, 2);
    }

    #[test]
    fn completes_the_square() {
        let (b, cc) = (R::var(2, 0), R::var(2, 1));
        let p = UniPoly::new(2, vec![cc.clone(), b.clone(), R::one(2)]);
        let d = tschirnhaus(&p).unwrap();
        assert_eq!(d.shift, b.scale(&Scalar::from_ratio(1, 2)));
        let expected = UniPoly::new(
            2,
            vec![
                &cc - &b.pow(2).scale(&Scalar::from_ratio(1, 4)),
                R::zero(2),
                R::one(2),
            ],
        );
        assert_eq!(d.depressed, expected);
    }

    #[test]
    fn depressed_cubic() {
        let p = &w().pow(3) + &w().pow(2).scale(&k(3));
        let d = tschirnhaus(&p).unwrap();
        assert_eq!(d.shift, k(1));
        assert_eq!(d.depressed, &(&w().pow(3) - &w().scale(&k(3))) + &c(2));
        assert_eq!(d.depressed.shift_arg(&d.shift).unwrap(), p);
    }

    #[test]
    fn pure_power_unchanged() {
        for m in 2..6 {
            let d = tschirnhaus(&w().pow(m)).unwrap();
            assert!(d.shift.is_zero());
            assert_eq!(d.depressed, w().pow(m));
        }
    }

    #[test]
    fn nonmonic_rejected() {
        assert!(matches!(
            tschirnhaus(&w().pow(2).scale(&k(2))),
            Err(Error::InvalidInput(_))
        ));
    }
}
