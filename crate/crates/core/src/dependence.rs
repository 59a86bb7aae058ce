//! Algebraic dependence of two functions of a common parameter, by
//! eliminating the parameter with a resultant.

use crate::arith::{gcd, Field, Poly, RationalFunction};
use crate::error::{Error, Result};

/// Two rational functions of one parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPair<F: Field> {
    a: RationalFunction<F>,
    b: RationalFunction<F>,
}

impl<F: Field> ParamPair<F> {
    /// Both components must be univariate and not both constant.
    pub fn new(a: RationalFunction<F>, b: RationalFunction<F>) -> Result<Self> {
        if a.nvars() != 1 || b.nvars() != 1 {
            return Err(Error::InvalidInput(
                "components must be functions of the single parameter t".into(),
            ));
        }
        if a.is_constant() && b.is_constant() {
            return Err(Error::DegeneratePair);
        }
        Ok(ParamPair { a, b })
    }

    pub fn a(&self) -> &RationalFunction<F> {
        &self.a
    }

    pub fn b(&self) -> &RationalFunction<F> {
        &self.b
    }
}

fn degree<F: Field>(p: &[Poly<F>]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Sylvester resultant of `f = sum f_k t^k` and `g = sum g_k t^k`, whose
/// coefficients live in a common polynomial ring.
///
/// The determinant is computed by fraction-free (Bareiss) elimination, in
/// which every division is exact.
pub fn resultant<F: Field>(f: &[Poly<F>], g: &[Poly<F>]) -> Result<Poly<F>> {
    let nvars = f
        .iter()
        .chain(g)
        .map(|c| c.nvars())
        .next()
        .ok_or(Error::DegenerateResultant)?;
    if let Some(c) = f.iter().chain(g).find(|c| c.nvars() != nvars) {
        return Err(Error::ArityMismatch {
            left: nvars,
            right: c.nvars(),
        });
    }
    let (Some(m), Some(n)) = (degree(f), degree(g)) else {
        return Ok(Poly::zero(nvars));
    };
    if m == 0 && n == 0 {
        return Err(Error::DegenerateResultant);
    }
    let size = m + n;
    let mut mat = vec![vec![Poly::zero(nvars); size]; size];
    // rows 0..n hold shifts of f, rows n..n+m shifts of g; highest power first
    for r in 0..n {
        for k in 0..=m {
            mat[r][r + m - k] = f[k].clone();
        }
    }
    for r in 0..m {
        for k in 0..=n {
            mat[n + r][r + n - k] = g[k].clone();
        }
    }
    bareiss_det(mat)
}

/// Determinant of a square matrix over a polynomial ring.
pub fn bareiss_det<F: Field>(mut mat: Vec<Vec<Poly<F>>>) -> Result<Poly<F>> {
    let size = mat.len();
    let nvars = mat
        .first()
        .and_then(|r| r.first())
        .map(|c| c.nvars())
        .unwrap_or(0);
    if size == 0 {
        return Ok(Poly::one(nvars));
    }
    let mut negate = false;
    let mut prev = Poly::one(nvars);
    for k in 0..size - 1 {
        let Some(piv) = (k..size).min_by_key(|&r| {
            let c = &mat[r][k];
            if c.is_zero() {
                usize::MAX
            } else {
                c.num_terms()
            }
        }) else {
            unreachable!()
        };
        if mat[piv][k].is_zero() {
            return Ok(Poly::zero(nvars));
        }
        if piv != k {
            mat.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let t = mat[i][j]
                    .try_mul(&mat[k][k])?
                    .try_sub(&mat[i][k].try_mul(&mat[k][j])?)?;
                mat[i][j] = t
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Internal("inexact Bareiss step".into()))?;
            }
            mat[i][k] = Poly::zero(nvars);
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Squarefree part of a polynomial in two variables, made monic.
fn squarefree<F: Field>(p: &Poly<F>) -> Result<Poly<F>> {
    let mut out = p.clone();
    for var in 0..p.nvars() {
        let d = out.derivative(var);
        if d.is_zero() {
            continue;
        }
        let g = gcd(&out, &d)?;
        out = out
            .div_exact(&g)
            .ok_or_else(|| Error::Internal("gcd does not divide".into()))?;
    }
    Ok(out.monic())
}

/// A nonzero `P(x, y)` with `P(A(t), B(t)) = 0`.
///
/// `P` is the squarefree part of `Res_t(numA - x denA, numB - y denB)`,
/// scaled to leading coefficient 1 under graded-lex order with `x > y`. It
/// may be reducible.
pub fn annihilating_polynomial<F: Field>(pair: &ParamPair<F>) -> Result<Poly<F>> {
    let x = Poly::var(2, 0);
    let y = Poly::var(2, 1);
    let side = |r: &RationalFunction<F>, v: &Poly<F>| -> Result<Vec<Poly<F>>> {
        let num = lift_coeffs(r.num());
        let den = lift_coeffs(r.den());
        let len = num.len().max(den.len());
        (0..len)
            .map(|k| {
                let nk = num.get(k).cloned().unwrap_or_else(|| Poly::zero(2));
                let dk = den.get(k).cloned().unwrap_or_else(|| Poly::zero(2));
                nk.try_sub(&dk.try_mul(v)?)
            })
            .collect()
    };
    let f = side(&pair.a, &x)?;
    let g = side(&pair.b, &y)?;
    let res = resultant(&f, &g).map_err(|e| match e {
        Error::DegenerateResultant => Error::DegeneratePair,
        e => e,
    })?;
    if res.is_zero() {
        return Err(Error::DegeneratePair);
    }
    squarefree(&res)
}

/// Coefficients in `t` of a univariate polynomial, as constants in `x, y`.
fn lift_coeffs<F: Field>(p: &Poly<F>) -> Vec<Poly<F>> {
    p.coeffs_in(0)
        .into_iter()
        .map(|c| Poly::constant(2, c.constant_value().unwrap_or_else(F::zero)))
        .collect()
}

/// Whether `P(A(t), B(t))` vanishes identically.
///
/// With `P` of degree `dx` in `x` and `dy` in `y`, the check clears
/// denominators and tests `sum c_ij numA^i denA^(dx-i) numB^j denB^(dy-j) = 0`.
pub fn verify_dependence<F: Field>(p: &Poly<F>, pair: &ParamPair<F>) -> Result<bool> {
    if p.nvars() != 2 {
        return Err(Error::ArityMismatch {
            left: 2,
            right: p.nvars(),
        });
    }
    if p.is_zero() {
        return Err(Error::InvalidInput(
            "the zero polynomial annihilates everything".into(),
        ));
    }
    let (dx, dy) = (p.degree_in(0), p.degree_in(1));
    let powers = |q: &Poly<F>, d: u32| {
        let mut v = vec![Poly::one(1)];
        for _ in 0..d {
            let next = v.last().unwrap() * q;
            v.push(next);
        }
        v
    };
    let (na, da) = (powers(pair.a.num(), dx), powers(pair.a.den(), dx));
    let (nb, db) = (powers(pair.b.num(), dy), powers(pair.b.den(), dy));
    let mut acc = Poly::zero(1);
    for (m, c) in p.terms() {
        let (i, j) = (m.exps()[0] as usize, m.exps()[1] as usize);
        let t = &(&(&na[i] * &da[dx as usize - i]) * &nb[j]) * &db[dy as usize - j];
        acc = &acc + &t.scale(c);
    }
    Ok(acc.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Scalar;

    type P = Poly<Scalar>;

    fn c(v: i64) -> P {
        P::constant(2, Scalar::from(v))
    }

    #[test]
    fn linear_resultant() {
        // Res_t(t - x, t - y) = y - x for the row order used here
        let (x, y) = (P::var(2, 0), P::var(2, 1));
        let r = resultant(&[-&x, c(1)], &[-&y, c(1)]).unwrap();
        assert_eq!(r.monic(), (&x - &y).monic());
    }

    #[test]
    fn common_factor() {
        let f = [c(1), c(0), c(1)];
        assert!(resultant(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn constants_are_degenerate() {
        assert_eq!(resultant(&[c(2)], &[c(3)]), Err(Error::DegenerateResultant));
    }

    #[test]
    fn cusp() {
        let t = RationalFunction::<Scalar>::var(1, 0);
        let pair = ParamPair::new(t.pow(2), t.pow(3)).unwrap();
        let p = annihilating_polynomial(&pair).unwrap();
        assert_eq!(p.to_string_with(&["x".into(), "y".into()]), "x^3-y^2");
        assert!(verify_dependence(&p, &pair).unwrap());
    }

    #[test]
    fn checks() {
        let t = RationalFunction::<Scalar>::var(1, 0);
        let pair = ParamPair::new(t.clone(), t).unwrap();
        let (x, y) = (P::var(2, 0), P::var(2, 1));
        assert!(verify_dependence(&(&x - &y), &pair).unwrap());
        assert!(!verify_dependence(&(&x + &y), &pair).unwrap());
    }
}
