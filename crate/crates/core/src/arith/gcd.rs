//! Multivariate gcd by recursive subresultant remainder sequences.
//!
//! A polynomial is viewed as univariate in its highest-indexed variable over
//! the polynomial ring in the remaining ones. Contents are split off
//! recursively and the primitive parts go through the subresultant PRS, which
//! keeps every intermediate division exact.

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Monic (under graded-lex) greatest common divisor of `a` and `b`.
pub fn gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Result<Poly<F>> {
    if a.nvars() != b.nvars() {
        return Err(Error::ArityMismatch {
            left: a.nvars(),
            right: b.nvars(),
        });
    }
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::UndefinedGcd),
        (true, false) => Ok(b.monic()),
        (false, true) => Ok(a.monic()),
        (false, false) => Ok(gcd_nonzero(a, b).monic()),
    }
}

fn gcd_nonzero<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return Poly::one(n);
    }
    if super::modular::certainly_coprime(a, b) {
        return Poly::one(n);
    }
    if a.num_terms() <= b.num_terms() {
        if b.div_exact(a).is_some() {
            return a.clone();
        }
    } else if a.div_exact(b).is_some() {
        return b.clone();
    }
    let var = match (0..n).rev().find(|&v| a.involves(v) || b.involves(v)) {
        Some(v) => v,
        None => return Poly::one(n),
    };
    let ca = a.coeffs_in(var);
    let cb = b.coeffs_in(var);
    let (cont_a, pa) = primitive_split(&ca);
    let (cont_b, pb) = primitive_split(&cb);
    let content = gcd_nonzero(&cont_a, &cont_b).monic();
    let multivariate = (0..n).any(|v| v != var && (pa.iter().chain(&pb).any(|c| c.involves(v))));
    if multivariate && deg(&pa) > 0 && deg(&pb) > 0 {
        let (a, b) = (
            Poly::from_coeffs_in(n, var, &pa),
            Poly::from_coeffs_in(n, var, &pb),
        );
        if let Some(g) = interpolated_gcd(&a, &b, var) {
            return &content * &g;
        }
    }
    let g = subresultant_gcd(pa, pb);
    let (_, g) = primitive_split(&g);
    &content * &Poly::from_coeffs_in(n, var, &g)
}

/// Evaluation point number `k`: 2, -2, 3, -3, ...
fn point<F: Field>(k: usize) -> F {
    let v = (k / 2 + 2) as i64;
    F::from_i64(if k % 2 == 1 { -v } else { v })
}

fn leading_in<F: Field>(p: &Poly<F>, var: usize) -> Poly<F> {
    p.coeffs_in(var)
        .pop()
        .unwrap_or_else(|| Poly::zero(p.nvars()))
}

/// Primitive part of `p` as a polynomial in `var`.
fn primitive_in<F: Field>(p: &Poly<F>, var: usize) -> Poly<F> {
    let (_, prim) = primitive_split(&p.coeffs_in(var));
    Poly::from_coeffs_in(p.nvars(), var, &prim)
}

/// Gcd of `a` and `b`, both primitive and of positive degree in `y`, by
/// specializing another variable `x` at integer points and interpolating the
/// gcds of the images.
///
/// Each image is scaled so its leading coefficient in `y` equals the image of
/// `gcd(lc_y a, lc_y b)`. Points that drop a leading coefficient or give an
/// image gcd of larger `y`-degree than the smallest seen are discarded. A
/// candidate is accepted only after it divides both inputs exactly, which
/// makes it the gcd. `None` if no candidate is accepted within the budget.
fn interpolated_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>, y: usize) -> Option<Poly<F>> {
    let n = a.nvars();
    let x = (0..n).find(|&v| v != y && (a.involves(v) || b.involves(v)))?;
    let (la, lb) = (leading_in(a, y), leading_in(b, y));
    let gamma = gcd_nonzero(&la, &lb);
    let needed = (gamma.degree_in(x) + a.degree_in(x).min(b.degree_in(x)) + 1) as usize;
    let (da, db) = (a.degree_in(y), b.degree_in(y));
    let xvar = Poly::var(n, x);
    // (interpolant, product of (x - t) over used points, y-degree, point count)
    let mut state: Option<(Poly<F>, Poly<F>, u32, usize)> = None;
    for k in 0..4 * needed + 8 {
        let t: F = point(k);
        let (ak, bk) = (a.subs(x, &t), b.subs(x, &t));
        if ak.degree_in(y) != da || bk.degree_in(y) != db {
            continue;
        }
        let gk = gcd_nonzero(&ak, &bk);
        let dk = gk.degree_in(y);
        if dk == 0 {
            return Some(Poly::one(n));
        }
        let Some(factor) = gamma.subs(x, &t).div_exact(&leading_in(&gk, y)) else {
            continue;
        };
        let vk = &gk * &factor;
        let (interp, basis, count) = match state.take() {
            Some((interp, basis, d, count)) if d == dk => {
                let diff = &vk - &interp.subs(x, &t);
                let stable = diff.is_zero();
                let w = basis.subs(x, &t).constant_value()?.inv()?;
                let interp = &interp + &(&diff * &basis).scale(&w);
                if stable {
                    let cand = primitive_in(&interp, y);
                    if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                        return Some(cand);
                    }
                }
                (interp, basis, count + 1)
            }
            Some((interp, basis, d, count)) if d < dk => {
                state = Some((interp, basis, d, count));
                continue;
            }
            _ => (vk, Poly::one(n), 1),
        };
        let basis = &basis * &(&xvar - &Poly::constant(n, t));
        if count >= needed {
            let cand = primitive_in(&interp, y);
            if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(cand);
            }
            state = None;
            continue;
        }
        state = Some((interp, basis, dk, count));
    }
    None
}

/// Gcd of a list of nonzero-or-zero polynomials, zeros ignored.
pub fn gcd_many<F: Field>(polys: &[Poly<F>]) -> Option<Poly<F>> {
    let mut acc: Option<Poly<F>> = None;
    for p in polys.iter().filter(|p| !p.is_zero()) {
        acc = Some(match acc {
            None => p.monic(),
            Some(g) => gcd_nonzero(&g, p).monic(),
        });
        if acc.as_ref().is_some_and(Poly::is_constant) {
            return acc;
        }
    }
    acc
}

/// Splits a coefficient list into its content and primitive part.
fn primitive_split<F: Field>(coeffs: &[Poly<F>]) -> (Poly<F>, Vec<Poly<F>>) {
    let n = coeffs[0].nvars();
    let content = gcd_many(coeffs).unwrap_or_else(|| Poly::one(n));
    if content.is_one_poly() {
        return (content, coeffs.to_vec());
    }
    let prim = coeffs
        .iter()
        .map(|c| {
            c.div_exact(&content)
                .expect("content divides every coefficient")
        })
        .collect();
    (content, prim)
}

impl<F: Field> Poly<F> {
    fn is_one_poly(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

fn deg<F: Field>(p: &[Poly<F>]) -> usize {
    p.len() - 1
}

fn trim<F: Field>(mut p: Vec<Poly<F>>) -> Vec<Poly<F>> {
    while p.last().is_some_and(Poly::is_zero) {
        p.pop();
    }
    p
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` over the coefficient ring.
pub(crate) fn pseudo_rem<F: Field>(a: &[Poly<F>], b: &[Poly<F>]) -> Vec<Poly<F>> {
    let db = deg(b);
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut e = deg(a) as i64 - db as i64 + 1;
    while !r.is_empty() && deg(&r) >= db {
        let dr = deg(&r);
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x = &*x * lb;
        }
        for (j, bc) in b.iter().enumerate() {
            let k = dr - db + j;
            r[k] = &r[k] - &(&lr * bc);
        }
        r = trim(r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for x in r.iter_mut() {
            *x = &*x * &f;
        }
    }
    r
}

/// Subresultant PRS on primitive inputs; returns the last nonzero remainder
/// (not yet made primitive), or the unit polynomial when it is constant.
fn subresultant_gcd<F: Field>(a: Vec<Poly<F>>, b: Vec<Poly<F>>) -> Vec<Poly<F>> {
    let n = a[0].nvars();
    let (mut a, mut b) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    if deg(&b) == 0 {
        return vec![Poly::one(n)];
    }
    let mut g = Poly::one(n);
    let mut h = Poly::one(n);
    loop {
        let delta = (deg(&a) - deg(&b)) as u32;
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if deg(&r) == 0 {
            return vec![Poly::one(n)];
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = r
            .iter()
            .map(|c| {
                c.div_exact(&divisor)
                    .expect("subresultant division is exact")
            })
            .collect();
        g = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g
                .pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant h update is exact"),
        };
    }
}
