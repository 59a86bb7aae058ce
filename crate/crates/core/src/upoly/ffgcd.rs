//! Fraction-free extended gcd over the polynomial ring of coefficients.
//!
//! Both inputs are scaled to primitive polynomials in `w` with polynomial
//! coefficients, and the subresultant remainder sequence is run together with
//! its cofactors. Every division in the sequence is exact, so rational
//! functions are formed only once, from the final remainder and cofactors.

use crate::arith::gcd::{gcd, gcd_many};
use crate::arith::{Field, Poly, RationalFunction};

use super::dense::UniPoly;

type Dense<F> = Vec<Poly<F>>;

fn trim<F: Field>(mut a: Dense<F>) -> Dense<F> {
    while a.last().is_some_and(Poly::is_zero) {
        a.pop();
    }
    a
}

fn mul<F: Field>(a: &Dense<F>, b: &Dense<F>) -> Dense<F> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let n = a[0].nvars();
    let mut out = vec![Poly::zero(n); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

fn scale<F: Field>(a: &Dense<F>, c: &Poly<F>) -> Dense<F> {
    trim(a.iter().map(|x| x * c).collect())
}

fn sub<F: Field>(a: &Dense<F>, b: &Dense<F>) -> Dense<F> {
    let n = a.first().or(b.first()).map_or(0, Poly::nvars);
    let zero = Poly::zero(n);
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
            .collect(),
    )
}

fn div_exact<F: Field>(a: &Dense<F>, c: &Poly<F>) -> Option<Dense<F>> {
    a.iter().map(|x| x.div_exact(c)).collect()
}

/// `(q, r)` with `lc(b)^(deg a - deg b + 1) * a = q*b + r`, `deg a >= deg b`.
fn pseudo_divmod<F: Field>(a: &Dense<F>, b: &Dense<F>) -> (Dense<F>, Dense<F>) {
    let db = b.len() - 1;
    let lb = &b[db];
    let n = lb.nvars();
    let steps = a.len() - db;
    let mut q = vec![Poly::zero(n); steps];
    let mut r = a.clone();
    r.resize(db + steps, Poly::zero(n));
    for i in (0..steps).rev() {
        let t = r[db + i].clone();
        for x in q.iter_mut() {
            *x = &*x * lb;
        }
        for x in r.iter_mut() {
            *x = &*x * lb;
        }
        if !t.is_zero() {
            q[i] = t.clone();
            for (j, y) in b.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&t * y);
            }
        }
    }
    (trim(q), trim(r))
}

/// Primitive polynomial form `(p, l, c)` of `a`, with `a = (c/l) * p`.
fn clear<F: Field>(a: &UniPoly<F>) -> (Dense<F>, Poly<F>, Poly<F>) {
    let n = a.nvars();
    let mut l = Poly::one(n);
    for c in a.coeffs() {
        let g = gcd(&l, c.den()).expect("denominators are nonzero");
        l = &l * &c.den().div_exact(&g).expect("gcd divides");
    }
    let p: Dense<F> = a
        .coeffs()
        .iter()
        .map(|c| c.num() * &l.div_exact(c.den()).expect("denominator divides the lcm"))
        .collect();
    let content = gcd_many(&p).unwrap_or_else(|| Poly::one(n));
    let p = div_exact(&p, &content).expect("content divides");
    (p, l, content)
}

fn to_upoly<F: Field>(n: usize, a: &Dense<F>, num: &Poly<F>, den: &Poly<F>) -> Option<UniPoly<F>> {
    let coeffs = a
        .iter()
        .map(|c| RationalFunction::new(c * num, den.clone()).ok())
        .collect::<Option<Vec<_>>>()?;
    Some(UniPoly::new(n, coeffs))
}

/// `(g, u, v)` as in [`UniPoly::xgcd`] for two nonzero inputs, or `None` if an
/// intermediate division is not exact.
pub(crate) fn xgcd<F: Field>(
    a: &UniPoly<F>,
    b: &UniPoly<F>,
) -> Option<(UniPoly<F>, UniPoly<F>, UniPoly<F>)> {
    let n = a.nvars();
    let one = vec![Poly::one(n)];
    let (pa, la, ca) = clear(a);
    let (pb, lb, cb) = clear(b);
    let swapped = pa.len() < pb.len();
    let (mut r0, mut r1) = if swapped { (pb, pa) } else { (pa, pb) };
    let (mut s0, mut s1): (Dense<F>, Dense<F>) = (one.clone(), vec![]);
    let (mut t0, mut t1): (Dense<F>, Dense<F>) = (vec![], one);
    let mut g = Poly::one(n);
    let mut h = Poly::one(n);
    loop {
        let delta = (r0.len() - r1.len()) as u32;
        let (q, r) = pseudo_divmod(&r0, &r1);
        if r.is_empty() {
            break;
        }
        let f = r1[r1.len() - 1].pow(delta + 1);
        let s = sub(&scale(&s0, &f), &mul(&q, &s1));
        let t = sub(&scale(&t0, &f), &mul(&q, &t1));
        let beta = &g * &h.pow(delta);
        r0 = std::mem::replace(&mut r1, div_exact(&r, &beta)?);
        s0 = std::mem::replace(&mut s1, div_exact(&s, &beta)?);
        t0 = std::mem::replace(&mut t1, div_exact(&t, &beta)?);
        g = r0[r0.len() - 1].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g.pow(d).div_exact(&h.pow(d - 1))?,
        };
    }
    let (sa, sb) = if swapped { (t1, s1) } else { (s1, t1) };
    let lead = r1[r1.len() - 1].clone();
    let gcd = to_upoly(n, &r1, &Poly::one(n), &lead)?;
    let u = to_upoly(n, &sa, &la, &(&ca * &lead))?;
    let v = to_upoly(n, &sb, &lb, &(&cb * &lead))?;
    Some((gcd, u, v))
}
