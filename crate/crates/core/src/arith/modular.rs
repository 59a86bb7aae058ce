//! Coprimality certificates from images over a prime field.
//!
//! Coefficients are mapped into `GF(P)` with `i` sent to a square root of
//! `-1`, every variable but one is specialized to a fixed residue, and the
//! univariate gcd of the images is computed. When the specialization keeps
//! both leading coefficients nonzero, the degree of that gcd bounds the degree
//! of the true gcd in the kept variable from above. A zero bound in every
//! variable proves the inputs coprime; any other outcome proves nothing.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::field::Field;
use super::poly::Poly;

/// A prime with `P = 1 (mod 4)`.
const P: u64 = 1_000_000_009;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn sqrt_minus_one() -> u64 {
    static ROOT: OnceLock<u64> = OnceLock::new();
    *ROOT.get_or_init(|| {
        (2..)
            .map(|g| pow(g, (P - 1) / 4))
            .find(|&r| mul(r, r) == P - 1)
            .expect("P = 1 (mod 4)")
    })
}

fn reduce_int(n: &BigInt) -> u64 {
    let r = (n.abs() % BigInt::from(P)).to_u64().expect("residue fits");
    if n.is_negative() {
        sub(0, r)
    } else {
        r
    }
}

fn reduce_rational(q: &BigRational) -> Option<u64> {
    let d = reduce_int(q.denom());
    (d != 0).then(|| mul(reduce_int(q.numer()), inv(d)))
}

fn reduce<F: Field>(c: &F) -> Option<u64> {
    let s = c.to_scalar();
    let re = reduce_rational(s.re())?;
    if s.im().is_zero() {
        return Some(re);
    }
    Some(add(re, mul(reduce_rational(s.im())?, sqrt_minus_one())))
}

/// Residue assigned to variable `v` on attempt `k`.
fn point(v: usize, k: usize) -> u64 {
    let mut x = (v as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (k as u64 + 7).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x ^= x >> 31;
    x % (P - 2) + 2
}

/// Image of `p` in `GF(P)[z_var]`, or `None` if a denominator vanishes or the
/// leading coefficient in `z_var` does.
fn image<F: Field>(p: &Poly<F>, var: usize, attempt: usize) -> Option<Vec<u64>> {
    let deg = p.degree_in(var) as usize;
    let mut out = vec![0u64; deg + 1];
    for (m, c) in p.terms() {
        let mut t = reduce(c)?;
        for (v, &e) in m.exps().iter().enumerate() {
            if v != var && e > 0 {
                t = mul(t, pow(point(v, attempt), e as u64));
            }
        }
        let k = m.exps()[var] as usize;
        out[k] = add(out[k], t);
    }
    (out[deg] != 0).then_some(out)
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree of the gcd of two nonzero univariate images.
fn gcd_degree(a: Vec<u64>, b: Vec<u64>) -> usize {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let lb = inv(*b.last().expect("nonempty"));
        while a.len() >= b.len() {
            let q = mul(*a.last().expect("nonempty"), lb);
            let shift = a.len() - b.len();
            for (j, &c) in b.iter().enumerate() {
                a[shift + j] = sub(a[shift + j], mul(q, c));
            }
            a.pop();
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

/// True only if `a` and `b` are provably coprime; both must be nonzero.
pub(crate) fn certainly_coprime<F: Field>(a: &Poly<F>, b: &Poly<F>) -> bool {
    (0..a.nvars()).all(|v| {
        if !a.involves(v) || !b.involves(v) {
            return true;
        }
        (0..3).any(|k| match (image(a, v, k), image(b, v, k)) {
            (Some(ia), Some(ib)) => gcd_degree(ia, ib) == 0,
            _ => false,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::Scalar;

    type Pl = Poly<Scalar>;

    fn z(n: usize, i: usize) -> Pl {
        Pl::var(n, i)
    }

    #[test]
    fn root_of_minus_one() {
        let r = sqrt_minus_one();
        assert_eq!(mul(r, r), P - 1);
    }

    #[test]
    fn coprime_pair_is_certified() {
        let a = &z(2, 0) + &z(2, 1);
        let b = &(&z(2, 0) * &z(2, 1)) + &Pl::one(2);
        assert!(certainly_coprime(&a, &b));
    }

    #[test]
    fn shared_factor_is_never_certified() {
        let common = &z(2, 0) - &Pl::constant(2, Scalar::i());
        let a = &common * &z(2, 1);
        let b = &common * &(&z(2, 1) + &Pl::one(2));
        assert!(!certainly_coprime(&a, &b));
        let c = z(2, 0);
        assert!(!certainly_coprime(&(&c * &z(2, 1)), &(&c + &(&c * &c))));
    }
}
