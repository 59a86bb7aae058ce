#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use quasidiv::{Monomial, MultiPoly, RatFun, Scalar, UPoly};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn s(v: i64) -> Scalar {
    Scalar::from(v)
}

pub fn rf(v: i64, n: usize) -> RatFun {
    RatFun::constant(n, s(v))
}

pub fn z(n: usize, k: usize) -> MultiPoly {
    MultiPoly::var(n, k)
}

pub fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let re = (rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4));
    if rng.gen_bool(0.5) {
        Scalar::from_ratio(re.0, re.1)
    } else {
        Scalar::from_parts(re, (rng.gen_range(-6i64..=6), rng.gen_range(1i64..=4)))
    }
}

pub fn rand_nonzero_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let c = rand_scalar(rng);
        if c != Scalar::from(0) {
            return c;
        }
    }
}

/// Random polynomial with at most `terms` terms of total degree at most `deg`.
pub fn rand_poly(rng: &mut ChaCha8Rng, nvars: usize, deg: u32, terms: usize) -> MultiPoly {
    let count = rng.gen_range(0..=terms);
    let mut out = MultiPoly::zero(nvars);
    for _ in 0..count {
        let mut exps = vec![0u32; nvars];
        let mut budget = rng.gen_range(0..=deg);
        for e in exps.iter_mut() {
            let take = rng.gen_range(0..=budget);
            *e = take;
            budget -= take;
        }
        let mono = MultiPoly::from_terms(nvars, [(Monomial::from_exps(exps), rand_scalar(rng))]);
        out = &out + &mono;
    }
    out
}

pub fn rand_nonzero_poly(rng: &mut ChaCha8Rng, nvars: usize, deg: u32, terms: usize) -> MultiPoly {
    loop {
        let p = rand_poly(rng, nvars, deg, terms.max(1));
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random rational function; the denominator is 1 about half the time.
pub fn rand_ratfun(rng: &mut ChaCha8Rng, nvars: usize, deg: u32) -> RatFun {
    let num = rand_poly(rng, nvars, deg, 3);
    let den = if rng.gen_bool(0.5) {
        MultiPoly::one(nvars)
    } else {
        rand_nonzero_poly(rng, nvars, deg, 2)
    };
    RatFun::new(num, den).unwrap()
}

pub fn rand_nonzero_ratfun(rng: &mut ChaCha8Rng, nvars: usize, deg: u32) -> RatFun {
    loop {
        let r = rand_ratfun(rng, nvars, deg);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn rand_upoly(rng: &mut ChaCha8Rng, nvars: usize, deg: usize, coeff_deg: u32) -> UPoly {
    UPoly::new(
        nvars,
        (0..=deg)
            .map(|_| rand_ratfun(rng, nvars, coeff_deg))
            .collect(),
    )
}

/// Random polynomial of exact degree `deg`.
pub fn rand_upoly_exact(rng: &mut ChaCha8Rng, nvars: usize, deg: usize, coeff_deg: u32) -> UPoly {
    let mut cs: Vec<RatFun> = (0..deg)
        .map(|_| rand_ratfun(rng, nvars, coeff_deg))
        .collect();
    cs.push(rand_nonzero_ratfun(rng, nvars, coeff_deg));
    UPoly::new(nvars, cs)
}

pub fn c64(s: &Scalar) -> Complex64 {
    s.to_complex()
}

/// All roots of `sum c_k x^k` (`c` leading coefficient last, nonzero) by
/// Aberth iteration.
pub fn roots(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let monic: Vec<Complex64> = c.iter().map(|v| v / lead).collect();
    let eval = |x: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for k in (0..=n).rev() {
            dp = dp * x + p;
            p = p * x + monic[k];
        }
        (p, dp)
    };
    let radius = 1.0 + monic[..n].iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut xs: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut worst: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = eval(xs[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| 1.0 / (xs[i] - xs[j]))
                .sum();
            let step = ratio / (1.0 - ratio * sum);
            xs[i] -= step;
            worst = worst.max(step.norm() / xs[i].norm().max(1.0));
        }
        if worst < 1e-14 {
            break;
        }
    }
    xs
}

/// Determinant by permutation expansion.
pub fn leibniz_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    let nvars = m[0][0].nvars();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = MultiPoly::zero(nvars);
    permute(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let mut t = MultiPoly::one(nvars);
        for (i, &j) in p.iter().enumerate() {
            t = &t * &m[i][j];
            if t.is_zero() {
                return;
            }
        }
        total = if inversions % 2 == 0 {
            &total + &t
        } else {
            &total - &t
        };
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Sylvester matrix of two coefficient lists (constant term first), rows of
/// `f` first.
pub fn sylvester(f: &[MultiPoly], g: &[MultiPoly]) -> Vec<Vec<MultiPoly>> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let nvars = f[0].nvars();
    let size = m + n;
    let mut rows = vec![vec![MultiPoly::zero(nvars); size]; size];
    for r in 0..n {
        for k in 0..=m {
            rows[r][r + m - k] = f[k].clone();
        }
    }
    for r in 0..m {
        for k in 0..=n {
            rows[n + r][r + n - k] = g[k].clone();
        }
    }
    rows
}

/// Degree of the gcd of two scalar polynomials (constant term first) by the
/// plain Euclidean algorithm.
pub fn scalar_gcd_degree(a: &[Scalar], b: &[Scalar]) -> usize {
    let trim = |mut v: Vec<Scalar>| {
        while v.last().is_some_and(|c| *c == Scalar::from(0)) {
            v.pop();
        }
        v
    };
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let mut r = a.clone();
        while r.len() >= b.len() {
            let q = r.last().unwrap().clone() / b.last().unwrap().clone();
            let shift = r.len() - b.len();
            for (k, c) in b.iter().enumerate() {
                r[k + shift] = r[k + shift].clone() - q.clone() * c.clone();
            }
            r.pop();
            r = trim(r);
        }
        a = b;
        b = r;
    }
    a.len() - 1
}

pub fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5, -9i64..=9, 1i64..=5, any::<bool>()).prop_map(|(a, b, c, d, real)| {
        if real {
            Scalar::from_ratio(a, b)
        } else {
            Scalar::from_parts((a, b), (c, d))
        }
    })
}

pub fn poly_strategy(nvars: usize, deg: u32, terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=deg, nvars), scalar_strategy()),
        0..=terms,
    )
    .prop_map(move |ts| {
        MultiPoly::from_terms(
            nvars,
            ts.into_iter().map(|(e, c)| (Monomial::from_exps(e), c)),
        )
    })
}

pub fn ratfun_strategy(nvars: usize, deg: u32) -> impl Strategy<Value = RatFun> {
    (poly_strategy(nvars, deg, 3), poly_strategy(nvars, deg, 2)).prop_map(|(n, d)| {
        if d.is_zero() {
            RatFun::from_poly(n)
        } else {
            RatFun::new(n, d).unwrap()
        }
    })
}

pub fn upoly_strategy(nvars: usize, deg: usize, coeff_deg: u32) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(ratfun_strategy(nvars, coeff_deg), 0..=deg + 1)
        .prop_map(move |cs| UPoly::new(nvars, cs))
}
