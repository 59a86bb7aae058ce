//! Hand-derived worked values, each recomputed by an oracle written here
//! without the library's algorithms and then compared with the frozen value
//! and with the library.

mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use common::*;
use num_complex::Complex64;
use quasidiv::expr::{parse_expr, Expr};
use quasidiv::indicator::{check_sinusoidal, estimate_indicator, SampleConfig, SectorSpec};
use quasidiv::quasi::{
    classify_generator, divide, element_from_expr, equiv, ideal_member, solve_unit_equation,
    to_exp_basis, DivisionResult,
};
use quasidiv::upoly::{perfect_power, root_bound, tschirnhaus};
use quasidiv::{Element, Generator, LaurentPoly, MultiPoly, RatFun, Scalar, UPoly};

type Dense = Vec<RatFun>;

fn zf() -> RatFun {
    RatFun::var(1, 0)
}

fn q(n: i64, d: i64) -> RatFun {
    RatFun::constant(1, Scalar::from_ratio(n, d))
}

fn dense(p: &UPoly) -> Dense {
    p.coeffs().to_vec()
}

fn upoly(cs: Dense) -> UPoly {
    UPoly::new(1, cs)
}

/// Synthetic division of `a` by the monic `w - r`.
fn synthetic_division(a: &Dense, r: &RatFun) -> (Dense, RatFun) {
    let mut acc = RatFun::zero(1);
    let mut out = Vec::new();
    for c in a.iter().rev() {
        acc = &(&acc * r) + c;
        out.push(acc.clone());
    }
    let rem = out.pop().unwrap();
    out.reverse();
    (out, rem)
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

/// Coefficients of `c (w + s)^m` from the binomial theorem.
fn binomial_expansion(c: &RatFun, s: &RatFun, m: u32) -> Dense {
    (0..=m)
        .map(|k| &(c * &s.pow(m - k)) * &q(binomial(m, k), 1))
        .collect()
}

/// Coefficients of `P(w - s)` by expanding every `(w - s)^k`.
fn taylor_shift(p: &Dense, s: &RatFun) -> Dense {
    let mut out = vec![RatFun::zero(1); p.len()];
    for (k, a) in p.iter().enumerate() {
        for (j, c) in binomial_expansion(a, &-s, k as u32).into_iter().enumerate() {
            out[j] = &out[j] + &c;
        }
    }
    out
}

fn exp_gen() -> Generator {
    classify_generator(&parse_expr("exp(z)").unwrap(), 1).unwrap()
}

fn el(s: &str, g: &Generator) -> Element {
    element_from_expr(&parse_expr(s).unwrap(), g, 1).unwrap()
}

#[test]
fn division_by_w_minus_z() {
    let a = vec![q(1, 1), q(0, 1), q(1, 1)];
    let (quot, rem) = synthetic_division(&a, &zf());
    assert_eq!(quot, vec![zf(), q(1, 1)]);
    assert_eq!(rem, &zf().pow(2) + &q(1, 1));
    let lib = upoly(a).divmod(&UPoly::linear(-zf())).unwrap();
    assert_eq!(lib, (upoly(quot), UPoly::constant(rem)));
}

#[test]
fn bezout_of_w_minus_one_and_w_plus_one() {
    // U (w - 1) + V (w + 1) = 1 with constant U, V: U + V = 0 and V - U = 1,
    // solved by Cramer's rule.
    let ([a, b], [c, d], [e, f]) = ([1, 1], [-1, 1], [0, 1]);
    let det = a * d - b * c;
    let (u, v) = (q(e * d - b * f, det), q(a * f - e * c, det));
    assert_eq!((u.clone(), v.clone()), (q(-1, 2), q(1, 2)));
    let (g, lu, lv) = upoly(vec![q(-1, 1), q(1, 1)])
        .xgcd(&upoly(vec![q(1, 1), q(1, 1)]))
        .unwrap();
    assert_eq!(
        (g, lu, lv),
        (UPoly::one(1), UPoly::constant(u), UPoly::constant(v))
    );
}

#[test]
fn annulus_of_w2_plus_5w_plus_6() {
    let disc = (25.0f64 - 24.0).sqrt();
    let roots = [(-5.0 - disc) / 2.0, (-5.0 + disc) / 2.0];
    assert_eq!(roots, [-3.0, -2.0]);
    let (m, a0, norm) = (2.0, 6.0, 6.0f64.max(5.0).max(1.0));
    let (lo, hi) = (a0 / (m * norm), m * norm);
    assert_eq!((lo, hi), (0.5, 12.0));
    let b = root_bound(&upoly(vec![q(6, 1), q(5, 1), q(1, 1)])).unwrap();
    assert_eq!((b.lo(), b.hi()), (lo, hi));
    assert!(roots.iter().all(|r| r.abs() >= lo && r.abs() <= hi));
}

#[test]
fn square_of_w_plus_half_z() {
    let frozen = vec![zf().pow(2), &zf() * &q(4, 1), q(4, 1)];
    assert_eq!(binomial_expansion(&q(4, 1), &(&zf() * &q(1, 2)), 2), frozen);
    let cert = perfect_power(&upoly(frozen)).unwrap();
    assert_eq!((cert.c, cert.q, cert.m), (q(4, 1), &zf() * &q(1, 2), 2));
}

#[test]
fn completing_the_square() {
    let mut rng = rng(3);
    for _ in 0..10 {
        let (b, c) = (rand_ratfun(&mut rng, 1, 2), rand_ratfun(&mut rng, 1, 2));
        let p = vec![c.clone(), b.clone(), q(1, 1)];
        let shift = &b * &q(1, 2);
        let by_hand = vec![&c - &(&b.pow(2) * &q(1, 4)), q(0, 1), q(1, 1)];
        assert_eq!(taylor_shift(&p, &shift), by_hand);
        let d = tschirnhaus(&upoly(p)).unwrap();
        assert_eq!((d.shift, dense(&d.depressed)), (shift, by_hand));
    }
}

#[test]
fn depressing_w3_plus_3w2() {
    let p = vec![q(0, 1), q(0, 1), q(3, 1), q(1, 1)];
    let frozen = vec![q(2, 1), q(-3, 1), q(0, 1), q(1, 1)];
    assert_eq!(taylor_shift(&p, &q(1, 1)), frozen);
    let d = tschirnhaus(&upoly(p)).unwrap();
    assert_eq!((d.shift, dense(&d.depressed)), (q(1, 1), frozen));
}

/// Distinct nonconstant exponents among the top-level summands.
fn distinct_exponents(e: &Expr) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut stack = vec![e];
    while let Some(x) = stack.pop() {
        match x {
            Expr::Add(a, b) | Expr::Sub(a, b) => stack.extend([&**a, &**b]),
            Expr::Exp(arg) if !out.contains(&arg.to_string()) => out.push(arg.to_string()),
            _ => {}
        }
    }
    out
}

#[test]
fn two_exponentials_are_generic() {
    let e = parse_expr("exp(z)+exp(2*z)").unwrap();
    assert_eq!(distinct_exponents(&e).len(), 2);
    assert_eq!(classify_generator(&e, 1).unwrap().class_name(), "generic");
}

#[test]
fn square_of_affine_generator() {
    let frozen = binomial_expansion(&q(1, 1), &q(1, 2), 2)
        .into_iter()
        .map(|c| &c * &q(4, 1))
        .collect::<Vec<_>>();
    assert_eq!(frozen, vec![q(1, 1), q(4, 1), q(4, 1)]);
    let f2 = UPoly::monomial(q(1, 1), 2);
    let lib = to_exp_basis(&f2, &q(2, 1), &q(1, 1)).unwrap();
    assert_eq!(lib, LaurentPoly::new(1, 0, frozen));
}

#[test]
fn ritt_instance() {
    let g = exp_gen();
    let (quot, rem) = synthetic_division(&[q(-1, 1), q(0, 1), q(1, 1)].to_vec(), &q(1, 1));
    assert_eq!((quot.clone(), rem), (vec![q(1, 1), q(1, 1)], q(0, 1)));
    let r = divide(&el("exp(2*z)-1", &g), &el("exp(z)-1", &g), &g).unwrap();
    assert_eq!(
        r,
        DivisionResult::InAlgebra(Element::Exp(LaurentPoly::new(1, 0, quot)))
    );
    for k in 1..=20 {
        let z = Complex64::new(0.1 * k as f64 - 1.05, 0.07 * k as f64);
        let lhs = ((2.0 * z).exp() - 1.0) / (z.exp() - 1.0);
        assert!((lhs - (z.exp() + 1.0)).norm() <= 1e-9 * lhs.norm());
    }
}

#[test]
fn generic_quotient_certificate() {
    let f = [s(0), s(1)];
    let f1 = [s(1), s(1)];
    assert_eq!(scalar_gcd_degree(&f, &f1), 0);
    let g = classify_generator(&parse_expr("exp(z)+exp(2*z)").unwrap(), 1).unwrap();
    match divide(&el("f", &g), &el("f+1", &g), &g).unwrap() {
        DivisionResult::NotInM0 { certificate, .. } => {
            assert_eq!(certificate, UPoly::from_scalars(1, &f1))
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn membership_in_w_times_w_minus_one() {
    let g = exp_gen();
    let ideal = el("w*(w-1)", &g);
    // (w - 1) / (w (w - 1)) = w^-1, a unit; (w + 1) leaves remainder 2 on division by w - 1.
    let (_, rem) = synthetic_division(&[q(1, 1), q(1, 1)].to_vec(), &q(1, 1));
    assert_eq!(rem, q(2, 1));
    assert_eq!(
        ideal_member(&el("w-1", &g), &ideal, &g).unwrap(),
        Some(el("1", &g))
    );
    assert_eq!(ideal_member(&el("w+1", &g), &ideal, &g).unwrap(), None);
}

#[test]
fn w_minus_one_and_w_plus_one_are_inequivalent() {
    // (w + 1) = r w^m (w - 1) forces m = 0 and r = 1 = -1.
    let (a, b) = ([s(-1), s(1)], [s(1), s(1)]);
    let ratios: Vec<Scalar> = a
        .iter()
        .zip(&b)
        .map(|(x, y)| y.clone() / x.clone())
        .collect();
    assert_ne!(ratios[0], ratios[1]);
    let g = exp_gen();
    assert_eq!(equiv(&el("w-1", &g), &el("w+1", &g), &g).unwrap(), None);
}

#[test]
fn unit_equation_family() {
    for eps in [1.0, -1.0] {
        for k in 1..=20 {
            let z = Complex64::new(0.2 * k as f64 - 2.1, 1.0 - 0.1 * k as f64);
            let f = eps * (z / 2.0).exp() - 1.0;
            let lhs = f * f + 2.0 * f + 1.0;
            assert!((lhs - z.exp()).norm() <= 1e-9 * lhs.norm());
        }
    }
    let p = UPoly::from_scalars(1, &[s(1), s(2), s(1)]);
    let fam = solve_unit_equation(&p, &q(1, 1), &MultiPoly::var(1, 0))
        .unwrap()
        .unwrap();
    assert_eq!((fam.m, fam.q, fam.unit_part), (2, q(1, 1), q(1, 1)));
    // w^2 + 1 has discriminant -4, so it is no square.
    assert_ne!(s(0) * s(0) - s(4) * s(1) * s(1), s(0));
    let none = solve_unit_equation(
        &UPoly::from_scalars(1, &[s(1), s(0), s(1)]),
        &q(1, 1),
        &MultiPoly::var(1, 0),
    );
    assert_eq!(none.unwrap(), None);
}

fn profile(s: &str, rho: f64) -> quasidiv::indicator::IndicatorProfile {
    estimate_indicator(
        &parse_expr(s).unwrap(),
        rho,
        &SectorSpec::full(),
        &SampleConfig::default(),
    )
    .unwrap()
}

#[test]
fn indicator_of_exp_i_z_squared() {
    let p = profile("exp(i*z^2)", 2.0);
    for (&t, &h) in p.thetas.iter().zip(&p.hvals) {
        let oracle = (Complex64::i() * Complex64::from_polar(1.0, 2.0 * t)).re;
        assert!((oracle + (2.0 * t).sin()).abs() < 1e-12);
        assert!((h - oracle).abs() <= 0.02);
    }
}

#[test]
fn sine_inequality_triple_is_an_equality() {
    let (t1, t, t2) = (0.0f64, FRAC_PI_4, FRAC_PI_2);
    let bound = (t1.cos() * (t2 - t).sin() + t2.cos() * (t - t1).sin()) / (t2 - t1).sin();
    assert!((bound - FRAC_PI_4.cos()).abs() < 1e-15);
    assert!((bound - 2f64.sqrt() / 2.0).abs() < 1e-15);
}

#[test]
fn sinusoid_phases() {
    for k in 0..64 {
        let t = -3.0 + 0.1 * k as f64;
        assert!((t.cos() - (t + FRAC_PI_2).sin()).abs() < 1e-12);
        assert!(((2.0 * t).cos() - (2.0 * (t + FRAC_PI_4)).sin()).abs() < 1e-12);
    }
    let p = profile("exp(z)+exp(-z)", 1.0);
    for (&t, &h) in p.thetas.iter().zip(&p.hvals) {
        assert!((h - t.cos().abs()).abs() <= 0.02, "{t}: {h}");
    }
    assert!(check_sinusoidal(&p).is_none());
}
