mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use quasidiv::expr::{parse_expr, Expr};
use quasidiv::indicator::{
    check_sine_inequality, check_sinusoidal, estimate_indicator, estimate_order, IndicatorProfile,
    SampleConfig, SectorSpec,
};
use quasidiv::quasi::solve_unit_equation;
use quasidiv::{Error, MultiPoly, Scalar, UPoly};

fn cfg() -> SampleConfig {
    SampleConfig::default()
}

fn expr(s: &str) -> Expr {
    parse_expr(s).unwrap()
}

fn profile(s: &str, rho: f64) -> IndicatorProfile {
    estimate_indicator(&expr(s), rho, &SectorSpec::full(), &cfg()).unwrap()
}

fn max_dev(p: &IndicatorProfile, h: impl Fn(f64) -> f64) -> f64 {
    p.thetas
        .iter()
        .zip(&p.hvals)
        .map(|(&t, &v)| (v - h(t)).abs())
        .fold(0.0, f64::max)
}

fn scalar_text(c: &Scalar) -> String {
    format!("({c})")
}

#[test]
fn order_examples() {
    for (s, n) in [("exp(z)", 1.0), ("exp(z^2)+z^5", 2.0), ("z^3", 0.0)] {
        let rho = estimate_order(&expr(s), &cfg()).unwrap();
        assert!((rho - n).abs() <= 0.05, "{s}: {rho}");
    }
    assert!(matches!(
        estimate_order(&expr("1/z"), &cfg()),
        Err(Error::NotEntire(_))
    ));
}

#[test]
fn indicator_examples() {
    assert!(max_dev(&profile("exp(z)", 1.0), f64::cos) <= 0.02);
    assert!(max_dev(&profile("exp(-z)", 1.0), |t| -t.cos()) <= 0.02);
    assert!(max_dev(&profile("exp(i*z^2)", 2.0), |t| -(2.0 * t).sin()) <= 0.02);
}

#[test]
fn sine_inequality_examples() {
    let p = IndicatorProfile {
        rho: 1.0,
        thetas: vec![0.0, FRAC_PI_4, FRAC_PI_2],
        hvals: vec![1.0, FRAC_PI_4.cos(), 0.0],
        radii: vec![],
        meta: cfg(),
        cancellations: 0,
    };
    assert!(check_sine_inequality(&p, 1e-12).unwrap().is_empty());
    let mut full = profile("exp(z)", 1.0);
    assert!(check_sine_inequality(&full, 1e-3).unwrap().is_empty());
    full.hvals[20] += 1.0;
    let v = check_sine_inequality(&full, 1e-3).unwrap();
    assert!(!v.is_empty() && v.iter().all(|v| v.indices.1 == 20));
    full.thetas.truncate(2);
    full.hvals.truncate(2);
    assert_eq!(
        check_sine_inequality(&full, 1e-3),
        Err(Error::InsufficientGrid)
    );
}

#[test]
fn sinusoid_examples() {
    let fit = check_sinusoidal(&profile("exp(z)", 1.0)).unwrap();
    assert!(
        (fit.a - 1.0).abs() < 0.02 && (fit.theta0 + FRAC_PI_2).abs() < 0.02 && fit.residual < 0.05
    );
    let fit = check_sinusoidal(&profile("exp(z^2)", 2.0)).unwrap();
    assert!(
        (fit.a - 1.0).abs() < 0.02 && (fit.theta0 + FRAC_PI_4).abs() < 0.02 && fit.residual < 0.05
    );
    assert_eq!(check_sinusoidal(&profile("exp(z)+exp(-z)", 1.0)), None);
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar_strategy().prop_filter("nonzero", |c| *c != s(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// `exp(c z^n)` has order `n` and indicator `|c| cos(n theta + arg c)`.
    #[test]
    fn monomial_exponentials(c in nonzero_scalar(), n in 1u32..=3) {
        let e = expr(&format!("exp({}*z^{n})", scalar_text(&c)));
        let rho = estimate_order(&e, &cfg()).unwrap();
        prop_assert!((rho - n as f64).abs() <= 0.05, "order {}", rho);
        let p = estimate_indicator(&e, n as f64, &SectorSpec::full(), &cfg()).unwrap();
        let cc = c.to_complex();
        let dev = max_dev(&p, |t| (cc * Complex64::from_polar(1.0, n as f64 * t)).re);
        prop_assert!(dev <= 0.02, "deviation {}", dev);
        prop_assert!(check_sine_inequality(&p, 1e-3).unwrap().is_empty());
    }

    /// Profiles of `exp(P)` satisfy the sine inequality. Lower-order terms
    /// of `P` shift the sampled profile by `O(1/r)`; the schedule reaches far
    /// enough that this stays below the slack.
    #[test]
    fn exp_polynomial_profiles_are_convex(coeffs in prop::collection::vec(scalar_strategy(), 1..=3), lead in nonzero_scalar()) {
        let n = coeffs.len() as u32;
        let mut terms: Vec<String> = coeffs.iter().enumerate().map(|(k, c)| format!("{}*z^{k}", scalar_text(c))).collect();
        terms.push(format!("{}*z^{n}", scalar_text(&lead)));
        let long = SampleConfig { steps: 40, ..cfg() };
        let p = estimate_indicator(&expr(&format!("exp({})", terms.join("+"))), n as f64, &SectorSpec::full(), &long).unwrap();
        let v = check_sine_inequality(&p, 1e-3).unwrap();
        prop_assert!(v.is_empty(), "{:?}", &v[..v.len().min(3)]);
    }

    /// The member `e^{p/m} - q` of a solution family has order `deg p`.
    #[test]
    fn family_members_have_the_symbolic_order(m in 1u32..=3, d in 1u32..=2, q in -3i64..=3) {
        let poly = UPoly::linear(rf(q, 1)).pow(m);
        let exponent = MultiPoly::var(1, 0).pow(d);
        let fam = solve_unit_equation(&poly, &rf(1, 1), &exponent).unwrap().unwrap();
        let member = fam.principal_member(&["z".to_string()]).unwrap();
        let rho = estimate_order(&expr(&member), &cfg()).unwrap();
        prop_assert!((rho - d as f64).abs() <= 0.05, "{} has order {}", member, rho);
    }
}

#[test]
fn sector_validation() {
    assert!(SectorSpec::new(0.0, 0.0, 1.0).is_err());
    assert!(SectorSpec::new(0.0, 7.0, 1.0).is_err());
    assert!(SectorSpec::new(0.0, PI, -1.0).is_err());
    let s = SectorSpec::new(-1.0, 1.0, 0.0).unwrap();
    let g = s.grid(8);
    assert!(g.windows(2).all(|w| w[0] < w[1]) && g[0] > -1.0 && g[7] < 1.0);
}
