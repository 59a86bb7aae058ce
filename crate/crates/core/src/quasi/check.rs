//! Numeric cross-checks of symbolic identities at random points.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::division::DivisionResult;
use super::element::AlgebraElement;
use super::expsum::{lower, z_only};
use super::generator::GenDescriptor;
use super::unit::SolutionFamily;
use crate::arith::{Field, Poly, RationalFunction};
use crate::error::{Error, Result};
use crate::upoly::UniPoly;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_POINTS: usize = 20;
/// Values smaller than this are treated as a numerical zero when choosing
/// sample points, since relative error is meaningless there.
const NEAR_ZERO: f64 = 1e-4;
/// Points whose estimated rounding error exceeds this many machine epsilons,
/// relative to the compared value, are skipped.
const MAX_CONDITION: f64 = 1e5;

/// Relative tolerance from `QUASIDIV_PRECISION`, or [`DEFAULT_TOLERANCE`].
pub fn numeric_tolerance() -> f64 {
    std::env::var("QUASIDIV_PRECISION")
        .ok()
        .and_then(|s| s.trim().parse::<f64>().ok())
        .filter(|t| t.is_finite() && *t > 0.0)
        .unwrap_or(DEFAULT_TOLERANCE)
}

/// Result of comparing two evaluations at a set of sample points.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericCheck {
    pub points: usize,
    pub max_rel_err: f64,
    pub tolerance: f64,
}

impl NumericCheck {
    pub fn passed(&self) -> bool {
        self.points > 0 && self.max_rel_err <= self.tolerance
    }
}

pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// Runs `compare` at up to `count` accepted points drawn uniformly from
/// `[-2, 2]^2` per coordinate. `compare` returns `None` to reject a point
/// (near a pole or a zero) and `Some((lhs, rhs))` otherwise.
pub fn cross_check(
    nvars: usize,
    count: usize,
    seed: u64,
    tolerance: f64,
    mut compare: impl FnMut(&[Complex64], &mut ChaCha8Rng) -> Option<(Complex64, Complex64)>,
) -> NumericCheck {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = 0;
    let mut max_rel_err: f64 = 0.0;
    for _ in 0..count * 100 {
        if points == count {
            break;
        }
        let z: Vec<Complex64> = (0..nvars)
            .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
            .collect();
        let Some((a, b)) = compare(&z, &mut rng) else {
            continue;
        };
        if !(a.is_finite() && b.is_finite()) {
            continue;
        }
        points += 1;
        max_rel_err = max_rel_err.max(rel_err(a, b));
    }
    NumericCheck {
        points,
        max_rel_err,
        tolerance,
    }
}

/// Sum of the moduli of the terms of `p` at `z`.
fn abs_sum<F: Field>(p: &Poly<F>, z: &[Complex64]) -> f64 {
    p.terms()
        .map(|(m, c)| {
            let c = c.to_complex().norm();
            m.exps()
                .iter()
                .zip(z)
                .fold(c, |acc, (&e, x)| acc * x.norm().powi(e as i32))
        })
        .sum()
}

/// Value of `r` at `z` and a bound on its absolute rounding error, in units
/// of the machine epsilon.
fn eval_rational<F: Field>(r: &RationalFunction<F>, z: &[Complex64]) -> (Complex64, f64) {
    let (n, d) = (r.num().eval_complex(z), r.den().eval_complex(z));
    let v = n / d;
    (
        v,
        (abs_sum(r.num(), z) + v.norm() * abs_sum(r.den(), z)) / d.norm() + v.norm(),
    )
}

/// Value of an element and a bound on its absolute rounding error, in units
/// of the machine epsilon; `w` is taken as exact.
fn eval_element<F: Field>(
    el: &AlgebraElement<F>,
    z: &[Complex64],
    w: Complex64,
) -> (Complex64, f64) {
    let terms: Vec<(i64, &RationalFunction<F>)> = match el {
        AlgebraElement::Generic(p) => p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (k as i64, c))
            .collect(),
        AlgebraElement::Exp(l) => l.terms().collect(),
    };
    let (mut acc, mut err) = (Complex64::new(0.0, 0.0), 0.0);
    for (k, c) in terms {
        let (v, e) = eval_rational(c, z);
        let wk = w.powi(k as i32);
        acc += v * wk;
        err += (e + (k.unsigned_abs() + 1) as f64 * v.norm()) * wk.norm();
    }
    (acc, err)
}

fn usable(v: Complex64) -> bool {
    v.is_finite() && v.norm() > NEAR_ZERO
}

/// Numeric value of the generator's basis variable at `z`: `e^{p(z)}` for an
/// exponential generator, `f(z)` for a generic one with a known expression,
/// and an arbitrary value otherwise (identities in `R^n[f]` hold for every
/// value of `f`).
fn basis_value<F: Field>(
    gen: &GenDescriptor<F>,
    z: &[Complex64],
    rng: &mut ChaCha8Rng,
) -> Result<Complex64> {
    Ok(match gen {
        GenDescriptor::ExpAffine { p, .. } => p.eval_complex(z).exp(),
        GenDescriptor::Polynomial(q) => q.eval_complex(z),
        GenDescriptor::Generic { expr: Some(e), .. } => {
            lower(e, z.len(), &z_only(z.len()))?.eval_complex(z)
        }
        GenDescriptor::Generic { expr: None, .. } => {
            Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
        }
    })
}

/// Confirms `quotient * h1 = h0` numerically for an in-algebra verdict.
/// Other verdicts have nothing to evaluate and yield `None`.
pub fn check_division<F: Field>(
    h0: &AlgebraElement<F>,
    h1: &AlgebraElement<F>,
    result: &DivisionResult<F>,
    gen: &GenDescriptor<F>,
    seed: u64,
) -> Result<Option<NumericCheck>> {
    let Some(q) = result.quotient() else {
        return Ok(None);
    };
    let mut err = None;
    let check = cross_check(
        h1.nvars(),
        DEFAULT_POINTS,
        seed,
        numeric_tolerance(),
        |z, rng| {
            let w = match basis_value(gen, z, rng) {
                Ok(w) => w,
                Err(e) => {
                    err = Some(e);
                    return None;
                }
            };
            let (a, a_err) = eval_element(h0, z, w);
            let (b, b_err) = eval_element(h1, z, w);
            let (v, v_err) = eval_element(q, z, w);
            let condition = (v_err * b.norm() + v.norm() * b_err + a_err) / a.norm();
            (usable(a) && usable(b) && condition <= MAX_CONDITION).then(|| (v * b, a))
        },
    );
    match err {
        Some(e) => Err(e),
        None => Ok(Some(check)),
    }
}

/// Confirms `P(f) = R e^p` for every member of the family. `P` is first
/// expanded exactly around `-q`, so `f + q` is evaluated directly rather than
/// by cancellation.
pub fn check_family<F: Field>(
    poly: &UniPoly<F>,
    r: &RationalFunction<F>,
    family: &SolutionFamily<F>,
    seed: u64,
) -> Result<NumericCheck> {
    if family.m == 0 {
        return Err(Error::Internal("family with m = 0".into()));
    }
    let shifted = poly.shift_arg(&-&family.q)?;
    let m = family.m as f64;
    let mut worst: Option<NumericCheck> = None;
    for k in 0..family.m {
        let check = cross_check(
            family.p.nvars(),
            DEFAULT_POINTS,
            seed + k as u64,
            numeric_tolerance(),
            |z, _| {
                let (rv, r_err) = eval_rational(r, z);
                let p_err = abs_sum(&family.p, z) + 1.0;
                let rhs = rv * family.p.eval_complex(z).exp();
                if !usable(rhs) || !usable(family.c.eval_complex(z)) {
                    return None;
                }
                let d = family.eval_offset(k, z);
                let (unit, unit_err) = eval_rational(&family.unit_part, z);
                let d_err = d.norm() * ((unit_err / unit.norm() + p_err) / m + 3.0);
                let (mut lhs, mut err) = (
                    Complex64::new(0.0, 0.0),
                    (r_err + rv.norm() * p_err) * rhs.norm() / rv.norm(),
                );
                for (j, c) in shifted.coeffs().iter().enumerate() {
                    let (v, e) = eval_rational(c, z);
                    let j = j as i32;
                    lhs += v * d.powi(j);
                    err += (e + (j + 1) as f64 * v.norm()) * d.norm().powi(j);
                    if j > 0 {
                        err += j as f64 * v.norm() * d.norm().powi(j - 1) * d_err;
                    }
                }
                (err <= MAX_CONDITION * rhs.norm()).then_some((lhs, rhs))
            },
        );
        worst = Some(match worst {
            Some(w) if w.max_rel_err >= check.max_rel_err && w.points <= check.points => w,
            _ => check,
        });
    }
    Ok(worst.expect("m >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Scalar;
    use crate::expr::parse_expr;
    use crate::quasi::{classify_generator, divide, element_from_expr, solve_unit_equation};

    #[test]
    fn sine_quotient_agrees() {
        let g = classify_generator(&parse_expr("exp(i*z)").unwrap(), 1).unwrap();
        let el = |s: &str| element_from_expr::<Scalar>(&parse_expr(s).unwrap(), &g, 1).unwrap();
        let (h0, h1) = (el("w/(2*i) - 1/(2*i*w)"), el("z"));
        let r = divide(&h0, &h1, &g).unwrap();
        let check = check_division(&h0, &h1, &r, &g, 7).unwrap().unwrap();
        assert_eq!(check.points, DEFAULT_POINTS);
        assert!(check.passed(), "{check:?}");
    }

    #[test]
    fn family_agrees() {
        let p = UniPoly::from_scalars(1, &[Scalar::from(1), Scalar::from(2), Scalar::from(1)]);
        let r = RationalFunction::one(1);
        let fam = solve_unit_equation(&p, &r, &crate::Poly::var(1, 0))
            .unwrap()
            .unwrap();
        let check = check_family(&p, &r, &fam, 3).unwrap();
        assert!(check.passed(), "{check:?}");
    }

    /// `f` is close to `-q` on the whole sample box, so the expanded form of
    /// `P(f)` cancels to about seven digits everywhere.
    #[test]
    fn family_with_dominant_shift() {
        let z = RationalFunction::<Scalar>::var(1, 0);
        let q = &z.scale(&Scalar::from(4)) + &RationalFunction::constant(1, Scalar::from(8));
        let c = RationalFunction::constant(1, Scalar::from_parts((-7, 1), (-5, 1)));
        let p = UniPoly::linear(q).pow(4).scale(&c);
        let r = RationalFunction::constant(1, Scalar::i());
        let e = &crate::Poly::var(1, 0).scale(&Scalar::from(2)) + &crate::Poly::one(1);
        let fam = solve_unit_equation(&p, &r, &e).unwrap().unwrap();
        for seed in 0..20 {
            let check = check_family(&p, &r, &fam, seed).unwrap();
            assert!(
                check.points == DEFAULT_POINTS && check.passed(),
                "{check:?}"
            );
        }
    }

    #[test]
    fn detects_wrong_family() {
        let p = UniPoly::from_scalars(1, &[Scalar::from(1), Scalar::from(2), Scalar::from(1)]);
        let r = RationalFunction::one(1);
        let fam = solve_unit_equation(&p, &r, &crate::Poly::var(1, 0))
            .unwrap()
            .unwrap();
        let mut wrong_q = fam.clone();
        wrong_q.q = RationalFunction::constant(1, Scalar::from(2));
        assert!(!check_family(&p, &r, &wrong_q, 3).unwrap().passed());
        let mut wrong_unit = fam;
        wrong_unit.unit_part = RationalFunction::constant(1, Scalar::from(2));
        wrong_unit.root = crate::quasi::RootWitness::Deferred;
        assert!(!check_family(&p, &r, &wrong_unit, 3).unwrap().passed());
    }

    #[test]
    fn detects_wrong_identity() {
        let check = cross_check(1, 5, 1, 1e-9, |z, _| Some((z[0], z[0] * 1.001)));
        assert!(!check.passed());
    }
}
