//! Numeric growth of entire functions along rays: order, indicator,
//! the sine-convexity inequality and sinusoidal fits.

use num_complex::Complex;
use num_traits::{Float, FloatConst};
use rayon::prelude::*;

use crate::arith::{Field, Poly, Scalar};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::quasi::expsum::{lower, z_only};

/// Restriction of an expression in `z1..zn` to the line `z = base + s*dir`.
#[derive(Clone, Debug, PartialEq)]
pub struct Slice<T> {
    pub base: Vec<Complex<T>>,
    pub dir: Vec<Complex<T>>,
}

/// Sampling parameters. Radii are `r_start * r_ratio^k`, `k < steps`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleConfig<T = f64> {
    pub r_start: T,
    pub r_ratio: T,
    pub steps: usize,
    pub angles: usize,
    pub slice: Option<Slice<T>>,
    /// Largest max-abs residual accepted by [`check_sinusoidal`].
    pub fit_tolerance: T,
    /// Resolution of the phase search in [`check_sinusoidal`].
    pub phase_step: T,
}

impl<T: Float> Default for SampleConfig<T> {
    fn default() -> Self {
        let c = |v: f64| T::from(v).unwrap();
        SampleConfig {
            r_start: c(2.0),
            r_ratio: c(1.5),
            steps: 25,
            angles: 64,
            slice: None,
            fit_tolerance: c(0.05),
            phase_step: c(1e-3),
        }
    }
}

impl<T: Float> SampleConfig<T> {
    pub fn radii(&self) -> Vec<T> {
        (0..self.steps)
            .map(|k| self.r_start * self.r_ratio.powi(k as i32))
            .collect()
    }
}

/// The sector `{r e^{i theta} : r > r0, alpha < theta < beta}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SectorSpec<T = f64> {
    pub alpha: T,
    pub beta: T,
    pub r0: T,
}

impl<T: Float + FloatConst> SectorSpec<T> {
    pub fn new(alpha: T, beta: T, r0: T) -> Result<Self> {
        let width = beta - alpha;
        if !(width > T::zero() && width <= T::TAU() && r0 >= T::zero()) {
            return Err(Error::InvalidInput(
                "sector needs alpha < beta <= alpha + 2pi and r0 >= 0".into(),
            ));
        }
        Ok(SectorSpec { alpha, beta, r0 })
    }

    /// The whole plane, `-pi < theta < pi`.
    pub fn full() -> Self {
        SectorSpec {
            alpha: -T::PI(),
            beta: T::PI(),
            r0: T::zero(),
        }
    }

    /// `n` midpoints of equal subintervals of `(alpha, beta)`.
    pub fn grid(&self, n: usize) -> Vec<T> {
        let step = (self.beta - self.alpha) / T::from(n).unwrap();
        (0..n)
            .map(|j| self.alpha + step * (T::from(j).unwrap() + T::from(0.5).unwrap()))
            .collect()
    }
}

/// Sampled indicator `h(theta) = limsup log|f(r e^{i theta})| / r^rho`.
#[derive(Clone, Debug, PartialEq)]
pub struct IndicatorProfile<T = f64> {
    pub rho: T,
    pub thetas: Vec<T>,
    /// `+inf` marks angles where no radius gave a usable value.
    pub hvals: Vec<T>,
    pub radii: Vec<T>,
    pub meta: SampleConfig<T>,
    /// Samples skipped because the two largest terms cancelled.
    pub cancellations: usize,
}

/// `a sin(rho (theta - theta0))` fitted to a profile.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SinusoidFit<T = f64> {
    pub a: T,
    pub theta0: T,
    pub residual: T,
}

/// A grid triple where the sine-convexity bound fails.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Violation<T = f64> {
    pub indices: (usize, usize, usize),
    pub h: T,
    pub bound: T,
}

struct NumPoly<T> {
    terms: Vec<(Vec<u32>, Complex<T>)>,
}

impl<T: Float> NumPoly<T> {
    fn new(p: &Poly<Scalar>) -> Self {
        let terms = p
            .terms()
            .map(|(m, c)| {
                let c = c.to_complex();
                (
                    m.exps().to_vec(),
                    Complex::new(T::from(c.re).unwrap(), T::from(c.im).unwrap()),
                )
            })
            .collect();
        NumPoly { terms }
    }

    fn eval(&self, z: &[Complex<T>]) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (exps, c) in &self.terms {
            let mut t = *c;
            for (x, &e) in z.iter().zip(exps) {
                if e > 0 {
                    t = t * x.powu(e);
                }
            }
            acc = acc + t;
        }
        acc
    }
}

/// `sum_j r_j e^{p_j}` with polynomial `r_j`, evaluated in log form.
struct LogEvaluator<T> {
    terms: Vec<(NumPoly<T>, NumPoly<T>)>,
    slice: Option<Slice<T>>,
}

enum LogValue<T> {
    Finite(T),
    Cancelled,
    Unusable,
}

impl<T: Float + FloatConst> LogEvaluator<T> {
    fn new(expr: &Expr<Scalar>, slice: Option<Slice<T>>) -> Result<Self> {
        let nvars = expr.z_arity().max(1);
        match &slice {
            None if nvars > 1 => {
                return Err(Error::InvalidInput(
                    "a multivariate expression needs an affine slice".into(),
                ))
            }
            Some(s) if s.base.len() != nvars || s.dir.len() != nvars => {
                return Err(Error::ArityMismatch {
                    left: nvars,
                    right: s.base.len().max(s.dir.len()),
                })
            }
            _ => {}
        }
        let sum = lower(expr, nvars, &z_only(nvars))?;
        let mut terms = Vec::new();
        for (e, r) in sum.terms() {
            if !r.den().is_constant() {
                return Err(Error::NotEntire(format!(
                    "{expr} has poles where {} vanishes",
                    r.den()
                )));
            }
            let poly = r.num().scale(
                &r.den()
                    .constant_value()
                    .expect("constant")
                    .inv()
                    .expect("nonzero"),
            );
            terms.push((NumPoly::new(&poly), NumPoly::new(e)));
        }
        Ok(LogEvaluator { terms, slice })
    }

    fn point(&self, s: Complex<T>) -> Vec<Complex<T>> {
        match &self.slice {
            None => vec![s],
            Some(sl) => sl
                .base
                .iter()
                .zip(&sl.dir)
                .map(|(b, d)| *b + *d * s)
                .collect(),
        }
    }

    /// `log|f(s)|` by log-sum-exp over `log|r_j| + Re p_j`.
    fn log_abs(&self, s: Complex<T>) -> LogValue<T> {
        let z = self.point(s);
        let mut parts: Vec<(T, T)> = Vec::with_capacity(self.terms.len());
        for (r, p) in &self.terms {
            let rv = r.eval(&z);
            let pv = p.eval(&z);
            let mag = rv.norm().ln() + pv.re;
            if mag.is_nan() || mag == T::infinity() {
                return LogValue::Unusable;
            }
            if mag == T::neg_infinity() {
                continue;
            }
            parts.push((mag, rv.arg() + pv.im));
        }
        if parts.is_empty() {
            return LogValue::Unusable;
        }
        parts.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        let top = parts[0].0;
        if parts.len() > 1 {
            let tol = T::from(1e-12).unwrap();
            let close = (parts[0].0 - parts[1].0).abs() <= tol * top.abs().max(T::one());
            let opposed = (parts[0].1 - parts[1].1).cos() + T::one() <= tol;
            if close && opposed {
                return LogValue::Cancelled;
            }
        }
        let mut acc = Complex::new(T::zero(), T::zero());
        for (mag, phase) in &parts {
            acc = acc + Complex::from_polar((*mag - top).exp(), *phase);
        }
        let v = top + acc.norm().ln();
        if v.is_finite() {
            LogValue::Finite(v)
        } else {
            LogValue::Unusable
        }
    }
}

/// Order of growth of an entire expression.
///
/// With `M(r) = max_theta log|f(r e^{i theta})|`, the estimate is the slope
/// of `log M` against `log r` over the tail half of the usable radii. Growth
/// whose local exponent `d log M / d log r` stays flat over that window is
/// polynomial and has order 0, as does bounded growth.
pub fn estimate_order<T>(expr: &Expr<Scalar>, cfg: &SampleConfig<T>) -> Result<T>
where
    T: Float + FloatConst + Send + Sync,
{
    let eval = LogEvaluator::new(expr, cfg.slice.clone())?;
    let thetas = SectorSpec::<T>::full().grid(cfg.angles);
    let samples: Vec<(T, T)> = cfg
        .radii()
        .into_par_iter()
        .filter_map(|r| {
            let mut best: Option<T> = None;
            for &t in &thetas {
                if let LogValue::Finite(v) = eval.log_abs(Complex::from_polar(r, t)) {
                    best = Some(best.map_or(v, |b: T| b.max(v)));
                }
            }
            best.map(|m| (r, m))
        })
        .collect();
    if samples.is_empty() {
        return Err(Error::OverflowAtAllRadii);
    }
    let tail = &samples[samples.len() / 2..];
    if tail.len() < 3 || tail.iter().any(|&(_, m)| m <= T::zero()) {
        return Ok(T::zero());
    }
    let local: Vec<T> = tail
        .windows(2)
        .map(|w| (w[1].1 - w[0].1) / (w[1].0.ln() - w[0].0.ln()))
        .collect();
    let lo = local.iter().cloned().fold(T::infinity(), T::min);
    let hi = local.iter().cloned().fold(T::neg_infinity(), T::max);
    if lo > T::zero() && hi / lo < T::from(1.1).unwrap() {
        return Ok(T::zero());
    }
    let xs: Vec<T> = tail.iter().map(|&(r, _)| r.ln()).collect();
    let ys: Vec<T> = tail.iter().map(|&(_, m)| m.ln()).collect();
    Ok(regression_slope(&xs, &ys).max(T::zero()))
}

fn regression_slope<T: Float>(xs: &[T], ys: &[T]) -> T {
    let n = T::from(xs.len()).unwrap();
    let mx = xs.iter().cloned().fold(T::zero(), |a, b| a + b) / n;
    let my = ys.iter().cloned().fold(T::zero(), |a, b| a + b) / n;
    let (mut sxy, mut sxx) = (T::zero(), T::zero());
    for (&x, &y) in xs.iter().zip(ys) {
        sxy = sxy + (x - mx) * (y - my);
        sxx = sxx + (x - mx) * (x - mx);
    }
    sxy / sxx
}

/// Indicator of an entire expression with respect to order `rho` on the
/// angle grid of `sector`.
///
/// `h(theta)` is the maximum of `log|f(r e^{i theta})| / r^rho` over the
/// tail half of the radii exceeding `sector.r0`.
pub fn estimate_indicator<T>(
    expr: &Expr<Scalar>,
    rho: T,
    sector: &SectorSpec<T>,
    cfg: &SampleConfig<T>,
) -> Result<IndicatorProfile<T>>
where
    T: Float + FloatConst + Send + Sync,
{
    if rho.is_nan() || rho <= T::zero() {
        return Err(Error::InvalidInput("rho must be positive".into()));
    }
    SectorSpec::new(sector.alpha, sector.beta, sector.r0)?;
    let eval = LogEvaluator::new(expr, cfg.slice.clone())?;
    let radii: Vec<T> = cfg.radii().into_iter().filter(|&r| r > sector.r0).collect();
    let tail = radii[radii.len() / 2..].to_vec();
    let thetas = sector.grid(cfg.angles);
    let rows: Vec<(Option<T>, usize)> = thetas
        .par_iter()
        .map(|&t| {
            let mut best: Option<T> = None;
            let mut cancelled = 0;
            for &r in &tail {
                match eval.log_abs(Complex::from_polar(r, t)) {
                    LogValue::Finite(v) => {
                        let h = v / r.powf(rho);
                        best = Some(best.map_or(h, |b: T| b.max(h)));
                    }
                    LogValue::Cancelled => cancelled += 1,
                    LogValue::Unusable => {}
                }
            }
            (best, cancelled)
        })
        .collect();
    if rows.iter().all(|(b, _)| b.is_none()) {
        return Err(Error::OverflowAtAllRadii);
    }
    Ok(IndicatorProfile {
        rho,
        thetas,
        hvals: rows
            .iter()
            .map(|(b, _)| b.unwrap_or(T::infinity()))
            .collect(),
        radii: tail,
        meta: cfg.clone(),
        cancellations: rows.iter().map(|(_, c)| c).sum(),
    })
}

/// Grid triples `theta1 < theta < theta2` with `theta2 - theta1 < pi/rho`
/// at which
/// `h(theta) sin rho(theta2-theta1) <= h(theta1) sin rho(theta2-theta) + h(theta2) sin rho(theta-theta1)`
/// fails by more than `slack`. Non-finite values are skipped.
pub fn check_sine_inequality<T: Float + FloatConst>(
    profile: &IndicatorProfile<T>,
    slack: T,
) -> Result<Vec<Violation<T>>> {
    let (th, h, rho) = (&profile.thetas, &profile.hvals, profile.rho);
    if th.len() < 3 || th.len() != h.len() {
        return Err(Error::InsufficientGrid);
    }
    // triples spanning pi/rho up to rounding are excluded: the bound degenerates
    let span = T::PI() / rho * (T::one() - T::from(1e-9).unwrap());
    let mut out = Vec::new();
    for i in 0..th.len() {
        if !h[i].is_finite() {
            continue;
        }
        for k in i + 2..th.len() {
            if th[k] - th[i] >= span {
                break;
            }
            if !h[k].is_finite() {
                continue;
            }
            let denom = (rho * (th[k] - th[i])).sin();
            for j in i + 1..k {
                if !h[j].is_finite() {
                    continue;
                }
                let bound = (h[i] * (rho * (th[k] - th[j])).sin()
                    + h[k] * (rho * (th[j] - th[i])).sin())
                    / denom;
                if h[j] > bound + slack {
                    out.push(Violation {
                        indices: (i, j, k),
                        h: h[j],
                        bound,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn max_residual<T: Float>(a: T, s: &[T], h: &[T]) -> T {
    s.iter()
        .zip(h)
        .map(|(&s, &h)| (a * s - h).abs())
        .fold(T::zero(), T::max)
}

/// Best fit of `a sin rho(theta - theta0)`, `a >= 0`, in the max-abs norm.
///
/// `theta0` is searched on a grid of `cfg.phase_step` over one period with
/// the least-squares amplitude at each phase; the amplitude at the best phase
/// is then refined for the max-abs norm, which is convex in `a`. Returns the
/// fit when its residual is within `cfg.fit_tolerance`.
pub fn check_sinusoidal<T: Float + FloatConst>(
    profile: &IndicatorProfile<T>,
) -> Option<SinusoidFit<T>> {
    let (th, h, rho) = (&profile.thetas, &profile.hvals, profile.rho);
    if th.is_empty() || h.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let period = T::TAU() / rho;
    let step = profile.meta.phase_step;
    let count = (period / step).ceil().to_usize()?;
    let mut sines = vec![T::zero(); th.len()];
    let mut best: Option<SinusoidFit<T>> = None;
    for n in 0..count {
        let theta0 = -period / (T::one() + T::one()) + step * T::from(n).unwrap();
        for (s, &t) in sines.iter_mut().zip(th) {
            *s = (rho * (t - theta0)).sin();
        }
        let (mut sh, mut ss) = (T::zero(), T::zero());
        for (&s, &v) in sines.iter().zip(h) {
            sh = sh + s * v;
            ss = ss + s * s;
        }
        let a = if ss > T::zero() {
            (sh / ss).max(T::zero())
        } else {
            T::zero()
        };
        let residual = max_residual(a, &sines, h);
        if best.is_none_or(|b| residual < b.residual) {
            best = Some(SinusoidFit {
                a,
                theta0,
                residual,
            });
        }
    }
    let mut fit = best?;
    for (s, &t) in sines.iter_mut().zip(th) {
        *s = (rho * (t - fit.theta0)).sin();
    }
    let (mut lo, mut hi) = (
        T::zero(),
        fit.a * (T::one() + T::one()) + h.iter().cloned().fold(T::zero(), |m, v| m.max(v.abs())),
    );
    for _ in 0..100 {
        let third = (hi - lo) / T::from(3).unwrap();
        let (m1, m2) = (lo + third, hi - third);
        if max_residual(m1, &sines, h) <= max_residual(m2, &sines, h) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let a = (lo + hi) / (T::one() + T::one());
    let residual = max_residual(a, &sines, h);
    if residual < fit.residual {
        fit = SinusoidFit {
            a,
            theta0: fit.theta0,
            residual,
        };
    }
    (fit.residual <= profile.meta.fit_tolerance).then_some(fit)
}
