//! Sparse multivariate polynomials in graded-lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Float;

use super::field::Field;
use super::fmt as pfmt;
use crate::error::{Error, Result};

/// An exponent vector, ordered graded-lexicographically with `z1 > z2 > …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over `F` in `nvars` variables.
///
/// Terms are kept in a map keyed by monomial; zero coefficients are never
/// stored, so the zero polynomial has no terms and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    /// The polynomial `z_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        Self::from_terms(nvars, [(Monomial::var(nvars, index), F::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(nvars: usize, terms: I) -> Self {
        let mut out = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "exponent vector length must equal nvars");
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<F> {
        if self.is_zero() {
            Some(F::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// Leading term under graded-lex.
    pub fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> F {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(F::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Substitutes the constant `value` for `z_{var+1}`.
    pub fn subs(&self, var: usize, value: &F) -> Self {
        let mut powers = vec![F::one()];
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = std::mem::replace(&mut exps[var], 0) as usize;
            while powers.len() <= e {
                let next = powers[powers.len() - 1].clone() * value.clone();
                powers.push(next);
            }
            out.add_term(Monomial(exps), c.clone() * powers[e].clone());
        }
        out
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.nvars));
        }
        if let Some(c) = other.constant_value() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.constant_value() {
            return Ok(other.scale(&c));
        }
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.mul(mono), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() || self.nvars != divisor.nvars {
            return None;
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.inv()?));
        }
        let (lm, lc) = divisor.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return None;
            }
            let tm = m.div(&lm);
            let tc = c * lc_inv.clone();
            rem = &rem - &divisor.mul_monomial(&tm, &tc);
            quot.add_term(tm, tc);
        }
        Some(quot)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), c.clone() * F::from_i64(e as i64));
        }
        out
    }

    /// Exact evaluation at a point.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * x.pow_u32(e);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Floating-point evaluation, used only by numeric cross-checks.
    pub fn eval_complex<T: Float>(&self, point: &[Complex<T>]) -> Complex<T> {
        debug_assert_eq!(point.len(), self.nvars);
        let mut acc = Complex::new(T::zero(), T::zero());
        for (m, c) in &self.terms {
            let cc = c.to_complex();
            let mut t = Complex::new(T::from(cc.re).unwrap(), T::from(cc.im).unwrap());
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t * x.powu(e);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`,
    /// indexed by the power of `var`. The coefficients do not involve `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Poly::zero(self.nvars); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = std::mem::replace(&mut exps[var], 0) as usize;
            out[e].add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs_in(nvars: usize, var: usize, coeffs: &[Self]) -> Self {
        let mut out = Poly::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut exps = m.0.clone();
                exps[var] += k as u32;
                out.add_term(Monomial(exps), v.clone());
            }
        }
        out
    }

    /// Substitutes `z_j -> images[j]`; all images share one arity.
    pub fn compose(&self, images: &[Poly<F>]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Poly::zero(target);
        let mut cache: Vec<Vec<Poly<F>>> = images
            .iter()
            .map(|p| vec![Poly::one(target), p.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[j].len() <= e as usize {
                    let next = cache[j].last().unwrap().try_mul(&images[j])?;
                    cache[j].push(next);
                }
                t = t.try_mul(&cache[j][e as usize])?;
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }

    /// Embeds into a ring with `nvars` variables, appending unused ones.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        Poly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Drops trailing variables that must not occur.
    pub fn truncate_vars(&self, nvars: usize) -> Option<Self> {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            if m.0[nvars..].iter().any(|&e| e > 0) {
                return None;
            }
            out.add_term(Monomial(m.0[..nvars].to_vec()), c.clone());
        }
        Some(out)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            pfmt::push_term(
                &mut out,
                &c.to_scalar(),
                &pfmt::monomial_string(&m.0, names),
            );
        }
        pfmt::finish(out)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.to_string_with(&pfmt::default_var_names(self.nvars))
        )
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, F: Field> $trait<&'a Poly<F>> for &'a Poly<F> {
            type Output = Poly<F>;
            /// Panics on mismatched arity; the `try_*` methods report it instead.
            fn $method(self, rhs: &'a Poly<F>) -> Poly<F> {
                self.$checked(rhs).expect("polynomial arity mismatch")
            }
        }
        impl<F: Field> $trait for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -self.clone()
    }
}
