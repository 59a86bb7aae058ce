use super::element::AlgebraElement;
use super::generator::GenDescriptor;
use crate::arith::{Field, RationalFunction};
use crate::error::{Error, Result};
use crate::upoly::{Laurent, UniPoly};

/// Outcome of dividing two elements of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisionResult<F: Field> {
    /// `h0 / h1` lies in the algebra; the quotient is exact.
    InAlgebra(AlgebraElement<F>),
    /// `h0 / h1` is not in `M_0^n`. `certificate` is a nonconstant factor of
    /// the divisor coprime to `cofactor`, the reduced dividend, and (for the
    /// exponential basis) not divisible by `w`.
    NotInM0 {
        certificate: UniPoly<F>,
        cofactor: UniPoly<F>,
    },
}

impl<F: Field> DivisionResult<F> {
    pub fn is_in_algebra(&self) -> bool {
        matches!(self, DivisionResult::InAlgebra(_))
    }

    pub fn quotient(&self) -> Option<&AlgebraElement<F>> {
        match self {
            DivisionResult::InAlgebra(q) => Some(q),
            DivisionResult::NotInM0 { .. } => None,
        }
    }

    /// Re-checks the verdict against the inputs: an exact round trip for a
    /// quotient, or a nonconstant certificate dividing the divisor's
    /// unit-free part and coprime to the cofactor.
    pub fn verify(&self, h0: &AlgebraElement<F>, h1: &AlgebraElement<F>) -> Result<bool> {
        match self {
            DivisionResult::InAlgebra(q) => Ok(q.try_mul(h1)? == *h0),
            DivisionResult::NotInM0 {
                certificate,
                cofactor,
            } => {
                if certificate.degree().unwrap_or(0) == 0 {
                    return Ok(false);
                }
                if !certificate.gcd(cofactor)?.degree().is_some_and(|d| d == 0) {
                    return Ok(false);
                }
                let divisor = match h1 {
                    AlgebraElement::Generic(p) => p.clone(),
                    AlgebraElement::Exp(l) => {
                        if certificate.coeff(0).is_zero() {
                            return Ok(false);
                        }
                        l.split_unit()?.1
                    }
                };
                Ok(divisor.div_exact(certificate)?.is_some())
            }
        }
    }
}

fn check_basis<F: Field>(gen: &GenDescriptor<F>, elems: &[&AlgebraElement<F>]) -> Result<()> {
    for e in elems {
        let ok = matches!(
            (gen, e),
            (GenDescriptor::ExpAffine { .. }, AlgebraElement::Exp(_))
                | (GenDescriptor::Generic { .. }, AlgebraElement::Generic(_))
                | (GenDescriptor::Polynomial(_), AlgebraElement::Generic(_))
        );
        if !ok {
            return Err(Error::BasisMismatch);
        }
        if let (GenDescriptor::Polynomial(_), AlgebraElement::Generic(p)) = (gen, e) {
            if p.degree().unwrap_or(0) > 0 {
                return Err(Error::BasisMismatch);
            }
        }
    }
    let n = elems[0].nvars();
    if let Some(e) = elems.iter().find(|e| e.nvars() != n) {
        return Err(Error::ArityMismatch {
            left: n,
            right: e.nvars(),
        });
    }
    Ok(())
}

/// Splits `a` and `b` by their gcd: returns `(a/g, b/g)`.
fn reduce<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> Result<(UniPoly<F>, UniPoly<F>)> {
    if a.is_zero() {
        return Ok((a.clone(), UniPoly::one(b.nvars())));
    }
    let g = a.gcd(b)?;
    let a = a
        .div_exact(&g)?
        .ok_or_else(|| Error::Internal("gcd does not divide".into()))?;
    let b = b
        .div_exact(&g)?
        .ok_or_else(|| Error::Internal("gcd does not divide".into()))?;
    Ok((a, b))
}

/// Decides whether `h0 / h1` lies in the algebra, and if not certifies that
/// it lies outside `M_0^n` altogether.
///
/// Generic basis: with `G = gcd(P0, P1)` the quotient is in `M_0^n` only if
/// `P1 / G` is a unit of `R^n`. Exponential basis: both sides are first
/// split as `w^m Q(w)` with `Q(0) != 0`, then the same test runs on the
/// `Q` parts. The verdict is re-verified before it is returned.
pub fn divide<F: Field>(
    h0: &AlgebraElement<F>,
    h1: &AlgebraElement<F>,
    gen: &GenDescriptor<F>,
) -> Result<DivisionResult<F>> {
    if h1.is_zero() {
        return Err(Error::DivisionByZero);
    }
    check_basis(gen, &[h0, h1])?;
    let result = match (h0, h1) {
        (AlgebraElement::Generic(p0), AlgebraElement::Generic(p1)) => {
            let (q0, q1) = reduce(p0, p1)?;
            if q1.degree() == Some(0) {
                let c = q1.coeff(0).inv()?;
                DivisionResult::InAlgebra(AlgebraElement::Generic(q0.scale(&c)))
            } else {
                let lc = q1.leading_coeff().inv()?;
                DivisionResult::NotInM0 {
                    certificate: q1.scale(&lc),
                    cofactor: q0,
                }
            }
        }
        (AlgebraElement::Exp(l0), AlgebraElement::Exp(l1)) => {
            let n = l1.nvars();
            let (m1, r1) = l1.split_unit()?;
            let (m0, r0) = if l0.is_zero() {
                (m1, UniPoly::zero(n))
            } else {
                l0.split_unit()?
            };
            let (q0, q1) = reduce(&r0, &r1)?;
            if q1.degree() == Some(0) {
                let c = q1.coeff(0).inv()?;
                let q = Laurent::from_upoly(&q0.scale(&c)).shift(m0 - m1);
                DivisionResult::InAlgebra(AlgebraElement::Exp(q))
            } else {
                let lc = q1.leading_coeff().inv()?;
                DivisionResult::NotInM0 {
                    certificate: q1.scale(&lc),
                    cofactor: q0,
                }
            }
        }
        _ => return Err(Error::BasisMismatch),
    };
    if !result.verify(h0, h1)? {
        return Err(Error::Internal(
            "division verdict failed re-verification".into(),
        ));
    }
    Ok(result)
}

/// Membership of `h` in `M_0^n g` intersected with the algebra.
///
/// Exponential basis: with `g = w^m Q(w)` and `h = w^k H(w)`, `h` is a
/// member iff `Q` divides `H`; the cofactor returned is `w^k H / Q`, so that
/// `h = C * Q`. Generic basis: `h = C * g` with `C` in `R^n[f]`.
pub fn ideal_member<F: Field>(
    h: &AlgebraElement<F>,
    g: &AlgebraElement<F>,
    gen: &GenDescriptor<F>,
) -> Result<Option<AlgebraElement<F>>> {
    if g.is_zero() {
        return Err(Error::ZeroElement);
    }
    check_basis(gen, &[h, g])?;
    Ok(match (h, g) {
        (AlgebraElement::Generic(ph), AlgebraElement::Generic(pg)) => {
            ph.div_exact(pg)?.map(AlgebraElement::Generic)
        }
        (AlgebraElement::Exp(lh), AlgebraElement::Exp(lg)) => {
            let (_, q) = lg.split_unit()?;
            if lh.is_zero() {
                return Ok(Some(AlgebraElement::Exp(lh.clone())));
            }
            let (k, hp) = lh.split_unit()?;
            hp.div_exact(&q)?
                .map(|c| AlgebraElement::Exp(Laurent::from_upoly(&c).shift(k)))
        }
        _ => return Err(Error::BasisMismatch),
    })
}

/// `Some((r, m))` when `g = r e^{mp}` (exponential basis) or `g = r`
/// (generic basis); these are the only invertible elements.
pub fn is_invertible<F: Field>(
    g: &AlgebraElement<F>,
    gen: &GenDescriptor<F>,
) -> Result<Option<(RationalFunction<F>, i64)>> {
    if g.is_zero() {
        return Err(Error::ZeroElement);
    }
    check_basis(gen, &[g])?;
    Ok(match g {
        AlgebraElement::Generic(p) => (p.degree() == Some(0)).then(|| (p.coeff(0), 0)),
        AlgebraElement::Exp(l) => (l.coeffs().len() == 1).then(|| (l.coeffs()[0].clone(), l.lo())),
    })
}

/// `Some((R, m))` with `g2 = R e^{mp} g1` (exponential basis, `m = 0` in the
/// generic basis), or `None` when `g1` and `g2` are not associates.
pub fn equiv<F: Field>(
    g1: &AlgebraElement<F>,
    g2: &AlgebraElement<F>,
    gen: &GenDescriptor<F>,
) -> Result<Option<(RationalFunction<F>, i64)>> {
    if g1.is_zero() || g2.is_zero() {
        return Err(Error::ZeroElement);
    }
    check_basis(gen, &[g1, g2])?;
    let scalar_multiple = |a: &UniPoly<F>, b: &UniPoly<F>| -> Result<Option<RationalFunction<F>>> {
        if a.degree() != b.degree() {
            return Ok(None);
        }
        let r = b.leading_coeff().try_div(&a.leading_coeff())?;
        Ok((a.scale(&r) == *b).then_some(r))
    };
    Ok(match (g1, g2) {
        (AlgebraElement::Generic(a), AlgebraElement::Generic(b)) => {
            scalar_multiple(a, b)?.map(|r| (r, 0))
        }
        (AlgebraElement::Exp(a), AlgebraElement::Exp(b)) => {
            let (ma, qa) = a.split_unit()?;
            let (mb, qb) = b.split_unit()?;
            scalar_multiple(&qa, &qb)?.map(|r| (r, mb - ma))
        }
        _ => return Err(Error::BasisMismatch),
    })
}
