//! Exact symbolic algebra for algebras generated by rational functions and a
//! single entire function.

pub mod arith;
pub mod cli;
pub mod dependence;
pub mod error;
pub mod expr;
pub mod indicator;
pub mod quasi;
pub mod upoly;

pub use arith::{Field, Monomial, Poly, RationalFunction, Scalar};
pub use error::{Error, Result};

/// Multivariate polynomial over the Gaussian rationals.
pub type MultiPoly = Poly<Scalar>;
/// Rational function over the Gaussian rationals.
pub type RatFun = RationalFunction<Scalar>;
/// Polynomial in `w` over [`RatFun`].
pub type UPoly = upoly::UniPoly<Scalar>;
/// Laurent polynomial in `w` over [`RatFun`].
pub type LaurentPoly = upoly::Laurent<Scalar>;
/// Classified generator over the Gaussian rationals.
pub type Generator = quasi::GenDescriptor<Scalar>;
/// Element of `R^n[f]` or `R^n[e^p, e^{-p}]` over the Gaussian rationals.
pub type Element = quasi::AlgebraElement<Scalar>;
/// Polynomial in `x, y` returned as an annihilator.
pub type BiPoly = Poly<Scalar>;
/// Pair of rational functions of one parameter.
pub type Pair = dependence::ParamPair<Scalar>;
