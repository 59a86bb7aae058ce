//! Exact ground arithmetic: ℚ(i), multivariate polynomials, gcd and the
//! rational-function field.

pub mod field;
pub mod fmt;
pub mod gcd;
mod modular;
pub mod poly;
pub mod ratfun;
pub mod root;
pub mod scalar;

pub use field::Field;
pub use gcd::gcd;
pub use poly::{Monomial, Poly};
pub use ratfun::RationalFunction;
pub use scalar::Scalar;
