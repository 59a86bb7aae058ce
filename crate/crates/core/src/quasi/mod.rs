//! The algebras `R^n[f]` and `R^n[e^p, e^{-p}]`: generator classification,
//! stable division, ideal membership, equivalence and the unit equation
//! `P(f) = R e^p`.

pub mod check;
pub mod division;
pub mod element;
pub mod expsum;
pub mod generator;
pub mod unit;

pub use division::{divide, equiv, ideal_member, is_invertible, DivisionResult};
pub use element::{
    element_from_expr, expsum_to_laurent, from_exp_basis, to_exp_basis, upoly_from_expr,
    AlgebraElement,
};
pub use expsum::ExpSum;
pub use generator::{classify_generator, GenDescriptor};
pub use unit::{solve_unit_equation, RootWitness, SolutionFamily};
