//! Concrete syntax for generators, elements and parameters.

pub mod ast;
pub mod parser;

pub use ast::{Expr, Var};
pub use parser::parse_expr;
