//! Shared term formatting for every polynomial-like type.

use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;

/// Default variable names for `nvars` variables: `z` when there is only one.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    if nvars == 1 {
        vec!["z".to_string()]
    } else {
        (1..=nvars).map(|i| format!("z{i}")).collect()
    }
}

/// Renders a power product such as `z1^2*z2`; empty for the unit monomial.
pub fn monomial_string(exps: &[u32], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (e, name) in exps.iter().zip(names) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// True when the scalar prints with a leading minus sign.
fn reads_negative(c: &Scalar) -> bool {
    if c.im().is_zero() {
        c.re().is_negative()
    } else {
        c.re().is_zero() && c.im().is_negative()
    }
}

/// Appends `c*body` to `out` with the right connective.
///
/// `body` must already be a product-level expression (a monomial, or a
/// parenthesized sum). An empty body means a bare constant term.
pub fn push_term(out: &mut String, c: &Scalar, body: &str) {
    let first = out.is_empty();
    let neg = reads_negative(c);
    let mag = if neg { -c.clone() } else { c.clone() };
    if neg {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    let complex = !mag.re().is_zero() && !mag.im().is_zero();
    if body.is_empty() {
        if complex && !first {
            out.push_str(&format!("({mag})"));
        } else {
            out.push_str(&mag.to_string());
        }
        return;
    }
    if mag.is_one() {
        out.push_str(body);
    } else if complex {
        out.push_str(&format!("({mag})*{body}"));
    } else {
        out.push_str(&format!("{mag}*{body}"));
    }
}

pub fn finish(out: String) -> String {
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
