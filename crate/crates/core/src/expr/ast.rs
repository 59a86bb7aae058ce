use std::fmt;

use crate::arith::{Field, Scalar};

/// Variable names recognised by the grammar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// `z1`, `z2`, … stored zero-based; bare `z` is `Z(0)`.
    Z(usize),
    /// Parameter of a dependence query.
    T,
    /// The generator of `R^n[f]`.
    F,
    /// `e^p` for the generator's exponent `p`.
    W,
    /// First annihilator variable.
    X,
    /// Second annihilator variable.
    Y,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Z(k) => write!(f, "z{}", k + 1),
            Var::T => write!(f, "t"),
            Var::F => write!(f, "f"),
            Var::W => write!(f, "w"),
            Var::X => write!(f, "x"),
            Var::Y => write!(f, "y"),
        }
    }
}

/// Expression tree. Build it through the associated constructors, which
/// fold constant subtrees, so that two equal inputs produce equal trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr<F: Field = Scalar> {
    Const(F),
    Var(Var),
    Add(Box<Expr<F>>, Box<Expr<F>>),
    Sub(Box<Expr<F>>, Box<Expr<F>>),
    Mul(Box<Expr<F>>, Box<Expr<F>>),
    Div(Box<Expr<F>>, Box<Expr<F>>),
    Neg(Box<Expr<F>>),
    Pow(Box<Expr<F>>, u32),
    Exp(Box<Expr<F>>),
}

#[allow(clippy::should_implement_trait)]
impl<F: Field> Expr<F> {
    pub fn constant(c: F) -> Self {
        Expr::Const(c)
    }

    pub fn var(v: Var) -> Self {
        Expr::Var(v)
    }

    pub fn as_const(&self) -> Option<&F> {
        match self {
            Expr::Const(c) => Some(c),
            _ => None,
        }
    }

    pub fn add(a: Self, b: Self) -> Self {
        match (a, b) {
            (Expr::Const(x), Expr::Const(y)) => Expr::Const(x + y),
            (a, b) => Expr::Add(Box::new(a), Box::new(b)),
        }
    }

    pub fn sub(a: Self, b: Self) -> Self {
        match (a, b) {
            (Expr::Const(x), Expr::Const(y)) => Expr::Const(x - y),
            (a, b) => Expr::Sub(Box::new(a), Box::new(b)),
        }
    }

    pub fn mul(a: Self, b: Self) -> Self {
        match (a, b) {
            (Expr::Const(x), Expr::Const(y)) => Expr::Const(x * y),
            (a, b) => Expr::Mul(Box::new(a), Box::new(b)),
        }
    }

    /// `None` when the denominator folds to the constant zero.
    pub fn div(a: Self, b: Self) -> Option<Self> {
        match (a, b) {
            (_, Expr::Const(y)) if y.is_zero() => None,
            (Expr::Const(x), Expr::Const(y)) => Some(Expr::Const(x / y)),
            (a, b) => Some(Expr::Div(Box::new(a), Box::new(b))),
        }
    }

    pub fn neg(a: Self) -> Self {
        match a {
            Expr::Const(x) => Expr::Const(-x),
            a => Expr::Neg(Box::new(a)),
        }
    }

    pub fn pow(a: Self, e: u32) -> Self {
        match a {
            Expr::Const(x) => Expr::Const(x.pow_u32(e)),
            a => Expr::Pow(Box::new(a), e),
        }
    }

    pub fn exp(a: Self) -> Self {
        match a {
            Expr::Const(x) if x.is_zero() => Expr::Const(F::one()),
            a => Expr::Exp(Box::new(a)),
        }
    }

    /// Number of `z` variables needed: one past the largest index used.
    pub fn z_arity(&self) -> usize {
        let mut n = 0;
        self.visit_vars(&mut |v| {
            if let Var::Z(k) = v {
                n = n.max(k + 1);
            }
        });
        n
    }

    pub fn uses(&self, var: Var) -> bool {
        let mut found = false;
        self.visit_vars(&mut |v| found |= v == var);
        found
    }

    pub fn contains_exp(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Var(_) => false,
            Expr::Exp(_) => true,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.contains_exp() || b.contains_exp()
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.contains_exp(),
        }
    }

    pub fn visit_vars(&self, f: &mut impl FnMut(Var)) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(v) => f(*v),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.visit_vars(f);
                b.visit_vars(f);
            }
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Exp(a) => a.visit_vars(f),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Var(_) | Expr::Exp(_) => 5,
            Expr::Const(c) => {
                let s = c.to_scalar().to_string();
                if s[1..].contains(['+', '-']) {
                    1
                } else if s.contains(['*', '/']) {
                    2
                } else if s.starts_with('-') {
                    3
                } else {
                    5
                }
            }
        }
    }

    fn write_at(&self, out: &mut String, min: u8) {
        let wrap = self.precedence() < min;
        if wrap {
            out.push('(');
        }
        match self {
            Expr::Const(c) => out.push_str(&c.to_scalar().to_string()),
            Expr::Var(v) => out.push_str(&v.to_string()),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(out, 1);
                out.push(if matches!(self, Expr::Add(..)) {
                    '+'
                } else {
                    '-'
                });
                b.write_at(out, 2);
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write_at(out, 2);
                out.push(if matches!(self, Expr::Mul(..)) {
                    '*'
                } else {
                    '/'
                });
                b.write_at(out, 3);
            }
            Expr::Neg(a) => {
                out.push('-');
                a.write_at(out, 3);
            }
            Expr::Pow(a, e) => {
                a.write_at(out, 5);
                out.push_str(&format!("^{e}"));
            }
            Expr::Exp(a) => {
                out.push_str("exp(");
                a.write_at(out, 0);
                out.push(')');
            }
        }
        if wrap {
            out.push(')');
        }
    }
}

impl<F: Field> fmt::Display for Expr<F> {
    /// Prints in the input grammar with the fewest parentheses that still
    /// parse back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_at(&mut s, 0);
        write!(f, "{s}")
    }
}

impl<F: Field> From<Var> for Expr<F> {
    fn from(v: Var) -> Self {
        Expr::Var(v)
    }
}

impl<F: Field> Expr<F> {
    pub fn one() -> Self {
        Expr::Const(F::one())
    }
}
