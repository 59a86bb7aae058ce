//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' int)?
//! base   := int | 'i' | var | 'exp' '(' expr ')' | '(' expr ')'
//! var    := 'z' [1-9][0-9]* | 'z' | 't' | 'f' | 'w' | 'x' | 'y'
//! ```
//!
//! Whitespace (including newlines) is ignored. A rational constant `p/q` is
//! the quotient of two integers and folds to a single constant.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ast::{Expr, Var};
use crate::arith::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits parse")),
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Ident(s),
                line: l0,
                column: c0,
            });
            continue;
        }
        if "+-*/^()".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                line: l0,
                column: c0,
            });
            column += 1;
            i += 1;
            continue;
        }
        return Err(Error::Parse {
            line: l0,
            column: c0,
            message: format!("unexpected character '{c}'"),
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, tok: &Token, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: tok.line,
            column: tok.column,
            message: message.into(),
        })
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        let t = self.bump();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            self.error(&t, format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Sym('+') => {
                    self.bump();
                    acc = Expr::add(acc, self.term()?);
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = Expr::sub(acc, self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Sym('*') => {
                    self.bump();
                    acc = Expr::mul(acc, self.unary()?);
                }
                Tok::Sym('/') => {
                    let op = self.bump();
                    let rhs = self.unary()?;
                    acc = match Expr::div(acc, rhs) {
                        Some(e) => e,
                        None => return self.error(&op, "division by zero"),
                    };
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::neg(self.unary()?));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if self.peek().tok == Tok::Sym('^') {
            self.bump();
            let t = self.bump();
            let e = match &t.tok {
                Tok::Int(n) => match u32::try_from(n) {
                    Ok(e) => e,
                    Err(_) => return self.error(&t, "exponent too large"),
                },
                _ => return self.error(&t, "expected a nonnegative integer exponent"),
            };
            return Ok(Expr::pow(base, e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr> {
        let t = self.bump();
        match &t.tok {
            Tok::Int(n) => Ok(Expr::Const(Scalar::from_real(BigRational::from_integer(
                n.clone(),
            )))),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "i" => Ok(Expr::Const(Scalar::i())),
                "exp" => {
                    self.expect_sym('(')?;
                    let e = self.expr()?;
                    self.expect_sym(')')?;
                    Ok(Expr::exp(e))
                }
                other => match parse_var(other) {
                    Some(v) => Ok(Expr::Var(v)),
                    None => self.error(&t, format!("unknown identifier '{other}'")),
                },
            },
            Tok::End => self.error(&t, "unexpected end of input"),
            Tok::Sym(c) => self.error(&t, format!("unexpected '{c}'")),
        }
    }
}

fn parse_var(name: &str) -> Option<Var> {
    match name {
        "z" => Some(Var::Z(0)),
        "t" => Some(Var::T),
        "f" => Some(Var::F),
        "w" => Some(Var::W),
        "x" => Some(Var::X),
        "y" => Some(Var::Y),
        _ => {
            let digits = name.strip_prefix('z')?;
            if digits.starts_with('0')
                || digits.is_empty()
                || !digits.bytes().all(|b| b.is_ascii_digit())
            {
                return None;
            }
            let k: usize = digits.parse().ok()?;
            Some(Var::Z(k - 1))
        }
    }
}

/// Parses an expression over the Gaussian rationals.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.error(&t, "unexpected trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64, d: i64) -> Expr {
        Expr::Const(Scalar::from_ratio(n, d))
    }

    #[test]
    fn folds_rational_constant() {
        let e = parse_expr("exp(z1^2) + 3/2").unwrap();
        let expected = Expr::Add(
            Box::new(Expr::Exp(Box::new(Expr::Pow(
                Box::new(Expr::Var(Var::Z(0))),
                2,
            )))),
            Box::new(c(3, 2)),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn reciprocal() {
        let e = parse_expr("1/(z-1)").unwrap();
        let expected = Expr::Div(
            Box::new(c(1, 1)),
            Box::new(Expr::Sub(Box::new(Expr::Var(Var::Z(0))), Box::new(c(1, 1)))),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn nested_exponential_parses() {
        let e = parse_expr("exp(exp(z))").unwrap();
        assert!(matches!(e, Expr::Exp(ref inner) if matches!(**inner, Expr::Exp(_))));
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            parse_expr(" z2 *\n z1 ").unwrap(),
            parse_expr("z2*z1").unwrap()
        );
    }

    #[test]
    fn z_and_z1_coincide() {
        assert_eq!(parse_expr("z").unwrap(), parse_expr("z1").unwrap());
    }

    #[test]
    fn error_positions() {
        match parse_expr("z +\n  * 2") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("z^-1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("q+1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("(z"), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("z0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn complex_constants_fold() {
        assert_eq!(
            parse_expr("1/2+3*i").unwrap(),
            Expr::Const(Scalar::from_parts((1, 2), (3, 1)))
        );
        assert_eq!(parse_expr("-i").unwrap(), Expr::Const(-Scalar::i()));
    }

    #[test]
    fn print_parse_round_trip() {
        for s in [
            "exp(z1^2)+3/2",
            "1/(z-1)",
            "z*(3/2)",
            "(1+2*i)*z^2-(-1)",
            "-z^2+z1*z2/(z1-z2)^3",
        ] {
            let e = parse_expr(s).unwrap();
            let printed = e.to_string();
            assert_eq!(parse_expr(&printed).unwrap(), e, "{s} -> {printed}");
        }
    }
}
