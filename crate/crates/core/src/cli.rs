//! Command-line front end: argument parsing, dispatch onto the engine and
//! JSON reports.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::arith::fmt::default_var_names;
use crate::arith::{RationalFunction, Scalar};
use crate::dependence::{annihilating_polynomial, verify_dependence, ParamPair};
use crate::error::{Error, Result};
use crate::expr::{parse_expr, Expr, Var};
use crate::indicator::{
    check_sine_inequality, check_sinusoidal, estimate_indicator, estimate_order, SampleConfig,
    SectorSpec, Slice,
};
use crate::quasi::check::{check_division, check_family, NumericCheck};
use crate::quasi::expsum::{lower, z_only, ExpSum};
use crate::quasi::{
    classify_generator, divide, element_from_expr, equiv, from_exp_basis, ideal_member,
    is_invertible, solve_unit_equation, upoly_from_expr, AlgebraElement, DivisionResult,
    GenDescriptor, RootWitness,
};
use crate::upoly::UniPoly;

pub const SCHEMA: &str = "quasidiv/1";

/// Exit code for a definite verdict, negative answers included.
pub const EXIT_OK: i32 = 0;
/// Exit code for malformed input or usage errors.
pub const EXIT_INPUT: i32 = 1;
/// Exit code for a failed internal verification.
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "quasidiv",
    args_conflicts_with_subcommands = true,
    version,
    about = "Division, membership and dependence queries in algebras generated by rational functions and one entire function"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    /// Run newline-delimited queries from FILE ('#' starts a comment).
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
    /// Indented JSON output.
    #[arg(long, global = true, conflicts_with = "json")]
    pub pretty: bool,
    /// Compact JSON output (the default).
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Classify a generator f as polynomial, q1*exp(p)+q2, or generic.
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Decide whether DIVIDEND/DIVISOR lies in the algebra.
    Divide {
        #[command(flatten)]
        gen: GenArg,
        #[arg(allow_hyphen_values = true)]
        dividend: String,
        #[arg(allow_hyphen_values = true)]
        divisor: String,
    },
    /// Decide whether ELEMENT lies in the ideal of IDEAL in meromorphic functions with algebraic poles.
    Member {
        #[command(flatten)]
        gen: GenArg,
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[arg(allow_hyphen_values = true)]
        ideal: String,
    },
    /// Decide whether SECOND = R*exp(m*p)*FIRST.
    Equiv {
        #[command(flatten)]
        gen: GenArg,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Decide whether ELEMENT is invertible, i.e. r*exp(m*p).
    Invertible {
        #[command(flatten)]
        gen: GenArg,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Solve P(f) = R*exp(p) for f; POLY is written in w.
    Solve {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// The coefficient R.
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        rhs: String,
        /// The exponent polynomial p.
        #[arg(long = "exp", allow_hyphen_values = true)]
        exponent: String,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Annihilating polynomial P(x, y) of two rational functions of t.
    Depend {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Order and indicator of an entire expression along rays.
    Indicator {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Order used for the indicator; defaults to the rounded estimate.
        #[arg(long)]
        rho: Option<f64>,
        /// Lower edge of the sector, in radians [default: -pi].
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        /// Upper edge of the sector, in radians [default: pi].
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<f64>,
        /// Radii below this are not sampled.
        #[arg(long, default_value_t = 0.0)]
        r0: f64,
        /// Number of radii in the geometric schedule 2*1.5^k.
        #[arg(long, default_value_t = 25)]
        steps: usize,
        /// Number of rays in the sector.
        #[arg(long, default_value_t = 64)]
        angles: usize,
        /// Slack for the sine-convexity check.
        #[arg(long, default_value_t = 1e-3)]
        slack: f64,
        /// Comma-separated point z0 of the slice z = z0 + s*dir.
        #[arg(long, allow_hyphen_values = true, requires = "dir")]
        base: Option<String>,
        /// Comma-separated direction of the slice.
        #[arg(long, allow_hyphen_values = true, requires = "base")]
        dir: Option<String>,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct GenArg {
    /// Generator f: an expression in z1..zn, or `generic[:ORDER]`.
    #[arg(long = "gen", allow_hyphen_values = true)]
    pub gen: String,
    #[arg(long)]
    pub nvars: Option<usize>,
}

/// What the process prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `argv` (including the program name) and runs it.
pub fn run_command<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        stdout: text,
                        stderr: String::new(),
                        code: EXIT_OK,
                    }
                }
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_INPUT,
                },
            };
        }
    };
    let pretty = cli.pretty;
    if let Some(path) = &cli.batch {
        return match std::fs::read_to_string(path) {
            Ok(text) => run_batch(&text, pretty),
            Err(e) => Outcome {
                stdout: String::new(),
                stderr: format!("cannot read {}: {e}\n", path.display()),
                code: EXIT_INPUT,
            },
        };
    }
    let Some(command) = cli.command else {
        return Outcome {
            stdout: String::new(),
            stderr: "a subcommand or --batch is required; see --help\n".into(),
            code: EXIT_INPUT,
        };
    };
    let (report, code) = execute(&command);
    Outcome {
        stdout: render(&report, pretty) + "\n",
        stderr: String::new(),
        code,
    }
}

fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    } else {
        v.to_string()
    }
}

/// Runs every non-comment line of `text` as one query, in parallel, and
/// prints the reports in input order. The exit code is the largest one seen.
pub fn run_batch(text: &str, pretty: bool) -> Outcome {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<(Value, i32)> = lines
        .par_iter()
        .map(|&(line, query)| {
            let (mut report, code) = batch_query(query);
            if let Value::Object(m) = &mut report {
                m.insert("line".into(), json!(line));
            }
            (report, code)
        })
        .collect();
    let mut stdout = String::new();
    for (v, _) in &results {
        stdout.push_str(&render(v, pretty));
        stdout.push('\n');
    }
    Outcome {
        stdout,
        stderr: String::new(),
        code: results.iter().map(|(_, c)| *c).max().unwrap_or(EXIT_OK),
    }
}

fn batch_query(query: &str) -> (Value, i32) {
    let usage = |message: String| {
        let mut m = Map::new();
        m.insert("schema".into(), json!(SCHEMA));
        m.insert("query".into(), json!(query));
        m.insert("error".into(), json!({"kind": "usage", "message": message}));
        (Value::Object(m), EXIT_INPUT)
    };
    let Some(words) = shlex::split(query) else {
        return usage("unbalanced quotes".into());
    };
    let argv = std::iter::once("quasidiv".to_string()).chain(words);
    match Cli::try_parse_from(argv) {
        Ok(Cli {
            command: Some(c),
            batch: None,
            ..
        }) => execute(&c),
        Ok(_) => usage("each batch line must hold exactly one subcommand".into()),
        Err(e) => usage(e.render().to_string().trim().to_string()),
    }
}

struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    fields: Map<String, Value>,
    notes: Vec<String>,
    diagnostics: Map<String, Value>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            fields: Map::new(),
            notes: Vec::new(),
            diagnostics: Map::new(),
        }
    }

    fn input(&mut self, k: &str, v: impl Into<Value>) {
        self.inputs.insert(k.into(), v.into());
    }

    fn set(&mut self, k: &str, v: impl Into<Value>) {
        self.fields.insert(k.into(), v.into());
    }

    fn finish(self, started: Instant, error: Option<&Error>) -> Value {
        let mut out = self.fields;
        out.insert("schema".into(), json!(SCHEMA));
        out.insert("command".into(), json!(self.command));
        out.insert("inputs".into(), Value::Object(self.inputs));
        let mut diag = self.diagnostics;
        diag.insert(
            "elapsed_ms".into(),
            json!(started.elapsed().as_secs_f64() * 1e3),
        );
        if !self.notes.is_empty() {
            diag.insert("notes".into(), json!(self.notes));
        }
        out.insert("diagnostics".into(), Value::Object(diag));
        if let Some(e) = error {
            out.insert(
                "error".into(),
                json!({"kind": e.kind(), "message": e.to_string()}),
            );
        }
        Value::Object(out)
    }
}

/// Runs one parsed subcommand and returns its report and exit code.
pub fn execute(command: &Command) -> (Value, i32) {
    let started = Instant::now();
    let name = match command {
        Command::Classify { .. } => "classify",
        Command::Divide { .. } => "divide",
        Command::Member { .. } => "member",
        Command::Equiv { .. } => "equiv",
        Command::Invertible { .. } => "invertible",
        Command::Solve { .. } => "solve",
        Command::Depend { .. } => "depend",
        Command::Indicator { .. } => "indicator",
    };
    let mut report = Report::new(name);
    let result = match command {
        Command::Classify { expr, nvars } => classify_cmd(&mut report, expr, *nvars),
        Command::Divide {
            gen,
            dividend,
            divisor,
        } => divide_cmd(&mut report, gen, dividend, divisor),
        Command::Member {
            gen,
            element,
            ideal,
        } => member_cmd(&mut report, gen, element, ideal),
        Command::Equiv { gen, first, second } => equiv_cmd(&mut report, gen, first, second),
        Command::Invertible { gen, element } => invertible_cmd(&mut report, gen, element),
        Command::Solve {
            poly,
            rhs,
            exponent,
            nvars,
        } => solve_cmd(&mut report, poly, rhs, exponent, *nvars),
        Command::Depend { a, b } => depend_cmd(&mut report, a, b),
        Command::Indicator { .. } => indicator_cmd(&mut report, command),
    };
    match result {
        Ok(()) => (report.finish(started, None), EXIT_OK),
        Err(e) => {
            let code = if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_INPUT
            };
            (report.finish(started, Some(&e)), code)
        }
    }
}

fn parse_arg(name: &str, text: &str) -> Result<Expr> {
    parse_expr(text).map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column,
            message: format!("{message} (in {name})"),
        },
        e => e,
    })
}

fn names(nvars: usize) -> Vec<String> {
    default_var_names(nvars)
}

fn arity(exprs: &[&Expr], explicit: Option<usize>) -> usize {
    exprs
        .iter()
        .map(|e| e.z_arity())
        .max()
        .unwrap_or(0)
        .max(explicit.unwrap_or(0))
        .max(1)
}

fn parse_order(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("'{text}' is not a nonnegative rational order"));
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() || n < BigInt::zero() || d < BigInt::zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Reads `--gen`: `generic`, `generic:ORDER`, or an expression to classify.
fn parse_gen(text: &str) -> Result<(GenDescriptor<Scalar>, Option<Expr>)> {
    let t = text.trim();
    if t == "generic" {
        return Ok((
            GenDescriptor::generic("f", BigRational::from_integer(1.into())),
            None,
        ));
    }
    if let Some(order) = t.strip_prefix("generic:") {
        return Ok((GenDescriptor::generic("f", parse_order(order)?), None));
    }
    let e = parse_arg("--gen", t)?;
    for v in [Var::F, Var::W, Var::T, Var::X, Var::Y] {
        if e.uses(v) {
            return Err(Error::InvalidInput(format!(
                "a generator is an expression in z1..zn, not in {v}"
            )));
        }
    }
    Ok((classify_generator(&e, e.z_arity())?, Some(e)))
}

/// Generator and elements over a common number of variables.
struct Setup {
    gen: GenDescriptor<Scalar>,
    elems: Vec<AlgebraElement<Scalar>>,
    nvars: usize,
}

fn setup(report: &mut Report, gen_arg: &GenArg, elems: &[(&str, &str)]) -> Result<Setup> {
    let (gen0, gen_expr) = parse_gen(&gen_arg.gen)?;
    let parsed = elems
        .iter()
        .map(|(k, t)| parse_arg(k, t))
        .collect::<Result<Vec<_>>>()?;
    let mut all: Vec<&Expr> = parsed.iter().collect();
    if let Some(g) = &gen_expr {
        all.push(g);
    }
    let nvars = arity(&all, gen_arg.nvars);
    let gen = match &gen_expr {
        Some(g) => classify_generator(g, nvars)?,
        None => gen0,
    };
    report.input(
        "gen",
        gen_expr
            .as_ref()
            .map_or(gen_arg.gen.trim().to_string(), |g| g.to_string()),
    );
    report.set("class", gen.class_name());
    let mut out = Vec::new();
    for ((key, _), e) in elems.iter().zip(&parsed) {
        let el = element_from_expr(e, &gen, nvars)?;
        report.input(key, element_text(&el, &gen, nvars));
        out.push(el);
    }
    report.input("nvars", nvars);
    if let GenDescriptor::Generic { .. } = gen {
        report.notes.push("f is assumed transcendental of finite order with no non-trivial invertibles in R^n[f]; this is not checked".into());
    }
    Ok(Setup {
        gen,
        elems: out,
        nvars,
    })
}

/// Text of an element, written in `f` whenever it lies in `R^n[f]`.
fn element_text(el: &AlgebraElement<Scalar>, gen: &GenDescriptor<Scalar>, nvars: usize) -> String {
    let n = names(nvars);
    match (el, gen) {
        (AlgebraElement::Exp(l), GenDescriptor::ExpAffine { q1, q2, .. }) => {
            match from_exp_basis(l, q1, q2) {
                Ok(Some(p)) => p.to_string_with(&n, "f"),
                _ => l.to_string_with(&n, "w"),
            }
        }
        (AlgebraElement::Generic(p), GenDescriptor::Polynomial(_)) => p.coeff(0).to_string_with(&n),
        _ => el.to_string_with(&n),
    }
}

fn upoly_text(p: &UniPoly<Scalar>, el: &AlgebraElement<Scalar>, nvars: usize) -> String {
    let var = match el {
        AlgebraElement::Generic(_) => "f",
        AlgebraElement::Exp(_) => "w",
    };
    p.to_string_with(&names(nvars), var)
}

fn check_json(c: &NumericCheck) -> Value {
    json!({
        "points": c.points,
        "max_rel_err": c.max_rel_err,
        "tolerance": c.tolerance,
        "passed": c.passed(),
    })
}

/// A check with no usable sample point is noted; one that exceeds its
/// tolerance is a failed verification.
fn numeric_verdict(report: &mut Report, c: &NumericCheck) -> Result<()> {
    if c.points == 0 {
        report
            .notes
            .push("no usable sample point for the numeric cross-check".into());
        return Ok(());
    }
    if c.passed() {
        return Ok(());
    }
    Err(Error::Internal(format!(
        "numeric cross-check: relative error {:e} exceeds {:e}",
        c.max_rel_err, c.tolerance
    )))
}

fn classify_cmd(report: &mut Report, text: &str, nvars: Option<usize>) -> Result<()> {
    let e = parse_arg("expr", text)?;
    let n = arity(&[&e], nvars);
    report.input("expr", e.to_string());
    report.input("nvars", n);
    let gen = classify_generator(&e, n)?;
    let names = names(n);
    report.set("class", gen.class_name());
    report.set("verdict", gen.class_name());
    match &gen {
        GenDescriptor::Polynomial(q) => report.set("q", q.to_string_with(&names)),
        GenDescriptor::ExpAffine { q1, p, q2 } => {
            report.set("q1", q1.to_string_with(&names));
            report.set("p", p.to_string_with(&names));
            report.set("q2", q2.to_string_with(&names));
        }
        GenDescriptor::Generic { declared_order, .. } => {
            report.set("declared_order", declared_order.to_string());
            report.notes.push("several distinct exponentials; transcendence and finite order are assumed, not checked".into());
        }
    }
    Ok(())
}

fn divide_cmd(report: &mut Report, gen: &GenArg, h0: &str, h1: &str) -> Result<()> {
    let s = setup(report, gen, &[("dividend", h0), ("divisor", h1)])?;
    let (a, b) = (&s.elems[0], &s.elems[1]);
    let result = divide(a, b, &s.gen)?;
    match &result {
        DivisionResult::InAlgebra(q) => {
            report.set("verdict", "in_algebra");
            report.set("quotient", element_text(q, &s.gen, s.nvars));
            if let AlgebraElement::Exp(l) = q {
                report.set("quotient_w", l.to_string_with(&names(s.nvars), "w"));
            }
            report
                .diagnostics
                .insert("round_trip".into(), json!("exact"));
            if let Some(c) = check_division(a, b, &result, &s.gen, 0x5eed)? {
                report
                    .diagnostics
                    .insert("numeric_check".into(), check_json(&c));
                numeric_verdict(report, &c)?;
            }
        }
        DivisionResult::NotInM0 {
            certificate,
            cofactor,
        } => {
            report.set("verdict", "not_in_m0");
            report.set("certificate", upoly_text(certificate, b, s.nvars));
            report.set("cofactor", upoly_text(cofactor, b, s.nvars));
        }
    }
    Ok(())
}

fn member_cmd(report: &mut Report, gen: &GenArg, h: &str, g: &str) -> Result<()> {
    let s = setup(report, gen, &[("element", h), ("ideal", g)])?;
    match ideal_member(&s.elems[0], &s.elems[1], &s.gen)? {
        Some(c) => {
            report.set("verdict", "member");
            report.set("cofactor", element_text(&c, &s.gen, s.nvars));
        }
        None => report.set("verdict", "not_member"),
    }
    Ok(())
}

fn unit_fields(
    report: &mut Report,
    found: Option<(RationalFunction<Scalar>, i64)>,
    nvars: usize,
    yes: &str,
    no: &str,
) {
    match found {
        Some((r, m)) => {
            report.set("verdict", yes);
            report.set("r", r.to_string_with(&names(nvars)));
            report.set("m", m);
        }
        None => report.set("verdict", no),
    }
}

fn equiv_cmd(report: &mut Report, gen: &GenArg, g1: &str, g2: &str) -> Result<()> {
    let s = setup(report, gen, &[("first", g1), ("second", g2)])?;
    let found = equiv(&s.elems[0], &s.elems[1], &s.gen)?;
    unit_fields(report, found, s.nvars, "equivalent", "not_equivalent");
    Ok(())
}

fn invertible_cmd(report: &mut Report, gen: &GenArg, g: &str) -> Result<()> {
    let s = setup(report, gen, &[("element", g)])?;
    let found = is_invertible(&s.elems[0], &s.gen)?;
    unit_fields(report, found, s.nvars, "invertible", "not_invertible");
    Ok(())
}

fn rational_of(e: &Expr, nvars: usize, what: &str) -> Result<RationalFunction<Scalar>> {
    lower(e, nvars, &z_only(nvars))?
        .as_rational()
        .ok_or_else(|| Error::InvalidInput(format!("{what} must be a rational function of z1..zn")))
}

fn solve_cmd(
    report: &mut Report,
    poly: &str,
    rhs: &str,
    exponent: &str,
    nvars: Option<usize>,
) -> Result<()> {
    let (pe, re, ee) = (
        parse_arg("poly", poly)?,
        parse_arg("--rhs", rhs)?,
        parse_arg("--exp", exponent)?,
    );
    let n = arity(&[&pe, &re, &ee], nvars);
    let names = names(n);
    let p = upoly_from_expr(&pe, Var::W, n)?;
    let r = rational_of(&re, n, "R")?;
    let e = rational_of(&ee, n, "p")?;
    let e = e
        .as_poly()
        .cloned()
        .ok_or_else(|| Error::InvalidInput("p must be a polynomial".into()))?;
    report.input("poly", p.to_string_with(&names, "w"));
    report.input("rhs", r.to_string_with(&names));
    report.input("exp", e.to_string_with(&names));
    report.input("nvars", n);
    let Some(fam) = solve_unit_equation(&p, &r, &e)? else {
        report.set("verdict", "no_solution");
        report.notes.push(
            "P is not c*(w+q)^m, so no entire f of finite order solves P(f) = R*exp(p)".into(),
        );
        return Ok(());
    };
    report.set("verdict", "solution_family");
    let mut family = Map::new();
    family.insert("m".into(), json!(fam.m));
    family.insert("q".into(), json!(fam.q.to_string_with(&names)));
    family.insert("c".into(), json!(fam.c.to_string_with(&names)));
    family.insert(
        "unit_part".into(),
        json!(fam.unit_part.to_string_with(&names)),
    );
    family.insert("p".into(), json!(fam.p.to_string_with(&names)));
    match &fam.root {
        RootWitness::Exact(u) => {
            family.insert("root".into(), json!("exact"));
            family.insert("u".into(), json!(u.to_string_with(&names)));
            let member = fam.principal_member(&names).expect("exact root");
            parse_expr(&member)
                .map_err(|e| Error::Internal(format!("member does not reparse: {e}")))?;
            family.insert("principal_member".into(), json!(member));
        }
        RootWitness::Deferred => {
            family.insert("root".into(), json!("deferred"));
            family.insert("u".into(), Value::Null);
            report.notes.push(format!(
                "unit_part has no exact {}-th root in R^n; u is chosen pointwise",
                fam.m
            ));
        }
    }
    report.notes.push(format!(
        "f = eps*u*exp(p/m) - q for every eps with eps^{} = 1",
        fam.m
    ));
    report.set("family", Value::Object(family));
    let c = check_family(&p, &r, &fam, 0x5eed)?;
    report
        .diagnostics
        .insert("numeric_check".into(), check_json(&c));
    numeric_verdict(report, &c)
}

fn param_of(e: &Expr, what: &str) -> Result<RationalFunction<Scalar>> {
    let assign = |v: Var| match v {
        Var::T => Ok(ExpSum::rational(RationalFunction::var(1, 0))),
        other => Err(Error::InvalidInput(format!(
            "{what} must be a rational function of t, found '{other}'"
        ))),
    };
    lower(e, 1, &assign)?
        .as_rational()
        .ok_or_else(|| Error::InvalidInput(format!("{what} must be a rational function of t")))
}

fn depend_cmd(report: &mut Report, a: &str, b: &str) -> Result<()> {
    let (ea, eb) = (parse_arg("a", a)?, parse_arg("b", b)?);
    let pair = ParamPair::new(param_of(&ea, "A")?, param_of(&eb, "B")?)?;
    let t = vec!["t".to_string()];
    report.input("a", pair.a().to_string_with(&t));
    report.input("b", pair.b().to_string_with(&t));
    let p = annihilating_polynomial(&pair)?;
    if !verify_dependence(&p, &pair)? {
        return Err(Error::Internal(
            "annihilator does not vanish on the pair".into(),
        ));
    }
    report.set("verdict", "dependent");
    report.set(
        "annihilator",
        p.to_string_with(&["x".to_string(), "y".to_string()]),
    );
    report.set("verified", true);
    report
        .notes
        .push("squarefree part of the resultant; it may be reducible".into());
    Ok(())
}

fn complex_list(text: &str, what: &str) -> Result<Vec<num_complex::Complex64>> {
    text.split(',')
        .map(|part| {
            let e = parse_arg(what, part)?;
            let c = e
                .as_const()
                .ok_or_else(|| Error::InvalidInput(format!("{what} entries must be constants")))?;
            Ok(c.to_complex())
        })
        .collect()
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

fn indicator_cmd(report: &mut Report, command: &Command) -> Result<()> {
    let Command::Indicator {
        expr,
        rho,
        alpha,
        beta,
        r0,
        steps,
        angles,
        slack,
        base,
        dir,
    } = command
    else {
        unreachable!()
    };
    let e = parse_arg("expr", expr)?;
    report.input("expr", e.to_string());
    let mut cfg = SampleConfig::<f64> {
        steps: *steps,
        angles: *angles,
        ..SampleConfig::default()
    };
    if let (Some(b), Some(d)) = (base, dir) {
        cfg.slice = Some(Slice {
            base: complex_list(b, "--base")?,
            dir: complex_list(d, "--dir")?,
        });
    }
    let full = SectorSpec::<f64>::full();
    let sector = SectorSpec::new(alpha.unwrap_or(full.alpha), beta.unwrap_or(full.beta), *r0)?;
    let order = estimate_order(&e, &cfg)?;
    report.set("order", order);
    let rho = match rho {
        Some(r) => *r,
        None if order.round() >= 1.0 && (order - order.round()).abs() <= 0.1 => order.round(),
        None if order >= 0.5 => order,
        None => {
            return Err(Error::InvalidInput(
                "the expression has order 0; pass --rho to sample its indicator".into(),
            ))
        }
    };
    let profile = estimate_indicator(&e, rho, &sector, &cfg)?;
    report.set("rho", rho);
    report.set(
        "profile",
        profile
            .thetas
            .iter()
            .zip(&profile.hvals)
            .map(|(t, h)| json!({"theta": t, "h": finite_or_null(*h)}))
            .collect::<Vec<_>>(),
    );
    let violations = check_sine_inequality(&profile, *slack)?;
    report.set("sine_violations", violations.len());
    report.set(
        "first_violations",
        violations
            .iter()
            .take(5)
            .map(|v| json!({"thetas": [profile.thetas[v.indices.0], profile.thetas[v.indices.1], profile.thetas[v.indices.2]], "h": v.h, "bound": v.bound}))
            .collect::<Vec<_>>(),
    );
    match check_sinusoidal(&profile) {
        Some(fit) => report.set(
            "sinusoid",
            json!({"a": fit.a, "theta0": fit.theta0, "residual": fit.residual}),
        ),
        None => report.set("sinusoid", Value::Null),
    }
    report.set(
        "verdict",
        if violations.is_empty() {
            "consistent"
        } else {
            "violations"
        },
    );
    report.diagnostics.insert(
        "sampling".into(),
        json!({
            "radii": profile.radii.len(),
            "r_min": profile.radii.first(),
            "r_max": profile.radii.last(),
            "angles": profile.thetas.len(),
            "cancellations": profile.cancellations,
        }),
    );
    if profile.hvals.iter().any(|h| !h.is_finite()) {
        report
            .notes
            .push("h is null where no radius gave a usable value (treated as +inf)".into());
    }
    Ok(())
}
