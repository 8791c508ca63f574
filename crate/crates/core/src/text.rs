//! Text form of polynomials: a small recursive-descent parser and the
//! canonical printer.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" integer)?
//! atom   := integer | identifier | "(" expr ")"
//! ```
//!
//! Division is only allowed by a nonzero constant. Identifiers resolve to
//! the declared X variables first, then to the θ variables of a parameter
//! ring. The printer writes terms in descending order, coefficients first,
//! explicit `*` and `^`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::coeffring::{RingDescriptor, RingElement};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: expected {}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
    },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("coefficient at line {line}, column {column} is not an element of {ring}")]
    CoefficientOutOfRing {
        ring: String,
        line: usize,
        column: usize,
    },
    #[error("invalid variable declaration: {0}")]
    BadDeclaration(String),
}

impl ParseError {
    /// Shifts the reported line by `offset` (for inputs embedded in a larger file).
    pub fn shifted(mut self, offset: usize) -> Self {
        match &mut self {
            ParseError::Syntax { line, .. }
            | ParseError::UnknownVariable { line, .. }
            | ParseError::CoefficientOutOfRing { line, .. } => *line += offset,
            ParseError::BadDeclaration(_) => {}
        }
        self
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::UnknownVariable { line, .. }
            | ParseError::CoefficientOutOfRing { line, .. } => Some(*line),
            ParseError::BadDeclaration(_) => None,
        }
    }
}

/// Coefficient ring plus the ordered names of the X variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarContext {
    ring: RingDescriptor,
    names: Vec<String>,
}

impl VarContext {
    /// Variables named `x1..xn`.
    pub fn positional(ring: RingDescriptor, n: usize) -> Self {
        VarContext {
            ring,
            names: default_names("x", n),
        }
    }

    pub fn named<S: AsRef<str>>(ring: RingDescriptor, names: &[S]) -> Result<Self, ParseError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(ParseError::BadDeclaration(format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(ParseError::BadDeclaration(format!("duplicate variable `{n}`")));
            }
            if ring.theta().is_some_and(|t| t.vars.contains(n)) {
                return Err(ParseError::BadDeclaration(format!(
                    "`{n}` is also a coefficient variable"
                )));
            }
        }
        Ok(VarContext { ring, names })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial, ParseError> {
        parse_polynomial(src, self)
    }

    pub fn format(&self, f: &Polynomial, order: &MonomialOrder) -> String {
        format_polynomial(f, order, &self.names)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_monomial(m, &self.names)
    }
}

pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
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

fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
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
        let start = (line, column);
        let tok = if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let digits: String = chars[i..j].iter().collect();
            column += j - i;
            i = j;
            Tok::Num(digits.parse().expect("decimal digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            let name: String = chars[i..j].iter().collect();
            column += j - i;
            i = j;
            Tok::Ident(name)
        } else if "+-*/^()".contains(c) {
            column += 1;
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError::Syntax {
                line,
                column,
                expected: vec!["number".into(), "variable".into(), "operator".into()],
            });
        };
        out.push(Token {
            tok,
            line: start.0,
            column: start.1,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ctx: &'a VarContext,
}

const OPERAND: [&str; 3] = ["number", "variable", "("];

impl Parser<'_> {
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

    fn syntax(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.ctx.ring, self.ctx.nvars())
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Sym('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Sym('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Sym('/') => {
                    let at = self.bump();
                    let d = self.unary()?;
                    acc = self.divide(acc, &d, &at)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn divide(&self, f: Polynomial, d: &Polynomial, at: &Token) -> Result<Polynomial, ParseError> {
        let out_of_ring = || ParseError::CoefficientOutOfRing {
            ring: self.ctx.ring.header(),
            line: at.line,
            column: at.column,
        };
        let c = match (d.len(), d.coefficient(&Monomial::one(d.nvars()))) {
            (1, Some(c)) => c.clone(),
            _ => return Err(out_of_ring()),
        };
        let ring = &self.ctx.ring;
        match &c {
            RingElement::Integer(den) => {
                let mut out = self.zero();
                for (m, a) in f.terms() {
                    let num = a.as_integer().unwrap();
                    let q = ring.from_fraction(num, den).map_err(|_| out_of_ring())?;
                    out.add_term(m.clone(), q);
                }
                Ok(out)
            }
            RingElement::Poly(p) => {
                // only constant θ-polynomials are invertible
                let inv = match (p.len(), p.coefficient(&Monomial::one(p.nvars()))) {
                    (1, Some(k)) => k.inverse().ok_or_else(out_of_ring)?,
                    _ => return Err(out_of_ring()),
                };
                let inv = RingElement::Poly(Polynomial::constant(p.ring(), p.nvars(), inv));
                Ok(f.scale(&inv))
            }
            _ => Ok(f.scale(&c.inverse().ok_or_else(out_of_ring)?)),
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().tok {
            Tok::Sym('-') => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Sym('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        match self.peek().tok.clone() {
            Tok::Num(n) => {
                let e: u32 = u32::try_from(&n).map_err(|_| self.syntax(&["exponent below 2^32"]))?;
                self.bump();
                Ok(base.pow(e))
            }
            _ => Err(self.syntax(&["exponent"])),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Num(n) => {
                self.bump();
                let c = self.ctx.ring.from_bigint(&n);
                Ok(Polynomial::constant(&self.ctx.ring, self.ctx.nvars(), c))
            }
            Tok::Ident(name) => {
                self.bump();
                let n = self.ctx.nvars();
                if let Some(i) = self.ctx.names.iter().position(|v| *v == name) {
                    return Ok(Polynomial::var(&self.ctx.ring, n, i));
                }
                if let Some(j) = self
                    .ctx
                    .ring
                    .theta()
                    .and_then(|th| th.vars.iter().position(|v| *v == name))
                {
                    let c = self.ctx.ring.theta_var(j);
                    return Ok(Polynomial::constant(&self.ctx.ring, n, c));
                }
                Err(ParseError::UnknownVariable {
                    name,
                    line: t.line,
                    column: t.column,
                })
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::Sym(')') {
                    return Err(self.syntax(&[")", "operator"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.syntax(&OPERAND)),
        }
    }
}

pub fn parse_polynomial(src: &str, ctx: &VarContext) -> Result<Polynomial, ParseError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, ctx };
    let f = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.syntax(&["operator", "end of input"]));
    }
    Ok(f)
}

/// Parses a constant of `ring` (a θ-polynomial for parameter rings).
pub fn parse_ring_element(src: &str, ring: &RingDescriptor) -> Result<RingElement, ParseError> {
    let ctx = VarContext {
        ring: ring.clone(),
        names: vec![],
    };
    let f = parse_polynomial(src, &ctx)?;
    Ok(f.coefficient_or_zero(&Monomial::one(0)))
}

pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{e}", names[i])),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// (negative, magnitude text) of a scalar; `None` magnitude for θ-elements.
fn scalar_parts(c: &RingElement) -> (bool, String) {
    match c {
        RingElement::Integer(a) => (a.is_negative(), a.abs().to_string()),
        RingElement::Rational(a) => {
            let a_abs = a.abs();
            let s = if a_abs.denom().is_one() {
                a_abs.numer().to_string()
            } else {
                format!("{}/{}", a_abs.numer(), a_abs.denom())
            };
            (a.is_negative(), s)
        }
        RingElement::Residue { value, .. } => (false, value.to_string()),
        RingElement::Poly(_) => unreachable!("scalar expected"),
    }
}

/// θ names and order used to print parameter coefficients.
type ThetaStyle<'a> = Option<(&'a [String], MonomialOrder)>;

/// Signed pieces `(negative, body)` of one term `c·m`.
fn term_pieces(
    c: &RingElement,
    m: &Monomial,
    names: &[String],
    theta: &ThetaStyle<'_>,
    out: &mut Vec<(bool, String)>,
) {
    let mono = format_monomial(m, names);
    let RingElement::Poly(p) = c else {
        let (neg, mag) = scalar_parts(c);
        let body = if m.is_one() {
            mag
        } else if mag == "1" {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        out.push((neg, body));
        return;
    };
    let default_th;
    let (th, order) = match theta {
        Some((n, o)) => (*n, o.clone()),
        None => {
            default_th = default_names("t", p.nvars());
            (default_th.as_slice(), MonomialOrder::lex())
        }
    };
    if m.is_one() || p.len() == 1 {
        for (tm, tc) in p.terms_desc(&order) {
            let (neg, mag) = scalar_parts(tc);
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || (tm.is_one() && m.is_one()) {
                factors.push(mag);
            }
            if !tm.is_one() {
                factors.push(format_monomial(tm, th));
            }
            if !m.is_one() {
                factors.push(mono.clone());
            }
            out.push((neg, factors.join("*")));
        }
    } else {
        let negative = p
            .leading_coefficient(&order)
            .is_some_and(|lc| scalar_parts(lc).0);
        let inner = if negative {
            format_polynomial_with(&-p, &order, th, &None)
        } else {
            format_polynomial_with(p, &order, th, &None)
        };
        out.push((negative, format!("({inner})*{mono}")));
    }
}

fn format_polynomial_with(
    f: &Polynomial,
    order: &MonomialOrder,
    names: &[String],
    theta: &ThetaStyle<'_>,
) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut pieces = Vec::new();
    for (m, c) in f.terms_desc(order) {
        term_pieces(c, m, names, theta, &mut pieces);
    }
    let mut s = String::new();
    for (k, (neg, body)) in pieces.iter().enumerate() {
        match (k, neg) {
            (0, true) => write!(s, "-{body}"),
            (0, false) => write!(s, "{body}"),
            (_, true) => write!(s, " - {body}"),
            (_, false) => write!(s, " + {body}"),
        }
        .unwrap();
    }
    s
}

/// Canonical text of `f`: terms descending under `order`.
pub fn format_polynomial(f: &Polynomial, order: &MonomialOrder, names: &[String]) -> String {
    let theta = f
        .ring()
        .theta()
        .map(|t| (t.vars.as_slice(), MonomialOrder::simple(t.order)));
    format_polynomial_with(f, order, names, &theta)
}

pub fn format_ring_element(ring: &RingDescriptor, e: &RingElement) -> String {
    match (ring.theta(), e) {
        (Some(t), RingElement::Poly(p)) => {
            format_polynomial(p, &MonomialOrder::simple(t.order), &t.vars)
        }
        _ => e.to_string(),
    }
}

impl std::fmt::Display for RingElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingElement::Poly(p) => {
                let names = default_names("t", p.nvars());
                f.write_str(&format_polynomial(p, &MonomialOrder::lex(), &names))
            }
            _ if self.is_zero() => f.write_str("0"),
            _ => {
                let (neg, mag) = scalar_parts(self);
                write!(f, "{}{mag}", if neg { "-" } else { "" })
            }
        }
    }
}
