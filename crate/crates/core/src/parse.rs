//! Text input: polynomial expressions and curve-spec files.
//!
//! Expressions use `+ - * ^`, parentheses, integer and `p/q` rational
//! literals (division is only allowed by a nonzero constant), and variable
//! names `t`, `s`, `x1`, `x2`, `x1(212)`, `y'`, or any other identifier.
//! Whitespace is insignificant and `#` starts a comment running to the end
//! of the line.
//!
//! A curve spec is a `;`-separated list of assignments `coord = expr` where
//! every right-hand side is a polynomial in `s`. An optional leading
//! `chart = 21` statement selects the chart (default: the base chart); the
//! assignments must then cover exactly that chart's coordinates.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::kernel::{Polynomial, Rational, VarName};
use crate::tower::{self, ChartString, Symbol};

/// A parse failure with a 1-based source location.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(VarName),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
    Semi,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Ident(v) => write!(f, "name {v}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Eq => f.write_str("'='"),
            Tok::Semi => f.write_str("';'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_char()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek_char() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn tokenize(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_trivia();
            let start = self.pos;
            let Some(c) = self.bump() else {
                out.push((Tok::End, start));
                return Ok(out);
            };
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '=' => Tok::Eq,
                ';' => Tok::Semi,
                c if c.is_ascii_digit() => {
                    while self.peek_char().is_some_and(|c| c.is_ascii_digit()) {
                        self.bump();
                    }
                    Tok::Num(self.src[start..self.pos].parse().unwrap())
                }
                c if c.is_alphabetic() || c == '_' => Tok::Ident(self.ident(start)?),
                other => {
                    return Err(error_at(
                        self.src,
                        start,
                        format!("unexpected character {other:?}"),
                    ))
                }
            };
            out.push((tok, start));
        }
    }

    fn ident(&mut self, start: usize) -> Result<VarName, ParseError> {
        while self
            .peek_char()
            .is_some_and(|c| c.is_alphanumeric() || c == '_')
        {
            self.bump();
        }
        let name = &self.src[start..self.pos];
        let var = match name {
            "t" => VarName::T,
            "s" => VarName::S,
            "x1" | "x2" => {
                let index = if name == "x1" { Symbol::One } else { Symbol::Two };
                let suffix = if self.peek_char() == Some('(') {
                    self.chart_suffix()?
                } else {
                    ChartString::empty()
                };
                VarName::coord(index, &suffix)
            }
            "y" if self.peek_char() == Some('\'') => {
                let mut order = 0;
                while self.peek_char() == Some('\'') {
                    self.bump();
                    order += 1;
                }
                return Ok(VarName::Jet(order));
            }
            other => VarName::named(other),
        };
        Ok(var)
    }

    fn chart_suffix(&mut self) -> Result<ChartString, ParseError> {
        let open = self.pos;
        self.bump();
        let body_start = self.pos;
        while self.peek_char().is_some_and(|c| c != ')') {
            self.bump();
        }
        if self.bump().is_none() {
            return Err(error_at(self.src, open, "unclosed coordinate suffix"));
        }
        let body = &self.src[body_start..self.pos - 1];
        body.parse::<ChartString>().map_err(|e| {
            let offset = match e {
                tower::TowerError::BadChartString { position, .. } => position,
                _ => 0,
            };
            error_at(self.src, body_start + offset, e.to_string())
        })
    }
}

fn error_at(src: &str, offset: usize, message: impl Into<String>) -> ParseError {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rsplit('\n')
        .next()
        .map_or(0, |l| l.chars().count())
        + 1;
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    i: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        let toks = Lexer { src, pos: 0 }.tokenize()?;
        Ok(Parser { src, toks, i: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn offset(&self) -> usize {
        self.toks[self.i].1
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        error_at(self.src, self.offset(), message)
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected {tok}, found {}", self.peek())))
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.next();
                    acc = acc * self.unary()?;
                }
                Tok::Slash => {
                    self.next();
                    let at = self.offset();
                    let divisor = self.unary()?;
                    let c = divisor.constant_term();
                    if divisor.num_terms() > 1 || !divisor.variables().is_empty() || c.is_zero() {
                        return Err(error_at(
                            self.src,
                            at,
                            "division is only allowed by a nonzero constant",
                        ));
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.next();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.next();
        match self.peek().clone() {
            Tok::Num(n) => {
                let e: u32 = n
                    .try_into()
                    .map_err(|_| self.error("exponent too large"))?;
                self.next();
                Ok(base.pow(e))
            }
            other => Err(self.error(format!("expected exponent, found {other}"))),
        }
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.next();
                Ok(Polynomial::constant(Rational::from_integer(n)))
            }
            Tok::Ident(v) => {
                self.next();
                Ok(Polynomial::var(v))
            }
            Tok::LParen => {
                self.next();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(self.error(format!("expected expression, found {other}"))),
        }
    }
}

/// Parse a single polynomial expression.
pub fn parse_polynomial(src: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(src)?;
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error(format!("unexpected {}", p.peek())));
    }
    Ok(out)
}

/// A parsed curve spec: a chart and one polynomial in `s` per chart coordinate,
/// in the order of [`tower::chart_coordinates`].
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub chart: ChartString,
    pub coordinates: Vec<(VarName, Polynomial)>,
}

/// Parse a curve-spec file.
pub fn parse_curve_spec(src: &str) -> Result<CurveSpec, ParseError> {
    let mut p = Parser::new(src)?;
    let mut chart: Option<ChartString> = None;
    let mut assigned: Vec<(VarName, Polynomial, usize)> = Vec::new();
    loop {
        while *p.peek() == Tok::Semi {
            p.next();
        }
        if *p.peek() == Tok::End {
            break;
        }
        let at = p.offset();
        let lhs = match p.peek().clone() {
            Tok::Ident(v) => {
                p.next();
                v
            }
            other => return Err(p.error(format!("expected coordinate name, found {other}"))),
        };
        p.expect(Tok::Eq)?;
        if lhs == VarName::named("chart") {
            if chart.is_some() || !assigned.is_empty() {
                return Err(error_at(src, at, "chart must be the first statement"));
            }
            chart = Some(chart_literal(&mut p)?);
        } else {
            let rhs_at = p.offset();
            let rhs = p.expr()?;
            if let Some(bad) = rhs.variables().into_iter().find(|v| *v != VarName::S) {
                return Err(error_at(
                    src,
                    rhs_at,
                    format!("right-hand side may only involve s, found {bad}"),
                ));
            }
            if assigned.iter().any(|(v, _, _)| *v == lhs) {
                return Err(error_at(src, at, format!("{lhs} assigned twice")));
            }
            assigned.push((lhs, rhs, at));
        }
        match p.peek() {
            Tok::Semi | Tok::End => {}
            other => return Err(p.error(format!("expected ';', found {other}"))),
        }
    }
    if assigned.is_empty() {
        return Err(p.error("curve spec contains no assignments"));
    }
    let chart = chart.unwrap_or_default();
    let names = tower::chart_coordinates(&chart);
    for (v, _, at) in &assigned {
        if !names.contains(v) {
            return Err(error_at(
                src,
                *at,
                format!("{v} is not a coordinate of chart {}", chart.chart_label()),
            ));
        }
    }
    let mut coordinates = Vec::with_capacity(names.len());
    for name in names {
        match assigned.iter().position(|(v, _, _)| *v == name) {
            Some(i) => coordinates.push((name, assigned[i].1.clone())),
            None => return Err(p.error(format!("missing assignment for {name}"))),
        }
    }
    Ok(CurveSpec { chart, coordinates })
}

fn chart_literal(p: &mut Parser<'_>) -> Result<ChartString, ParseError> {
    match p.peek().clone() {
        Tok::Num(n) => {
            let at = p.offset();
            p.next();
            n.to_string()
                .parse()
                .map_err(|e: tower::TowerError| error_at(p.src, at, e.to_string()))
        }
        Tok::Semi | Tok::End => Ok(ChartString::empty()),
        other => Err(p.error(format!("expected chart string, found {other}"))),
    }
}
