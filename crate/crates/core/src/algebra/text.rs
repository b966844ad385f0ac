//! Canonical text format for polynomials and its parser.
//!
//! Grammar (implicit multiplication is rejected):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | INT '/' INT | IDENT | '(' expr ')'
//! IDENT  := [A-Za-z][A-Za-z0-9]* ('_' [0-9]+)?
//! ```
//!
//! A trailing `_k` is the jet order: `x1_2` is the second jet coordinate
//! of the base symbol `x1`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use super::series::TruncatedSeries;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String, usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<(Vec<Spanned>, (usize, usize))> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned {
                tok,
                line: l0,
                column: c0,
            });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
            let mut value = Rational::from_integer(num);
            if i < chars.len() && chars[i] == '/' {
                let dstart = i + 1;
                let mut j = dstart;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == dstart {
                    return Err(err(line, col + (i - start), "expected denominator after `/`"));
                }
                let den: BigInt = chars[dstart..j].iter().collect::<String>().parse().unwrap();
                if den.is_zero() {
                    return Err(err(line, col + (dstart - start), "zero denominator"));
                }
                value /= Rational::from_integer(den);
                i = j;
            }
            col += i - start;
            out.push(Spanned {
                tok: Tok::Num(value),
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
            let name: String = chars[start..i].iter().collect();
            let mut jet = 0usize;
            if i < chars.len() && chars[i] == '_' {
                let jstart = i + 1;
                let mut j = jstart;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                if j == jstart {
                    return Err(err(line, col + (i - start), "expected jet order after `_`"));
                }
                jet = chars[jstart..j]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| err(line, col + (jstart - start), "jet order too large"))?;
                i = j;
            }
            col += i - start;
            out.push(Spanned {
                tok: Tok::Ident(name, jet),
                line: l0,
                column: c0,
            });
            continue;
        }
        return Err(err(line, col, format!("unexpected character `{c}`")));
    }
    Ok((out, (line, col)))
}

/// Parsed expression tree, before it is placed in a ring.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rational),
    Var {
        name: String,
        jet: usize,
        line: usize,
        column: usize,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |s| (s.line, s.column))
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        let (l, c) = self.here();
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(t) => format!("{t:?}"),
        };
        Err(err(l, c, format!("{msg}, found {found}")))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) if n.is_integer() && !n.is_negative() => {
                    self.pos += 1;
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| err(self.here().0, self.here().1, "exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return self.fail("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let (line, column) = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(name, jet)) => {
                self.pos += 1;
                Ok(Expr::Var {
                    name,
                    jet,
                    line,
                    column,
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.fail("expected `)`"),
                }
            }
            _ => self.fail("expected a number, variable or `(`"),
        }
    }
}

/// Parses text into an expression tree without fixing a ring.
pub fn parse_expression(text: &str) -> Result<Expr> {
    let (toks, end) = lex(text)?;
    let mut p = Parser { toks, pos: 0, end };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.fail("expected an operator");
    }
    Ok(e)
}

impl Expr {
    /// `(name, jet order)` of every variable, in order of first appearance.
    pub fn variables(&self) -> Vec<(String, usize)> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<(String, usize)>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var { name, jet, .. } => {
                if !out.iter().any(|(n, j)| n == name && j == jet) {
                    out.push((name.clone(), *jet));
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.collect(out);
                b.collect(out);
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect(out),
        }
    }

    pub fn to_polynomial(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        Ok(match self {
            Expr::Num(n) => Polynomial::constant(ring, n.clone()),
            Expr::Var { name, jet, .. } => match ring.find(name, *jet) {
                Some(id) => Polynomial::var(ring, id),
                None => {
                    let shown = if *jet == 0 {
                        name.clone()
                    } else {
                        format!("{name}_{jet}")
                    };
                    return Err(Error::UnknownVariable(shown));
                }
            },
            Expr::Add(a, b) => a.to_polynomial(ring)?.add(&b.to_polynomial(ring)?)?,
            Expr::Sub(a, b) => a.to_polynomial(ring)?.sub(&b.to_polynomial(ring)?)?,
            Expr::Mul(a, b) => a.to_polynomial(ring)?.mul(&b.to_polynomial(ring)?)?,
            Expr::Neg(a) => a.to_polynomial(ring)?.neg(),
            Expr::Pow(a, e) => a.to_polynomial(ring)?.pow(*e),
        })
    }
}

/// Parses `text` as a polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    parse_expression(text)?.to_polynomial(ring)
}

/// Parses a polynomial in `t` and truncates it modulo `t^{m+1}`.
pub fn parse_series(text: &str, m: usize) -> Result<TruncatedSeries> {
    let ring = Ring::with_names(&["t"])?;
    let p = parse_polynomial(text, &ring)?;
    let mut coeffs = vec![Rational::zero(); m + 1];
    for (mono, c) in p.terms() {
        let d = mono.degree() as usize;
        if d <= m {
            coeffs[d] = c.clone();
        }
    }
    Ok(TruncatedSeries::from_coeffs(m, coeffs))
}

pub(crate) fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_term(coef: &Rational, mono: &str) -> String {
    if mono.is_empty() {
        format_rational(coef)
    } else if coef.is_one() {
        mono.to_string()
    } else if (-coef).is_one() {
        format!("-{mono}")
    } else {
        format!("{}*{mono}", format_rational(coef))
    }
}

fn join_terms(parts: impl Iterator<Item = String>) -> String {
    let mut s = String::new();
    for (k, part) in parts.enumerate() {
        if k > 0 && !part.starts_with('-') {
            s.push('+');
        }
        s.push_str(&part);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Factors are written by base symbol, then jet order, whatever the
/// variable order of the ring.
pub fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut factors: Vec<(usize, u32)> = m.iter().collect();
    factors.sort_by_key(|&(i, _)| {
        let v = ring.variable(i);
        (v.base_index, v.jet_order)
    });
    let mut s = String::new();
    for (k, (i, e)) in factors.into_iter().enumerate() {
        if k > 0 {
            s.push('*');
        }
        s.push_str(&ring.variable(i).to_string());
        if e > 1 {
            s.push_str(&format!("^{e}"));
        }
    }
    s
}

pub fn format_polynomial(p: &Polynomial) -> String {
    let ring = p.ring();
    join_terms(p.terms().iter().map(|(m, c)| format_term(c, &format_monomial(ring, m))))
}

/// Ascending powers of `t`.
pub fn format_series(s: &TruncatedSeries) -> String {
    join_terms(
        s.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let mono = match j {
                    0 => String::new(),
                    1 => "t".to_string(),
                    _ => format!("t^{j}"),
                };
                format_term(c, &mono)
            }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::jets(&["x", "y"], 2, Default::default()).unwrap()
    }

    #[test]
    fn cusp_round_trip() {
        let r = ring();
        let f = parse_polynomial("x^3 - y^2", &r).unwrap();
        assert_eq!(f.to_string(), "x^3-y^2");
        assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
    }

    #[test]
    fn jet_suffix_and_rationals() {
        let r = ring();
        let f = parse_polynomial("3*x^2*x_1 - 2*y*y_1", &r).unwrap();
        assert_eq!(f.to_string(), "3*x^2*x_1-2*y*y_1");
        let g = parse_polynomial("3/2*x - (x+y)*(x-y) + 1/4", &r).unwrap();
        assert_eq!(g.to_string(), "-x^2+y^2+3/2*x+1/4");
        assert_eq!(parse_polynomial(&g.to_string(), &r).unwrap(), g);
    }

    #[test]
    fn zero_and_cancellation() {
        let r = ring();
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert_eq!(parse_polynomial("0", &r).unwrap().to_string(), "0");
        assert!(parse_polynomial("x - x", &r).unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        match parse_polynomial("x +\n  2x", &r) {
            Err(Error::Parse { line: 2, column: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("x^", &r),
            Err(Error::Parse { line: 1, column: 3, .. })
        ));
        assert!(matches!(parse_polynomial("(x", &r), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_polynomial("x $ y", &r),
            Err(Error::Parse { line: 1, column: 3, .. })
        ));
        assert_eq!(parse_polynomial("z", &r), Err(Error::UnknownVariable("z".into())));
        assert_eq!(parse_polynomial("x_3", &r), Err(Error::UnknownVariable("x_3".into())));
    }

    #[test]
    fn series_text() {
        let s = parse_series("t+t^2", 3).unwrap();
        assert_eq!(s, TruncatedSeries::from_ints(3, &[0, 1, 1]));
        assert_eq!(s.to_string(), "t+t^2");
        assert_eq!(parse_series("1 + 2*t - t^7", 3).unwrap().to_string(), "1+2*t");
    }

    #[test]
    fn variables_in_order_of_appearance() {
        let e = parse_expression("b*a_1 + a + b").unwrap();
        assert_eq!(
            e.variables(),
            vec![("b".to_string(), 0), ("a".to_string(), 1), ("a".to_string(), 0)]
        );
    }
}
