//! Polynomial expression parser.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | '+' unary | power
//! power   := atom ('^' integer)?
//! atom    := literal | 'x' | '(' expr ')'
//! literal := integer ('/' integer)?
//! ```
//!
//! There is no division operator: `p/q` is a single rational literal.
//! Implicit multiplication (`3x`) is rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Polynomial, Rational};

const MAX_EXPONENT: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the source text.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken(String),
    ZeroDenominator,
    BadExponent,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}")?,
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input")?,
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected {t}")?,
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator in literal")?,
            ParseErrorKind::BadExponent => {
                f.write_str("exponent must be an integer literal in 0..=1024")?
            }
        }
        write!(f, " at position {}", self.pos)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::X => f.write_str("'x'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            c if c.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i].parse::<BigInt>().expect("digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            'x' => Tok::X,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                return Err(ParseError {
                    pos: i,
                    kind: ParseErrorKind::UnexpectedChar(ch),
                });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.pos(),
            kind,
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.to_string())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.peek() {
                Some(Tok::Num(n)) => {
                    let e = u32::try_from(n)
                        .ok()
                        .filter(|&e| e <= MAX_EXPONENT)
                        .ok_or_else(|| self.err(ParseErrorKind::BadExponent))?;
                    self.bump();
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err(ParseErrorKind::BadExponent)),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Tok::Num(_)) => {
                let Some(Tok::Num(num)) = self.bump() else { unreachable!() };
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let den_pos = self.pos();
                    match self.bump() {
                        Some(Tok::Num(den)) if den.is_zero() => Err(ParseError {
                            pos: den_pos,
                            kind: ParseErrorKind::ZeroDenominator,
                        }),
                        Some(Tok::Num(den)) => Ok(Polynomial::constant(Rational::new(num, den))),
                        _ => {
                            self.at -= 1;
                            Err(self.unexpected())
                        }
                    }
                } else {
                    Ok(Polynomial::constant(Rational::from_integer(num)))
                }
            }
            Some(Tok::X) => {
                self.bump();
                Ok(Polynomial::x())
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.bump();
                        Ok(inner)
                    }
                    _ => Err(self.unexpected()),
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parse a polynomial in `x` with rational coefficients.
pub fn parse_poly(src: &str) -> Result<Polynomial, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    Ok(out)
}

/// Parse an integer or `p/q` literal with an optional leading sign.
pub fn parse_rational(src: &str) -> Result<Rational, ParseError> {
    let offset = src.len() - src.trim_start().len();
    let text = src.trim();
    let body = text.strip_prefix(['-', '+']).unwrap_or(text);
    let sign_len = text.len() - body.len();
    let (num, den) = body.split_once('/').unwrap_or((body, "1"));
    let num_pos = offset + sign_len;
    let den_pos = num_pos + num.len() + 1;
    for (part, pos) in [(num, num_pos), (den, den_pos)] {
        if let Some(bad) = part.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
            return Err(ParseError {
                pos: pos + bad.0,
                kind: ParseErrorKind::UnexpectedChar(bad.1),
            });
        }
        if part.is_empty() {
            return Err(ParseError {
                pos,
                kind: ParseErrorKind::UnexpectedEnd,
            });
        }
    }
    let num: BigInt = num.parse().expect("digits");
    let den: BigInt = den.parse().expect("digits");
    if den.is_zero() {
        return Err(ParseError {
            pos: den_pos,
            kind: ParseErrorKind::ZeroDenominator,
        });
    }
    let r = Rational::new(num, den);
    Ok(if text.starts_with('-') { -r } else { r })
}
