//! Canonical text form.
//!
//! ```text
//! poly  := ["-"] term ((" + " | " - ") term)*  |  "0"
//! term  := [coeff "*"] ["s" ["^" int]] ["*"] ["t" ["^" int]]
//! ```
//!
//! A coefficient of 1 is omitted unless the term is constant and an
//! exponent of 1 is omitted. `*` is mandatory between a coefficient and a
//! variable and between the two variables. The parser tolerates arbitrary
//! whitespace around operators and accepts non-canonical input (repeated
//! monomials, explicit unit coefficients); the formatter only emits the
//! canonical form.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Coefficient, Monomial, Poly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            if m.is_constant() {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write_var(f, 's', m.s)?;
            if m.s > 0 && m.t > 0 {
                f.write_str("*")?;
            }
            write_var(f, 't', m.t)?;
        }
        Ok(())
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, exp: u32) -> fmt::Result {
    match exp {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        e => write!(f, "{name}^{e}"),
    }
}

impl<C: Coefficient> FromStr for Poly<C> {
    type Err = PolyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        Parser::new(text).poly().map_err(PolyError::from)
    }
}

impl<C: Coefficient> Poly<C> {
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        text.parse()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn poly<C: Coefficient>(&mut self) -> Result<Poly<C>, ParseError> {
        let mut out = Poly::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return self.error("empty input");
        }
        let mut negative = self.eat('-');
        loop {
            self.skip_ws();
            let (m, c) = self.term::<C>()?;
            if negative {
                out.sub_term(m, &c);
            } else {
                out.add_term(m, &c);
            }
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(other) => return self.error(format!("expected `+` or `-`, found `{other}`")),
            }
            self.pos += 1;
        }
    }

    fn term<C: Coefficient>(&mut self) -> Result<(Monomial, C), ParseError> {
        let mut coeff = None;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = Some(self.coefficient::<C>()?);
            self.skip_ws();
            if !self.eat('*') {
                return match self.peek() {
                    Some('s' | 't') => self.error("missing `*` between coefficient and variable"),
                    _ => Ok((Monomial::ONE, coeff.unwrap())),
                };
            }
            self.skip_ws();
        }
        let mut mono = Monomial::ONE;
        let mut seen_var = false;
        if self.eat('s') {
            mono.s = self.exponent()?;
            seen_var = true;
            self.skip_ws();
            if self.peek() == Some('t') {
                return self.error("missing `*` between `s` and `t`");
            }
            let save = self.pos;
            if self.eat('*') {
                self.skip_ws();
                if self.peek() != Some('t') {
                    self.pos = save;
                    return self.error("expected `t` after `*`");
                }
            }
        }
        if self.eat('t') {
            mono.t = self.exponent()?;
            seen_var = true;
        }
        if !seen_var {
            return match self.peek() {
                Some(c) => self.error(format!("expected a term, found `{c}`")),
                None => self.error("expected a term, found end of input"),
            };
        }
        Ok((mono, coeff.unwrap_or_else(C::one)))
    }

    fn coefficient<C: Coefficient>(&mut self) -> Result<C, ParseError> {
        let start = self.pos;
        self.digits();
        if self.peek() == Some('/') {
            self.pos += 1;
            if self.digits().is_empty() {
                return self.error("expected denominator digits after `/`");
            }
        }
        let tok = &self.src[start..self.pos];
        C::parse_decimal(tok).ok_or_else(|| ParseError {
            position: start,
            message: format!("invalid coefficient `{tok}`"),
        })
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if !self.eat('^') {
            return Ok(1);
        }
        let start = self.pos;
        let tok = self.digits();
        if tok.is_empty() {
            return self.error("expected exponent digits after `^`");
        }
        tok.parse().map_err(|_| ParseError {
            position: start,
            message: format!("exponent `{tok}` out of range"),
        })
    }
}
