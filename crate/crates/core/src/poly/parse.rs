//! Polynomial text syntax.
//!
//! ```text
//! expr   := sign? term (sign term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' natural)?
//! atom   := natural | 'x' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Juxtaposition multiplies, so `2x^3`, `16(1+x)` and
//! `(1+x)(1-x)` all parse.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use super::{IntPoly, NatPoly};

/// Exponents above this are rejected to keep `(…)^n` expansion bounded.
const MAX_POWER: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            idx: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|(_, c)| *c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.src.len(), |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.idx += 1;
        c
    }

    fn expr(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                -self.term()?
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some('-') => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == 'x' || c == '(' || c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<IntPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let at = self.pos();
            let n = self.natural()?;
            let n: u32 = u32::try_from(&n)
                .ok()
                .filter(|n| *n <= MAX_POWER)
                .ok_or_else(|| ParseError::new(at, "exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IntPoly, ParseError> {
        let at = self.pos();
        match self.peek() {
            Some('x') => {
                self.bump();
                Ok(IntPoly::x())
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(ParseError::new(self.pos_before(), "expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPoly::constant(BigInt::from(self.natural()?))),
            Some(c) => Err(ParseError::new(at, format!("unexpected character '{c}'"))),
            None => Err(ParseError::new(at, "unexpected end of input")),
        }
    }

    fn pos_before(&self) -> usize {
        self.chars
            .get(self.idx.saturating_sub(1))
            .map_or(self.src.len(), |(p, _)| *p)
    }

    fn natural(&mut self) -> Result<BigUint, ParseError> {
        let at = self.pos();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        digits
            .parse()
            .map_err(|_| ParseError::new(at, "expected a natural number"))
    }
}

/// Parses the polynomial text syntax into ℤ\[x\].
pub fn parse_int_poly(src: &str) -> Result<IntPoly, ParseError> {
    let mut parser = Parser::new(src);
    if parser.peek().is_none() {
        return Err(ParseError::new(0, "empty polynomial"));
    }
    let p = parser.expr()?;
    if let Some(c) = parser.peek() {
        return Err(ParseError::new(
            parser.pos(),
            format!("unexpected character '{c}'"),
        ));
    }
    Ok(p)
}

impl FromStr for IntPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_int_poly(s)
    }
}

impl FromStr for NatPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_int_poly(s)?
            .to_nat()
            .map_err(|e| ParseError::new(0, e.to_string()))
    }
}
