//! Text input for coefficients and algebra elements, e.g. `q^2*ab - (1-q^(-1/2))*d^2`.
//!
//! Juxtaposition multiplies, so `dab` and `d*a*b` are the same element.

use num_bigint::BigInt;
use thiserror::Error;

use crate::oq::{Gen, OqElement};
use crate::ring::HalfLaurent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {msg}", pos + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        Self { pos, msg: msg.into() }
    }

    /// The input with a caret under the offending column.
    pub fn render(&self, input: &str) -> String {
        format!("{input}\n{}^ {}", " ".repeat(self.pos), self.msg)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(ParseError::new(self.pos, format!("expected {want:?}, found {c:?}"))),
            None => Err(ParseError::new(self.pos, format!("expected {want:?}, found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected a number"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn small_int(&mut self) -> Result<i64, ParseError> {
        let at = self.pos;
        let neg = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let n = self.integer()?;
        let n: i64 = n.try_into().map_err(|_| ParseError::new(at, "exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    /// Exponent in halves: `2`, `-3`, `(5/2)`, `(-1/2)`.
    fn exponent_halves(&mut self) -> Result<i64, ParseError> {
        if self.peek() == Some('(') {
            self.bump();
            let n = self.small_int()?;
            let out = if self.peek() == Some('/') {
                self.bump();
                let at = self.pos;
                if self.integer()? != BigInt::from(2) {
                    return Err(ParseError::new(at, "only halves are allowed as fractional exponents"));
                }
                n
            } else {
                2 * n
            };
            self.expect(')')?;
            Ok(out)
        } else {
            Ok(2 * self.small_int()?)
        }
    }

    fn expr(&mut self) -> Result<OqElement, ParseError> {
        let mut acc = if self.peek() == Some('-') {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<OqElement, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c == '(' || c == 'q' || c.is_ascii_digit() || Gen::from_letter(c).is_some() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<OqElement, ParseError> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some('q') => {
                self.bump();
                let e = if self.peek() == Some('^') {
                    self.bump();
                    self.exponent_halves()?
                } else {
                    2
                };
                Ok(OqElement::scalar(HalfLaurent::q_half(e)))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let base = OqElement::scalar(HalfLaurent::from(n));
                self.power(base)
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(')')?;
                self.power(inner)
            }
            Some(c) => match Gen::from_letter(c) {
                Some(g) => {
                    self.bump();
                    self.power(OqElement::gen(g))
                }
                None => Err(ParseError::new(at, format!("unexpected {c:?}"))),
            },
            None => Err(ParseError::new(at, "unexpected end of input")),
        }
    }

    fn power(&mut self, base: OqElement) -> Result<OqElement, ParseError> {
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let at = self.pos;
        let halves = self.exponent_halves()?;
        if halves < 0 || halves % 2 != 0 {
            return Err(ParseError::new(at, "only q takes negative or fractional powers"));
        }
        Ok(base.pow((halves / 2) as u32))
    }
}

/// Parse an element of `O_{q^2}(SL_2)`.
pub fn parse_oq(s: &str) -> Result<OqElement, ParseError> {
    let mut p = Parser { src: s, pos: 0 };
    let out = p.expr()?;
    match p.peek() {
        None => Ok(out),
        Some(c) => Err(ParseError::new(p.pos, format!("unexpected {c:?}"))),
    }
}

/// Parse a Laurent polynomial in `q^{1/2}`.
pub fn parse_laurent(s: &str) -> Result<HalfLaurent, ParseError> {
    let x = parse_oq(s)?;
    x.as_scalar().ok_or_else(|| ParseError::new(0, "expected a scalar, found algebra generators"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oq::{nf, parse_word};

    #[test]
    fn laurent_round_trip() {
        let x = &(&HalfLaurent::q_half(-5) * &HalfLaurent::constant(-3)) + &HalfLaurent::q_pow(2);
        assert_eq!(parse_laurent(&x.to_string()).unwrap(), x);
        assert_eq!(parse_laurent("q^(1/2)*q^(1/2)").unwrap(), HalfLaurent::q_pow(1));
    }

    #[test]
    fn elements() {
        assert_eq!(parse_oq("dab").unwrap(), nf(&parse_word("dab").unwrap()));
        assert_eq!(parse_oq("ba - q^2*ab").unwrap(), OqElement::zero());
        assert_eq!(parse_oq("(q^2-1)a b").unwrap(), parse_oq("ba - ab").unwrap());
        assert_eq!(parse_oq("a^2").unwrap(), parse_oq("aa").unwrap());
    }

    #[test]
    fn element_display_round_trip() {
        let x = parse_oq("q^(-3/2)*dab - 2*c + 5").unwrap();
        assert_eq!(parse_oq(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn diagnostics() {
        let e = parse_oq("ab + x").unwrap_err();
        assert_eq!(e.pos, 5);
        assert!(e.render("ab + x").contains("     ^"));
        assert_eq!(parse_oq("q^(1/3)").unwrap_err().pos, 5);
        assert!(parse_oq("a^-1").is_err());
        assert!(parse_oq("(a").is_err());
    }
}
