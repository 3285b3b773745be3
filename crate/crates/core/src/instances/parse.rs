//! Tiny hand-rolled scanner for the element grammars.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::ParseError;

pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    pub fn at(&self, c: u8) -> bool {
        self.peek() == Some(c)
    }

    pub fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.at(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    pub fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected decimal digits"));
        }
        Ok(&self.text[start..self.pos])
    }

    pub fn natural(&mut self) -> Result<BigUint, ParseError> {
        let digits = self.digits()?;
        Ok(digits.parse().expect("ascii digits"))
    }

    /// `-?[0-9]+`
    pub fn integer(&mut self) -> Result<BigInt, ParseError> {
        let negative = self.at(b'-');
        if negative {
            self.pos += 1;
        }
        let magnitude = BigInt::from(self.natural()?);
        Ok(if negative { -magnitude } else { magnitude })
    }

    /// `p` or `p/q` with `q > 0`; reduced to lowest terms.
    pub fn rational(&mut self) -> Result<BigRational, ParseError> {
        let numer = self.integer()?;
        if self.at(b'/') {
            self.pos += 1;
            let here = self.pos;
            let denom = BigInt::from(self.natural()?);
            if denom.is_zero() {
                return Err(ParseError::new(here, "zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    pub fn bit(&mut self) -> Result<u8, ParseError> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(0)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(1)
            }
            _ => Err(self.error("expected bit 0 or 1")),
        }
    }
}

pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
