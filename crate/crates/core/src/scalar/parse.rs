//! Recursive-descent parser for scalar expressions such as
//! `3/2*p^-4 + q - 1` or `(1 + p^2)/(1 - p^2 + p^4)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse scalar at byte {pos}: {msg}")]
pub struct ParseScalarError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub(super) fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseScalarError {
        ParseScalarError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, ParseScalarError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc + t } else { acc - t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ParseScalarError> {
        let mut acc = self.factor()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = if c == b'*' {
                acc * f
            } else {
                if f.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc / f
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar, ParseScalarError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            if base.is_zero() && e < 0 {
                return Err(self.err("negative power of zero"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ParseScalarError> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let n = self.integer()?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
        }
        let n: i64 = n
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn integer(&mut self) -> Result<BigInt, ParseScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Scalar, ParseScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'p') => {
                self.pos += 1;
                Ok(Scalar::p())
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(Scalar::q())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if n.is_zero() {
                    return Ok(Scalar::zero());
                }
                Ok(Scalar::from_rational(Rational::from_integer(n)))
            }
            _ => Err(self.err("expected number, 'p', 'q' or '('")),
        }
    }
}
