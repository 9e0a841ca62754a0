//! Recursive-descent parser for rational-function expressions in `t` over `F_q`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' ['-'] integer)*
//! atom   := 't' | integer | 'g' | '(' expr ')'
//! ```
//!
//! Integers are read modulo `p`; `g` is the class of `u` in `F_p[u]/(m_u)`.

use thiserror::Error;

use crate::gf::Field;
use crate::ratfunc::{FunctionField, RatFuncError, RationalFunction};

/// Exponents of `t` are capped so a typo cannot allocate unbounded polynomials.
const MAX_EXPONENT: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the generator 'g' is only available when n > 1")]
    GeneratorUnavailable,
}

impl From<RatFuncError> for ParseError {
    fn from(_: RatFuncError) -> Self {
        ParseError::DivisionByZero
    }
}

pub fn parse_expression(src: &str, kf: &FunctionField) -> Result<RationalFunction, ParseError> {
    let mut parser = Parser {
        src: src.as_bytes(),
        pos: 0,
        kf,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    kf: &'a FunctionField,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = self.kf.add(&acc, &self.term()?);
            } else if self.eat(b'-') {
                acc = self.kf.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = self.kf.mul(&acc, &self.unary()?);
            } else if self.eat(b'/') {
                acc = self.kf.div(&acc, &self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        if self.eat(b'-') {
            let x = self.unary()?;
            Ok(self.kf.neg(&x))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.atom()?;
        while self.eat(b'^') {
            let negative = self.eat(b'-');
            self.skip_ws();
            let start = self.pos;
            let e = self.digits(None)?;
            if e > MAX_EXPONENT {
                self.pos = start;
                return Err(self.error("exponent too large"));
            }
            let e = if negative { -(e as i64) } else { e as i64 };
            acc = self.kf.pow(&acc, e)?;
        }
        Ok(acc)
    }

    /// Reads a decimal integer, reduced modulo `modulus` when given.
    fn digits(&mut self, modulus: Option<u64>) -> Result<u64, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            let d = (c - b'0') as u64;
            value = match modulus {
                Some(m) => (value * 10 + d) % m,
                None => value.saturating_mul(10).saturating_add(d),
            };
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(value)
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        let kf = self.kf;
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(kf.t())
            }
            Some(b'g') => {
                let g = kf
                    .field()
                    .generator()
                    .ok_or(ParseError::GeneratorUnavailable)?;
                self.pos += 1;
                Ok(kf.constant(g))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = kf.field().characteristic();
                let v = self.digits(Some(p))?;
                Ok(kf.constant(kf.field().from_int(v as i64)))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Fq;

    fn kf(p: u64, n: usize) -> FunctionField {
        FunctionField::new(Fq::new(p, n).unwrap())
    }

    #[test]
    fn examples() {
        let k = kf(2, 1);
        let d = parse_expression("1/t + t", &k).unwrap();
        assert_eq!(d.num(), &k.ring().from_coeffs(vec![1, 0, 1]));
        assert_eq!(d.den(), &k.ring().t());
        assert_eq!(
            parse_expression("(t^3+1)/t", &k).unwrap(),
            parse_expression("t^2 + 1/t", &k).unwrap()
        );
        assert_eq!(parse_expression("1/0", &k), Err(ParseError::DivisionByZero));
    }

    #[test]
    fn generator() {
        assert_eq!(
            parse_expression("g + t", &kf(2, 1)),
            Err(ParseError::GeneratorUnavailable)
        );
        let k = kf(2, 2);
        let g2 = parse_expression("g^2", &k).unwrap();
        assert_eq!(g2, parse_expression("g + 1", &k).unwrap());
        assert_eq!(parse_expression("g^3", &k).unwrap(), k.one());
    }

    #[test]
    fn arithmetic_and_whitespace() {
        let k = kf(5, 1);
        assert_eq!(parse_expression(" 7 ", &k).unwrap(), k.constant(2));
        assert_eq!(parse_expression("-1", &k).unwrap(), k.constant(4));
        assert_eq!(parse_expression("2*3 - 1", &k).unwrap(), k.zero());
        assert_eq!(
            parse_expression("t^-2", &k).unwrap(),
            parse_expression("1/(t*t)", &k).unwrap()
        );
        assert_eq!(
            parse_expression("( t + 1 ) ^ 2", &k).unwrap(),
            parse_expression("t^2+2*t+1", &k).unwrap()
        );
    }

    #[test]
    fn syntax_errors() {
        let k = kf(3, 1);
        assert!(matches!(
            parse_expression("t +", &k),
            Err(ParseError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_expression("(t", &k),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_expression("t t", &k),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_expression("x", &k),
            Err(ParseError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_expression("t^", &k),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("t^999999999", &k),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("", &k),
            Err(ParseError::Syntax { .. })
        ));
    }
}
