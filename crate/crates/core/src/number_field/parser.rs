//! Text form of defining polynomials.
//!
//! Two notations are accepted:
//!
//! ```text
//! list  := '[' int (',' int)* ']'           ascending coefficients
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := digits ['*'] 'x' ['^' digits]
//!        | 'x' ['^' digits]
//!        | digits
//! int   := ['+'|'-'] digits
//! ```
//!
//! Whitespace may appear between tokens. Like terms are combined.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Largest exponent accepted in expression form.
pub const MAX_EXPONENT: usize = 4096;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> Error {
        let found = match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        Error::Parse { position: self.pos, expected: expected.to_string(), found }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("end of input")),
        }
    }
}

fn big(digits: &str) -> BigInt {
    digits.parse().expect("ascii digits")
}

/// Parses either notation into a canonical [`IntPolynomial`].
pub fn parse_polynomial(text: &str) -> Result<IntPolynomial> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let coeffs = if cur.peek() == Some('[') { parse_list(&mut cur)? } else { parse_expr(&mut cur)? };
    cur.expect_end()?;
    IntPolynomial::new(coeffs)
}

fn parse_list(cur: &mut Cursor<'_>) -> Result<Vec<BigInt>> {
    cur.bump();
    let mut coeffs = Vec::new();
    loop {
        let negative = if cur.eat('-') {
            true
        } else {
            cur.eat('+');
            false
        };
        let d = cur.digits().ok_or_else(|| cur.error("integer"))?;
        let v = big(d);
        coeffs.push(if negative { -v } else { v });
        if cur.eat(',') {
            continue;
        }
        if cur.eat(']') {
            return Ok(coeffs);
        }
        return Err(cur.error("',' or ']'"));
    }
}

fn parse_expr(cur: &mut Cursor<'_>) -> Result<Vec<BigInt>> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (c, power) = parse_term(cur)?;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigInt::zero());
        }
        if negative {
            coeffs[power] -= c;
        } else {
            coeffs[power] += c;
        }
        if cur.eat('+') {
            negative = false;
        } else if cur.eat('-') {
            negative = true;
        } else {
            return Ok(coeffs);
        }
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<(BigInt, usize)> {
    let coeff = cur.digits().map(big);
    let has_star = coeff.is_some() && cur.eat('*');
    if cur.eat('x') {
        let power = if cur.eat('^') {
            let d = cur.digits().ok_or_else(|| cur.error("exponent"))?;
            let start = cur.pos - d.len();
            match d.parse::<usize>() {
                Ok(p) if p <= MAX_EXPONENT => p,
                _ => {
                    return Err(Error::Parse {
                        position: start,
                        expected: format!("exponent at most {MAX_EXPONENT}"),
                        found: d.to_string(),
                    })
                }
            }
        } else {
            1
        };
        Ok((coeff.unwrap_or_else(BigInt::one), power))
    } else if has_star {
        Err(cur.error("'x'"))
    } else {
        coeff.map(|c| (c, 0)).ok_or_else(|| cur.error("integer or 'x'"))
    }
}
