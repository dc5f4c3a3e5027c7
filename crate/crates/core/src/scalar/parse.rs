//! Recursive-descent parser for scalar expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := number | symbol | '(' expr ')'
//! number := digits ('.' digits)?
//! ```

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Fraction, Scalar, ScalarError, SymbolTable};

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    table: &'a Arc<SymbolTable>,
}

pub(crate) fn parse_fraction(table: &Arc<SymbolTable>, text: &str) -> Result<Fraction, ScalarError> {
    let mut p = Parser { text, pos: 0, table };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

pub(crate) fn parse_scalar(table: &Arc<SymbolTable>, text: &str) -> Result<Scalar, ScalarError> {
    let f = parse_fraction(table, text)?;
    f.to_scalar().ok_or_else(|| ScalarError::NotPolynomial(text.to_string()))
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> ScalarError {
        ScalarError::Parse { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn lift(&self, f: Fraction) -> Fraction {
        // constants parsed here carry the table so every result shares it
        f.lift(self.table).expect("parser values belong to the parser table")
    }

    fn expr(&mut self) -> Result<Fraction, ScalarError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Fraction, ScalarError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.unary()?)?;
                }
                '/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc.try_div(&d).map_err(|e| match e {
                        ScalarError::DivisionByZero => ScalarError::Parse {
                            offset: at,
                            message: "division by zero".into(),
                        },
                        other => other,
                    })?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Fraction, ScalarError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Fraction, ScalarError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let exp: u32 = self.text[start..self.pos]
            .parse()
            .map_err(|_| self.error("expected a non-negative integer exponent"))?;
        let mut acc = self.lift(Fraction::from_int(1));
        for _ in 0..exp {
            acc = acc.try_mul(&base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Fraction, ScalarError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek_raw().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                Fraction::symbol(self.table, name).map_err(|_| ScalarError::Parse {
                    offset: start,
                    message: format!("unknown symbol `{name}`"),
                })
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Fraction, ScalarError> {
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let int_part = &self.text[start..self.pos];
        let mut value = if int_part.is_empty() {
            BigRational::zero()
        } else {
            BigRational::from_integer(int_part.parse::<BigInt>().map_err(|_| self.error("bad number"))?)
        };
        if self.peek_raw() == Some('.') {
            self.pos += 1;
            let frac_start = self.pos;
            while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits = &self.text[frac_start..self.pos];
            if digits.is_empty() && int_part.is_empty() {
                return Err(self.error("bad number"));
            }
            if !digits.is_empty() {
                let numer: BigInt = digits.parse().map_err(|_| self.error("bad number"))?;
                let denom = num_traits::pow(BigInt::from(10), digits.len());
                value += BigRational::new(numer, denom);
            }
        }
        Ok(self.lift(Fraction::constant(value)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Arc<SymbolTable> {
        SymbolTable::new(["a", "m", "s"]).unwrap().with_rule("s", "3").unwrap().into_shared()
    }

    #[test]
    fn precedence_and_literals() {
        let t = table();
        let x = parse_scalar(&t, "1 + 2*a^2 - -m").unwrap();
        let y = parse_scalar(&t, "m + 2*a*a + 1").unwrap();
        assert_eq!(x, y);
        assert_eq!(parse_scalar(&t, "0.25*a").unwrap(), parse_scalar(&t, "a/4").unwrap());
        assert_eq!(parse_scalar(&t, "3/4*a").unwrap(), parse_scalar(&t, "(3*a)/4").unwrap());
        assert_eq!(parse_scalar(&t, "(s/2)^2").unwrap(), parse_scalar(&t, "3/4").unwrap());
        assert_eq!(parse_scalar(&t, "a^0").unwrap(), parse_scalar(&t, "1").unwrap());
    }

    #[test]
    fn diagnostics() {
        let t = table();
        assert!(matches!(parse_scalar(&t, "a +"), Err(ScalarError::Parse { .. })));
        assert!(matches!(parse_scalar(&t, "(a"), Err(ScalarError::Parse { .. })));
        assert!(matches!(parse_scalar(&t, "q"), Err(ScalarError::Parse { offset: 0, .. })));
        assert!(matches!(parse_scalar(&t, "a ^ -1"), Err(ScalarError::Parse { .. })));
        assert!(matches!(parse_scalar(&t, "a/0"), Err(ScalarError::Parse { .. })));
        assert!(matches!(parse_scalar(&t, "1/a"), Err(ScalarError::NotPolynomial(_))));
        assert!(matches!(parse_scalar(&t, "a b"), Err(ScalarError::Parse { .. })));
    }
}
