//! A small parser for polynomial expressions written the way they are typeset,
//! e.g. `(4n^2-4(s+8)n+s^2+15s+32)/32` or `2x^{4}(5-6x)`.
//!
//! Juxtaposition is multiplication, `^` takes a nonnegative integer exponent
//! (braces optional) and `/` only divides by a nonzero constant.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bivariate::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Var};
use crate::rational::Rational;

/// Ring operations the parser needs; the receiver supplies the variable tags.
pub trait ExprRing: Sized + Clone {
    fn constant_like(&self, c: Rational) -> Self;
    fn variable_like(&self, symbol: char) -> Option<Self>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn as_constant(&self) -> Option<Rational>;
}

impl ExprRing for Polynomial {
    fn constant_like(&self, c: Rational) -> Self {
        Polynomial::constant(self.var(), c)
    }

    fn variable_like(&self, symbol: char) -> Option<Self> {
        (symbol == self.var().symbol())
            .then(|| Polynomial::monomial(self.var(), Rational::from_integer(1.into()), 1))
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn as_constant(&self) -> Option<Rational> {
        (self.degree() <= 0).then(|| self.coeff(0))
    }
}

impl ExprRing for BivariatePolynomial {
    fn constant_like(&self, c: Rational) -> Self {
        BivariatePolynomial::constant(self.vars(), c)
    }

    fn variable_like(&self, symbol: char) -> Option<Self> {
        let one = Rational::from_integer(1.into());
        let (a, b) = self.vars();
        if symbol == a.symbol() {
            Some(BivariatePolynomial::monomial(self.vars(), one, 1, 0))
        } else if symbol == b.symbol() {
            Some(BivariatePolynomial::monomial(self.vars(), one, 0, 1))
        } else {
            None
        }
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn as_constant(&self) -> Option<Rational> {
        self.terms()
            .all(|(&e, _)| e == (0, 0))
            .then(|| self.coeff(0, 0))
    }
}

struct Parser<'a, R> {
    src: &'a [u8],
    pos: usize,
    proto: R,
}

impl<R: ExprRing> Parser<'_, R> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!(
            "{msg} at byte {} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.src)
        )))
    }

    fn peek(&mut self) -> Option<u8> {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
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

    fn integer(&mut self) -> Result<BigInt> {
        self.peek();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn expr(&mut self) -> Result<R> {
        let mut acc = if self.eat(b'-') {
            self.proto
                .constant_like(Rational::zero())
                .sub(&self.term()?)
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<R> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    match d.as_constant() {
                        Some(c) if !c.is_zero() => {
                            acc = acc.mul(
                                &self
                                    .proto
                                    .constant_like(Rational::from_integer(1.into()) / c),
                            )
                        }
                        _ => return self.err("division by a non-constant or zero"),
                    }
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<R> {
        let base = self.primary()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let braced = self.eat(b'{');
        let e: u32 = match self.integer()?.try_into() {
            Ok(e) => e,
            Err(_) => return self.err("exponent too large"),
        };
        if braced && !self.eat(b'}') {
            return self.err("expected `}`");
        }
        let one = self.proto.constant_like(Rational::from_integer(1.into()));
        Ok((0..e).fold(one, |acc, _| acc.mul(&base)))
    }

    fn primary(&mut self) -> Result<R> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(self.proto.constant_like(Rational::from_integer(v)))
            }
            Some(c) if c.is_ascii_alphabetic() => match self.proto.variable_like(c as char) {
                Some(v) => {
                    self.pos += 1;
                    Ok(v)
                }
                None => self.err("unknown variable"),
            },
            _ => self.err("unexpected input"),
        }
    }
}

fn parse<R: ExprRing>(src: &str, proto: R) -> Result<R> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        proto,
    };
    let value = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(value)
}

pub fn parse_polynomial(src: &str, var: Var) -> Result<Polynomial> {
    parse(src, Polynomial::zero(var))
}

pub fn parse_bivariate(src: &str, vars: (Var, Var)) -> Result<BivariatePolynomial> {
    parse(src, BivariatePolynomial::zero(vars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn univariate() {
        let p = parse_polynomial("2x^4(5-6x)", Var::X).unwrap();
        assert_eq!(p, Polynomial::from_integers(Var::X, &[0, 0, 0, 0, 10, -12]));
        let q = parse_polynomial("x^{12} - 1", Var::X).unwrap();
        assert_eq!(q.degree(), 12);
        assert_eq!(q.coeff(0), rat(-1));
    }

    #[test]
    fn bivariate_with_division() {
        let p = parse_bivariate("(4n^2-4(s+8)n+s^2+15s+32)/32", (Var::N, Var::S)).unwrap();
        assert_eq!(p.coeff(2, 0), ratio(1, 8));
        assert_eq!(p.coeff(1, 1), ratio(-1, 8));
        assert_eq!(p.coeff(1, 0), rat(-1));
        assert_eq!(p.coeff(0, 2), ratio(1, 32));
        assert_eq!(p.coeff(0, 0), rat(1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_polynomial("2y", Var::X).is_err());
        assert!(parse_polynomial("(1+x", Var::X).is_err());
        assert!(parse_polynomial("1/x", Var::X).is_err());
        assert!(parse_polynomial("1/0", Var::X).is_err());
        assert!(parse_polynomial("1)", Var::X).is_err());
    }
}
