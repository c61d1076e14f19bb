//! Expression syntax for operators and polynomials.
//!
//! ```text
//! expr := '-'? term (('+' | '-') term)*
//! term := pow ('*' pow)*
//! pow  := atom ('^' nat)?
//! atom := 'x' idx? | 'd' idx? | 'I' idx? | 'H' idx? | 'e(' nat ',' nat ')' idx?
//!       | rational | '(' expr ')'
//! idx  := '_'? positive integer
//! ```
//!
//! `I` is `∫` and `d` is `∂`. Juxtaposition is not multiplication. The factor
//! index may be omitted only at rank 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::element::{Element1, Generator};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tensor::{ElementN, PolyN};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(Rational),
    Gen {
        gen: Generator,
        factor: Option<usize>,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(self.pos, format!("expected `{}`", c as char)))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let at = self.pos;
        self.digits()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| syntax(at, "expected a natural number"))
    }

    // Directly attached factor index, with optional underscore.
    fn index(&mut self) -> Result<Option<usize>> {
        let at = self.pos;
        let underscore = self.src.get(self.pos) == Some(&b'_');
        if underscore {
            self.pos += 1;
        }
        match self.digits() {
            Some(d) => {
                let i: usize = d.parse().map_err(|_| syntax(at, "index too large"))?;
                if i == 0 {
                    return Err(syntax(at, "factor indices start at 1"));
                }
                Ok(Some(i))
            }
            None if underscore => Err(syntax(at, "expected factor index after `_`")),
            None => Ok(None),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat(b'-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.pow()?;
        while self.eat(b'*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.pow()?));
        }
        Ok(lhs)
    }

    fn pow(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.nat()?;
            let e = u32::try_from(e).map_err(|_| syntax(at, "exponent too large"))?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let Some(c) = self.peek() else {
            return Err(syntax(at, "unexpected end of input"));
        };
        match c {
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            b'0'..=b'9' => {
                let num: BigInt = self.digits().unwrap().parse().unwrap();
                let den: BigInt = if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    self.digits()
                        .ok_or_else(|| syntax(at, "expected denominator"))?
                        .parse()
                        .unwrap()
                } else {
                    BigInt::from(1)
                };
                if den.is_zero() {
                    return Err(syntax(at, "zero denominator"));
                }
                Ok(Expr::Scalar(Rational::new(num, den)))
            }
            b'x' | b'd' | b'I' | b'H' => {
                self.pos += 1;
                let gen = match c {
                    b'x' => Generator::X,
                    b'd' => Generator::D,
                    b'I' => Generator::Integral,
                    _ => Generator::H,
                };
                Ok(Expr::Gen {
                    gen,
                    factor: self.index()?,
                })
            }
            b'e' => {
                self.pos += 1;
                if self.src.get(self.pos) != Some(&b'(') {
                    return Err(syntax(self.pos, "expected `(` after `e`"));
                }
                self.pos += 1;
                let s = self.nat()?;
                self.expect(b',')?;
                let t = self.nat()?;
                self.expect(b')')?;
                Ok(Expr::Gen {
                    gen: Generator::Unit(s, t),
                    factor: self.index()?,
                })
            }
            other => Err(syntax(at, format!("unexpected `{}`", other as char))),
        }
    }
}

/// Parses text into an expression tree.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

fn resolve_factor(factor: Option<usize>, rank: usize) -> Result<usize> {
    match factor {
        Some(i) if i <= rank => Ok(i),
        Some(i) => Err(Error::FactorOutOfRange { index: i, rank }),
        None if rank == 1 => Ok(1),
        None => Err(syntax(0, "factor index required when rank > 1")),
    }
}

impl Expr {
    /// Evaluates to a canonical element of `I_rank`.
    pub fn eval(&self, rank: usize) -> Result<ElementN> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(match self {
            Expr::Scalar(q) => ElementN::scalar(rank, q.clone()),
            Expr::Gen { gen, factor } => {
                let i = resolve_factor(*factor, rank)?;
                ElementN::lift(i, &Element1::from_generator(*gen), rank)?
            }
            Expr::Neg(a) => a.eval(rank)?.neg(),
            Expr::Add(a, b) => a.eval(rank)?.add(&b.eval(rank)?)?,
            Expr::Sub(a, b) => a.eval(rank)?.sub(&b.eval(rank)?)?,
            Expr::Mul(a, b) => a.eval(rank)?.mul(&b.eval(rank)?)?,
            Expr::Pow(a, k) => a.eval(rank)?.pow(*k),
        })
    }

    /// Evaluates as a polynomial in `x₁, …, x_rank`.
    pub fn eval_poly(&self, rank: usize) -> Result<PolyN> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(match self {
            Expr::Scalar(q) => PolyN::monomial(vec![0; rank], q.clone()),
            Expr::Gen {
                gen: Generator::X,
                factor,
            } => PolyN::variable(resolve_factor(*factor, rank)?, rank)?,
            Expr::Gen { .. } => {
                return Err(syntax(0, "polynomials may only use the variables x1..xn"))
            }
            Expr::Neg(a) => a.eval_poly(rank)?.scale(&-Rational::one()),
            Expr::Add(a, b) => a.eval_poly(rank)?.add(&b.eval_poly(rank)?)?,
            Expr::Sub(a, b) => {
                let neg = b.eval_poly(rank)?.scale(&-Rational::one());
                a.eval_poly(rank)?.add(&neg)?
            }
            Expr::Mul(a, b) => a.eval_poly(rank)?.mul(&b.eval_poly(rank)?)?,
            Expr::Pow(a, k) => a.eval_poly(rank)?.pow(*k),
        })
    }
}

/// Parses and evaluates an operator expression at the given rank.
pub fn parse(text: &str, rank: usize) -> Result<ElementN> {
    parse_expr(text)?.eval(rank)
}

/// Parses and evaluates a rank-1 operator expression.
pub fn parse1(text: &str) -> Result<Element1> {
    parse(text, 1)?.to_element1()
}

/// Parses a polynomial in `x1..xn` (or `x` at rank 1).
pub fn parse_poly(text: &str, rank: usize) -> Result<PolyN> {
    parse_expr(text)?.eval_poly(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn parse_examples() {
        assert_eq!(parse1("d*I").unwrap(), Element1::one());
        assert_eq!(
            parse1("I*d").unwrap(),
            Element1::one().sub(&Element1::unit(0, 0))
        );
        assert_eq!(parse1("x").unwrap(), Element1::x());
        assert_eq!(
            parse1("I^2*d^2").unwrap().to_string(),
            "1 - e(0,0) - e(1,1)"
        );
    }

    #[test]
    fn precedence() {
        // ^ over * over +
        assert_eq!(
            parse1("2*d^2 + 1").unwrap(),
            Element1::d_pow(2).scale(&int(2)).add(&Element1::one())
        );
        assert_eq!(parse1("-x + x").unwrap(), Element1::zero());
        assert_eq!(
            parse1("(d + 1)^2").unwrap(),
            parse1("d^2 + 2*d + 1").unwrap()
        );
        assert_eq!(parse1("3/6*H").unwrap(), Element1::h().scale(&ratio(1, 2)));
    }

    #[test]
    fn factor_indices() {
        let a = parse("d1*x2", 2).unwrap();
        assert_eq!(a, parse("x_2*d_1", 2).unwrap());
        assert_eq!(parse("e(0,0)_2", 2).unwrap(), parse("e(0,0)2", 2).unwrap());
        assert!(matches!(
            parse("x3", 2),
            Err(Error::FactorOutOfRange { index: 3, rank: 2 })
        ));
        assert!(matches!(parse("x", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x0", 1), Err(Error::Syntax { .. })));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(
            parse1("d d"),
            Err(Error::Syntax {
                position: 2,
                message: "unexpected trailing input".into()
            })
        );
        assert!(matches!(
            parse1("d*"),
            Err(Error::Syntax { position: 2, .. })
        ));
        assert!(matches!(parse1("e(1)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse1("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse1("y"),
            Err(Error::Syntax { position: 0, .. })
        ));
    }

    #[test]
    fn polynomials() {
        let p = parse_poly("x1^2 + 3*x2 - 1/2", 2).unwrap();
        assert_eq!(p.coeff(&[2, 0]), int(1));
        assert_eq!(p.coeff(&[0, 1]), int(3));
        assert_eq!(p.coeff(&[0, 0]), ratio(-1, 2));
        assert!(parse_poly("d", 1).is_err());
        assert_eq!(
            parse_poly("(x+1)^2", 1).unwrap().to_string(),
            "1 + 2*x + x^2"
        );
    }
}
