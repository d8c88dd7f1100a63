use std::fmt;

use super::lexer::{syntax, tokenize, Tok, Token};
use crate::error::{Error, Result};
use crate::ring::Rational;

/// Algebra generators, including the half-power sugar `wh`, `wph`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenName {
    E,
    F,
    W,
    Wp,
    Wh,
    Wph,
}

/// Named elements and scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    /// Scasimir `c̃`.
    Sc,
    /// Casimir `(rs)^{-1/2}(ωω')^{-1} c̃^2`.
    Casimir,
    Eta,
    Q,
    Qp,
    R,
    S,
    SqrtR,
    SqrtS,
    X,
    Y,
}

impl Named {
    pub fn is_scalar(self) -> bool {
        !matches!(self, Named::Sc | Named::Casimir)
    }
}

fn lookup(name: &str) -> Option<Expr> {
    Some(match name {
        "e" => Expr::Gen(GenName::E),
        "f" => Expr::Gen(GenName::F),
        "w" => Expr::Gen(GenName::W),
        "wp" => Expr::Gen(GenName::Wp),
        "wh" => Expr::Gen(GenName::Wh),
        "wph" => Expr::Gen(GenName::Wph),
        "sc" => Expr::Named(Named::Sc),
        "C" => Expr::Named(Named::Casimir),
        "eta" => Expr::Named(Named::Eta),
        "q" => Expr::Named(Named::Q),
        "qp" => Expr::Named(Named::Qp),
        "r" => Expr::Named(Named::R),
        "s" => Expr::Named(Named::S),
        "sqrt_r" => Expr::Named(Named::SqrtR),
        "sqrt_s" => Expr::Named(Named::SqrtS),
        "X" => Expr::Named(Named::X),
        "Y" => Expr::Named(Named::Y),
        _ => return None,
    })
}

/// An exponent stored doubled, so `(3/2)` is `3` and `2` is `4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exponent(pub i64);

impl Exponent {
    pub fn is_half(self) -> bool {
        self.0 % 2 != 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Summands; subtraction appears as `Neg`.
    Sum(Vec<Expr>),
    /// Factors in source order.
    Product(Vec<Expr>),
    Power(Box<Expr>, Exponent),
    Neg(Box<Expr>),
    Lit(Rational),
    Gen(GenName),
    Named(Named),
}

impl Expr {
    /// `ω` and `ω'` are the only bases accepting half exponents.
    fn is_cartan_generator(&self) -> bool {
        matches!(self, Expr::Gen(GenName::W | GenName::Wp))
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, msg: impl Into<String>) -> Error {
        let t = self.peek();
        syntax(t.line, t.column, msg)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek().tok == want {
            self.bump();
            Ok(())
        } else {
            Err(self.err_here(format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(Expr::Neg(Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.unary()?];
        while self.peek().tok == Tok::Star {
            self.bump();
            factors.push(self.unary()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.bump();
        let exp = self.exponent()?;
        if exp.is_half() && !base.is_cartan_generator() {
            return Err(Error::BadExponent(format!(
                "half power at {}:{} applies only to w or wp",
                caret.line, caret.column
            )));
        }
        Ok(Expr::Power(Box::new(base), exp))
    }

    fn signed_integer(&mut self) -> Result<i64> {
        let neg = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().tok.clone() {
            Tok::Number(v) if v.is_integer() => {
                let n: i64 = v
                    .to_integer()
                    .try_into()
                    .map_err(|_| self.err_here("exponent too large"))?;
                self.bump();
                Ok(if neg { -n } else { n })
            }
            _ => Err(self.err_here("expected integer exponent")),
        }
    }

    fn exponent(&mut self) -> Result<Exponent> {
        if self.peek().tok != Tok::LParen {
            return Ok(Exponent(2 * self.signed_integer()?));
        }
        self.bump();
        let neg = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let value = match self.peek().tok.clone() {
            Tok::Number(v) => v,
            _ => return Err(self.err_here("expected exponent")),
        };
        let twice = value.clone() * Rational::from_integer(2.into());
        if !twice.is_integer() {
            return Err(Error::BadExponent(format!("{value} is not a multiple of 1/2")));
        }
        let n: i64 = twice
            .to_integer()
            .try_into()
            .map_err(|_| self.err_here("exponent too large"))?;
        self.bump();
        self.expect(Tok::RParen, "`)`")?;
        Ok(Exponent(if neg { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.bump();
        match t.tok {
            Tok::Number(v) => Ok(Expr::Lit(v)),
            Tok::Ident(name) => lookup(&name).ok_or(Error::UnknownIdentifier {
                name,
                line: t.line,
                column: t.column,
            }),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Eof => Err(syntax(t.line, t.column, "unexpected end of input")),
            other => Err(syntax(t.line, t.column, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Caret => "`^`",
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
        Tok::Ident(_) => "identifier",
        Tok::Number(_) => "number",
        Tok::Eof => "end of input",
    }
}

/// Parses one expression; trailing input is an error.
pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.err_here(format!("unexpected {}", describe(&p.peek().tok))));
    }
    Ok(e)
}

impl fmt::Display for GenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenName::E => "e",
            GenName::F => "f",
            GenName::W => "w",
            GenName::Wp => "wp",
            GenName::Wh => "wh",
            GenName::Wph => "wph",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn g(n: GenName) -> Expr {
        Expr::Gen(n)
    }

    #[test]
    fn sums_and_products() {
        let e = parse("e*f + f*e").unwrap();
        assert_eq!(
            e,
            Expr::Sum(vec![
                Expr::Product(vec![g(GenName::E), g(GenName::F)]),
                Expr::Product(vec![g(GenName::F), g(GenName::E)]),
            ])
        );
    }

    #[test]
    fn scalar_times_difference() {
        let e = parse("(r - s)^-1 * (w - wp)").unwrap();
        let diff = |a, b| Expr::Sum(vec![a, Expr::Neg(Box::new(b))]);
        assert_eq!(
            e,
            Expr::Product(vec![
                Expr::Power(
                    Box::new(diff(Expr::Named(Named::R), Expr::Named(Named::S))),
                    Exponent(-2)
                ),
                diff(g(GenName::W), g(GenName::Wp)),
            ])
        );
    }

    #[test]
    fn half_powers() {
        assert_eq!(
            parse("w^(1/2) * sc").unwrap(),
            Expr::Product(vec![Expr::Power(Box::new(g(GenName::W)), Exponent(1)), Expr::Named(Named::Sc)])
        );
        assert_eq!(parse("wp^(-3/2)").unwrap(), Expr::Power(Box::new(g(GenName::Wp)), Exponent(-3)));
        assert!(matches!(parse("e^(1/2)"), Err(Error::BadExponent(_))));
        assert!(matches!(parse("w^(1/3)"), Err(Error::BadExponent(_))));
    }

    #[test]
    fn minus_binds_below_power() {
        assert_eq!(
            parse("-e^2").unwrap(),
            Expr::Neg(Box::new(Expr::Power(Box::new(g(GenName::E)), Exponent(4))))
        );
        assert_eq!(
            parse("3/2*-r").unwrap(),
            Expr::Product(vec![Expr::Lit(crate::ring::rat2(3, 2)), Expr::Neg(Box::new(Expr::Named(Named::R)))])
        );
        assert_eq!(parse("((1))").unwrap(), Expr::Lit(rat(1)));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse("e + foo"),
            Err(Error::UnknownIdentifier {
                name: "foo".into(),
                line: 1,
                column: 5
            })
        );
        assert!(matches!(parse("e +"), Err(Error::Syntax { line: 1, column: 4, .. })));
        assert!(matches!(parse("(e"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("e f"), Err(Error::Syntax { line: 1, column: 3, .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse("e^x"), Err(Error::Syntax { .. })));
    }
}
