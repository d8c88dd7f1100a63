//! Text expression language for algebra elements.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary ('*' unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! atom     := ident | number | '(' expr ')'
//! exponent := '-'? integer | '(' '-'? number ')'
//! ```
//!
//! Numbers are integers or `p/q`. Half exponents are accepted on `w` and
//! `wp` only. Identifiers: `e f w wp wh wph sc C eta q qp r s sqrt_r sqrt_s
//! X Y`, where `X = r^{1/4}` and `Y = s^{1/4}`.

mod ast;
mod eval;
mod lexer;
mod render;

pub use ast::{parse, Exponent, Expr, GenName, Named};
pub use eval::evaluate;
pub use lexer::{tokenize, Tok, Token};
pub use render::{render, CoeffText};

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::Result;
use crate::ring::Field;

/// `evaluate(parse(src))`.
pub fn parse_element<K: Field>(src: &str, alg: &Algebra<K>) -> Result<AlgebraElement<K>> {
    evaluate(&parse(src)?, alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Params;
    use crate::central::scasimir;
    use crate::scalars::Scalar;

    fn alg() -> Algebra<Scalar> {
        Algebra::new(Params::generic())
    }

    #[test]
    fn normalizes_ef() {
        let a = alg();
        let x = parse_element("e*f", &a).unwrap();
        assert_eq!(render(&x), "- f*e + (r-s)^-1*w - (r-s)^-1*wp");
        let y = parse_element("e*f + f*e", &a).unwrap();
        assert_eq!(render(&y), "(r-s)^-1*w - (r-s)^-1*wp");
    }

    #[test]
    fn named_and_trivial() {
        let a = alg();
        assert_eq!(parse_element("sc", &a).unwrap(), scasimir(&a));
        assert_eq!(render(&parse_element("f^0", &a).unwrap()), "1");
        assert_eq!(render(&parse_element("e - e", &a).unwrap()), "0");
        assert_eq!(render(&parse_element("wh^-3", &a).unwrap()), "w^(-3/2)");
    }

    #[test]
    fn non_invertible_powers() {
        let a = alg();
        assert!(matches!(parse_element("e^-1", &a), Err(crate::Error::NegativePower(_))));
        assert!(parse_element("(2*w*wp)^-2", &a).is_ok());
    }

    #[test]
    fn round_trip_samples() {
        let a = alg();
        for src in [
            "sc",
            "C",
            "sc*e*wh - 3/2*X*f^2*wp^(-3/2)",
            "(r+s)^-1*e^2*f + eta",
            "-7*q*qp",
        ] {
            let x = parse_element(src, &a).unwrap();
            let back = parse_element(&render(&x), &a).unwrap();
            assert_eq!(back, x, "{src} -> {}", render(&x));
        }
    }
}
