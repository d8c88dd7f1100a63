use thiserror::Error;

/// Errors raised by the algebra engine and its expression language.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid scalar: division by zero")]
    InvalidScalar,
    #[error("denominator vanishes under the specialization")]
    VanishingDenominator,
    #[error("operand is not Z2-homogeneous")]
    NonHomogeneous,
    #[error("the zero element has no leading monomial")]
    ZeroElement,
    #[error("index t = {t} exceeds min(p, q) = {bound}")]
    IndexOutOfRange { t: u32, bound: u32 },
    #[error("half-integer Cartan exponent has no action on the polynomial module")]
    HalfIntegerExponent,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown identifier `{name}` at {line}:{column}")]
    UnknownIdentifier {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("bad exponent: {0}")]
    BadExponent(String),
    #[error("negative power of a non-invertible element: {0}")]
    NegativePower(String),
    #[error("malformed serialized value: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
