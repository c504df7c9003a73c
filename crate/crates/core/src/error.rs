use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient {0} is not a dyadic rational")]
    NotDyadic(String),
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("gcd of (0, 0) is undefined")]
    BothZero,
    #[error("{a}*x = {b} (mod {n}) has no solution")]
    NoSolution { a: String, b: String, n: String },
    #[error("modulus {0} must be an odd positive integer")]
    EvenModulus(String),
    #[error("linear part has determinant {0}, which is not a unit of Z[1/2]")]
    NotInvertibleOverD(String),
    #[error("segment endpoints coincide")]
    EqualPoints,
    #[error("degenerate triangle: vertices are collinear or repeated")]
    DegenerateTriangle,
    #[error("invalid hat (i={i}, j={j}, m={m}): {reason}")]
    InvalidHat {
        i: String,
        j: String,
        m: String,
        reason: &'static str,
    },
    #[error("invalid census bounds: {0}")]
    InvalidBounds(String),
    #[error("closure depth {0} exceeds the supported maximum of 12")]
    DepthTooLarge(u32),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
