use thiserror::Error;

use crate::arith::Int;

/// Errors raised by the form calculus.
///
/// Every variant except [`Error::Parse`] is a violated mathematical
/// precondition; the CLI maps them to distinct exit codes on that basis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined gcd: both arguments are zero")]
    UndefinedGcd,
    #[error("unsupported modulus {0}: an odd prime is required")]
    UnsupportedModulus(Int),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("discriminant {0} is a perfect square")]
    SquareDiscriminant(Int),
    #[error("invalid discriminant {0}: must be a non-square congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(Int),
    #[error("form with negative discriminant must be positive definite (a > 0)")]
    NotPositiveDefinite,
    #[error("matrix has zero determinant")]
    ZeroDeterminant,
    #[error("indefinite reduction unsupported (discriminant {0} >= 0)")]
    IndefiniteUnsupported(Int),
    #[error("form {0} is not primitive")]
    NotPrimitive(String),
    #[error("form {0} is not reduced")]
    NotReduced(String),
    #[error("matrix determinant is {found}, expected {expected}")]
    DeterminantMismatch { expected: Int, found: Int },
    #[error("leading coefficient {a} not coprime to {modulus}")]
    NotCoprime { a: Int, modulus: Int },
    #[error("discriminant {disc} not divisible by {conductor}^2")]
    NotDivisible { disc: Int, conductor: Int },
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(Int, Int),
    #[error("lift index g = {g} outside 0..={f}")]
    LiftIndexRange { g: Int, f: Int },
    #[error("coprime search exhausted radius {0}")]
    SearchExhausted(Int),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
