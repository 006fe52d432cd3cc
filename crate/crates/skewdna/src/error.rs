//! Error types shared across the crate.
//!
//! Domain errors ([`Error`]) are things a caller can hit with well-formed but
//! unsatisfiable input: a modulus that is not primitive, a polynomial that is
//! not a right divisor, an enumeration that would blow past a guard. Text
//! errors ([`ParseError`]) are malformed input syntax; the CLI maps the former
//! to exit code 1 and the latter to exit code 2.

use crate::skewpoly::SkewPolynomial;

/// Domain-level failure. Each variant carries the witness that justifies the
/// rejection (the factor, the true order, the nonzero remainder, the size).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field parameter s must be in 1..=4 (q = 2^(4s) <= 2^16), got {0}")]
    FieldSizeOutOfRange(u32),

    #[error("modulus must be a degree-{expected} polynomial over F_2, got degree {actual}")]
    ModulusDegree { expected: u32, actual: u32 },

    #[error("modulus is reducible: divisible by {}", poly_over_f2(*.factor))]
    ReducibleModulus {
        /// Bit i is the coefficient of y^i in a proper factor.
        factor: u32,
    },

    #[error("modulus is irreducible but not primitive: y has multiplicative order {order}, need {required}")]
    NonPrimitiveModulus { order: u64, required: u64 },

    #[error("additive bit pattern {bits:#x} is out of range for a field of order {q}")]
    BitsOutOfRange { bits: u32, q: u32 },

    #[error("zero has no multiplicative inverse")]
    InverseOfZero,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("the zero polynomial has no reciprocal")]
    ZeroPolynomial,

    #[error("code length must be at least 1")]
    LengthZero,

    #[error("not a right divisor of x^{n} - 1: remainder = {remainder}")]
    NotARightDivisor { n: usize, remainder: SkewPolynomial },

    #[error("enumeration of {codewords} codewords exceeds the guard {guard}")]
    EnumerationTooLarge { codewords: u128, guard: u64 },

    #[error("search space of {candidates} candidates exceeds the guard {guard}")]
    SearchSpaceTooLarge { candidates: u128, guard: u64 },

    #[error("the zero code has no nonzero codeword, so no minimum distance")]
    ZeroCode,

    #[error("divisor degree must satisfy 1 <= m < n, got m = {m}, n = {n}")]
    DegreeOutOfRange { m: usize, n: usize },

    #[error("length must be odd, got {0}")]
    LengthNotOdd(usize),

    #[error("length {0} exceeds the trial-division scale (n <= 63)")]
    LengthTooLarge(usize),
}

impl Error {
    /// Short stable identifier for machine-parsable CLI error lines.
    pub fn code(&self) -> &'static str {
        match self {
            Error::FieldSizeOutOfRange(_) => "field-size",
            Error::ModulusDegree { .. } => "modulus-degree",
            Error::ReducibleModulus { .. } => "modulus-reducible",
            Error::NonPrimitiveModulus { .. } => "modulus-not-primitive",
            Error::BitsOutOfRange { .. } => "bits-out-of-range",
            Error::InverseOfZero => "inverse-of-zero",
            Error::DivisionByZero => "division-by-zero",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::LengthZero => "length-zero",
            Error::NotARightDivisor { .. } => "not-a-divisor",
            Error::EnumerationTooLarge { .. } => "enumeration-guard",
            Error::SearchSpaceTooLarge { .. } => "search-guard",
            Error::ZeroCode => "zero-code",
            Error::DegreeOutOfRange { .. } => "degree-out-of-range",
            Error::LengthNotOdd(_) => "length-not-odd",
            Error::LengthTooLarge(_) => "length-too-large",
        }
    }
}

/// Malformed textual input (elements, polynomials, moduli).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error: {0}")]
pub struct ParseError(pub String);

/// Render an F_2[y] bit-polynomial (bit i = coefficient of y^i), e.g. "y^2 + y + 1".
pub(crate) fn poly_over_f2(bits: u32) -> String {
    if bits == 0 {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for i in (0..32).rev() {
        if bits >> i & 1 == 1 {
            terms.push(match i {
                0 => "1".to_string(),
                1 => "y".to_string(),
                _ => format!("y^{i}"),
            });
        }
    }
    terms.join(" + ")
}
