//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in exact field/curve/certificate computations.
///
/// Variants from `RankDeficient` downwards signal that a proof-replay step
/// failed on a concrete instance; on valid inputs they indicate an internal
/// bug rather than a user error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands belong to different fields.
    MixedFields,
    /// Division (or inversion) of zero.
    DivisionByZero,
    /// Modulus of a prime field is not prime.
    NotPrime(u64),
    /// Prime modulus exceeds the supported desk-scale bound (2^31).
    PrimeTooLarge(u64),
    /// Extension modulus has a nontrivial factor (rendered as a polynomial).
    ReducibleModulus { factor: String },
    /// Extension modulus is not monic or has degree < 2.
    BadModulus,
    /// Enumeration requested over the rationals.
    InfiniteField,
    /// Projective point or line built from the zero vector.
    ZeroVector,
    /// `line_through` called with equal points.
    CoincidentPoints,
    /// Points of different curves mixed in one operation.
    MixedCurves,
    /// Point fails the curve equation.
    PointNotOnCurve,
    /// Curve has vanishing discriminant; the value is carried for diagnostics.
    SingularCurve { discriminant: String },
    /// All three partial derivatives vanish at a point (non-smooth curve slipped through).
    SingularPoint,
    /// The curve restricted to a line vanishes identically.
    LineOnCurve,
    /// The restriction of the curve to a line violates the chord/tangent dichotomy.
    DichotomyViolation,
    /// Multiple-intersection test invoked at the point at infinity.
    PointAtInfinity,
    /// Three of the relevant points coincide where at most two may.
    TripleCoincidence,
    /// Tangent X/Y components both vanish at an affine point.
    WitnessExtractionFailed,
    /// Constraint matrix has rank below `expected`.
    RankDeficient { rank: usize, expected: usize },
    /// Kernel dimension differs from two.
    KernelDimUnexpected { dim: usize },
    /// Coefficient vector not expressible in the kernel basis.
    SpanFailure,
    /// An intermediate identity of a replayed proof step failed numerically.
    ChainCheckFailed { name: &'static str },
    /// Coincidence pattern outside the six handled reduction cases.
    UnmatchedPattern,
    /// Reduction recursion exceeded the depth cap.
    DepthExceeded,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MixedFields => write!(f, "operands belong to different fields"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::PrimeTooLarge(p) => write!(f, "prime {p} exceeds the 2^31 desk-scale bound"),
            Error::ReducibleModulus { factor } => {
                write!(f, "modulus is reducible; factor {factor}")
            }
            Error::BadModulus => write!(f, "extension modulus must be monic of degree >= 2"),
            Error::InfiniteField => write!(f, "operation requires a finite field"),
            Error::ZeroVector => write!(f, "zero coefficient/coordinate vector"),
            Error::CoincidentPoints => write!(f, "line through coincident points is not unique"),
            Error::MixedCurves => write!(f, "points belong to different curves"),
            Error::PointNotOnCurve => write!(f, "point does not satisfy the curve equation"),
            Error::SingularCurve { discriminant } => {
                write!(f, "curve is singular (discriminant {discriminant})")
            }
            Error::SingularPoint => write!(f, "all partial derivatives vanish at the point"),
            Error::LineOnCurve => write!(f, "curve restricted to the line vanishes identically"),
            Error::DichotomyViolation => {
                write!(f, "restriction to the line violates the chord/tangent dichotomy")
            }
            Error::PointAtInfinity => {
                write!(f, "multiple-intersection test is undefined at the point at infinity")
            }
            Error::TripleCoincidence => write!(f, "three points coincide"),
            Error::WitnessExtractionFailed => {
                write!(f, "tangent X/Y components both vanish; cannot extract witness")
            }
            Error::RankDeficient { rank, expected } => {
                write!(f, "constraint matrix has rank {rank}, expected {expected}")
            }
            Error::KernelDimUnexpected { dim } => {
                write!(f, "kernel dimension {dim}, expected 2")
            }
            Error::SpanFailure => {
                write!(f, "vector is not a combination of the two kernel generators")
            }
            Error::ChainCheckFailed { name } => write!(f, "identity check '{name}' failed"),
            Error::UnmatchedPattern => {
                write!(f, "coincidence pattern outside the six reduction cases")
            }
            Error::DepthExceeded => write!(f, "reduction recursion exceeded depth cap"),
        }
    }
}
