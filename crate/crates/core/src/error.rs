use thiserror::Error;

use crate::arith::Rational;
use crate::calculus::ExtensionElement;
use crate::poly::Polynomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("expected a pure quaternion (zero scalar part)")]
    NotPure,

    #[error("quadratic t^2 + ({b})t + ({c}) is not irreducible over the reals")]
    ReducibleQuadratic { b: Rational, c: Rational },

    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,

    #[error("duplicate pole factor t^2 + ({b})t + ({c})")]
    DuplicateFactor { b: Rational, c: Rational },

    #[error("quadratic t^2 + ({b})t + ({c}) does not divide the denominator")]
    NotAFactor { b: Rational, c: Rational },

    #[error("nonzero residue at factor {factor}{}; the antiderivative has a logarithmic part", residue.as_ref().map(|r| format!(" (residue {r})")).unwrap_or_default())]
    NonzeroResidue {
        factor: Polynomial,
        residue: Option<ExtensionElement>,
    },

    #[error("singular parameter transformation (ad - bc = 0)")]
    SingularTransformation,

    #[error("numerator degree m = {0} is negative; raise the pole multiplicities")]
    NegativeDegree(i64),

    #[error("component {0} of the curve is unbounded")]
    Unbounded(usize),

    #[error("squared speed is not the square of a rational function")]
    NotPythagorean,

    #[error("curves do not share the same generating quaternion polynomial")]
    MismatchedGenerator,

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("{0}")]
    InvalidArgument(String),
}
