use alloc::string::String;

use crate::geometry::PyramidQuadruple;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid pyramid quadruple {quadruple:?}: {reason}")]
    InvalidQuadruple {
        quadruple: [u32; 4],
        reason: &'static str,
    },

    #[error("denominator of a rational function must be nonzero")]
    ZeroDenominator,

    #[error("rational function has a pole at t = 0")]
    PoleAtOrigin,

    #[error("power series coefficient {index} is not an integer")]
    NonIntegralSeries { index: usize },

    #[error("Steinberg sum is inconsistent: {0}")]
    InconsistentSteinberg(&'static str),

    #[error("diagram has no infinite parabolic subgroup; use the Solomon product instead")]
    FiniteGroup,

    #[error("denominator does not vanish at t = 1")]
    NoFactorTMinusOne,

    #[error("polynomial must have constant term -1, found {0}")]
    BadConstantTerm(String),

    #[error("Perron certificate does not match the polynomial")]
    CertificateMismatch,

    #[error("no Perron certificate found for {0}")]
    NoPerronCertificate(PyramidQuadruple),

    #[error("root finder did not converge after {0} iterations; retry with higher precision")]
    RootFinderDiverged(usize),

    #[error("argument outside the admissible domain: {0}")]
    OutOfDomain(&'static str),

    #[error("rectangle corner ({0}, {1}) lies outside the closed unit disk")]
    OutsideDisk(f64, f64),

    #[error("quadrature did not reach the requested tolerance within {0} subdivisions")]
    QuadratureDiverged(usize),

    #[error("no symmetry image of {0:?} is in canonical form")]
    NoCanonicalForm(PyramidQuadruple),
}

pub type Result<T> = core::result::Result<T, Error>;
