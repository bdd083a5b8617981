use thiserror::Error;

use crate::scalar::ScalarKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("scalar variant mismatch: {left} vs {right}")]
    VariantMismatch { left: ScalarKind, right: ScalarKind },

    #[error("{op} requires a field scalar, got {kind}")]
    NotAField { op: &'static str, kind: ScalarKind },

    #[error("cannot invert the zero octonion")]
    ZeroInverse,

    #[error(
        "norm is only defined for real components (component e{index} has imaginary part {imag})"
    )]
    ComplexNorm { index: usize, imag: f64 },

    #[error("{what} needs an index of at least {min}, got {got}")]
    IndexTooSmall {
        what: &'static str,
        min: u64,
        got: u64,
    },

    #[error("summation formula undefined: r + s + t - 1 = 0")]
    DegenerateSum,

    #[error("characteristic cubic is outside the one-real-root regime (discriminant {discriminant} <= 0)")]
    OutOfRegime { discriminant: String },

    #[error("roots are numerically repeated (|phi| = {phi:e} below {threshold:e})")]
    RepeatedRoots { phi: f64, threshold: f64 },

    #[error("sequence context has no cubic roots")]
    MissingRoots,

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
