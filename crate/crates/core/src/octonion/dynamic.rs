use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use super::Octonion;
use crate::error::{Error, Result};
use crate::scalar::{format_complex, Scalar, ScalarKind};

/// An octonion whose scalar ring is chosen at run time.
///
/// All eight components share one ring by construction; binary operations
/// on two different rings fail with [`Error::VariantMismatch`].
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum AnyOctonion {
    Int(Octonion<BigInt>),
    Rational(Octonion<BigRational>),
    Complex(Octonion<Complex64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AddMode {
    Add,
    Sub,
}

macro_rules! same_ring {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr) => {
        match ($a, $b) {
            (AnyOctonion::Int($x), AnyOctonion::Int($y)) => Ok(AnyOctonion::Int($body)),
            (AnyOctonion::Rational($x), AnyOctonion::Rational($y)) => {
                Ok(AnyOctonion::Rational($body))
            }
            (AnyOctonion::Complex($x), AnyOctonion::Complex($y)) => Ok(AnyOctonion::Complex($body)),
            (a, b) => Err(Error::VariantMismatch {
                left: a.kind(),
                right: b.kind(),
            }),
        }
    };
}

impl AnyOctonion {
    pub fn kind(&self) -> ScalarKind {
        match self {
            AnyOctonion::Int(_) => ScalarKind::ExactInt,
            AnyOctonion::Rational(_) => ScalarKind::ExactRational,
            AnyOctonion::Complex(_) => ScalarKind::ComplexFloat,
        }
    }

    pub fn from_scalars(c: [Scalar; 8]) -> Result<Self> {
        let kind = c[0].kind();
        if let Some(other) = c.iter().find(|s| s.kind() != kind) {
            return Err(Error::VariantMismatch {
                left: kind,
                right: other.kind(),
            });
        }
        Ok(match kind {
            ScalarKind::ExactInt => AnyOctonion::Int(Octonion::from_fn(|i| match &c[i] {
                Scalar::Int(v) => v.clone(),
                _ => unreachable!(),
            })),
            ScalarKind::ExactRational => {
                AnyOctonion::Rational(Octonion::from_fn(|i| match &c[i] {
                    Scalar::Rational(v) => v.clone(),
                    _ => unreachable!(),
                }))
            }
            ScalarKind::ComplexFloat => AnyOctonion::Complex(Octonion::from_fn(|i| match &c[i] {
                Scalar::Complex(v) => *v,
                _ => unreachable!(),
            })),
        })
    }

    /// Parses the eight serialized component strings (`e0..e7`).
    pub fn parse(kind: ScalarKind, parts: &[&str]) -> Result<Self> {
        if parts.len() != 8 {
            return Err(Error::Parse(format!(
                "an octonion needs 8 components, got {}",
                parts.len()
            )));
        }
        let scalars = parts
            .iter()
            .map(|s| Scalar::parse_as(kind, s))
            .collect::<Result<Vec<_>>>()?;
        let arr: [Scalar; 8] = scalars.try_into().expect("length checked");
        Self::from_scalars(arr)
    }

    pub fn components(&self) -> [Scalar; 8] {
        match self {
            AnyOctonion::Int(o) => o.components().clone().map(Scalar::Int),
            AnyOctonion::Rational(o) => o.components().clone().map(Scalar::Rational),
            AnyOctonion::Complex(o) => o.components().map(Scalar::Complex),
        }
    }

    /// Serialized component strings in `e0..e7` order.
    pub fn to_strings(&self) -> [String; 8] {
        match self {
            AnyOctonion::Int(o) => o.components().clone().map(|v| v.to_string()),
            AnyOctonion::Rational(o) => o.components().clone().map(|v| v.to_string()),
            AnyOctonion::Complex(o) => o.components().map(format_complex),
        }
    }

    pub fn add_sub(&self, other: &AnyOctonion, mode: AddMode) -> Result<AnyOctonion> {
        match mode {
            AddMode::Add => same_ring!(self, other, |a, b| a + b),
            AddMode::Sub => same_ring!(self, other, |a, b| a - b),
        }
    }

    pub fn checked_mul(&self, other: &AnyOctonion) -> Result<AnyOctonion> {
        same_ring!(self, other, |a, b| a * b)
    }

    pub fn conj(&self) -> AnyOctonion {
        match self {
            AnyOctonion::Int(o) => AnyOctonion::Int(o.conj()),
            AnyOctonion::Rational(o) => AnyOctonion::Rational(o.conj()),
            AnyOctonion::Complex(o) => AnyOctonion::Complex(o.conj()),
        }
    }

    pub fn norm_sq(&self) -> Result<Scalar> {
        match self {
            AnyOctonion::Int(o) => Ok(Scalar::Int(o.norm_sq())),
            AnyOctonion::Rational(o) => Ok(Scalar::Rational(o.norm_sq())),
            AnyOctonion::Complex(o) => o
                .norm_sq_real()
                .map(|v| Scalar::Complex(Complex64::new(v, 0.0))),
        }
    }

    pub fn inverse(&self) -> Result<AnyOctonion> {
        match self {
            AnyOctonion::Int(_) => Err(Error::NotAField {
                op: "inverse",
                kind: ScalarKind::ExactInt,
            }),
            AnyOctonion::Rational(o) => o.inverse().map(AnyOctonion::Rational),
            AnyOctonion::Complex(o) => {
                o.require_real()?;
                o.inverse().map(AnyOctonion::Complex)
            }
        }
    }
}

impl fmt::Display for AnyOctonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}
