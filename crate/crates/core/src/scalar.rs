//! Scalar rings the octonion algebra is built over.
//!
//! Typed code works with the concrete rings directly (`BigInt`,
//! `BigRational`, `Complex64`) through the [`Ring`] bound. [`Scalar`] is the
//! dynamically tagged form used at I/O boundaries, where mixing variants is
//! reported as [`Error::VariantMismatch`] instead of being promoted.

use std::fmt;
use std::ops::{Div, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Commutative ring with identity; everything the octonion product needs.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Send
        + Sync
{
}

pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarKind {
    ExactInt,
    ExactRational,
    ComplexFloat,
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarKind::ExactInt => "exact integer",
            ScalarKind::ExactRational => "exact rational",
            ScalarKind::ComplexFloat => "complex float",
        })
    }
}

/// Exact scalar rings usable as recurrence parameters.
pub trait Exact: Ring + Ord + fmt::Display {
    const KIND: ScalarKind;

    fn from_i64(v: i64) -> Self;
    fn to_rational(&self) -> BigRational;
    fn to_scalar(&self) -> Scalar;

    fn to_f64(&self) -> f64 {
        let q = self.to_rational();
        // Ratio::to_f64 keeps precision for large numerators and denominators
        num_traits::ToPrimitive::to_f64(&q).unwrap_or(f64::NAN)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl Exact for BigInt {
    const KIND: ScalarKind = ScalarKind::ExactInt;

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Int(self.clone())
    }
}

impl Exact for BigRational {
    const KIND: ScalarKind = ScalarKind::ExactRational;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }
}

/// Formats a complex value as `re+imi` with 17 significant digits per part.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.16e}{}{:.16e}i", z.re, sign, z.im.abs())
}

/// Formats a real double with 17 significant digits.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn parse_complex(s: &str) -> Result<Complex64> {
    let body = s
        .strip_suffix('i')
        .ok_or_else(|| Error::Parse(format!("complex value `{s}` must end in `i`")))?;
    // the split point is the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
        .ok_or_else(|| Error::Parse(format!("complex value `{s}` has no imaginary part")))?;
    let re: f64 = body[..split]
        .parse()
        .map_err(|_| Error::Parse(format!("bad real part in `{s}`")))?;
    let im: f64 = body[split..]
        .parse()
        .map_err(|_| Error::Parse(format!("bad imaginary part in `{s}`")))?;
    Ok(Complex64::new(re, im))
}

/// Parses an integer or `p/q` rational. Decimal points and exponents are
/// rejected so that every accepted value is exact.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not an integer or p/q rational"));
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::Parse(format!(
            "`{s}` looks like a float; supply an exact p/q rational instead"
        )));
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("`{s}` has a zero denominator")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

/// A dynamically tagged scalar.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Int(BigInt),
    Rational(BigRational),
    Complex(Complex64),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Int(_) => ScalarKind::ExactInt,
            Scalar::Rational(_) => ScalarKind::ExactRational,
            Scalar::Complex(_) => ScalarKind::ComplexFloat,
        }
    }

    pub fn zero_of(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::ExactInt => Scalar::Int(BigInt::zero()),
            ScalarKind::ExactRational => Scalar::Rational(BigRational::zero()),
            ScalarKind::ComplexFloat => Scalar::Complex(Complex64::zero()),
        }
    }

    pub fn parse_as(kind: ScalarKind, s: &str) -> Result<Self> {
        match kind {
            ScalarKind::ExactInt => BigInt::from_str(s.trim())
                .map(Scalar::Int)
                .map_err(|_| Error::Parse(format!("`{s}` is not an integer"))),
            ScalarKind::ExactRational => parse_rational(s).map(Scalar::Rational),
            ScalarKind::ComplexFloat => parse_complex(s.trim()).map(Scalar::Complex),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| a + b, |a, b| a + b, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| a - b, |a, b| a - b, |a, b| a - b)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| a * b, |a, b| a * b, |a, b| a * b)
    }

    fn zip(
        &self,
        other: &Scalar,
        int: impl FnOnce(&BigInt, &BigInt) -> BigInt,
        rat: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        cx: impl FnOnce(Complex64, Complex64) -> Complex64,
    ) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Ok(Scalar::Int(int(a, b))),
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(rat(a, b))),
            (Scalar::Complex(a), Scalar::Complex(b)) => Ok(Scalar::Complex(cx(*a, *b))),
            _ => Err(Error::VariantMismatch {
                left: self.kind(),
                right: other.kind(),
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rational(v) => v.is_zero(),
            Scalar::Complex(v) => v.is_zero(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_negative(),
            Scalar::Rational(v) => v.is_negative(),
            Scalar::Complex(_) => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rational(v) => write!(f, "{v}"),
            Scalar::Complex(v) => f.write_str(&format_complex(*v)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced_with_positive_denominator() {
        let q = parse_rational("4/-6").unwrap();
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
        assert_eq!(Scalar::Rational(q).to_string(), "-2/3");
    }

    #[test]
    fn floats_and_zero_denominators_are_rejected() {
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn mixing_variants_is_an_error() {
        let a = Scalar::Int(BigInt::from(2));
        let b = Scalar::Rational(BigRational::from_integer(BigInt::from(2)));
        assert_eq!(
            a.checked_add(&b),
            Err(Error::VariantMismatch {
                left: ScalarKind::ExactInt,
                right: ScalarKind::ExactRational
            })
        );
        assert_eq!(a.checked_mul(&a).unwrap(), Scalar::Int(BigInt::from(4)));
    }

    #[test]
    fn complex_format_round_trips() {
        for z in [
            Complex64::new(1.8392867552141612, 0.0),
            Complex64::new(-0.41964337760708065, 0.6062907292071994),
            Complex64::new(3.5e-20, -1.25e17),
        ] {
            let s = format_complex(z);
            assert_eq!(parse_complex(&s).unwrap(), z, "{s}");
        }
        assert_eq!(
            format_complex(Complex64::new(1.0, -2.0)),
            "1.0000000000000000e0-2.0000000000000000e0i"
        );
    }
}
