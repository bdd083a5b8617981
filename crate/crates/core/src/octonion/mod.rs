//! Octonions over a generic scalar ring.
//!
//! Products are the bilinear extension of [`MultiplicationTable`]. Scalars
//! are central: [`Octonion::scale`] multiplies every component and agrees
//! with multiplying by the embedded real octonion on either side.

mod dynamic;
mod table;

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{Field, Ring};

pub use dynamic::{AddMode, AnyOctonion};
pub use table::{MultiplicationTable, TableViolation, BASIS_TABLE};

/// Components on `e0..e7`, in that order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Octonion<T> {
    c: [T; 8],
}

impl<T: Ring> Octonion<T> {
    pub fn new(c: [T; 8]) -> Self {
        Octonion { c }
    }

    pub fn zero() -> Self {
        Octonion {
            c: std::array::from_fn(|_| T::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_real(T::one())
    }

    pub fn from_real(x: T) -> Self {
        let mut o = Self::zero();
        o.c[0] = x;
        o
    }

    /// The basis element `e_i`.
    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "basis index {i} out of range");
        let mut o = Self::zero();
        o.c[i] = T::one();
        o
    }

    pub fn from_fn(f: impl FnMut(usize) -> T) -> Self {
        Octonion {
            c: std::array::from_fn(f),
        }
    }

    pub fn components(&self) -> &[T; 8] {
        &self.c
    }

    pub fn into_components(self) -> [T; 8] {
        self.c
    }

    pub fn real(&self) -> &T {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Octonion<U> {
        Octonion::from_fn(|i| f(&self.c[i]))
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| k.clone() * x.clone())
    }

    pub fn conj(&self) -> Self {
        Octonion::from_fn(|i| {
            if i == 0 {
                self.c[0].clone()
            } else {
                -self.c[i].clone()
            }
        })
    }

    /// Sum of squares of the components.
    ///
    /// For real scalars this is `Nr²`. Over `Complex64` it is the complexified
    /// quadratic form; see [`Octonion::norm_sq_real`] for the checked version.
    pub fn norm_sq(&self) -> T {
        self.c
            .iter()
            .fold(T::zero(), |acc, x| acc + x.clone() * x.clone())
    }

    pub fn mul_with(&self, rhs: &Self, table: &MultiplicationTable) -> Self {
        let mut out = Self::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let (sign, k) = table.product(i, j);
                let term = self.c[i].clone() * rhs.c[j].clone();
                let acc = std::mem::replace(&mut out.c[k], T::zero());
                out.c[k] = if sign > 0 { acc + term } else { acc - term };
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        // powers of a single octonion associate
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<T: Field> Octonion<T> {
    /// `conj(p) / Nr²(p)`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.conj().map(|x| x.clone() / n.clone()))
    }
}

impl Octonion<Complex64> {
    /// `Nr²` for complex-typed octonions whose entries are real.
    pub fn norm_sq_real(&self) -> Result<f64> {
        self.require_real()?;
        Ok(self.c.iter().map(|z| z.re * z.re).sum())
    }

    pub fn norm(&self) -> Result<f64> {
        self.norm_sq_real().map(f64::sqrt)
    }

    pub(crate) fn require_real(&self) -> Result<()> {
        match self.c.iter().position(|z| z.im != 0.0) {
            Some(index) => Err(Error::ComplexNorm {
                index,
                imag: self.c[index].im,
            }),
            None => Ok(()),
        }
    }

    /// Largest componentwise modulus.
    pub fn max_abs(&self) -> f64 {
        self.c.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// `a0 + a1 e1 + ... + a7 e7`.
impl<T: Ring + std::fmt::Display> std::fmt::Display for Octonion<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts = std::array::from_fn(|l| self.c[l].to_string());
        f.write_str(&crate::io::octonion_text(&parts))
    }
}

impl<T: Ring> Default for Octonion<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, T: Ring> Add<&'a Octonion<T>> for &'a Octonion<T> {
    type Output = Octonion<T>;

    fn add(self, rhs: &'a Octonion<T>) -> Octonion<T> {
        Octonion::from_fn(|i| self.c[i].clone() + rhs.c[i].clone())
    }
}

impl<'a, T: Ring> Sub<&'a Octonion<T>> for &'a Octonion<T> {
    type Output = Octonion<T>;

    fn sub(self, rhs: &'a Octonion<T>) -> Octonion<T> {
        Octonion::from_fn(|i| self.c[i].clone() - rhs.c[i].clone())
    }
}

impl<'a, T: Ring> Mul<&'a Octonion<T>> for &'a Octonion<T> {
    type Output = Octonion<T>;

    fn mul(self, rhs: &'a Octonion<T>) -> Octonion<T> {
        self.mul_with(rhs, &BASIS_TABLE)
    }
}

impl<T: Ring> Add for Octonion<T> {
    type Output = Octonion<T>;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Ring> Sub for Octonion<T> {
    type Output = Octonion<T>;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Ring> Mul for Octonion<T> {
    type Output = Octonion<T>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Ring> Neg for Octonion<T> {
    type Output = Octonion<T>;

    fn neg(self) -> Self {
        self.map(|x| -x.clone())
    }
}

impl<T: Ring> std::iter::Sum for Octonion<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}
