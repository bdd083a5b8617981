//! Roots of `x³ - r x² - s x - t` in the one-real-root regime and the scalar
//! Binet evaluation built on them.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Exact;
use crate::sequence::RecurrenceParams;

/// Roots, discriminant and Binet weights for one parameter set.
///
/// `omega1` is the root with positive imaginary part and `omega2` its
/// conjugate. `p`, `q`, `r` are the initial-value weights attached to
/// `alpha`, `omega1` and `omega2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicRoots {
    pub alpha: f64,
    pub omega1: Complex64,
    pub omega2: Complex64,
    pub delta_disc: f64,
    pub phi: Complex64,
    pub p: Complex64,
    pub q: Complex64,
    pub r: Complex64,
    /// The recurrence coefficients `(r, s, t)` as doubles.
    pub coeffs: [f64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BinetKind {
    /// The sequence itself, weighted by `P, Q, R`.
    V,
    /// The companion `U_n`, whose weights are the roots themselves.
    U,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `r³t/27 - r²s²/108 + rst/6 - s³/27 + t²/4`, exactly.
pub fn discriminant_exact<T: Exact>(params: &RecurrenceParams<T>) -> BigRational {
    let (r, s, t) = (
        params.r.to_rational(),
        params.s.to_rational(),
        params.t.to_rational(),
    );
    let r2 = &r * &r;
    let r3 = &r2 * &r;
    let s2 = &s * &s;
    let s3 = &s2 * &s;
    &r3 * &t * rat(1, 27) - &r2 * &s2 * rat(1, 108) + &r * &s * &t * rat(1, 6) - s3 * rat(1, 27)
        + &t * &t * rat(1, 4)
}

pub fn discriminant<T: Exact>(params: &RecurrenceParams<T>) -> f64 {
    let [r, s, t] = [&params.r, &params.s, &params.t].map(Exact::to_f64);
    r.powi(3) * t / 27.0 - r * r * s * s / 108.0 + r * s * t / 6.0 - s.powi(3) / 27.0 + t * t / 4.0
}

/// Threshold on `|phi|` below which roots count as repeated.
pub fn distinct_threshold(coeffs: [f64; 3]) -> f64 {
    let m = coeffs.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
    1e-9 * (1.0 + m).powi(3)
}

pub fn cubic_roots<T: Exact>(params: &RecurrenceParams<T>) -> Result<CubicRoots> {
    let exact = discriminant_exact(params);
    if !exact.is_positive() {
        return Err(Error::OutOfRegime {
            discriminant: exact.to_string(),
        });
    }
    let delta_disc = discriminant(params);
    let coeffs = [&params.r, &params.s, &params.t].map(Exact::to_f64);
    let [r, s, t] = coeffs;

    // x = y + r/3 gives y³ + p y + q = 0 with p = -(s + r²/3)
    let p = -(s + r * r / 3.0);
    let half_q = r.powi(3) / 27.0 + r * s / 6.0 + t / 2.0;
    let root_disc = delta_disc.max(0.0).sqrt();
    // A·B = -p/3; take the cube root of the larger radicand directly and
    // recover the other from the product to avoid cancellation.
    let (a, b) = if half_q >= 0.0 {
        let a = (half_q + root_disc).cbrt();
        let b = if a != 0.0 {
            -p / (3.0 * a)
        } else {
            (half_q - root_disc).cbrt()
        };
        (a, b)
    } else {
        let b = (half_q - root_disc).cbrt();
        (-p / (3.0 * b), b)
    };

    let eps = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let shift = Complex64::new(r / 3.0, 0.0);
    let alpha = r / 3.0 + a + b;
    let omega1 = shift + eps * a + eps * eps * b;
    let omega1 = if omega1.im < 0.0 {
        omega1.conj()
    } else {
        omega1
    };
    let omega2 = omega1.conj();
    let al = Complex64::new(alpha, 0.0);

    let phi = (al - omega1) * (al - omega2) * (omega1 - omega2);
    let threshold = distinct_threshold(coeffs);
    if phi.norm() < threshold {
        return Err(Error::RepeatedRoots {
            phi: phi.norm(),
            threshold,
        });
    }

    let [v0, v1, v2] = [&params.v0, &params.v1, &params.v2].map(Exact::to_f64);
    let weight = |x: Complex64, y: Complex64| v2 - (x + y) * v1 + x * y * v0;

    Ok(CubicRoots {
        alpha,
        omega1,
        omega2,
        delta_disc,
        phi,
        p: weight(omega1, omega2),
        q: weight(al, omega2),
        r: weight(al, omega1),
        coeffs,
    })
}

impl CubicRoots {
    pub fn alpha_c(&self) -> Complex64 {
        Complex64::new(self.alpha, 0.0)
    }

    /// `[alpha, omega1, omega2]`.
    pub fn roots(&self) -> [Complex64; 3] {
        [self.alpha_c(), self.omega1, self.omega2]
    }

    pub fn weights(&self, kind: BinetKind) -> [Complex64; 3] {
        match kind {
            BinetKind::V => [self.p, self.q, self.r],
            BinetKind::U => self.roots(),
        }
    }

    /// Signed Binet denominators `(α-ω1)(α-ω2)`, `-(α-ω1)(ω1-ω2)`,
    /// `(α-ω2)(ω1-ω2)`; the sign of the middle term is folded in.
    pub fn denominators(&self) -> [Complex64; 3] {
        let (a, w1, w2) = (self.alpha_c(), self.omega1, self.omega2);
        [
            (a - w1) * (a - w2),
            -((a - w1) * (w1 - w2)),
            (a - w2) * (w1 - w2),
        ]
    }

    /// Residuals of the three Vieta relations against `(r, s, t)`.
    pub fn vieta_residuals(&self) -> [f64; 3] {
        let [r, s, t] = self.coeffs;
        let (a, w1, w2) = (self.alpha_c(), self.omega1, self.omega2);
        [
            (a + w1 + w2 - r).norm(),
            (a * w1 + a * w2 + w1 * w2 + s).norm(),
            (a * w1 * w2 - t).norm(),
        ]
    }
}

/// `V_n` (or `U_n`) from the closed form.
pub fn binet_scalar(roots: &CubicRoots, n: u64, kind: BinetKind) -> Complex64 {
    let n = u32::try_from(n).expect("index fits in u32");
    let exponent = match kind {
        BinetKind::V => n,
        BinetKind::U => n + 1,
    };
    let [p, q, r] = match kind {
        BinetKind::V => roots.weights(BinetKind::V),
        BinetKind::U => [Complex64::new(1.0, 0.0); 3],
    };
    let [da, d1, d2] = roots.denominators();
    let [a, w1, w2] = roots.roots();
    p * a.powu(exponent) / da + q * w1.powu(exponent) / d1 + r * w2.powu(exponent) / d2
}
