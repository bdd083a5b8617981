//! Octonion lift `O_n = V_n e0 + V_{n+1} e1 + ... + V_{n+7} e7` and its
//! identities: recurrence, closed form, generating numerator (see
//! [`crate::genfunc`]), summation, norm, index shift and the quadratic
//! relations attached to each root.

use std::borrow::Cow;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cubic::{cubic_roots, CubicRoots};
use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::scalar::Exact;
use crate::sequence::{seq_terms, RecurrenceParams};

/// Parameters, a prefix of exact terms and (when the cubic is in the
/// one-real-root regime) its roots. Read-only after construction.
#[derive(Debug, Clone)]
pub struct OctSequenceContext<T> {
    params: RecurrenceParams<T>,
    terms: Vec<T>,
    roots: std::result::Result<CubicRoots, Error>,
}

impl<T: Exact> OctSequenceContext<T> {
    /// Caches enough terms for `oct_term(n)` and its neighbours up to
    /// `n = n_max`; larger indices are still computed on demand.
    pub fn new(params: RecurrenceParams<T>, n_max: usize) -> Self {
        let terms = seq_terms(&params, n_max + 10);
        let roots = cubic_roots(&params);
        OctSequenceContext {
            params,
            terms,
            roots,
        }
    }

    pub fn params(&self) -> &RecurrenceParams<T> {
        &self.params
    }

    pub fn roots(&self) -> Result<&CubicRoots> {
        self.roots.as_ref().map_err(Clone::clone)
    }

    /// Exact `V_k`.
    pub fn v(&self, k: usize) -> Cow<'_, T> {
        if let Some(v) = self.terms.get(k) {
            return Cow::Borrowed(v);
        }
        let len = self.terms.len();
        let mut w = [
            self.terms[len - 3].clone(),
            self.terms[len - 2].clone(),
            self.terms[len - 1].clone(),
        ];
        for _ in len..=k {
            let next = self.params.step([&w[0], &w[1], &w[2]]);
            let [_, b, c] = w;
            w = [b, c, next];
        }
        Cow::Owned(w[2].clone())
    }

    pub fn oct_term(&self, n: usize) -> Octonion<T> {
        Octonion::from_fn(|l| self.v(n + l).into_owned())
    }

    /// Both sides of `r O_{n+1} + s O_n + t O_{n-1} = O_{n+2}`.
    pub fn recurrence_check(&self, n: usize) -> Result<(Octonion<T>, Octonion<T>)> {
        if n < 1 {
            return Err(Error::IndexTooSmall {
                what: "octonion recurrence",
                min: 1,
                got: n as u64,
            });
        }
        let p = &self.params;
        let lhs = &(&self.oct_term(n + 1).scale(&p.r) + &self.oct_term(n).scale(&p.s))
            + &self.oct_term(n - 1).scale(&p.t);
        Ok((lhs, self.oct_term(n + 2)))
    }

    /// `O_n` evaluated from the roots.
    pub fn oct_binet(&self, n: usize) -> Result<Octonion<Complex64>> {
        let roots = self.roots()?;
        let n = n as u32;
        let [da, d1, d2] = roots.denominators();
        let [a, w1, w2] = roots.roots();
        let term = |w: Complex64, x: Complex64, d: Complex64| {
            RootOctonion::new(x)
                .as_octonion()
                .scale(&(w * x.powu(n) / d))
        };
        Ok(&(&term(roots.p, a, da) + &term(roots.q, w1, d1)) + &term(roots.r, w2, d2))
    }

    /// Exact `O_0 + ... + O_n`.
    pub fn direct_sum(&self, n: usize) -> Octonion<T> {
        (0..=n).map(|l| self.oct_term(l)).sum()
    }

    /// `(O_{n+2} + (1-r) O_{n+1} + t O_n + Ω) / δ`, with `Ω` from
    /// [`omega_const`].
    pub fn sum_octonions(&self, n: usize) -> Result<Octonion<BigRational>> {
        let p = &self.params;
        let delta = p.delta();
        if delta.is_zero() {
            return Err(Error::DegenerateSum);
        }
        let numer = &(&(&self.oct_term(n + 2)
            + &self.oct_term(n + 1).scale(&(T::one() - p.r.clone())))
            + &self.oct_term(n).scale(&p.t))
            + &omega_const(p);
        let delta = delta.to_rational();
        Ok(numer.map(|x| x.to_rational() / delta.clone()))
    }

    /// `Nr²(O_n)` from the closed form. The real part is the norm; the
    /// imaginary part is rounding residue.
    pub fn norm_formula(&self, n: usize) -> Result<Complex64> {
        let roots = self.roots()?;
        let n = n as u32;
        let (a, w1, w2) = (roots.alpha_c(), roots.omega1, roots.omega2);
        let (p, q, r) = (roots.p, roots.q, roots.r);
        let squares = |x: Complex64| (0..8).map(|l| x.powu(2 * l)).sum::<Complex64>();
        let mixed = |x: Complex64| (0..8).map(|l| x.powu(l)).sum::<Complex64>();

        let diag = (w1 - w2).powu(2) * p * p * squares(a) * a.powu(2 * n)
            + (a - w2).powu(2) * q * q * squares(w1) * w1.powu(2 * n)
            + (a - w1).powu(2) * r * r * squares(w2) * w2.powu(2 * n);
        // the PR cross term carries the opposite sign of the other two
        let k = (w1 - w2) * (a - w2) * p * q * mixed(a * w1) * (a * w1).powu(n)
            - (w1 - w2) * (a - w1) * p * r * mixed(a * w2) * (a * w2).powu(n)
            + (a - w1) * (a - w2) * q * r * mixed(w1 * w2) * (w1 * w2).powu(n);
        Ok((diag - k * 2.0) / roots.phi.powu(2))
    }

    /// Both sides of
    /// `O_{n+m} = U_{m-1} O_{n+2} + (s U_{m-2} + t U_{m-3}) O_{n+1} + t U_{m-2} O_n`.
    pub fn shift_formula(&self, n: usize, m: usize) -> Result<(Octonion<T>, Octonion<T>)> {
        let [c2, c1, c0] = shift_coefficients(&self.params, m)?;
        let rhs = &(&self.oct_term(n + 2).scale(&c2) + &self.oct_term(n + 1).scale(&c1))
            + &self.oct_term(n).scale(&c0);
        Ok((self.oct_term(n + m), rhs))
    }

    /// `W x̲ x^{n+2}` against `x² O_{n+2} + x (s O_{n+1} + t O_n) + t O_{n+1}`
    /// for the chosen root line.
    pub fn quad_approx(&self, n: usize, line: RootLine) -> Result<QuadApprox> {
        let roots = self.roots()?;
        let idx = line.index();
        let x = roots.roots()[idx];
        let w = [roots.p, roots.q, roots.r][idx];
        let [_, s, t] = roots.coeffs;
        let (s, t) = (Complex64::new(s, 0.0), Complex64::new(t, 0.0));

        let lhs = RootOctonion::new(x)
            .as_octonion()
            .scale(&(w * x.powu(n as u32 + 2)));
        let o0 = lift(&self.oct_term(n));
        let o1 = lift(&self.oct_term(n + 1));
        let o2 = lift(&self.oct_term(n + 2));
        let rhs =
            &(&o2.scale(&(x * x)) + &(&o1.scale(&s) + &o0.scale(&t)).scale(&x)) + &o1.scale(&t);

        let scale = std::array::from_fn(|l| {
            let (a0, a1, a2) = (
                o0.components()[l].norm(),
                o1.components()[l].norm(),
                o2.components()[l].norm(),
            );
            x.norm_sqr() * a2 + x.norm() * (s.norm() * a1 + t.norm() * a0) + t.norm() * a1
        });
        Ok(QuadApprox { lhs, rhs, scale })
    }
}

/// `U_{m-1}`, `s U_{m-2} + t U_{m-3}` and `t U_{m-2}`: the multipliers of
/// `O_{n+2}`, `O_{n+1}` and `O_n` in the index-shift identity.
pub fn shift_coefficients<T: Exact>(params: &RecurrenceParams<T>, m: usize) -> Result<[T; 3]> {
    if m < 3 {
        return Err(Error::IndexTooSmall {
            what: "index shift",
            min: 3,
            got: m as u64,
        });
    }
    let u = seq_terms(&params.companion(), m);
    let (s, t) = (&params.s, &params.t);
    Ok([
        u[m - 1].clone(),
        s.clone() * u[m - 2].clone() + t.clone() * u[m - 3].clone(),
        t.clone() * u[m - 2].clone(),
    ])
}

/// Component `l` is `λ - δ (V_0 + ... + V_{l-1})`.
pub fn omega_const<T: Exact>(params: &RecurrenceParams<T>) -> Octonion<T> {
    use crate::sequence::{sum_lambda, V0Coefficient};
    let lambda = sum_lambda(params, V0Coefficient::RPlusSMinusOne);
    let delta = params.delta();
    let v = seq_terms(params, 7);
    let mut prefix = T::zero();
    Octonion::from_fn(|l| {
        let c = lambda.clone() - delta.clone() * prefix.clone();
        if l < 7 {
            prefix = prefix.clone() + v[l].clone();
        }
        c
    })
}

pub fn lift<T: Exact>(o: &Octonion<T>) -> Octonion<Complex64> {
    o.map(Exact::to_complex)
}

/// `x̲ = Σ x^l e_l` for a root `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootOctonion(Octonion<Complex64>);

impl RootOctonion {
    pub fn new(x: Complex64) -> Self {
        RootOctonion(Octonion::from_fn(|l| x.powu(l as u32)))
    }

    pub fn as_octonion(&self) -> &Octonion<Complex64> {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootLine {
    Alpha,
    Omega1,
    Omega2,
}

impl RootLine {
    pub const ALL: [RootLine; 3] = [RootLine::Alpha, RootLine::Omega1, RootLine::Omega2];

    fn index(self) -> usize {
        match self {
            RootLine::Alpha => 0,
            RootLine::Omega1 => 1,
            RootLine::Omega2 => 2,
        }
    }
}

/// Result of [`OctSequenceContext::quad_approx`].
///
/// `scale[l]` is the sum of the magnitudes of the terms making up
/// `rhs[l]`. For the complex roots `lhs` is tiny while the terms are of the
/// size of the sequence itself, so the error of `rhs` is bounded by
/// `scale` times machine precision, not by `|lhs|`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadApprox {
    pub lhs: Octonion<Complex64>,
    pub rhs: Octonion<Complex64>,
    pub scale: [f64; 8],
}

impl QuadApprox {
    /// Largest `|lhs_l - rhs_l| / max(1, |lhs_l|, scale_l)`.
    pub fn relative_residual(&self) -> f64 {
        self.residual_with(|l| self.lhs.components()[l].norm().max(self.scale[l]))
    }

    /// Largest `|lhs_l - rhs_l| / max(1, |lhs_l|)`.
    pub fn residual_against_lhs(&self) -> f64 {
        self.residual_with(|l| self.lhs.components()[l].norm())
    }

    pub fn max_abs_residual(&self) -> f64 {
        (&self.lhs - &self.rhs).max_abs()
    }

    fn residual_with(&self, denom: impl Fn(usize) -> f64) -> f64 {
        (0..8)
            .map(|l| {
                (self.lhs.components()[l] - self.rhs.components()[l]).norm() / denom(l).max(1.0)
            })
            .fold(0.0, f64::max)
    }
}
