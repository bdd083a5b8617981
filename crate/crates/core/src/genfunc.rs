//! Generating function `Σ O_n xⁿ = N(x) / (1 - r x - s x² - t x³)` with an
//! octonion numerator of degree at most two.

use std::fmt;

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::octseq::OctSequenceContext;
use crate::scalar::Exact;

/// Polynomial in a central variable with octonion coefficients, lowest
/// power first. Trailing zero coefficients are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctPolynomial<T> {
    coeffs: Vec<Octonion<T>>,
}

impl<T: Exact> OctPolynomial<T> {
    pub fn new(mut coeffs: Vec<Octonion<T>>) -> Self {
        while coeffs.last().is_some_and(Octonion::is_zero) {
            coeffs.pop();
        }
        OctPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Octonion<T>] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> Octonion<T> {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(Octonion::zero)
    }

    /// The scalar polynomial sitting on basis slot `slot`, padded to `len`
    /// coefficients.
    pub fn slot(&self, slot: usize, len: usize) -> Vec<T> {
        (0..len)
            .map(|k| self.coeff(k).components()[slot].clone())
            .collect()
    }
}

/// Multiplication side for scalar-times-octonion products during expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF<T> {
    pub numerator: OctPolynomial<T>,
    denom: [T; 4],
}

impl<T: Exact> RationalGF<T> {
    /// Denominator `1 - r x - s x² - t x³`.
    pub fn new(numerator: OctPolynomial<T>, r: T, s: T, t: T) -> Self {
        RationalGF {
            numerator,
            denom: [T::one(), -r, -s, -t],
        }
    }

    pub fn denominator(&self) -> &[T; 4] {
        &self.denom
    }

    pub fn expand(&self, count: usize) -> Result<Vec<Octonion<T>>> {
        self.expand_on(count, Side::Left)
    }

    /// Series coefficients from `c_n = N_n - Σ_{k=1..3} d_k c_{n-k}`.
    pub fn expand_on(&self, count: usize, side: Side) -> Result<Vec<Octonion<T>>> {
        if count == 0 {
            return Err(Error::InvalidConfig(
                "series expansion needs at least one coefficient".into(),
            ));
        }
        let mut out: Vec<Octonion<T>> = Vec::with_capacity(count);
        for n in 0..count {
            let mut c = self.numerator.coeff(n);
            for k in 1..=3.min(n) {
                let scalar = Octonion::from_real(self.denom[k].clone());
                let prev = &out[n - k];
                let term = match side {
                    Side::Left => &scalar * prev,
                    Side::Right => prev * &scalar,
                };
                c = &c - &term;
            }
            out.push(c);
        }
        Ok(out)
    }
}

pub fn gf_numerator<T: Exact>(ctx: &OctSequenceContext<T>) -> OctPolynomial<T> {
    let p = ctx.params();
    let (o0, o1, o2) = (ctx.oct_term(0), ctx.oct_term(1), ctx.oct_term(2));
    let c1 = &o1 - &o0.scale(&p.r);
    let c2 = &(&o2 - &o1.scale(&p.r)) - &o0.scale(&p.s);
    OctPolynomial::new(vec![o0, c1, c2])
}

pub fn generating_function<T: Exact>(ctx: &OctSequenceContext<T>) -> RationalGF<T> {
    let p = ctx.params();
    RationalGF::new(gf_numerator(ctx), p.r.clone(), p.s.clone(), p.t.clone())
}

pub fn gf_expand<T: Exact>(gf: &RationalGF<T>, count: usize) -> Result<Vec<Octonion<T>>> {
    gf.expand(count)
}

/// Exact coefficient in the text form used by the CLI: negatives are
/// parenthesized so the surrounding `+`/`-` stays unambiguous.
fn coeff_text<T: Exact>(c: &T) -> String {
    if *c < T::zero() {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// `c0 + c1 x + c2 x^2`, every power shown.
pub fn slot_polynomial_string<T: Exact>(coeffs: &[T]) -> String {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| match k {
            0 => coeff_text(c),
            1 => format!("{} x", coeff_text(c)),
            _ => format!("{} x^{k}", coeff_text(c)),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl<T: Exact> RationalGF<T> {
    /// `1 - r x - s x^2 - t x^3` with the values substituted.
    pub fn denominator_string(&self) -> String {
        let [_, neg_r, neg_s, neg_t] = &self.denom;
        format!(
            "1 - {} x - {} x^2 - {} x^3",
            coeff_text(&-neg_r.clone()),
            coeff_text(&-neg_s.clone()),
            coeff_text(&-neg_t.clone())
        )
    }
}

impl<T: Exact> fmt::Display for RationalGF<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for slot in 0..8 {
            writeln!(
                f,
                "e{slot}: {}",
                slot_polynomial_string(&self.numerator.slot(slot, 3))
            )?;
        }
        write!(f, "denominator: {}", self.denominator_string())
    }
}
