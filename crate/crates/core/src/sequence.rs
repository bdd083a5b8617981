//! Generalized Tribonacci sequences `V_n = r V_{n-1} + s V_{n-2} + t V_{n-3}`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Exact;

/// Coefficients `(r, s, t)` and initial values `(V0, V1, V2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RecurrenceParams<T> {
    pub r: T,
    pub s: T,
    pub t: T,
    pub v0: T,
    pub v1: T,
    pub v2: T,
}

impl<T: Exact> RecurrenceParams<T> {
    pub fn new(r: T, s: T, t: T, v0: T, v1: T, v2: T) -> Self {
        RecurrenceParams {
            r,
            s,
            t,
            v0,
            v1,
            v2,
        }
    }

    pub fn from_i64(rst: [i64; 3], initial: [i64; 3]) -> Self {
        let [r, s, t] = rst.map(T::from_i64);
        let [v0, v1, v2] = initial.map(T::from_i64);
        RecurrenceParams {
            r,
            s,
            t,
            v0,
            v1,
            v2,
        }
    }

    /// `r + s + t - 1`, the divisor of the summation formulas.
    pub fn delta(&self) -> T {
        self.r.clone() + self.s.clone() + self.t.clone() - T::one()
    }

    /// The fundamental solution `U_n = V_n(0, 1, r; r, s, t)`.
    pub fn companion(&self) -> Self {
        RecurrenceParams {
            r: self.r.clone(),
            s: self.s.clone(),
            t: self.t.clone(),
            v0: T::zero(),
            v1: T::one(),
            v2: self.r.clone(),
        }
    }

    pub fn to_rational(&self) -> RecurrenceParams<BigRational> {
        RecurrenceParams {
            r: self.r.to_rational(),
            s: self.s.to_rational(),
            t: self.t.to_rational(),
            v0: self.v0.to_rational(),
            v1: self.v1.to_rational(),
            v2: self.v2.to_rational(),
        }
    }

    pub fn is_zero_initial(&self) -> bool {
        self.v0.is_zero() && self.v1.is_zero() && self.v2.is_zero()
    }

    pub fn terms(&self) -> Terms<T> {
        Terms {
            params: self.clone(),
            window: [self.v0.clone(), self.v1.clone(), self.v2.clone()],
        }
    }

    /// Next value given the previous three, oldest first.
    pub fn step(&self, prev: [&T; 3]) -> T {
        self.r.clone() * prev[2].clone()
            + self.s.clone() * prev[1].clone()
            + self.t.clone() * prev[0].clone()
    }
}

impl<T: Exact> fmt::Display for RecurrenceParams<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V({}, {}, {}; {}, {}, {})",
            self.v0, self.v1, self.v2, self.r, self.s, self.t
        )
    }
}

/// Infinite iterator over `V_0, V_1, ...`.
#[derive(Debug, Clone)]
pub struct Terms<T> {
    params: RecurrenceParams<T>,
    window: [T; 3],
}

impl<T: Exact> Iterator for Terms<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let next = self
            .params
            .step([&self.window[0], &self.window[1], &self.window[2]]);
        let [a, b, c] = std::mem::replace(&mut self.window, [T::zero(), T::zero(), T::zero()]);
        self.window = [b, c, next];
        Some(a)
    }
}

pub fn seq_terms<T: Exact>(params: &RecurrenceParams<T>, count: usize) -> Vec<T> {
    params.terms().take(count).collect()
}

pub fn seq_term<T: Exact>(params: &RecurrenceParams<T>, n: u64) -> T {
    params
        .terms()
        .nth(n as usize)
        .expect("the term iterator never ends")
}

pub fn u_term<T: Exact>(params: &RecurrenceParams<T>, n: u64) -> T {
    seq_term(&params.companion(), n)
}

/// Both sides of `V_{n+1} = V2 U_n + (s V1 + t V0) U_{n-1} + t V1 U_{n-2}`.
pub fn companion_identity<T: Exact>(params: &RecurrenceParams<T>, n: u64) -> Result<(T, T)> {
    if n < 2 {
        return Err(Error::IndexTooSmall {
            what: "companion expansion",
            min: 2,
            got: n,
        });
    }
    let u = seq_terms(&params.companion(), n as usize + 1);
    let n = n as usize;
    let p = params;
    let lhs = seq_term(p, n as u64 + 1);
    let rhs = p.v2.clone() * u[n].clone()
        + (p.s.clone() * p.v1.clone() + p.t.clone() * p.v0.clone()) * u[n - 1].clone()
        + p.t.clone() * p.v1.clone() * u[n - 2].clone();
    Ok((lhs, rhs))
}

/// Which coefficient multiplies `V0` in the scalar summation constant.
///
/// The commonly quoted form of the constant carries `(r - s - 1) V0`; the
/// value that matches direct summation is `(r + s - 1) V0`. The quoted
/// variant is kept only so diagnostics can exhibit counterexamples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum V0Coefficient {
    RPlusSMinusOne,
    RMinusSMinusOne,
}

/// `λ = (r + s - 1) V0 + (r - 1) V1 - V2`.
pub fn sum_lambda<T: Exact>(params: &RecurrenceParams<T>, coeff: V0Coefficient) -> T {
    let p = params;
    let one = T::one();
    let c0 = match coeff {
        V0Coefficient::RPlusSMinusOne => p.r.clone() + p.s.clone() - one.clone(),
        V0Coefficient::RMinusSMinusOne => p.r.clone() - p.s.clone() - one.clone(),
    };
    c0 * p.v0.clone() + (p.r.clone() - one) * p.v1.clone() - p.v2.clone()
}

/// Closed form for `V_0 + ... + V_n`.
pub fn partial_sum_formula<T: Exact>(params: &RecurrenceParams<T>, n: u64) -> Result<BigRational> {
    partial_sum_formula_with(params, n, V0Coefficient::RPlusSMinusOne)
}

pub fn partial_sum_formula_with<T: Exact>(
    params: &RecurrenceParams<T>,
    n: u64,
    coeff: V0Coefficient,
) -> Result<BigRational> {
    let delta = params.delta();
    if delta.is_zero() {
        return Err(Error::DegenerateSum);
    }
    let v = seq_terms(params, n as usize + 3);
    let n = n as usize;
    let p = params;
    let numer = v[n + 2].clone()
        + (T::one() - p.r.clone()) * v[n + 1].clone()
        + p.t.clone() * v[n].clone()
        + sum_lambda(p, coeff);
    Ok(numer.to_rational() / delta.to_rational())
}

pub fn direct_sum<T: Exact>(params: &RecurrenceParams<T>, n: u64) -> T {
    params
        .terms()
        .take(n as usize + 1)
        .fold(T::zero(), |acc, v| acc + v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    Tribonacci,
    Padovan,
    Narayana,
    ThirdOrderJacobsthal,
}

impl Preset {
    pub const ALL: [Preset; 4] = [
        Preset::Tribonacci,
        Preset::Padovan,
        Preset::Narayana,
        Preset::ThirdOrderJacobsthal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Tribonacci => "tribonacci",
            Preset::Padovan => "padovan",
            Preset::Narayana => "narayana",
            Preset::ThirdOrderJacobsthal => "third_order_jacobsthal",
        }
    }

    pub fn params<T: Exact>(self) -> RecurrenceParams<T> {
        preset_lookup(self)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

pub fn preset_lookup<T: Exact>(preset: Preset) -> RecurrenceParams<T> {
    let (rst, initial) = match preset {
        Preset::Tribonacci => ([1, 1, 1], [0, 1, 1]),
        Preset::Padovan => ([0, 1, 1], [0, 1, 0]),
        Preset::Narayana => ([1, 0, 1], [0, 1, 1]),
        Preset::ThirdOrderJacobsthal => ([1, 1, 2], [0, 1, 1]),
    };
    RecurrenceParams::from_i64(rst, initial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = RecurrenceParams<BigInt>;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn preset_prefixes() {
        let expect: [(Preset, [i64; 10]); 4] = [
            (Preset::Tribonacci, [0, 1, 1, 2, 4, 7, 13, 24, 44, 81]),
            (Preset::Padovan, [0, 1, 0, 1, 1, 1, 2, 2, 3, 4]),
            (Preset::Narayana, [0, 1, 1, 1, 2, 3, 4, 6, 9, 13]),
            (
                Preset::ThirdOrderJacobsthal,
                [0, 1, 1, 2, 5, 9, 18, 37, 73, 146],
            ),
        ];
        for (preset, values) in expect {
            assert_eq!(
                seq_terms(&preset.params::<BigInt>(), 10),
                ints(&values),
                "{preset}"
            );
        }
    }

    #[test]
    fn single_terms() {
        assert_eq!(
            seq_term(&Preset::Tribonacci.params::<BigInt>(), 7),
            BigInt::from(24)
        );
        assert_eq!(
            seq_term(&Preset::ThirdOrderJacobsthal.params::<BigInt>(), 7),
            BigInt::from(37)
        );
        let zero = P::from_i64([3, -2, 5], [0, 0, 0]);
        assert!(seq_term(&zero, 25) == BigInt::from(0));
    }

    #[test]
    fn companion_terms() {
        let any = P::from_i64([4, -1, 3], [7, 7, 7]);
        assert_eq!(u_term(&any, 1), BigInt::from(1));
        assert_eq!(u_term(&any, 0), BigInt::from(0));
        assert_eq!(u_term(&any, 2), BigInt::from(4));
        assert_eq!(
            u_term(&Preset::Tribonacci.params::<BigInt>(), 5),
            BigInt::from(7)
        );
        assert_eq!(
            u_term(&Preset::Narayana.params::<BigInt>(), 6),
            BigInt::from(4)
        );
    }

    #[test]
    fn companion_expansion() {
        let t = Preset::Tribonacci.params::<BigInt>();
        assert_eq!(
            companion_identity(&t, 6).unwrap(),
            (BigInt::from(24), BigInt::from(24))
        );
        let pad = Preset::Padovan.params::<BigInt>();
        assert_eq!(
            companion_identity(&pad, 8).unwrap(),
            (BigInt::from(4), BigInt::from(4))
        );
        let zero = P::from_i64([2, 3, 4], [0, 0, 0]);
        assert_eq!(
            companion_identity(&zero, 5).unwrap(),
            (BigInt::from(0), BigInt::from(0))
        );
        assert!(matches!(
            companion_identity(&t, 1),
            Err(Error::IndexTooSmall { min: 2, got: 1, .. })
        ));
    }

    #[test]
    fn partial_sums() {
        let t = Preset::Tribonacci.params::<BigInt>();
        assert_eq!(partial_sum_formula(&t, 5).unwrap(), rat(15));
        assert_eq!(direct_sum(&t, 5), BigInt::from(15));

        let witness = P::from_i64([1, 1, 1], [1, 0, 0]);
        assert_eq!(partial_sum_formula(&witness, 0).unwrap(), rat(1));
        assert_eq!(
            partial_sum_formula_with(&witness, 0, V0Coefficient::RMinusSMinusOne).unwrap(),
            rat(0)
        );

        let degenerate = P::from_i64([1, 1, -1], [0, 1, 1]);
        assert_eq!(
            partial_sum_formula(&degenerate, 3),
            Err(Error::DegenerateSum)
        );
    }

    #[test]
    fn rational_params_stay_exact() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let p = RecurrenceParams::new(half.clone(), half.clone(), rat(1), rat(0), rat(1), half);
        let sum = direct_sum(&p, 12);
        assert_eq!(partial_sum_formula(&p, 12).unwrap(), sum);
    }

    #[test]
    fn preset_names_parse() {
        assert_eq!(
            "third-order-jacobsthal".parse::<Preset>().unwrap(),
            Preset::ThirdOrderJacobsthal
        );
        assert_eq!("Tribonacci".parse::<Preset>().unwrap(), Preset::Tribonacci);
        assert!(matches!(
            "fibonacci".parse::<Preset>(),
            Err(Error::UnknownPreset(_))
        ));
    }
}
