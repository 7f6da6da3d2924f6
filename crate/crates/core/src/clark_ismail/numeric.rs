//! Floating-point evaluation of `G_j^{(k)}(v)`, `f_j(v)` and the Bernoulli
//! lower-bound series.
//!
//! The closed form is a Leibniz expansion of `v^j * w` with
//! `w = 1/(1-e^{-v})`. Each `w^{(l)}` is a polynomial in
//! `eps = 1/(e^v-1) = w-1` with integer coefficients (since
//! `d eps/dv = -eps - eps^2`). Writing it in `eps` rather than `w` keeps
//! the sum well conditioned for large `v`, where `w -> 1` and
//! the `w`-polynomials cancel catastrophically. For small `|v|` the
//! Maclaurin series is used instead.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::derivatives::g_value_bernoulli;
use crate::combinatorics::{binomial, factorial, falling_factorial};
use crate::error::{Error, Result};
use crate::rational::{int, to_f64, Rational};

/// Below this `|v|` the evaluators switch to the Maclaurin series.
pub const SMALL_V: f64 = 0.5;
/// Number of Maclaurin terms used near the origin.
pub const MACLAURIN_TERMS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub v: f64,
    pub j: usize,
    pub k: usize,
}

impl EvalPoint {
    pub fn new(j: usize, k: usize, v: f64) -> Self {
        EvalPoint { v, j, k }
    }
}

/// `eps`-polynomials of `w, w', ..., w^{(k)}`.
fn w_derivative_polys(k: usize) -> Vec<Vec<BigInt>> {
    let mut polys = vec![vec![BigInt::from(1), BigInt::from(1)]];
    for l in 1..=k {
        let prev = &polys[l - 1];
        // d/dv p(eps) = p'(eps) * (-eps - eps^2)
        let mut next = vec![BigInt::zero(); prev.len() + 1];
        for (i, c) in prev.iter().enumerate().skip(1) {
            let d = c * i;
            next[i] -= &d;
            next[i + 1] -= &d;
        }
        polys.push(next);
    }
    polys
}

/// A reusable evaluation plan for one `(j, k)`.
#[derive(Debug, Clone)]
pub struct ClosedFormEvaluator {
    j: usize,
    k: usize,
    /// `(power of v, coefficients in eps)`
    terms: Vec<(i32, Vec<f64>)>,
    maclaurin: Vec<f64>,
}

impl ClosedFormEvaluator {
    pub fn new(j: usize, k: usize) -> Result<Self> {
        if j == 0 {
            return Err(Error::argument("j must be at least 1"));
        }
        let polys = w_derivative_polys(k);
        let j_rat = int(j as i64);
        let mut terms = Vec::new();
        for (l, poly) in polys.iter().enumerate() {
            let fall = falling_factorial(&j_rat, k - l);
            if fall.is_zero() {
                continue;
            }
            let scale = fall.to_integer() * binomial(k as i64, l as i64);
            let coeffs = poly
                .iter()
                .map(|c| (c * &scale).to_f64().expect("finite coefficient"))
                .collect();
            terms.push((j as i32 - k as i32 + l as i32, coeffs));
        }
        let maclaurin = (0..MACLAURIN_TERMS)
            .map(|i| to_f64(&(g_value_bernoulli(j, k + i) / Rational::from_integer(factorial(i)))))
            .collect();
        Ok(ClosedFormEvaluator { j, k, terms, maclaurin })
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn eval(&self, v: f64) -> Result<f64> {
        if !v.is_finite() {
            return Err(Error::argument(format!("v must be finite, got {v}")));
        }
        if v == 0.0 {
            return Err(Error::argument("v = 0: use the exact routes (table mode) for values at the origin"));
        }
        if v.abs() < SMALL_V {
            return Ok(self.maclaurin.iter().rev().fold(0.0, |acc, c| acc * v + c));
        }
        let eps = 1.0 / v.exp_m1();
        Ok(self
            .terms
            .iter()
            .map(|(p, coeffs)| v.powi(*p) * coeffs.iter().rev().fold(0.0, |acc, c| acc * eps + c))
            .sum())
    }
}

/// `G_j^{(k)}(v)` for `v != 0`.
pub fn g_eval_numeric(p: EvalPoint) -> Result<f64> {
    ClosedFormEvaluator::new(p.j, p.k)?.eval(p.v)
}

/// `f_j(v) = G_j^{(j)}(v)` for `v != 0`.
pub fn f_eval_numeric(j: usize, v: f64) -> Result<f64> {
    g_eval_numeric(EvalPoint::new(j, j, v))
}

/// `beta = 2 + ln(1 - 6/pi^2)/ln 2`.
pub fn bernoulli_bound_beta() -> f64 {
    use std::f64::consts::{LN_2, PI};
    2.0 + (1.0 - 6.0 / (PI * PI)).ln() / LN_2
}

/// Partial sum of the lower-bound series for `f_j(v)/j!`:
/// `1/2 + (1/pi) [sum_r C(j+4r-3, j)/(1-2^{alpha-4r+2}) (v/2pi)^{4r-3}
///  - sum_r C(j+4r-1, j)/(1-2^{beta-4r}) (v/2pi)^{4r-1}]`, `alpha = 0`.
pub fn f_lower_bound_series(j: usize, v: f64, terms: usize) -> f64 {
    use std::f64::consts::PI;
    let alpha = 0.0;
    let beta = bernoulli_bound_beta();
    let x = v / (2.0 * PI);
    let binom = |n: usize| binomial(n as i64, j as i64).to_f64().expect("finite binomial");
    let mut sum = 0.0;
    for r in 1..=terms {
        let r4 = 4.0 * r as f64;
        sum += binom(j + 4 * r - 3) / (1.0 - (alpha - r4 + 2.0).exp2()) * x.powi(4 * r as i32 - 3);
        sum -= binom(j + 4 * r - 1) / (1.0 - (beta - r4).exp2()) * x.powi(4 * r as i32 - 1);
    }
    0.5 + sum / PI
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_polynomials() {
        let p = w_derivative_polys(3);
        let ints = |v: &Vec<BigInt>| v.iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(ints(&p[1]), vec![0, -1, -1]);
        assert_eq!(ints(&p[2]), vec![0, 1, 3, 2]);
        assert_eq!(ints(&p[3]), vec![0, -1, -7, -12, -6]);
    }

    #[test]
    fn examples() {
        let g = g_eval_numeric(EvalPoint::new(1, 0, 50.0)).unwrap();
        assert!((g - 50.0).abs() < 1e-12);
        let g = g_eval_numeric(EvalPoint::new(2, 0, 1.0)).unwrap();
        assert!((g - 1.0 / (1.0 - (-1.0f64).exp())).abs() < 1e-14);
        let g = g_eval_numeric(EvalPoint::new(2, 2, 0.001)).unwrap();
        assert!((g - 1.0).abs() < 1e-2);
        assert!((f_eval_numeric(2, 1e-4).unwrap() - 1.0).abs() < 1e-3);
        assert!((f_eval_numeric(3, 40.0).unwrap() - 6.0).abs() < 1e-9);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(g_eval_numeric(EvalPoint::new(1, 0, 0.0)), Err(Error::Argument(_))));
        assert!(f_eval_numeric(1, f64::NAN).is_err());
        assert!(ClosedFormEvaluator::new(0, 1).is_err());
    }

    #[test]
    fn branches_meet() {
        // the two evaluation branches agree on either side of the switch
        for j in 1..=8 {
            for k in 0..=8 {
                let e = ClosedFormEvaluator::new(j, k).unwrap();
                let below = e.eval(SMALL_V * (1.0 - 1e-9)).unwrap();
                let above = e.eval(SMALL_V).unwrap();
                let scale = below.abs().max(1.0);
                assert!((below - above).abs() / scale < 1e-8, "j={j} k={k}: {below} vs {above}");
            }
        }
    }

    #[test]
    fn lower_bound() {
        assert!((bernoulli_bound_beta() - 0.6491).abs() < 1e-4);
        let bound = f_lower_bound_series(2, 0.5, 5);
        assert!(bound < f_eval_numeric(2, 0.5).unwrap() / 2.0);
        assert!((f_lower_bound_series(3, 1e-9, 5) - 0.5).abs() < 1e-8);
    }
}
