//! Truncated formal power series over the rationals.
//!
//! This is the brute-force side of every cross-check: the defining functions
//! `F_1`, `G_j`, `f_j`, `g_j` and the `(e^v - 1)^{j+1}` variant are expanded
//! directly from `exp` by multiplication, inversion and differentiation, with
//! no Stirling or Bernoulli numbers involved.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::combinatorics::factorial;
use crate::rational::{self, from_bigint, int, Rational};
use crate::{Error, Result};

/// The first `order` coefficients of a formal power series; index `i` holds
/// the coefficient of `v^i`.
///
/// Binary operations truncate to the smaller order. Equality compares the
/// coefficients both operands know about.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `v^i`, or zero past the truncation order.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `e^v = sum v^i / i!`.
    pub fn exp(order: usize) -> Self {
        Self::exp_scaled(&Rational::one(), order)
    }

    /// `e^{c v} = sum c^i v^i / i!`.
    pub fn exp_scaled(c: &Rational, order: usize) -> Self {
        Self::new(
            (0..order)
                .map(|i| rational::pow(c, i) / from_bigint(factorial(i)))
                .collect(),
        )
    }

    /// `e^v - 1`.
    pub fn expm1(order: usize) -> Self {
        let mut s = Self::exp(order);
        if order > 0 {
            s.coeffs[0] = Rational::zero();
        }
        s
    }

    /// `(e^v - 1)/v = sum v^i / (i+1)!`.
    pub fn expm1_over_v(order: usize) -> Self {
        Self::new(
            (0..order)
                .map(|i| Rational::new(1.into(), factorial(i + 1)))
                .collect(),
        )
    }

    /// `F_1(v) = (1 - e^{-v})/v = sum (-1)^i v^i / (i+1)!`.
    pub fn f1(order: usize) -> Self {
        Self::new(
            (0..order)
                .map(|i| Rational::new(rational::sign_pow(i).into(), factorial(i + 1)))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..order)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `v^m` for `m >= 0`, keeping the order. For `m < 0`
    /// divides by `v^{-m}`, which requires the leading `-m` coefficients to
    /// vanish and shrinks the order by `-m`.
    pub fn shift(&self, m: i64) -> Result<Self> {
        let order = self.order();
        if m >= 0 {
            let m = (m as usize).min(order);
            let mut out = vec![Rational::zero(); m];
            out.extend(self.coeffs[..order - m].iter().cloned());
            return Ok(Self::new(out));
        }
        let d = m.unsigned_abs() as usize;
        if d > order {
            return Err(Error::argument(format!(
                "cannot divide a series of order {order} by v^{d}"
            )));
        }
        if let Some(i) = self.coeffs[..d].iter().position(|c| !c.is_zero()) {
            return Err(Error::argument(format!(
                "cannot divide by v^{d}: coefficient of v^{i} is nonzero"
            )));
        }
        Ok(Self::new(self.coeffs[d..].to_vec()))
    }

    /// Multiplicative inverse by `b_0 = 1/a_0`,
    /// `b_n = -(1/a_0) sum_{i=1}^{n} a_i b_{n-i}`.
    pub fn invert(&self) -> Result<Self> {
        let a0 = match self.coeffs.first() {
            Some(a0) if !a0.is_zero() => a0,
            _ => {
                return Err(Error::argument(
                    "series inverse needs a nonzero constant term",
                ))
            }
        };
        let inv_a0 = a0.recip();
        let mut b: Vec<Rational> = Vec::with_capacity(self.order());
        b.push(inv_a0.clone());
        for n in 1..self.order() {
            let mut s = Rational::zero();
            for i in 1..=n {
                s += &self.coeffs[i] * &b[n - i];
            }
            b.push(-s * &inv_a0);
        }
        Ok(Self::new(b))
    }

    /// `times`-fold derivative; the order shrinks by `times`.
    pub fn derivative(&self, times: usize) -> Self {
        let order = self.order().saturating_sub(times);
        Self::new(
            (0..order)
                .map(|i| {
                    let f = from_bigint(factorial(i + times)) / from_bigint(factorial(i));
                    f * &self.coeffs[i + times]
                })
                .collect(),
        )
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .all(|(a, b)| a == b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})v")?,
                _ => write!(f, "({c})v^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(v^{})", self.order())
    }
}

fn require_positive(j: usize) -> Result<()> {
    if j == 0 {
        Err(Error::argument("j must be at least 1"))
    } else {
        Ok(())
    }
}

/// Maclaurin series of `G_j(v) = v^j/(1-e^{-v}) = v^{j-1} / F_1(v)`.
pub fn oracle_g_series(j: usize, order: usize) -> Result<TruncatedSeries> {
    require_positive(j)?;
    TruncatedSeries::f1(order).invert()?.shift(j as i64 - 1)
}

/// Maclaurin series of `f_j = G_j^{(j)}`.
pub fn oracle_f_series(j: usize, order: usize) -> Result<TruncatedSeries> {
    Ok(oracle_g_series(j, order + j)?.derivative(j))
}

/// Maclaurin series of `g_j(v) = F_1(v)^{j+1} e^{j v} f_j(v)`; coefficient
/// `k` is `gamma(j,k)`.
pub fn oracle_gamma_series(j: usize, order: usize) -> Result<TruncatedSeries> {
    let f = oracle_f_series(j, order)?;
    let weight = TruncatedSeries::f1(order)
        .pow(j + 1)
        .mul(&TruncatedSeries::exp_scaled(&int(j as i64), order));
    Ok(weight.mul(&f))
}

/// Maclaurin series of `(e^v - 1)^{j+1} f_j(v)`; coefficient `k` is
/// `(j+1)! C(j,k) / k!`.
pub fn oracle_frak_g_series(j: usize, order: usize) -> Result<TruncatedSeries> {
    let f = oracle_f_series(j, order)?;
    Ok(TruncatedSeries::expm1(order).pow(j + 1).mul(&f))
}

/// `G_j^{(k)}(0) = k! [v^k] G_j`.
pub fn oracle_g_value(j: usize, k: usize) -> Result<Rational> {
    Ok(oracle_g_series(j, k + 1)?.coeff(k) * from_bigint(factorial(k)))
}

pub fn oracle_gamma_value(j: usize, k: usize) -> Result<Rational> {
    Ok(oracle_gamma_series(j, k + 1)?.coeff(k))
}

pub fn oracle_frak_c_value(j: usize, k: usize) -> Result<Rational> {
    let c = oracle_frak_g_series(j, k + 1)?.coeff(k);
    Ok(c * from_bigint(factorial(k)) / from_bigint(factorial(j + 1)))
}
