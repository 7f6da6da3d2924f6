//! Arbitrary-precision rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! canonical form: the denominator is positive and coprime to the numerator,
//! so structural equality is value equality.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `(-1)^n` as a small integer.
pub fn sign_pow(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Nearest double, ties to even.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Renders `p/q`, or just `p` when `q = 1`.
pub fn format_exact(x: &Rational) -> String {
    x.to_string()
}

/// Inverse of [`format_exact`]. Accepts non-canonical input such as `4/6`.
pub fn parse_exact(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::argument(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(from_bigint(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// `x^n` for a nonnegative integer exponent.
pub fn pow(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub fn is_canonical(x: &Rational) -> bool {
    use num_integer::Integer;
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
}
