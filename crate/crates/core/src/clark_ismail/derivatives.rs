//! Five formulas for `G_j^{(k)}(0)`.

use num_traits::{One, Zero};

use crate::combinatorics::{bernoulli, binomial, factorial, falling_factorial, stirling2};
use crate::hessenberg::ratio_derivative_via_determinant;
use crate::rational::{from_bigint, int, ratio, sign_pow, Rational};
use crate::series::TruncatedSeries;

fn check_j(j: usize) {
    assert!(j >= 1, "j must be a positive integer");
}

/// `F_1^{(k)}(0) = (-1)^k/(k+1)`.
pub fn f1_derivative_at_zero(k: usize) -> Rational {
    ratio(sign_pow(k), k as i64 + 1)
}

/// The alternating Stirling sum
/// `(-1)^n k! (n+1)! sum_{q=0}^{n} (-1)^q/(q+1) S(n+q, q) / ((n-q)! (n+q)!)`
/// with `n = k-j+1`; zero for `k < j-1`.
pub fn g_value_stirling(j: usize, k: usize) -> Rational {
    check_j(j);
    if k + 1 < j {
        return Rational::zero();
    }
    let n = k + 1 - j;
    let sum: Rational = (0..=n)
        .map(|q| {
            Rational::new(
                sign_pow(q) * stirling2(n + q, q),
                (q + 1) * factorial(n - q) * factorial(n + q),
            )
        })
        .sum();
    sum * from_bigint(factorial(k) * factorial(n + 1)) * int(sign_pow(n))
}

/// `k! (-1)^n B_n / n!` with `n = k-j+1`; zero for `k < j-1`.
pub fn g_value_bernoulli(j: usize, k: usize) -> Rational {
    check_j(j);
    if k + 1 < j {
        return Rational::zero();
    }
    let n = k + 1 - j;
    bernoulli(n) * Rational::new(sign_pow(n) * factorial(k), factorial(n))
}

/// The limit at `v = 0` of the closed form
/// `G_j^{(k)}(v) = v^{j-k-1} sum_q c_q(u) v^q`, `u = v/(1-e^{-v})`,
/// `c_q(u) = sum_{l=q}^{k} (-1)^{l-q} C(k,l) <j>_{k-l} (l-q)! S(l+1,l-q+1) u^{l-q+1}`.
///
/// The limit is the coefficient of `v^{k-j+1}` in `sum_q c_q(u(v)) v^q`,
/// which needs the expansion of each `c_q(u(v))`, not just its value at 0.
/// `u` is expanded from `u_i = (-1)^i B_i / i!`.
pub fn g_value_closed_form(j: usize, k: usize) -> Rational {
    check_j(j);
    if k + 1 < j {
        return Rational::zero();
    }
    let n = k + 1 - j;
    let order = n + 1;
    let u = TruncatedSeries::new(
        (0..order)
            .map(|i| bernoulli(i) * Rational::new(sign_pow(i).into(), factorial(i)))
            .collect(),
    );
    let mut u_pows = Vec::with_capacity(k + 2);
    u_pows.push(TruncatedSeries::one(order));
    for m in 1..=k + 1 {
        let next = u_pows[m - 1].mul(&u);
        u_pows.push(next);
    }
    let j_rat = int(j as i64);
    let mut total = Rational::zero();
    for q in 0..=n.min(k) {
        let mut inner = Rational::zero();
        for l in q..=k {
            let fall = falling_factorial(&j_rat, k - l);
            if fall.is_zero() {
                continue;
            }
            let c = from_bigint(
                sign_pow(l - q) * binomial(k as i64, l as i64) * factorial(l - q) * stirling2(l + 1, l - q + 1),
            ) * fall;
            inner += c * u_pows[l - q + 1].coeff(n - q);
        }
        total += inner;
    }
    total
}

/// The bordered Hessenberg determinant for `d^k/dv^k [v^{j-1} / F_1(v)]`
/// at `v = 0`.
pub fn g_value_determinantal(j: usize, k: usize) -> Rational {
    check_j(j);
    // derivatives of v^{j-1} at 0
    let g: Vec<Rational> = (0..=k)
        .map(|l| {
            if l == j - 1 {
                from_bigint(factorial(j - 1))
            } else {
                Rational::zero()
            }
        })
        .collect();
    let h: Vec<Rational> = (0..=k).map(f1_derivative_at_zero).collect();
    ratio_derivative_via_determinant(&g, &h, k).expect("F_1(0) = 1 and lengths match")
}

/// `G_j^{(0)}(0), ..., G_j^{(k)}(0)` by
/// `G^{(r)} = [<j-1>_r v^{j-r-1} - sum_{i<r} C(r,i) F_1^{(r-i)} G^{(i)}] / F_1`
/// at `v = 0`. The source term is `(j-1)!` at `r = j-1` and vanishes
/// otherwise.
pub fn g_values_recursive(j: usize, k: usize) -> Vec<Rational> {
    check_j(j);
    let f1: Vec<Rational> = (0..=k).map(f1_derivative_at_zero).collect();
    let mut g: Vec<Rational> = Vec::with_capacity(k + 1);
    for r in 0..=k {
        let mut value = if r == j - 1 {
            from_bigint(factorial(j - 1))
        } else {
            Rational::zero()
        };
        for (i, gi) in g.iter().enumerate() {
            if gi.is_zero() {
                continue;
            }
            value -= from_bigint(binomial(r as i64, i as i64)) * &f1[r - i] * gi;
        }
        debug_assert!(f1[0].is_one());
        g.push(value / &f1[0]);
    }
    g
}

pub fn g_value_recursive(j: usize, k: usize) -> Rational {
    g_values_recursive(j, k).pop().expect("k + 1 values")
}
