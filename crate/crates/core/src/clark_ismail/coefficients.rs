//! Maclaurin coefficients of `f_j`, `g_j = F_1^{j+1} e^{jv} f_j` and
//! `(e^v-1)^{j+1} f_j`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{bernoulli, binomial, factorial, falling_factorial, stirling2};
use crate::error::{Error, Result, RouteMismatch};
use crate::rational::{from_bigint, int, sign_pow, Rational};

fn check_j(j: usize) {
    assert!(j >= 1, "j must be a positive integer");
}

fn agree(
    quantity: &'static str,
    j: usize,
    k: usize,
    (left_route, left): (&'static str, Rational),
    (right_route, right): (&'static str, Rational),
) -> Result<Rational> {
    if left == right {
        Ok(left)
    } else {
        Err(Error::RouteMismatch(Box::new(RouteMismatch {
            quantity,
            j,
            k,
            left_route,
            left,
            right_route,
            right,
        })))
    }
}

/// `f_j^{(i)}(0)/i!` as
/// `(-1)^{i+1} (i+1)(i+2) (i+j)! sum_{q=0}^{i+1} (-1)^q/(q+1) S(i+q+1,q) / ((i-q+1)! (i+q+1)!)`.
pub fn f_maclaurin_stirling(j: usize, i: usize) -> Rational {
    check_j(j);
    let sum: Rational = (0..=i + 1)
        .map(|q| {
            Rational::new(
                sign_pow(q) * stirling2(i + q + 1, q),
                (q + 1) * factorial(i + 1 - q) * factorial(i + q + 1),
            )
        })
        .sum();
    sum * from_bigint(sign_pow(i + 1) * BigInt::from((i + 1) * (i + 2)) * factorial(i + j))
}

/// `f_j^{(i)}(0)/i!` from Bernoulli numbers: `j!/2` at `i = 0`,
/// `j! C(j+i, j) B_{i+1}/(i+1)!` for odd `i`, zero for even `i > 0`.
pub fn f_maclaurin_bernoulli(j: usize, i: usize) -> Rational {
    check_j(j);
    if i == 0 {
        return from_bigint(factorial(j)) / int(2);
    }
    if i.is_multiple_of(2) {
        return Rational::zero();
    }
    bernoulli(i + 1)
        * Rational::new(factorial(j) * binomial((j + i) as i64, j as i64), factorial(i + 1))
}

/// `f_j^{(i)}(0)/i!`, checked across both routes.
pub fn f_maclaurin_coeff(j: usize, i: usize) -> Result<Rational> {
    if j == 0 {
        return Err(Error::argument("j must be at least 1"));
    }
    agree(
        "f_coeff",
        j,
        i,
        ("stirling_sum", f_maclaurin_stirling(j, i)),
        ("bernoulli_form", f_maclaurin_bernoulli(j, i)),
    )
}

/// `f_j^{(m)}(0)`: `j!/2` at `m = 0`, `(m+j)! B_{m+1}/(m+1)!` for odd `m`,
/// zero otherwise.
pub fn f_derivative_at_zero(j: usize, m: usize) -> Rational {
    check_j(j);
    if m == 0 {
        from_bigint(factorial(j)) / int(2)
    } else if m % 2 == 1 {
        bernoulli(m + 1) * Rational::new(factorial(m + j), factorial(m + 1))
    } else {
        Rational::zero()
    }
}

/// `T(m, p) = sum_{q=0}^{p} (-1)^q C(m+p, p-q) S(m+q, q)`, memoized by row `m`.
fn t_value(m: usize, p: usize) -> BigInt {
    static CACHE: OnceLock<RwLock<Vec<Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(Vec::new()));
    {
        let rows = cache.read().expect("T cache poisoned");
        if let Some(v) = rows.get(m).and_then(|row| row.get(p)) {
            return v.clone();
        }
    }
    let mut rows = cache.write().expect("T cache poisoned");
    while rows.len() <= m {
        rows.push(Vec::new());
    }
    let row = &mut rows[m];
    while row.len() <= p {
        let pp = row.len();
        let value: BigInt = (0..=pp)
            .map(|q| sign_pow(q) * binomial((m + pp) as i64, (pp - q) as i64) * stirling2(m + q, q))
            .sum();
        row.push(value);
    }
    row[p].clone()
}

/// Maclaurin coefficients `[v^l] F_1(v)^{j+1} e^{jv}` for `l < order`:
/// `sum_{m<=l} (-1)^m j^{l-m}/(l-m)! sum_{p<=m} (-1)^p <j+1>_p T(m,p)/(m+p)!`.
pub fn gamma_weight_coeffs(j: usize, order: usize) -> Vec<Rational> {
    let jp1 = int(j as i64 + 1);
    let e: Vec<Rational> = (0..order)
        .map(|m| {
            (0..=m)
                .map(|p| {
                    falling_factorial(&jp1, p)
                        * Rational::new(sign_pow(p) * t_value(m, p), factorial(m + p))
                })
                .sum()
        })
        .collect();
    let jb = BigInt::from(j);
    (0..order)
        .map(|l| {
            (0..=l)
                .map(|m| {
                    Rational::new(sign_pow(m) * num_traits::pow(jb.clone(), l - m), factorial(l - m))
                        * &e[m]
                })
                .sum()
        })
        .collect()
}

fn gamma_from(f: &[Rational], weights: &[Rational], k: usize) -> Rational {
    (0..=k).map(|r| &f[r] * &weights[k - r]).sum()
}

/// `gamma(j, k) = sum_r f_j^{(r)}(0)/r! * [v^{k-r}] F_1^{j+1} e^{jv}` with the
/// Stirling-sum `f` coefficients.
pub fn gamma_stirling(j: usize, k: usize) -> Rational {
    check_j(j);
    let f: Vec<Rational> = (0..=k).map(|r| f_maclaurin_stirling(j, r)).collect();
    gamma_from(&f, &gamma_weight_coeffs(j, k + 1), k)
}

/// Bernoulli form of the `f` coefficient, `j! C(j+r, j) (-1)^{r+1} B_{r+1}/(r+1)!`.
fn f_bernoulli_uniform(j: usize, r: usize) -> Rational {
    bernoulli(r + 1)
        * Rational::new(
            sign_pow(r + 1) * factorial(j) * binomial((j + r) as i64, j as i64),
            factorial(r + 1),
        )
}

pub fn gamma_bernoulli(j: usize, k: usize) -> Rational {
    check_j(j);
    let f: Vec<Rational> = (0..=k).map(|r| f_bernoulli_uniform(j, r)).collect();
    gamma_from(&f, &gamma_weight_coeffs(j, k + 1), k)
}

pub fn gamma_coeff(j: usize, k: usize) -> Result<Rational> {
    if j == 0 {
        return Err(Error::argument("j must be at least 1"));
    }
    agree(
        "gamma",
        j,
        k,
        ("stirling_sum", gamma_stirling(j, k)),
        ("bernoulli_form", gamma_bernoulli(j, k)),
    )
}

/// `gamma(j, 0..=kmax)`; `bernoulli` selects the `f` coefficient route.
pub fn gamma_row(j: usize, kmax: usize, bernoulli_route: bool) -> Vec<Rational> {
    check_j(j);
    let f: Vec<Rational> = (0..=kmax)
        .map(|r| if bernoulli_route { f_bernoulli_uniform(j, r) } else { f_maclaurin_stirling(j, r) })
        .collect();
    let w = gamma_weight_coeffs(j, kmax + 1);
    (0..=kmax).map(|k| gamma_from(&f, &w, k)).collect()
}

fn frak_c_from(f: &[Rational], j: usize, k: usize) -> Rational {
    let sum: Rational = (0..=k)
        .map(|r| &f[r] * Rational::new(stirling2(k - r, j + 1), factorial(k - r)))
        .sum();
    sum * from_bigint(factorial(k))
}

/// `C(j, k) = k! sum_r f_j^{(r)}(0)/r! * S(k-r, j+1)/(k-r)!`.
pub fn frak_c_stirling(j: usize, k: usize) -> Rational {
    check_j(j);
    let f: Vec<Rational> = (0..=k).map(|r| f_maclaurin_stirling(j, r)).collect();
    frak_c_from(&f, j, k)
}

pub fn frak_c_bernoulli(j: usize, k: usize) -> Rational {
    check_j(j);
    let f: Vec<Rational> = (0..=k).map(|r| f_bernoulli_uniform(j, r)).collect();
    frak_c_from(&f, j, k)
}

pub fn frak_c_coeff(j: usize, k: usize) -> Result<Rational> {
    if j == 0 {
        return Err(Error::argument("j must be at least 1"));
    }
    agree(
        "C",
        j,
        k,
        ("stirling_sum", frak_c_stirling(j, k)),
        ("bernoulli_form", frak_c_bernoulli(j, k)),
    )
}

pub fn frak_c_row(j: usize, kmax: usize, bernoulli_route: bool) -> Vec<Rational> {
    check_j(j);
    let f: Vec<Rational> = (0..=kmax)
        .map(|r| if bernoulli_route { f_bernoulli_uniform(j, r) } else { f_maclaurin_stirling(j, r) })
        .collect();
    (0..=kmax).map(|k| frak_c_from(&f, j, k)).collect()
}
