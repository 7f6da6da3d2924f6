//! Factorials, binomials, Stirling numbers of the second kind, Bernoulli
//! numbers and partial Bell polynomials.
//!
//! Factorials, Stirling numbers and Bernoulli numbers are cached in a
//! process-wide [`MemoTables`]. The tables only grow; an entry is never
//! rewritten once stored.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{self, from_bigint, int, Rational};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// Lazily grown caches keyed by integer index.
///
/// Safe for concurrent use: lookups take a read lock and growth happens
/// under the write lock. Indices above the optional limit are computed on
/// demand and not stored.
pub struct MemoTables {
    limit: AtomicUsize,
    factorials: RwLock<Vec<BigInt>>,
    stirling2: RwLock<Vec<Vec<BigInt>>>,
    bernoulli: RwLock<Vec<Rational>>,
}

static MEMO: OnceLock<MemoTables> = OnceLock::new();

/// The process-wide tables.
pub fn memo() -> &'static MemoTables {
    MEMO.get_or_init(MemoTables::new)
}

impl Default for MemoTables {
    fn default() -> Self {
        Self::new()
    }
}

impl MemoTables {
    pub fn new() -> Self {
        MemoTables {
            limit: AtomicUsize::new(usize::MAX),
            factorials: RwLock::new(vec![BigInt::one()]),
            stirling2: RwLock::new(vec![vec![BigInt::one()]]),
            bernoulli: RwLock::new(Vec::new()),
        }
    }

    /// Caps the largest index that gets stored. `None` removes the cap.
    pub fn set_limit(&self, limit: Option<usize>) {
        self.limit
            .store(limit.unwrap_or(usize::MAX), Ordering::Relaxed);
    }

    pub fn limit(&self) -> Option<usize> {
        match self.limit.load(Ordering::Relaxed) {
            usize::MAX => None,
            l => Some(l),
        }
    }

    fn storable(&self, n: usize) -> bool {
        n <= self.limit.load(Ordering::Relaxed)
    }

    /// Fills every table up to index `n` (capped by the limit) so that later
    /// parallel work only takes read locks.
    pub fn warm(&self, n: usize) {
        let n = n.min(self.limit.load(Ordering::Relaxed));
        self.factorial(n);
        self.stirling2(n, 0);
        self.bernoulli(n);
    }

    pub fn factorial(&self, n: usize) -> BigInt {
        {
            let table = self.factorials.read().unwrap();
            if let Some(f) = table.get(n) {
                return f.clone();
            }
        }
        if !self.storable(n) {
            let table = self.factorials.read().unwrap();
            let start = table.len() - 1;
            let mut acc = table[start].clone();
            drop(table);
            for i in start + 1..=n {
                acc *= i;
            }
            return acc;
        }
        let mut table = self.factorials.write().unwrap();
        while table.len() <= n {
            let next = table.last().unwrap() * table.len();
            table.push(next);
        }
        table[n].clone()
    }

    /// Second-kind Stirling number by the triangular recurrence
    /// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
    pub fn stirling2(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        {
            let rows = self.stirling2.read().unwrap();
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        if !self.storable(n) {
            let rows = self.stirling2.read().unwrap();
            let mut row = rows.last().unwrap().clone();
            drop(rows);
            while row.len() <= n {
                row = next_stirling_row(&row);
            }
            return row[k].clone();
        }
        let mut rows = self.stirling2.write().unwrap();
        while rows.len() <= n {
            let next = next_stirling_row(rows.last().unwrap());
            rows.push(next);
        }
        rows[n][k].clone()
    }

    /// Bernoulli number with `B_1 = -1/2`.
    ///
    /// New entries are produced by inverting `(e^v - 1)/v` and, separately,
    /// by the alternating Stirling sum. A disagreement between the two is an
    /// implementation bug and panics.
    pub fn bernoulli(&self, n: usize) -> Rational {
        {
            let table = self.bernoulli.read().unwrap();
            if let Some(b) = table.get(n) {
                return b.clone();
            }
        }
        if !self.storable(n) {
            return checked_bernoulli_block(n, n)
                .pop()
                .expect("block is nonempty");
        }
        let mut table = self.bernoulli.write().unwrap();
        if table.len() <= n {
            let start = table.len();
            table.extend(checked_bernoulli_block(start, n));
        }
        table[n].clone()
    }
}

fn next_stirling_row(prev: &[BigInt]) -> Vec<BigInt> {
    let n = prev.len();
    let mut row = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        let mut s = prev[k - 1].clone();
        if k < n {
            s += &prev[k] * k;
        }
        row[k] = s;
    }
    row
}

/// `B_from ..= B_to`, each cross-checked between the two routes.
fn checked_bernoulli_block(from: usize, to: usize) -> Vec<Rational> {
    let by_series = bernoulli_by_series_inversion(to);
    (from..=to)
        .map(|n| {
            let by_stirling = bernoulli_by_stirling_sum(n);
            assert_eq!(
                by_series[n], by_stirling,
                "Bernoulli B_{n}: series inversion and Stirling sum disagree"
            );
            by_stirling
        })
        .collect()
}

/// `B_0 ..= B_n` from the reciprocal of `(e^v - 1)/v`.
pub fn bernoulli_by_series_inversion(n: usize) -> Vec<Rational> {
    let g = TruncatedSeries::expm1_over_v(n + 1)
        .invert()
        .expect("constant term of (e^v-1)/v is 1");
    g.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c * from_bigint(factorial(i)))
        .collect()
}

/// `B_n = sum_{i=0}^{n} (-1)^i C(n+1,i+1) / C(n+i,i) * S(n+i,i)`.
pub fn bernoulli_by_stirling_sum(n: usize) -> Rational {
    let n_i = n as i64;
    (0..=n)
        .map(|i| {
            let i_i = i as i64;
            Rational::new(
                binomial(n_i + 1, i_i + 1) * stirling2(n + i, i),
                binomial(n_i + i_i, i_i),
            ) * int(rational::sign_pow(i))
        })
        .sum()
}

pub fn factorial(n: usize) -> BigInt {
    memo().factorial(n)
}

pub fn stirling2(n: usize, k: usize) -> BigInt {
    memo().stirling2(n, k)
}

pub fn bernoulli(n: usize) -> Rational {
    memo().bernoulli(n)
}

/// `C(n, k)`, zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `x (x-1) ... (x-j+1)`; 1 when `j = 0`.
pub fn falling_factorial(x: &Rational, j: usize) -> Rational {
    (0..j).fold(Rational::one(), |acc, l| acc * (x - int(l as i64)))
}

/// `x (x+1) ... (x+j-1)`; 1 when `j = 0`.
pub fn rising_factorial(x: &Rational, j: usize) -> Rational {
    (0..j).fold(Rational::one(), |acc, l| acc * (x + int(l as i64)))
}

/// `C(theta, m) = <theta>_m / m!` for rational `theta`.
pub fn generalized_binomial(theta: &Rational, m: usize) -> Rational {
    falling_factorial(theta, m) / from_bigint(factorial(m))
}

/// Partial Bell polynomial `B_{n,k}(x_1, ..., x_{n-k+1})`.
///
/// Sums `n! / prod l_i! * prod (x_i / i!)^{l_i}` over multiplicities with
/// `sum i l_i = n` and `sum l_i = k`. `B_{0,0} = 1`, `B_{n,0} = 0` for `n > 0`
/// and `B_{n,k} = 0` for `k > n`. For `k >= 1`, `xs` must hold at least
/// `n - k + 1` values.
pub fn bell_partial(n: usize, k: usize, xs: &[Rational]) -> Result<Rational> {
    if k > n {
        return Ok(Rational::zero());
    }
    if k == 0 {
        return Ok(if n == 0 { Rational::one() } else { Rational::zero() });
    }
    let width = n - k + 1;
    if xs.len() < width {
        return Err(Error::argument(format!(
            "B_{{{n},{k}}} needs {width} arguments, got {}",
            xs.len()
        )));
    }
    // x_i / i!, and its powers on demand
    let scaled: Vec<Rational> = (1..=width)
        .map(|i| &xs[i - 1] / from_bigint(factorial(i)))
        .collect();
    let mut mult = vec![0usize; width + 1];
    let mut total = Rational::zero();
    enumerate_parts(width, n, k, &mut mult, &mut |mult| {
        let mut term = from_bigint(factorial(n));
        for i in 1..=width {
            let l = mult[i];
            if l > 0 {
                term *= rational::pow(&scaled[i - 1], l);
                term /= from_bigint(factorial(l));
            }
        }
        total += term;
    });
    Ok(total)
}

/// Visits every `(l_1, ..., l_max)` with `sum i l_i = rest_n` and
/// `sum l_i = rest_k`, choosing the largest part size first.
fn enumerate_parts(
    i: usize,
    rest_n: usize,
    rest_k: usize,
    mult: &mut [usize],
    visit: &mut dyn FnMut(&[usize]),
) {
    if i == 1 {
        if rest_n == rest_k {
            mult[1] = rest_k;
            visit(mult);
            mult[1] = 0;
        }
        return;
    }
    let most = (rest_n / i).min(rest_k);
    for l in 0..=most {
        let n_left = rest_n - i * l;
        let k_left = rest_k - l;
        // the remaining parts have sizes 1..i-1
        if k_left > n_left || n_left > (i - 1) * k_left {
            continue;
        }
        mult[i] = l;
        enumerate_parts(i - 1, n_left, k_left, mult, visit);
        mult[i] = 0;
    }
}

/// Checks `B_{n,k}(a b x_1, a b^2 x_2, ...) = a^k b^n B_{n,k}(x_1, x_2, ...)`.
pub fn bell_scaling_check(
    n: usize,
    k: usize,
    a: &Rational,
    b: &Rational,
    xs: &[Rational],
) -> Result<bool> {
    let scaled: Vec<Rational> = xs
        .iter()
        .enumerate()
        .map(|(i, x)| a * rational::pow(b, i + 1) * x)
        .collect();
    let lhs = bell_partial(n, k, &scaled)?;
    let rhs = rational::pow(a, k) * rational::pow(b, n) * bell_partial(n, k, xs)?;
    Ok(lhs == rhs)
}

/// `B_{n,k}(1/2, 1/3, ..., 1/(n-k+2))` via
/// `n!/(n+k)! sum_{l=0}^{k} (-1)^{k-l} C(n+k, k-l) S(n+l, l)`.
///
/// Zero for `k > n`.
pub fn bell_at_reciprocals(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let sum: BigInt = (0..=k)
        .map(|l| {
            let term = binomial((n + k) as i64, (k - l) as i64) * stirling2(n + l, l);
            if (k - l).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum();
    Rational::new(sum * factorial(n), factorial(n + k))
}

/// `n`-th derivative of `f(h(v))` at a point from the values
/// `f(h), f'(h), ..., f^(n)(h)` and `h', h'', ..., h^(n)`.
pub fn faa_di_bruno(outer_derivs: &[Rational], inner_derivs: &[Rational], n: usize) -> Result<Rational> {
    if outer_derivs.len() <= n {
        return Err(Error::argument(format!(
            "need {} outer derivatives, got {}",
            n + 1,
            outer_derivs.len()
        )));
    }
    if inner_derivs.len() < n {
        return Err(Error::argument(format!(
            "need {n} inner derivatives, got {}",
            inner_derivs.len()
        )));
    }
    let mut total = Rational::zero();
    for k in 0..=n {
        let bell = bell_partial(n, k, inner_derivs)?;
        total += &outer_derivs[k] * bell;
    }
    Ok(total)
}

/// `c_l = (-1)^l l! S(n+1, l+1)` for `l = 0..=n`, so that
/// `d^n/dv^n 1/(1-e^{-v}) = sum_l c_l (1/(1-e^{-v}))^{l+1}`.
pub fn reciprocal_derivative_coeffs(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|l| {
            let c = from_bigint(factorial(l) * stirling2(n + 1, l + 1));
            if l % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}
