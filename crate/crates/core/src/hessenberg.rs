//! Lower Hessenberg determinants and the identities built on them.
//!
//! Determinants are evaluated by the one-term-per-row recursion
//! `H_n = sum_{r=1}^{n} (-1)^{n-r} h_{n,r} (prod_{l=r}^{n-1} h_{l,l+1}) H_{r-1}`
//! with `H_0 = 1`, which needs no pivoting and no division.

use num_traits::{One, Zero};

use crate::combinatorics::{binomial, factorial, generalized_binomial};
use crate::rational::{self, from_bigint, Rational};
use crate::{Error, Result};

/// Square matrix whose entries strictly above the superdiagonal are zero.
///
/// Only the band `c <= r + 1` is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct HessenbergMatrix {
    rows: Vec<Vec<Rational>>,
}

impl HessenbergMatrix {
    /// Builds an `n x n` matrix from `entry(r, c)`, called only for
    /// `c <= r + 1` (zero-based).
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::argument("Hessenberg matrix needs dimension >= 1"));
        }
        let rows = (0..n)
            .map(|r| (0..(r + 2).min(n)).map(|c| entry(r, c)).collect())
            .collect();
        Ok(HessenbergMatrix { rows })
    }

    /// Validates a dense square matrix and keeps its Hessenberg band.
    pub fn from_dense(dense: &[Vec<Rational>]) -> Result<Self> {
        let n = dense.len();
        if n == 0 {
            return Err(Error::argument("Hessenberg matrix needs dimension >= 1"));
        }
        for (r, row) in dense.iter().enumerate() {
            if row.len() != n {
                return Err(Error::argument(format!(
                    "row {r} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(c) = (r + 2..n).find(|&c| !row[c].is_zero()) {
                return Err(Error::argument(format!(
                    "entry ({r},{c}) above the superdiagonal is nonzero"
                )));
            }
        }
        Self::from_fn(n, |r, c| dense[r][c].clone())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Zero-based entry access; zero outside the band.
    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.rows[r].get(c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let n = self.dim();
        (0..n).map(|r| (0..n).map(|c| self.get(r, c)).collect()).collect()
    }

    /// `H_0, H_1, ..., H_n`: the determinants of every leading principal
    /// submatrix.
    pub fn leading_determinants(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut h = Vec::with_capacity(n + 1);
        h.push(Rational::one());
        for m in 1..=n {
            let row = &self.rows[m - 1];
            let mut total = Rational::zero();
            let mut chain = Rational::one();
            for r in (1..=m).rev() {
                if chain.is_zero() {
                    break;
                }
                let term = &row[r - 1] * &chain * &h[r - 1];
                if (m - r) % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
                if r > 1 {
                    chain *= &self.rows[r - 2][r - 1];
                }
            }
            h.push(total);
        }
        h
    }

    pub fn determinant(&self) -> Rational {
        self.leading_determinants().pop().expect("H_0 is always present")
    }
}

pub fn det_hessenberg(m: &HessenbergMatrix) -> Rational {
    m.determinant()
}

/// Gaussian elimination for the one determinant family here that is not
/// Hessenberg.
fn det_dense(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Coefficient `b_j` of `1/f` for `f(v) = 1 + sum a_k v^k` by the Wronski
/// formula: `(-1)^j` times the determinant with `a_{r-c+1}` on and below the
/// diagonal and ones on the superdiagonal. `a` holds `a_1, a_2, ...`.
pub fn wronski_inverse_coeff(a: &[Rational], j: usize) -> Result<Rational> {
    if j == 0 {
        return Err(Error::argument("Wronski coefficient index must be >= 1"));
    }
    if a.len() < j {
        return Err(Error::argument(format!(
            "b_{j} needs a_1..a_{j}, got {} coefficients",
            a.len()
        )));
    }
    let m = HessenbergMatrix::from_fn(j, |r, c| {
        if c == r + 1 {
            Rational::one()
        } else {
            a[r - c].clone()
        }
    })?;
    let det = m.determinant();
    Ok(if j.is_multiple_of(2) { det } else { -det })
}

/// The `(j+1) x (j+1)` determinant with `1/(r-c+2)!` on and below the
/// diagonal and ones on the superdiagonal; equals `(-1)^{j+1} B_{j+1}/(j+1)!`.
pub fn bernoulli_hessenberg_det(j: usize) -> Rational {
    HessenbergMatrix::from_fn(j + 1, |r, c| {
        if c == r + 1 {
            Rational::one()
        } else {
            Rational::new(1.into(), factorial(r - c + 2))
        }
    })
    .expect("dimension is at least 1")
    .determinant()
}

/// The `j x j` determinant with `C(theta, r-c+1)` in the band; equals
/// `(theta)_j / j!`.
pub fn rising_factorial_hessenberg_det(theta: &Rational, j: usize) -> Result<Rational> {
    let m = HessenbergMatrix::from_fn(j, |r, c| generalized_binomial(theta, r + 1 - c))?;
    Ok(m.determinant())
}

/// `j`-th derivative of `g/h` at a point from `g, g', ..., g^(j)` and
/// `h, h', ..., h^(j)` there:
/// `(-1)^j / h^{j+1} |W|` where `W` has the `g` derivatives in its first
/// column and `C(i-1, l-1) h^{(i-l)}` in the remaining ones.
pub fn ratio_derivative_via_determinant(
    g_derivs: &[Rational],
    h_derivs: &[Rational],
    j: usize,
) -> Result<Rational> {
    if g_derivs.len() <= j || h_derivs.len() <= j {
        return Err(Error::argument(format!(
            "derivative of order {j} needs {} values of g and h",
            j + 1
        )));
    }
    if h_derivs[0].is_zero() {
        return Err(Error::argument("denominator vanishes at the point"));
    }
    let w = HessenbergMatrix::from_fn(j + 1, |i, c| {
        if c == 0 {
            g_derivs[i].clone()
        } else {
            // column l = c of the V block, rows i >= l-1
            let l = c - 1;
            if i < l {
                Rational::zero()
            } else {
                from_bigint(binomial(i as i64, l as i64)) * &h_derivs[i - l]
            }
        }
    })?;
    let scale = rational::pow(&h_derivs[0], j + 1);
    let det = w.determinant() / scale;
    Ok(if j.is_multiple_of(2) { det } else { -det })
}

/// The individual terms of the series for the root of smallest modulus of
/// `lambda_0 + lambda_1 v + lambda_2 v^2 + ...`.
///
/// Stage `m` is `-lambda_0^m N_m / (D_{m-1} D_m)`, where `D_m` is the
/// `m x m` determinant with `lambda_{c-r+1}` at `(r, c)` and `N_m` is the
/// `(m-1) x (m-1)` determinant with `lambda_{c-r+2}`; `D_0 = N_1 = 1` and
/// coefficients past the end of `lambda` (or at negative index) are zero.
pub fn whittaker_root_terms(lambda: &[Rational], terms: usize) -> Result<Vec<Rational>> {
    if terms == 0 {
        return Err(Error::argument("need at least one term"));
    }
    let coeff = |i: i64| -> Rational {
        if i < 0 {
            Rational::zero()
        } else {
            lambda.get(i as usize).cloned().unwrap_or_else(Rational::zero)
        }
    };
    let lambda0 = coeff(0);
    if lambda0.is_zero() {
        return Err(Error::argument("lambda_0 must be nonzero"));
    }
    // transpose of the displayed D_m, which is lower Hessenberg
    let d = HessenbergMatrix::from_fn(terms, |r, c| coeff(r as i64 - c as i64 + 1))?
        .leading_determinants();
    let mut out = Vec::with_capacity(terms);
    for m in 1..=terms {
        let denom = &d[m - 1] * &d[m];
        if denom.is_zero() {
            return Err(Error::DegenerateStage(m));
        }
        let size = m - 1;
        let numer = det_dense(
            (0..size)
                .map(|r| {
                    (0..size)
                        .map(|c| coeff(c as i64 - r as i64 + 2))
                        .collect()
                })
                .collect(),
        );
        out.push(-(rational::pow(&lambda0, m) * numer) / denom);
    }
    Ok(out)
}

/// Partial sum of the first `terms` stages of [`whittaker_root_terms`].
pub fn whittaker_root_partial_sum(lambda: &[Rational], terms: usize) -> Result<Rational> {
    Ok(whittaker_root_terms(lambda, terms)?.into_iter().sum())
}
