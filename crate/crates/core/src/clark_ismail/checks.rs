//! Log-convexity of `|f_j^{(2k-1)}(0)|` and the sign scan of `gamma`/`C`.

use num_traits::Signed;
use rayon::prelude::*;

use super::coefficients::{f_derivative_at_zero, frak_c_row, gamma_row, gamma_weight_coeffs};
use super::table::Quantity;
use crate::combinatorics::memo;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityStep {
    pub k: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogConvexityReport {
    pub j: usize,
    pub k_max: usize,
    /// `a_k^2 <= a_{k-1} a_{k+1}` with `a_k = |f_j^{(2k-1)}(0)|`, `2 <= k <= k_max`.
    pub interior: Vec<ConvexityStep>,
    /// `|f_j'(0)|^2 <= |f_j(0)| |f_j'''(0)|`.
    pub extended_first_step: bool,
}

impl LogConvexityReport {
    pub fn interior_passes(&self) -> bool {
        self.interior.iter().all(|s| s.pass)
    }
}

pub fn log_convexity_report(j: usize, k_max: usize) -> Result<LogConvexityReport> {
    if j == 0 {
        return Err(Error::argument("j must be at least 1"));
    }
    if k_max < 2 {
        return Err(Error::argument("k_max must be at least 2"));
    }
    let a = |k: usize| f_derivative_at_zero(j, 2 * k - 1).abs();
    let interior = (2..=k_max)
        .map(|k| ConvexityStep { k, pass: a(k) * a(k) <= a(k - 1) * a(k + 1) })
        .collect();
    let f0 = f_derivative_at_zero(j, 0).abs();
    let extended_first_step = a(1) * a(1) <= f0 * a(2);
    Ok(LogConvexityReport { j, k_max, interior, extended_first_step })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeCell {
    pub j: usize,
    pub k: usize,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub quantity: Quantity,
    pub j_max: usize,
    pub k_max: usize,
    pub scanned: usize,
    /// Row-major: by `j`, then `k`.
    pub negatives: Vec<NegativeCell>,
}

fn scan_row(quantity: Quantity, j: usize, k_max: usize) -> Vec<NegativeCell> {
    let row = match quantity {
        Quantity::Gamma => gamma_row(j, k_max, true),
        _ => frak_c_row(j, k_max, true),
    };
    row.into_iter()
        .enumerate()
        .filter(|(_, v)| v.is_negative())
        .map(|(k, value)| NegativeCell { j, k, value })
        .collect()
}

fn check_scan_args(quantity: Quantity, j_max: usize, k_max: usize) -> Result<()> {
    if !matches!(quantity, Quantity::Gamma | Quantity::C) {
        return Err(Error::argument(format!("cannot scan {}", quantity.as_str())));
    }
    if j_max == 0 || k_max == 0 {
        return Err(Error::argument("scan bounds must be at least 1"));
    }
    Ok(())
}

/// Every cell `1 <= j <= j_max`, `0 <= k <= k_max` by the Bernoulli-form
/// route; negative cells are reported, not treated as errors.
pub fn scan_nonnegativity(quantity: Quantity, j_max: usize, k_max: usize) -> Result<ScanReport> {
    check_scan_args(quantity, j_max, k_max)?;
    let negatives = (1..=j_max).flat_map(|j| scan_row(quantity, j, k_max)).collect();
    Ok(ScanReport { quantity, j_max, k_max, scanned: j_max * (k_max + 1), negatives })
}

/// As [`scan_nonnegativity`], with rows distributed over `jobs` threads.
/// The memo tables are warmed to the scan bound first so workers only read.
pub fn scan_nonnegativity_parallel(
    quantity: Quantity,
    j_max: usize,
    k_max: usize,
    jobs: usize,
) -> Result<ScanReport> {
    check_scan_args(quantity, j_max, k_max)?;
    if jobs == 0 {
        return Err(Error::argument("jobs must be at least 1"));
    }
    memo().warm(2 * (j_max + k_max) + 2);
    if quantity == Quantity::Gamma {
        gamma_weight_coeffs(1, k_max + 1);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::argument(format!("cannot start worker pool: {e}")))?;
    let rows: Vec<Vec<NegativeCell>> = pool.install(|| {
        (1..=j_max).into_par_iter().map(|j| scan_row(quantity, j, k_max)).collect()
    });
    let negatives = rows.into_iter().flatten().collect();
    Ok(ScanReport { quantity, j_max, k_max, scanned: j_max * (k_max + 1), negatives })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extended_first_step_threshold() {
        assert!(!log_convexity_report(1, 2).unwrap().extended_first_step);
        assert!(log_convexity_report(6, 2).unwrap().extended_first_step);
        assert!(log_convexity_report(3, 10).unwrap().interior_passes());
        assert!(log_convexity_report(3, 1).is_err());
    }

    #[test]
    fn tabulated_ranges_are_nonnegative() {
        assert!(scan_nonnegativity(Quantity::Gamma, 9, 7).unwrap().negatives.is_empty());
        let c = scan_nonnegativity(Quantity::C, 8, 9).unwrap();
        assert!(c.negatives.is_empty());
        assert_eq!(c.scanned, 80);
    }

    #[test]
    fn parallel_matches_sequential() {
        let a = scan_nonnegativity(Quantity::Gamma, 10, 10).unwrap();
        let b = scan_nonnegativity_parallel(Quantity::Gamma, 10, 10, 4).unwrap();
        assert_eq!(a, b);
        assert!(scan_nonnegativity(Quantity::G, 2, 2).is_err());
    }
}
