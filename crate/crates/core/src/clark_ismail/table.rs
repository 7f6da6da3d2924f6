//! Tables of exact values, one producing route per table.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use super::coefficients::{frak_c_row, gamma_row};
use super::derivatives::{
    g_value_bernoulli, g_value_closed_form, g_value_determinantal, g_value_stirling,
    g_values_recursive,
};
use crate::error::{Error, Result, RouteMismatch};
use crate::rational::{from_bigint, Rational};
use crate::combinatorics::factorial;
use crate::series::{oracle_frak_g_series, oracle_g_series, oracle_gamma_series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    G,
    Gamma,
    C,
    FCoeff,
    Bernoulli,
    Det,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::G => "G",
            Quantity::Gamma => "gamma",
            Quantity::C => "C",
            Quantity::FCoeff => "f_coeff",
            Quantity::Bernoulli => "bernoulli",
            Quantity::Det => "det",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "G" => Quantity::G,
            "gamma" => Quantity::Gamma,
            "C" => Quantity::C,
            "f_coeff" => Quantity::FCoeff,
            "bernoulli" => Quantity::Bernoulli,
            "det" => Quantity::Det,
            _ => return Err(Error::argument(format!("unknown quantity {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    StirlingSum,
    ClosedForm,
    BernoulliForm,
    Determinantal,
    Recursion,
    SeriesOracle,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::StirlingSum,
        Method::ClosedForm,
        Method::BernoulliForm,
        Method::Determinantal,
        Method::Recursion,
        Method::SeriesOracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::StirlingSum => "stirling_sum",
            Method::ClosedForm => "closed_form",
            Method::BernoulliForm => "bernoulli_form",
            Method::Determinantal => "determinantal",
            Method::Recursion => "recursion",
            Method::SeriesOracle => "series_oracle",
        }
    }

    /// Routes available for a tabulated quantity.
    pub fn supported(quantity: Quantity) -> &'static [Method] {
        match quantity {
            Quantity::G => &Method::ALL,
            Quantity::Gamma | Quantity::C => {
                &[Method::StirlingSum, Method::BernoulliForm, Method::SeriesOracle]
            }
            _ => &[],
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::argument(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub j: usize,
    pub k: usize,
    pub value: Rational,
    pub method: Method,
}

/// Values of one quantity over a `j` × `k` rectangle, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    quantity: Quantity,
    method: Method,
    rows: RangeInclusive<usize>,
    cols: RangeInclusive<usize>,
    cells: Vec<Cell>,
}

fn row_values(quantity: Quantity, method: Method, j: usize, kmax: usize) -> Result<Vec<Rational>> {
    let per_cell = |f: fn(usize, usize) -> Rational| (0..=kmax).map(|k| f(j, k)).collect();
    let scaled = |coeffs: Vec<Rational>, scale: &dyn Fn(usize) -> Rational| {
        coeffs.into_iter().enumerate().map(|(k, c)| c * scale(k)).collect::<Vec<_>>()
    };
    Ok(match (quantity, method) {
        (Quantity::G, Method::StirlingSum) => per_cell(g_value_stirling),
        (Quantity::G, Method::ClosedForm) => per_cell(g_value_closed_form),
        (Quantity::G, Method::BernoulliForm) => per_cell(g_value_bernoulli),
        (Quantity::G, Method::Determinantal) => per_cell(g_value_determinantal),
        (Quantity::G, Method::Recursion) => g_values_recursive(j, kmax),
        (Quantity::G, Method::SeriesOracle) => scaled(
            oracle_g_series(j, kmax + 1)?.into_coeffs(),
            &|k| from_bigint(factorial(k)),
        ),
        (Quantity::Gamma, Method::StirlingSum) => gamma_row(j, kmax, false),
        (Quantity::Gamma, Method::BernoulliForm) => gamma_row(j, kmax, true),
        (Quantity::Gamma, Method::SeriesOracle) => oracle_gamma_series(j, kmax + 1)?.into_coeffs(),
        (Quantity::C, Method::StirlingSum) => frak_c_row(j, kmax, false),
        (Quantity::C, Method::BernoulliForm) => frak_c_row(j, kmax, true),
        (Quantity::C, Method::SeriesOracle) => {
            let jf = from_bigint(factorial(j + 1));
            scaled(oracle_frak_g_series(j, kmax + 1)?.into_coeffs(), &|k| {
                from_bigint(factorial(k)) / &jf
            })
        }
        _ => {
            return Err(Error::argument(format!(
                "no {} route for {}",
                method.as_str(),
                quantity.as_str()
            )))
        }
    })
}

impl CoefficientTable {
    /// Computes every cell of `rows` × `cols` by `method`.
    pub fn build(
        quantity: Quantity,
        method: Method,
        rows: RangeInclusive<usize>,
        cols: RangeInclusive<usize>,
    ) -> Result<Self> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::argument("empty table range"));
        }
        if *rows.start() == 0 {
            return Err(Error::argument("j must be at least 1"));
        }
        let mut cells = Vec::new();
        for j in rows.clone() {
            let values = row_values(quantity, method, j, *cols.end())?;
            for (k, value) in values.into_iter().enumerate().skip(*cols.start()) {
                cells.push(Cell { j, k, value, method });
            }
        }
        Ok(CoefficientTable { quantity, method, rows, cols, cells })
    }

    pub fn quantity(&self) -> Quantity {
        self.quantity
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn rows(&self) -> RangeInclusive<usize> {
        self.rows.clone()
    }

    pub fn cols(&self) -> RangeInclusive<usize> {
        self.cols.clone()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn get(&self, j: usize, k: usize) -> Option<&Rational> {
        if !self.rows.contains(&j) || !self.cols.contains(&k) {
            return None;
        }
        let width = self.cols.end() - self.cols.start() + 1;
        let idx = (j - self.rows.start()) * width + (k - self.cols.start());
        self.cells.get(idx).map(|c| &c.value)
    }

    /// Cell-wise equality with a table over the same range; the first
    /// differing cell is reported as a route mismatch.
    pub fn check_agreement(&self, other: &CoefficientTable) -> Result<()> {
        if self.quantity != other.quantity || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::argument("tables cover different quantities or ranges"));
        }
        for (a, b) in self.cells.iter().zip(&other.cells) {
            if a.value != b.value {
                return Err(Error::RouteMismatch(Box::new(RouteMismatch {
                    quantity: self.quantity.as_str(),
                    j: a.j,
                    k: a.k,
                    left_route: a.method.as_str(),
                    left: a.value.clone(),
                    right_route: b.method.as_str(),
                    right: b.value.clone(),
                })));
            }
        }
        Ok(())
    }
}
