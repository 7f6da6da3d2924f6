//! Machine-readable records: CSV with columns
//! `quantity,j,k,value_exact,value_float,method`, or a JSON array.

use std::io::Write;

use serde::{Deserialize, Serialize};

use cik_core::clark_ismail::CoefficientTable;
use cik_core::rational::{format_exact, parse_exact, to_f64};
use cik_core::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub quantity: String,
    pub j: u64,
    pub k: u64,
    pub value_exact: String,
    pub value_float: String,
    pub method: String,
}

/// Nearest double rendered with 17 significant digits.
pub fn format_float(x: &Rational) -> String {
    format!("{:.16e}", to_f64(x))
}

impl OutputRecord {
    pub fn new(quantity: &str, j: usize, k: usize, value: &Rational, method: &str) -> Self {
        OutputRecord {
            quantity: quantity.to_string(),
            j: j as u64,
            k: k as u64,
            value_exact: format_exact(value),
            value_float: format_float(value),
            method: method.to_string(),
        }
    }

    pub fn value(&self) -> cik_core::Result<Rational> {
        parse_exact(&self.value_exact)
    }
}

pub fn table_records(table: &CoefficientTable) -> Vec<OutputRecord> {
    table
        .cells()
        .iter()
        .map(|c| OutputRecord::new(table.quantity().as_str(), c.j, c.k, &c.value, c.method.as_str()))
        .collect()
}

pub fn write_csv(records: &[OutputRecord], out: &mut dyn Write) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(["quantity", "j", "k", "value_exact", "value_float", "method"])?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()
}

pub fn read_csv(input: &[u8]) -> csv::Result<Vec<OutputRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

pub fn write_json(records: &[OutputRecord], out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, records)?;
    writeln!(out)
}

/// A `j` × `k` grid of exact values.
pub fn write_pretty(table: &CoefficientTable, out: &mut dyn Write) -> std::io::Result<()> {
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec![String::new()];
    header.extend(table.cols().map(|k| format!("k={k}")));
    grid.push(header);
    for j in table.rows() {
        let mut row = vec![format!("j={j}")];
        row.extend(table.cols().map(|k| format_exact(table.get(j, k).expect("cell in range"))));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    writeln!(out, "{} by {}", table.quantity(), table.method())?;
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use cik_core::rational::ratio;

    #[test]
    fn float_has_17_significant_digits() {
        assert_eq!(format_float(&ratio(1, 2)), "5.0000000000000000e-1");
        assert_eq!(format_float(&ratio(-1, 3)), "-3.3333333333333331e-1");
    }

    #[test]
    fn csv_round_trip() {
        let recs = vec![
            OutputRecord::new("gamma", 2, 3, &ratio(13, 72), "bernoulli_form"),
            OutputRecord::new("G", 1, 4, &ratio(-1, 30), "stirling_sum"),
        ];
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        let back = read_csv(&buf).unwrap();
        assert_eq!(back, recs);
        assert_eq!(back[0].value().unwrap(), ratio(13, 72));
        let mut again = Vec::new();
        write_csv(&back, &mut again).unwrap();
        assert_eq!(buf, again);
    }
}
