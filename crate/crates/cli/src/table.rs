use std::io::Write;

use cik_core::clark_ismail::{CoefficientTable, Method};
use cik_core::rational::format_exact;

use crate::args::{Format, TableArgs};
use crate::golden::golden;
use crate::output::{table_records, write_csv, write_json, write_pretty};
use crate::{EXIT_FAIL, EXIT_OK, EXIT_USAGE};

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

pub(crate) fn run(a: &TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let quantity = a.kind.quantity();
    if *a.j.start() == 0 {
        writeln!(err, "error: j starts at 1")?;
        return Ok(EXIT_USAGE);
    }
    let method: Method = a.method.into();
    if !Method::supported(quantity).contains(&method) {
        writeln!(err, "error: no {method} route for {quantity}")?;
        return Ok(EXIT_USAGE);
    }
    let reference = if a.golden {
        let g = golden(quantity).expect("every table kind has a fixture");
        if !g.covers(&a.j, &a.k) {
            writeln!(
                err,
                "error: --golden needs j in {}..{} and k in {}..{}",
                g.rows.start(),
                g.rows.end(),
                g.cols.start(),
                g.cols.end()
            )?;
            return Ok(EXIT_USAGE);
        }
        Some(g)
    } else {
        None
    };

    let table = CoefficientTable::build(quantity, method, a.j.clone(), a.k.clone())?;
    match a.format {
        Format::Csv => write_csv(&table_records(&table), out)?,
        Format::Json => write_json(&table_records(&table), out)?,
        Format::Pretty => write_pretty(&table, out)?,
    }

    let Some(g) = reference else {
        return Ok(EXIT_OK);
    };
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for &m in Method::supported(quantity) {
        let t = CoefficientTable::build(quantity, m, a.j.clone(), a.k.clone())?;
        for cell in t.cells() {
            checked += 1;
            let expected = g.get(cell.j, cell.k).expect("range checked above");
            if &cell.value != expected {
                mismatches += 1;
                writeln!(
                    err,
                    "golden mismatch: {quantity}({},{}) route {m} gives {} but the table has {}",
                    cell.j,
                    cell.k,
                    format_exact(&cell.value),
                    format_exact(expected)
                )?;
            }
        }
    }
    writeln!(
        err,
        "golden {quantity}: {checked} route-cells checked, {mismatches} mismatches"
    )?;
    Ok(if mismatches == 0 { EXIT_OK } else { EXIT_FAIL })
}
