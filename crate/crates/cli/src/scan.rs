use std::fs::File;
use std::io::{BufWriter, Write};

use cik_core::clark_ismail::scan_nonnegativity_parallel;

use crate::args::ScanArgs;
use crate::output::{write_csv, OutputRecord};
use crate::{EXIT_OK, EXIT_USAGE};

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

pub(crate) fn run(a: &ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    // open the destination before the (long) computation so a bad path fails fast
    let mut file = match &a.out {
        Some(path) => match File::create(path) {
            Ok(f) => Some(BufWriter::new(f)),
            Err(e) => {
                writeln!(err, "error: cannot write {}: {e}", path.display())?;
                return Ok(EXIT_USAGE);
            }
        },
        None => None,
    };
    let quantity = a.kind.quantity();
    let report = scan_nonnegativity_parallel(quantity, a.jmax as usize, a.kmax as usize, a.jobs as usize)?;
    let records: Vec<OutputRecord> = report
        .negatives
        .iter()
        .map(|c| OutputRecord::new(quantity.as_str(), c.j, c.k, &c.value, "bernoulli_form"))
        .collect();
    match file.as_mut() {
        Some(f) => {
            if let Err(e) = write_csv(&records, f).and_then(|_| f.flush()) {
                writeln!(err, "error: cannot write output: {e}")?;
                return Ok(EXIT_USAGE);
            }
        }
        None => write_csv(&records, out)?,
    }
    writeln!(out, "scanned {} cells, {} negative", report.scanned, report.negatives.len())?;
    Ok(EXIT_OK)
}
