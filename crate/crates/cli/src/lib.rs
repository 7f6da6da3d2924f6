//! Command-line front end: tables, verification suites, sign scans and
//! numeric evaluation.

pub mod args;
mod eval;
pub mod golden;
pub mod output;
mod scan;
mod table;
mod verify;

use std::io::Write;

use cik_core::combinatorics::memo;

pub use args::{Cli, Command};

/// Everything passed; no verification failure.
pub const EXIT_OK: i32 = 0;
/// A verification or golden comparison failed.
pub const EXIT_FAIL: i32 = 1;
/// Bad usage or an I/O problem.
pub const EXIT_USAGE: i32 = 2;

/// Name of the environment variable capping the memo tables.
pub const MEMO_LIMIT_VAR: &str = "CIK_MEMO_LIMIT";

/// Applies `CIK_MEMO_LIMIT` when set. An unparsable value is a usage error.
pub fn apply_memo_limit(value: Option<&str>) -> Result<(), String> {
    match value {
        None => Ok(()),
        Some(s) => {
            let limit = s
                .trim()
                .parse::<usize>()
                .map_err(|_| format!("{MEMO_LIMIT_VAR} must be a nonnegative integer, got {s:?}"))?;
            memo().set_limit(Some(limit));
            Ok(())
        }
    }
}

/// Runs one parsed command, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Table(a) => table::run(a, out, err),
        Command::Verify(a) => verify::run(a, out, err),
        Command::Scan(a) => scan::run(a, out, err),
        Command::Eval(a) => eval::run(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
