use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = cik::Cli::parse();
    let stderr = io::stderr();
    if let Err(msg) = cik::apply_memo_limit(std::env::var(cik::MEMO_LIMIT_VAR).ok().as_deref()) {
        let _ = writeln!(stderr.lock(), "error: {msg}");
        return ExitCode::from(cik::EXIT_USAGE as u8);
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = cik::run(&cli, &mut out, &mut stderr.lock());
    if out.flush().is_err() {
        return ExitCode::from(cik::EXIT_USAGE as u8);
    }
    ExitCode::from(code as u8)
}
