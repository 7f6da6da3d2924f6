use std::io::Write;

use cik_core::clark_ismail::{f_eval_numeric, f_lower_bound_series, g_eval_numeric, EvalPoint};
use cik_core::combinatorics::factorial;
use cik_core::rational::{from_bigint, to_f64};

use crate::args::{EvalArgs, EvalTarget};
use crate::{EXIT_OK, EXIT_USAGE};

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

pub(crate) fn run(a: &EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if a.v == 0.0 {
        writeln!(
            err,
            "error: v = 0 is not evaluated numerically; use exact table mode, e.g. `cik table G --j {0}..{0} --k {1}..{1}`",
            a.j, a.k
        )?;
        return Ok(EXIT_USAGE);
    }
    if !a.v.is_finite() || a.j == 0 {
        writeln!(err, "error: need finite v and j >= 1")?;
        return Ok(EXIT_USAGE);
    }
    match a.target {
        EvalTarget::G => {
            let value = g_eval_numeric(EvalPoint::new(a.j, a.k, a.v))?;
            writeln!(out, "G_{}^({})({}) = {value}", a.j, a.k, a.v)?;
        }
        EvalTarget::F => {
            writeln!(out, "f_{}({}) = {}", a.j, a.v, f_eval_numeric(a.j, a.v)?)?;
        }
        EvalTarget::Bound => {
            if a.v < 0.0 || a.terms == 0 {
                writeln!(err, "error: the bound needs v > 0 and --terms >= 1")?;
                return Ok(EXIT_USAGE);
            }
            let bound = f_lower_bound_series(a.j, a.v, a.terms);
            let f = f_eval_numeric(a.j, a.v)? / to_f64(&from_bigint(factorial(a.j)));
            writeln!(out, "bound = {bound}")?;
            writeln!(out, "f_{}({})/{}! = {f}", a.j, a.v, a.j)?;
        }
    }
    Ok(EXIT_OK)
}
