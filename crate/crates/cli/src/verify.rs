use std::io::Write;

use cik_core::clark_ismail::{CoefficientTable, Method, Quantity};
use cik_core::combinatorics::{
    bell_at_reciprocals, bell_partial, bell_scaling_check, bernoulli, factorial, rising_factorial,
    stirling2,
};
use cik_core::hessenberg::{
    bernoulli_hessenberg_det, rising_factorial_hessenberg_det, whittaker_root_partial_sum,
    wronski_inverse_coeff,
};
use cik_core::rational::{format_exact, from_bigint, int, ratio, sign_pow};
use cik_core::series::{oracle_frak_g_series, oracle_g_series, oracle_gamma_series, TruncatedSeries};
use cik_core::Rational;

use crate::args::{Suite, VerifyArgs};
use crate::{EXIT_FAIL, EXIT_OK, EXIT_USAGE};

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn equal(&mut self, route: &str, j: usize, k: usize, lhs: &Rational, rhs: &Rational) {
        self.check(lhs == rhs, || {
            format!(
                "route={route} j={j} k={k} lhs={} rhs={}",
                format_exact(lhs),
                format_exact(rhs)
            )
        });
    }
}

fn routes(jmax: usize, kmax: usize) -> cik_core::Result<Tally> {
    let mut t = Tally::default();
    for q in [Quantity::G, Quantity::Gamma, Quantity::C] {
        let base = CoefficientTable::build(q, Method::BernoulliForm, 1..=jmax, 0..=kmax)?;
        for &m in Method::supported(q) {
            if m == Method::BernoulliForm {
                continue;
            }
            let other = CoefficientTable::build(q, m, 1..=jmax, 0..=kmax)?;
            for (a, b) in base.cells().iter().zip(other.cells()) {
                let route = format!("{q}:{}/{}", a.method, b.method);
                t.equal(&route, a.j, a.k, &a.value, &b.value);
            }
        }
    }
    Ok(t)
}

fn bell(kmax: usize) -> cik_core::Result<Tally> {
    let mut t = Tally::default();
    let n_max = kmax.max(1);
    let ones = vec![int(1); n_max];
    let recips: Vec<Rational> = (0..n_max).map(|i| ratio(1, i as i64 + 2)).collect();
    let (a, b) = (ratio(-2, 3), ratio(5, 7));
    for n in 0..=n_max {
        for k in 0..=n {
            let at_ones = bell_partial(n, k, &ones)?;
            t.equal("bell:ones/stirling", n, k, &at_ones, &from_bigint(stirling2(n, k)));
            let at_recips = bell_partial(n, k, &recips)?;
            t.equal("bell:reciprocals/closed_form", n, k, &at_recips, &bell_at_reciprocals(n, k));
            let ok = bell_scaling_check(n, k, &a, &b, &recips)?;
            t.check(ok, || format!("route=bell:scaling j={n} k={k}"));
        }
    }
    Ok(t)
}

fn hessenberg(jmax: usize, kmax: usize) -> cik_core::Result<Tally> {
    let mut t = Tally::default();
    for j in 0..=jmax {
        let expected = bernoulli(j + 1) * Rational::new(sign_pow(j + 1).into(), factorial(j + 1));
        t.equal("hessenberg:bernoulli", j, 0, &bernoulli_hessenberg_det(j), &expected);
    }
    let order = kmax + 1;
    let samples = [
        TruncatedSeries::f1(order),
        TruncatedSeries::exp(order),
        TruncatedSeries::expm1_over_v(order),
        TruncatedSeries::new((0..order).map(|i| int([1, -3, 2].get(i).copied().unwrap_or(0))).collect()),
    ];
    for (s_idx, s) in samples.iter().enumerate() {
        let inv = s.invert()?;
        let a: Vec<Rational> = (1..order).map(|i| s.coeff(i)).collect();
        for j in 1..order {
            t.equal("hessenberg:wronski/invert", s_idx, j, &wronski_inverse_coeff(&a, j)?, &inv.coeff(j));
        }
    }
    for theta in [ratio(1, 2), ratio(-3, 4), ratio(5, 3), int(2), int(-1)] {
        for j in 1..=kmax.max(1) {
            let expected = rising_factorial(&theta, j) / from_bigint(factorial(j));
            let det = rising_factorial_hessenberg_det(&theta, j)?;
            t.check(det == expected, || {
                format!(
                    "route=hessenberg:rising_factorial theta={} j={j} lhs={} rhs={}",
                    format_exact(&theta),
                    format_exact(&det),
                    format_exact(&expected)
                )
            });
        }
    }
    // 1 - 3v + 2v^2: partial sums (2^m - 1)/(2^{m+1} - 1) of the root 1/2
    let lambda = [int(1), int(-3), int(2)];
    for m in 1..=kmax.clamp(1, 30) {
        let expected = ratio((1i64 << m) - 1, (1i64 << (m + 1)) - 1);
        t.equal("hessenberg:whittaker", m, 0, &whittaker_root_partial_sum(&lambda, m)?, &expected);
    }
    Ok(t)
}

fn series(jmax: usize, kmax: usize) -> cik_core::Result<Tally> {
    let mut t = Tally::default();
    let order = kmax + 1;
    let g1 = oracle_g_series(1, order)?;
    for k in 0..order {
        let expected = bernoulli(k) * Rational::new(sign_pow(k).into(), factorial(k));
        t.equal("series:G_1/bernoulli", 1, k, &g1.coeff(k), &expected);
    }
    for j in 1..=jmax {
        let frak = oracle_frak_g_series(j, order)?;
        let via_gamma = oracle_gamma_series(j, order)?
            .shift(j as i64 + 1)?
            .mul(&TruncatedSeries::exp(order));
        for k in 0..order {
            t.equal("series:frak_g/v^(j+1)e^v*g", j, k, &frak.coeff(k), &via_gamma.coeff(k));
        }
    }
    let f1 = TruncatedSeries::f1(order);
    let product = f1.mul(&f1.invert()?);
    t.check(product == TruncatedSeries::one(order), || "route=series:F_1*(1/F_1) j=0 k=0".into());
    Ok(t)
}

pub(crate) fn run(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if a.jmax == 0 {
        writeln!(err, "error: --jmax must be at least 1")?;
        return Ok(EXIT_USAGE);
    }
    let suites: &[Suite] = match a.suite {
        Suite::All => &[Suite::Routes, Suite::Bell, Suite::Hessenberg, Suite::Series],
        ref s => std::slice::from_ref(s),
    };
    let mut failed = false;
    for suite in suites {
        let (name, tally) = match suite {
            Suite::Routes => ("routes", routes(a.jmax, a.kmax)?),
            Suite::Bell => ("bell", bell(a.kmax)?),
            Suite::Hessenberg => ("hessenberg", hessenberg(a.jmax, a.kmax)?),
            Suite::Series => ("series", series(a.jmax, a.kmax)?),
            Suite::All => unreachable!(),
        };
        for f in &tally.failures {
            writeln!(out, "FAIL {name}: {f}")?;
        }
        let status = if tally.failures.is_empty() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {name}: {} checks, {} failures", tally.checks, tally.failures.len())?;
        failed |= !tally.failures.is_empty();
    }
    Ok(if failed { EXIT_FAIL } else { EXIT_OK })
}
