//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line
//! (visible with `--nocapture`) and fails when the criterion is not met.

use std::process::Command;
use std::time::{Duration, Instant};

use cik::golden::golden;
use cik_core::clark_ismail::{
    f_derivative_at_zero, log_convexity_report, ClosedFormEvaluator, CoefficientTable, EvalPoint,
    Method, Quantity,
};
use cik_core::combinatorics::{bernoulli, factorial, rising_factorial};
use cik_core::hessenberg::{bernoulli_hessenberg_det, rising_factorial_hessenberg_det, wronski_inverse_coeff};
use cik_core::rational::{from_bigint, int, ratio, sign_pow, to_f64};
use cik_core::series::TruncatedSeries;
use cik_core::Rational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn report(n: u32, what: &str, started: Instant, limit: Option<Duration>, failures: &[String]) {
    let elapsed = started.elapsed();
    let slow = limit.is_some_and(|l| elapsed >= l);
    let status = if failures.is_empty() && !slow { "PASS" } else { "FAIL" };
    let limit_note = limit.map(|l| format!(" (limit {:.0?})", l)).unwrap_or_default();
    println!("criterion {n}: {status} {what} [{elapsed:.2?}{limit_note}]");
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {n}: {} failures", failures.len());
    assert!(!slow, "criterion {n}: took {elapsed:?}");
}

fn golden_check(quantity: Quantity, methods: &[Method]) -> Vec<String> {
    let g = golden(quantity).unwrap();
    let mut failures = Vec::new();
    for &m in methods {
        let t = CoefficientTable::build(quantity, m, g.rows.clone(), g.cols.clone()).unwrap();
        for c in t.cells() {
            if Some(&c.value) != g.get(c.j, c.k) {
                failures.push(format!("{quantity}({},{}) by {m} = {}", c.j, c.k, c.value));
            }
        }
        if t.cells().len() != g.cells.len() {
            failures.push(format!("{m}: {} cells, table has {}", t.cells().len(), g.cells.len()));
        }
    }
    failures
}

#[test]
fn criterion_01_table1_g_values() {
    let t = Instant::now();
    let f = golden_check(Quantity::G, &Method::ALL);
    report(1, "G reference table, 90 values x 5 routes + series oracle, exact", t, Some(Duration::from_secs(5)), &f);
}

#[test]
fn criterion_02_table2_gamma() {
    let t = Instant::now();
    let f = golden_check(Quantity::Gamma, Method::supported(Quantity::Gamma));
    report(2, "gamma reference table, 72 values x 2 routes + series oracle, exact", t, Some(Duration::from_secs(10)), &f);
}

#[test]
fn criterion_03_table3_c() {
    let t = Instant::now();
    let f = golden_check(Quantity::C, Method::supported(Quantity::C));
    report(3, "C reference table, 80 values x 2 routes + series oracle, exact", t, Some(Duration::from_secs(10)), &f);
}

#[test]
fn criterion_04_hessenberg_bernoulli() {
    let t = Instant::now();
    let f: Vec<String> = (0..=30)
        .filter_map(|j| {
            let expected = bernoulli(j + 1) * Rational::new(sign_pow(j + 1).into(), factorial(j + 1));
            let det = bernoulli_hessenberg_det(j);
            (det != expected).then(|| format!("j={j}: {det} != {expected}"))
        })
        .collect();
    report(4, "Hessenberg determinant = (-1)^{j+1} B_{j+1}/(j+1)!, 0 <= j <= 30", t, Some(Duration::from_secs(5)), &f);
}

fn random_rational(rng: &mut StdRng) -> Rational {
    ratio(rng.gen_range(-50..=50), rng.gen_range(1..=20))
}

#[test]
fn criterion_05_wronski_vs_inversion() {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(5);
    let mut f = Vec::new();
    for case in 0..100 {
        let tail: Vec<Rational> = (0..12).map(|_| random_rational(&mut rng)).collect();
        let mut coeffs = vec![int(1)];
        coeffs.extend(tail.iter().cloned());
        let inv = TruncatedSeries::new(coeffs).invert().unwrap();
        for j in 1..=12 {
            let w = wronski_inverse_coeff(&tail, j).unwrap();
            if w != inv.coeff(j) {
                f.push(format!("series {case}, index {j}: {w} != {}", inv.coeff(j)));
            }
        }
    }
    report(5, "Wronski determinant = inversion, 100 random series through index 12", t, None, &f);
}

#[test]
fn criterion_06_rising_factorial_determinant() {
    let t = Instant::now();
    let mut rng = StdRng::seed_from_u64(6);
    let mut f = Vec::new();
    for _ in 0..20 {
        let theta = random_rational(&mut rng);
        for j in 1..=10 {
            let expected = rising_factorial(&theta, j) / from_bigint(factorial(j));
            let det = rising_factorial_hessenberg_det(&theta, j).unwrap();
            if det != expected {
                f.push(format!("theta={theta} j={j}: {det} != {expected}"));
            }
        }
    }
    report(6, "rising-factorial determinant = (theta)_j/j!, 20 random theta, j <= 10", t, None, &f);
}

#[test]
fn criterion_07_initial_values() {
    let t = Instant::now();
    let mut f = Vec::new();
    for j in 1..=20 {
        let f0 = f_derivative_at_zero(j, 0);
        if f0 != from_bigint(factorial(j)) / int(2) {
            f.push(format!("f_{j}(0) = {f0}"));
        }
        let f1 = f_derivative_at_zero(j, 1);
        if f1 != from_bigint(factorial(j + 1)) / int(12) {
            f.push(format!("f_{j}'(0) = {f1}"));
        }
        for k in 1..=10 {
            if f_derivative_at_zero(j, 2 * k) != int(0) {
                f.push(format!("f_{j}^({})(0) != 0", 2 * k));
            }
        }
    }
    report(7, "f_j(0) = j!/2, f_j'(0) = (j+1)!/12, f_j^(2k)(0) = 0", t, None, &f);
}

#[test]
fn criterion_08_log_convexity() {
    let t = Instant::now();
    let mut f = Vec::new();
    for j in 1..=20 {
        let r = log_convexity_report(j, 15).unwrap();
        for s in r.interior.iter().filter(|s| !s.pass) {
            f.push(format!("interior step fails at j={j} k={}", s.k));
        }
        let expected = j >= 6;
        if r.extended_first_step != expected {
            f.push(format!("extended first step at j={j}: got {}, expected {expected}", r.extended_first_step));
        }
    }
    report(8, "log-convexity: interior 2 <= k <= 15; extended step iff j >= 6", t, None, &f);
}

#[test]
fn criterion_09_numeric_positivity() {
    let t = Instant::now();
    let mut f = Vec::new();
    let mut min = f64::INFINITY;
    for j in 2..=16 {
        let eval = ClosedFormEvaluator::new(j, j).unwrap();
        // grid points in (ln 2, 20], step 0.01
        for i in 70..=2000 {
            let v = i as f64 / 100.0;
            let value = eval.eval(v).unwrap();
            let jf = to_f64(&from_bigint(factorial(j)));
            min = min.min(value / jf);
            if value.is_nan() || value <= 0.0 {
                f.push(format!("f_{j}({v}) = {value}"));
            }
        }
    }
    println!("    smallest f_j(v)/j! on the grid: {min:.6}");
    report(9, "f_j(v) > 0 on v in (ln 2, 20] step 0.01, 2 <= j <= 16", t, None, &f);
}

fn exp_neg(x: &Rational) -> Rational {
    let mut term = int(1);
    let mut sum = int(1);
    for n in 1..60 {
        term = -term * x / int(n);
        sum += &term;
    }
    sum
}

fn g_exact(j: usize, x: &Rational) -> Rational {
    let mut p = int(1);
    for _ in 0..j {
        p *= x;
    }
    p / (int(1) - exp_neg(x))
}

fn central_difference(j: usize, k: usize, v: &Rational) -> f64 {
    let h = ratio(1, 10_000);
    let f = |i: i64| g_exact(j, &(v + &h * int(i)));
    let (m2, m1, p1, p2) = (f(-2), f(-1), f(1), f(2));
    let d = match k {
        0 => f(0),
        1 => (-&p2 + int(8) * &p1 - int(8) * &m1 + &m2) / (int(12) * &h),
        2 => (-&p2 + int(16) * &p1 - int(30) * f(0) + int(16) * &m1 - &m2) / (int(12) * &h * &h),
        3 => (&p2 - int(2) * &p1 + int(2) * &m1 - &m2) / (int(2) * &h * &h * &h),
        _ => (&p2 - int(4) * &p1 + int(6) * f(0) - int(4) * &m1 + &m2) / (&h * &h * &h * &h),
    };
    to_f64(&d)
}

#[test]
fn criterion_10_finite_differences() {
    let t = Instant::now();
    let mut f = Vec::new();
    let mut worst = 0.0f64;
    for j in 1..=4 {
        for k in 0..=4 {
            for (v, v_exact) in [(0.1, ratio(1, 10)), (0.5, ratio(1, 2)), (1.0, int(1)), (2.0, int(2))] {
                let value = cik_core::clark_ismail::g_eval_numeric(EvalPoint::new(j, k, v)).unwrap();
                let fd = central_difference(j, k, &v_exact);
                let rel = (value - fd).abs() / value.abs();
                worst = worst.max(rel);
                if rel.is_nan() || rel >= 1e-5 {
                    f.push(format!("j={j} k={k} v={v}: {value} vs {fd}, rel {rel:e}"));
                }
            }
        }
    }
    println!("    worst relative difference: {worst:e}");
    report(10, "closed form vs 5-point central differences, relative < 1e-5", t, None, &f);
}

fn run_scan(kind: &str, jobs: &str, out: &std::path::Path) -> (String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_cik"))
        .args(["scan", kind, "--jmax", "20", "--kmax", "20", "--jobs", jobs, "--out"])
        .arg(out)
        .output()
        .expect("run cik");
    assert!(output.status.success(), "scan {kind} failed: {}", String::from_utf8_lossy(&output.stderr));
    (String::from_utf8(output.stdout).unwrap(), std::fs::read_to_string(out).unwrap())
}

#[test]
fn criterion_11_negativity_scan() {
    let t = Instant::now();
    let dir = std::env::temp_dir().join(format!("cik-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut f = Vec::new();
    for (kind, jtab, ktab) in [("gamma", 9u64, 7u64), ("C", 8, 9)] {
        let (summary1, csv1) = run_scan(kind, "1", &dir.join(format!("{kind}-1.csv")));
        let (summary2, csv2) = run_scan(kind, "3", &dir.join(format!("{kind}-3.csv")));
        println!("    {kind}: {}", summary1.trim());
        if summary1 != summary2 || csv1 != csv2 {
            f.push(format!("{kind}: output differs between runs"));
        }
        if !summary1.starts_with("scanned 420 cells, ") {
            f.push(format!("{kind}: unexpected summary {summary1:?}"));
        }
        let records = cik::output::read_csv(csv1.as_bytes()).unwrap();
        for r in records.iter().filter(|r| r.j <= jtab && r.k <= ktab) {
            f.push(format!("{kind}({},{}) = {} inside the tabulated range", r.j, r.k, r.value_exact));
        }
    }
    std::fs::remove_dir_all(&dir).ok();
    report(11, "scan gamma and C to 20 x 20: deterministic, no negatives in tabulated ranges", t, Some(Duration::from_secs(60)), &f);
}
