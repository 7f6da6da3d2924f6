use cik_core::clark_ismail::{
    f_eval_numeric, f_lower_bound_series, f_maclaurin_coeff, g_eval_numeric, EvalPoint,
};
use cik_core::rational::{int, ratio, to_f64};
use cik_core::Rational;
use num_traits::{One, Zero};

/// `e^{-x}` by 60 Taylor terms, exactly.
fn exp_neg(x: &Rational) -> Rational {
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for n in 1..60 {
        term = -term * x / int(n);
        sum += &term;
    }
    sum
}

fn g_exact(j: usize, x: &Rational) -> Rational {
    let mut p = Rational::one();
    for _ in 0..j {
        p *= x;
    }
    p / (Rational::one() - exp_neg(x))
}

/// Five-point central differences evaluated exactly; only the final
/// result is rounded.
fn central_difference(j: usize, k: usize, v: &Rational) -> f64 {
    let h = ratio(1, 10_000);
    let f = |i: i64| g_exact(j, &(v + &h * int(i)));
    let (m2, m1, p1, p2) = (f(-2), f(-1), f(1), f(2));
    let d = match k {
        0 => f(0),
        1 => (-&p2 + int(8) * &p1 - int(8) * &m1 + &m2) / (int(12) * &h),
        2 => (-&p2 + int(16) * &p1 - int(30) * f(0) + int(16) * &m1 - &m2) / (int(12) * &h * &h),
        3 => (&p2 - int(2) * &p1 + int(2) * &m1 - &m2) / (int(2) * &h * &h * &h),
        4 => (&p2 - int(4) * &p1 + int(6) * f(0) - int(4) * &m1 + &m2) / (&h * &h * &h * &h),
        _ => unreachable!(),
    };
    to_f64(&d)
}

#[test]
fn closed_form_matches_finite_differences() {
    for j in 1..=4 {
        for k in 0..=4 {
            for (v, v_exact) in [(0.1, ratio(1, 10)), (0.5, ratio(1, 2)), (1.0, int(1)), (2.0, int(2))] {
                let value = g_eval_numeric(EvalPoint::new(j, k, v)).unwrap();
                let fd = central_difference(j, k, &v_exact);
                let rel = (value - fd).abs() / value.abs();
                assert!(rel < 1e-5, "j={j} k={k} v={v}: {value} vs {fd} (rel {rel:e})");
            }
        }
    }
}

#[test]
fn f_matches_maclaurin_partial_sum() {
    for (j, v) in [(4usize, 1.0f64), (2, 0.3), (6, -0.8), (3, 1.5)] {
        let series: f64 = (0..30)
            .map(|i| to_f64(&f_maclaurin_coeff(j, i).unwrap()) * v.powi(i as i32))
            .sum();
        let value = f_eval_numeric(j, v).unwrap();
        assert!((value - series).abs() < 1e-8 * series.abs().max(1.0), "j={j} v={v}: {value} vs {series}");
    }
}

#[test]
fn limits() {
    assert!((f_eval_numeric(2, 1e-4).unwrap() - 1.0).abs() < 1e-3);
    assert!((f_eval_numeric(3, 40.0).unwrap() - 6.0).abs() < 1e-9);
    assert!((f_lower_bound_series(2, 1e-6, 5) - 0.5).abs() < 1e-6);
    for j in 1..=6 {
        assert!(f_eval_numeric(j, 0.0).is_err());
        assert!(g_eval_numeric(EvalPoint::new(j, 2, f64::INFINITY)).is_err());
    }
}

#[test]
fn lower_bound_stays_below() {
    for j in 1..=8 {
        for v in [0.1, 0.5, 1.0, 2.0, 3.0] {
            let bound = f_lower_bound_series(j, v, 5);
            let jf: f64 = (1..=j).map(|i| i as f64).product();
            let f = f_eval_numeric(j, v).unwrap() / jf;
            assert!(bound < f, "j={j} v={v}: bound {bound} vs {f}");
        }
    }
}

#[test]
fn exact_oracle_sanity() {
    assert!(!exp_neg(&Rational::zero()).is_zero());
    assert!((to_f64(&exp_neg(&int(2))) - (-2.0f64).exp()).abs() < 1e-15);
}
