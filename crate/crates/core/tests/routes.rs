use cik_core::clark_ismail::{
    f_maclaurin_coeff, frak_c_coeff, g_value_bernoulli, g_value_closed_form, g_value_determinantal,
    g_value_recursive, g_value_stirling, gamma_coeff,
};
use cik_core::combinatorics::factorial;
use cik_core::rational::from_bigint;
use cik_core::series::{oracle_f_series, oracle_frak_c_value, oracle_g_series, oracle_gamma_value};
use num_traits::Zero;

#[test]
fn five_routes_and_oracle_agree() {
    for j in 1..=9 {
        let oracle = oracle_g_series(j, 13).unwrap();
        for k in 0..=12 {
            let expected = oracle.coeff(k) * from_bigint(factorial(k));
            let routes = [
                ("stirling_sum", g_value_stirling(j, k)),
                ("closed_form", g_value_closed_form(j, k)),
                ("bernoulli_form", g_value_bernoulli(j, k)),
                ("determinantal", g_value_determinantal(j, k)),
                ("recursion", g_value_recursive(j, k)),
            ];
            for (name, value) in routes {
                assert_eq!(value, expected, "{name} at j={j} k={k}");
            }
        }
    }
}

#[test]
fn vanishing_band() {
    for j in 2..=12 {
        for k in 0..j - 1 {
            assert!(g_value_stirling(j, k).is_zero());
            assert!(g_value_closed_form(j, k).is_zero());
            assert!(g_value_bernoulli(j, k).is_zero());
            assert!(g_value_determinantal(j, k).is_zero());
            assert!(g_value_recursive(j, k).is_zero());
        }
    }
}

#[test]
fn gamma_and_c_match_oracle() {
    for j in 1..=8 {
        for k in 0..=15 {
            assert_eq!(gamma_coeff(j, k).unwrap(), oracle_gamma_value(j, k).unwrap(), "gamma({j},{k})");
            assert_eq!(frak_c_coeff(j, k).unwrap(), oracle_frak_c_value(j, k).unwrap(), "C({j},{k})");
        }
    }
}

#[test]
fn f_coefficients_match_oracle_and_vanish_at_even_orders() {
    for j in 1..=10 {
        let f = oracle_f_series(j, 22).unwrap();
        for i in 0..=21 {
            assert_eq!(f_maclaurin_coeff(j, i).unwrap(), f.coeff(i), "j={j} i={i}");
        }
        for i in 1..=10 {
            assert!(f_maclaurin_coeff(j, 2 * i).unwrap().is_zero());
        }
    }
}
