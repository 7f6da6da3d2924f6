//! Derivative values, Maclaurin coefficients and related checks for
//! `G_j(v) = v^j/(1-e^{-v})`, `f_j = G_j^{(j)}`,
//! `g_j = F_1^{j+1} e^{jv} f_j` (coefficients `gamma(j,k)`) and
//! `(e^v-1)^{j+1} f_j` (coefficients `C(j,k)`).
//!
//! Every exact quantity has at least two independent formulas. Functions
//! that compute more than one route return [`Error::RouteMismatch`](crate::Error)
//! when the routes disagree instead of silently picking one.

mod checks;
mod coefficients;
mod derivatives;
mod numeric;
mod table;

pub use checks::{
    log_convexity_report, scan_nonnegativity, scan_nonnegativity_parallel, ConvexityStep,
    LogConvexityReport, NegativeCell, ScanReport,
};
pub use coefficients::{
    f_derivative_at_zero, f_maclaurin_bernoulli, f_maclaurin_coeff, f_maclaurin_stirling,
    frak_c_bernoulli, frak_c_coeff, frak_c_row, frak_c_stirling, gamma_bernoulli, gamma_coeff,
    gamma_row, gamma_stirling, gamma_weight_coeffs,
};
pub use derivatives::{
    f1_derivative_at_zero, g_value_bernoulli, g_value_closed_form, g_value_determinantal,
    g_value_recursive, g_value_stirling, g_values_recursive,
};
pub use numeric::{
    bernoulli_bound_beta, f_eval_numeric, f_lower_bound_series, g_eval_numeric,
    ClosedFormEvaluator, EvalPoint, MACLAURIN_TERMS, SMALL_V,
};
pub use table::{Cell, CoefficientTable, Method, Quantity};
