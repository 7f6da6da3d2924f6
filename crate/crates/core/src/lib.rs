//! Exact computation of the derivatives, Maclaurin coefficients and related
//! determinant identities of `G_j(v) = v^j / (1 - e^{-v})`.
//!
//! Every closed-form quantity is a [`Rational`]. Each one can be obtained by
//! several independent formulas, and the [`series`] module re-derives all of
//! them by brute-force truncated power series arithmetic.

pub mod clark_ismail;
pub mod combinatorics;
mod error;
pub mod hessenberg;
pub mod rational;
pub mod series;

pub use error::{Error, Result, RouteMismatch};
pub use rational::Rational;
