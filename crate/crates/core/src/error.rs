use std::fmt;

use crate::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Two formulas for the same quantity produced different values.
    #[error("{0}")]
    RouteMismatch(Box<RouteMismatch>),

    #[error("series stage degenerate at {0}")]
    DegenerateStage(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteMismatch {
    pub quantity: &'static str,
    pub j: usize,
    pub k: usize,
    pub left_route: &'static str,
    pub left: Rational,
    pub right_route: &'static str,
    pub right: Rational,
}

impl fmt::Display for RouteMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({},{}): route {} gives {} but route {} gives {}",
            self.quantity, self.j, self.k, self.left_route, self.left, self.right_route, self.right
        )
    }
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
