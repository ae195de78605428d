use thiserror::Error;

/// Errors raised by the evaluators, predicates and integrators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate directed line: both endpoints coincide")]
    DegenerateLine,

    #[error("degenerate triangle: two vertices coincide")]
    DegenerateTriangle,

    #[error("argument {0} is outside the real branch (x <= 1)")]
    OutsideRealBranch(f64),

    #[error("{name} = {value} is outside the admissible range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error(
        "quadrature did not reach tolerance {tol:e} within {evaluations} evaluations \
         (best value {best_value}, error estimate {abs_error_estimate:e})"
    )]
    BudgetExhausted {
        tol: f64,
        best_value: f64,
        abs_error_estimate: f64,
        evaluations: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
