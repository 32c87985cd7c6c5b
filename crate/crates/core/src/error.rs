use thiserror::Error;

use crate::expr::{EvalError, ParseError};

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Result not representable as a finite double.
    #[error("range error: {0}")]
    Range(String),
    /// A case the implementation deliberately does not cover.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A series or product failed to meet its stop rule.
    #[error("truncation error: {what} did not converge within {terms} terms")]
    Truncation { what: String, terms: usize },
    /// Construction-time invalid input (e.g. negative weight, unsorted points).
    #[error("construction error: {0}")]
    Construction(String),
    /// A structural invariant of a materialized functional was violated.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    /// A function failed to evaluate at a node of a functional.
    #[error("evaluation failed at node {node} (x = {at}): {source}")]
    NodeEval {
        node: usize,
        at: f64,
        #[source]
        source: EvalError,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
