//! Special functions needed by the operator kernels.
//!
//! Everything here is real-valued double precision. The q-deformed functions
//! assume `0 < q < 1`.

mod gamma;
mod hypergeometric;
mod incomplete;
mod qcalc;

pub use gamma::{gamma, ln_gamma, ln_gamma_sign, pochhammer, reciprocal_gamma};
pub use hypergeometric::{gauss_2f1, gauss_2f1_series_terms, gauss_2f1_with};
pub use incomplete::{
    lower_incomplete_gamma, lower_incomplete_gamma_with, upper_incomplete_gamma,
};
pub use qcalc::{
    q_bracket_power, q_gamma, q_gamma_with, q_pochhammer, q_pochhammer_finite,
    q_pochhammer_with,
};

use crate::error::{Error, Result};

/// Truncation policy for the infinite series and products in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Stop once `|term| <= rel_tol * |partial sum|` for two consecutive terms.
    pub rel_tol: f64,
    pub max_terms: usize,
    /// Infinite q-products stop at the first `k` with `|a| q^k < product_tail_tol`.
    pub product_tail_tol: f64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            rel_tol: 1e-14,
            max_terms: 10_000,
            product_tail_tol: 1e-16,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-3) {
            return Err(Error::domain(format!(
                "series rel_tol must lie in (0, 1e-3], got {}",
                self.rel_tol
            )));
        }
        if self.max_terms < 100 {
            return Err(Error::domain(format!(
                "series max_terms must be at least 100, got {}",
                self.max_terms
            )));
        }
        if !(self.product_tail_tol > 0.0 && self.product_tail_tol < 1.0) {
            return Err(Error::domain(format!(
                "product_tail_tol must lie in (0, 1), got {}",
                self.product_tail_tol
            )));
        }
        Ok(())
    }
}

/// True when `x` is a non-positive integer (a pole of Γ).
pub(crate) fn is_non_positive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}
