//! Numerical engine for isotonic linear functionals and the Chebyshev-type
//! inequalities built on them.
//!
//! Every functional (discrete sums, Gauss rules, fractional integral
//! operators and their q-analogues) is materialized once as nodes and
//! non-negative weights; all later algebra is node-sum algebra.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod chebyshev;
pub mod error;
pub mod expr;
pub mod functional;
pub mod harness;
pub mod inequalities;
pub mod operators;
pub mod special;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
