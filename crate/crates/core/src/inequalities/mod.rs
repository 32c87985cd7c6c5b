//! One checker per inequality: both sides, oriented slack and a verdict.
//!
//! Hypotheses are sampled on the node union of A and B plus a grid (for
//! interval domains). A failed sample downgrades the verdict to
//! `HYPOTHESIS_FAILED`; the sides are still computed and reported.

mod bounds;
mod context;
mod lipschitz;
mod report;
mod triple;

use serde::{Deserialize, Serialize};

pub use bounds::{
    check_constant_bounds, check_four_bounds, check_four_const_bounds, check_near_function,
    check_variable_bounds, check_young_bounds, check_young_four, check_young_square,
};
pub use context::CheckerContext;
pub use lipschitz::{
    check_chebyshev_two, check_hadamard_example, check_holder_pair, check_lipschitz_pair,
    check_m_g_lipschitz, hadamard_example_oracle, hadamard_example_rhs,
};
pub use report::{
    judge, Direction, FunctionalMeta, HypothesisCheck, InequalityReport, Instance, Verdict,
};
pub use triple::{check_three_weights, check_triple_gruss, check_triple_lipschitz, check_triple_positive_weight};

use crate::error::{Error, Result};
use crate::functional::ScalarFunction;

/// How a pair of functions is ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    /// `(f(x) - f(y))(g(x) - g(y)) >= 0`
    Synchronous,
    Asynchronous,
}

impl Order {
    pub fn sign(self) -> f64 {
        match self {
            Order::Synchronous => 1.0,
            Order::Asynchronous => -1.0,
        }
    }

    /// Direction of an inequality stated for similarly ordered functions.
    pub fn direction(self) -> Direction {
        match self {
            Order::Synchronous => Direction::Geq,
            Order::Asynchronous => Direction::Leq,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Order::Synchronous => "synchronous",
            Order::Asynchronous => "asynchronous",
        }
    }

    pub fn from_name(s: &str) -> Option<Order> {
        match s {
            "synchronous" | "sync" => Some(Order::Synchronous),
            "asynchronous" | "async" => Some(Order::Asynchronous),
            _ => None,
        }
    }
}

/// The checkers, by report id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Checker {
    ChebyshevTwo,
    LipschitzPair,
    MGLipschitz,
    HolderPair,
    VariableBounds,
    ConstantBounds,
    NearFunction,
    FourBounds,
    FourConstBounds,
    YoungBounds,
    YoungSquare,
    YoungFour,
    TriplePositiveWeight,
    TripleGruss,
    TripleLipschitz,
    ThreeWeights,
    HadamardExample,
}

impl Checker {
    pub const ALL: [Checker; 17] = [
        Checker::ChebyshevTwo,
        Checker::LipschitzPair,
        Checker::MGLipschitz,
        Checker::HolderPair,
        Checker::VariableBounds,
        Checker::ConstantBounds,
        Checker::NearFunction,
        Checker::FourBounds,
        Checker::FourConstBounds,
        Checker::YoungBounds,
        Checker::YoungSquare,
        Checker::YoungFour,
        Checker::TriplePositiveWeight,
        Checker::TripleGruss,
        Checker::TripleLipschitz,
        Checker::ThreeWeights,
        Checker::HadamardExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Checker::ChebyshevTwo => "chebyshev-two",
            Checker::LipschitzPair => "lipschitz-pair",
            Checker::MGLipschitz => "m-g-lipschitz",
            Checker::HolderPair => "holder-pair",
            Checker::VariableBounds => "variable-bounds",
            Checker::ConstantBounds => "constant-bounds",
            Checker::NearFunction => "near-function",
            Checker::FourBounds => "four-bounds",
            Checker::FourConstBounds => "four-const-bounds",
            Checker::YoungBounds => "young-bounds",
            Checker::YoungSquare => "young-square",
            Checker::YoungFour => "young-four",
            Checker::TriplePositiveWeight => "triple-positive-weight",
            Checker::TripleGruss => "triple-gruss",
            Checker::TripleLipschitz => "triple-lipschitz",
            Checker::ThreeWeights => "three-weights",
            Checker::HadamardExample => "hadamard-example",
        }
    }

    pub fn from_name(s: &str) -> Option<Checker> {
        Checker::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl std::fmt::Display for Checker {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Hypothesis data shared by the checkers. Each checker reads the fields it
/// needs; [`BoundSpec::validate`] checks consistency of whatever is present.
#[derive(Debug, Clone, Default)]
pub struct BoundSpec {
    pub m: Option<f64>,
    pub big_m: Option<f64>,
    pub n: Option<f64>,
    pub big_n: Option<f64>,
    pub k: Option<f64>,
    pub big_k: Option<f64>,
    pub phi1: Option<ScalarFunction>,
    pub phi2: Option<ScalarFunction>,
    pub psi1: Option<ScalarFunction>,
    pub psi2: Option<ScalarFunction>,
    /// `(M₁, h₁)`, `(M₂, h₂)`
    pub lip1: Option<(f64, ScalarFunction)>,
    pub lip2: Option<(f64, ScalarFunction)>,
    pub m3: Option<f64>,
    pub h1: Option<f64>,
    pub h2: Option<f64>,
    pub r: Option<f64>,
    pub s: Option<f64>,
    pub theta1: Option<f64>,
    pub theta2: Option<f64>,
    /// Proximity constant for `|f - φ| < M`.
    pub near: Option<f64>,
}

impl BoundSpec {
    pub fn validate(&self) -> Result<()> {
        let pairs = [("m", self.m, "M", self.big_m), ("n", self.n, "N", self.big_n), ("k", self.k, "K", self.big_k)];
        for (lo_name, lo, hi_name, hi) in pairs {
            if let (Some(lo), Some(hi)) = (lo, hi) {
                if !(lo <= hi) {
                    return Err(Error::domain(format!("bounds need {lo_name} <= {hi_name}, got {lo} > {hi}")));
                }
            }
        }
        for (name, v) in [("H1", self.h1), ("H2", self.h2)] {
            if let Some(v) = v {
                if !(v > 0.0) {
                    return Err(Error::domain(format!("{name} must be positive, got {v}")));
                }
            }
        }
        for (name, v) in [("r", self.r), ("s", self.s)] {
            if let Some(v) = v {
                if !(v > 0.0 && v <= 1.0) {
                    return Err(Error::domain(format!("{name} must lie in (0, 1], got {v}")));
                }
            }
        }
        match (self.theta1, self.theta2) {
            (Some(a), Some(b)) => young_exponents(a, b)?,
            (None, None) => {}
            _ => return Err(Error::domain("Young exponents come in pairs")),
        }
        Ok(())
    }
}

/// `θ₁, θ₂ > 0` with `1/θ₁ + 1/θ₂ = 1` to within 1e-12.
pub fn young_exponents(theta1: f64, theta2: f64) -> Result<()> {
    if !(theta1 > 0.0 && theta2 > 0.0) {
        return Err(Error::domain(format!("Young exponents must be positive, got {theta1}, {theta2}")));
    }
    let gap = 1.0 / theta1 + 1.0 / theta2 - 1.0;
    if gap.abs() > 1e-12 {
        return Err(Error::domain(format!("1/θ₁ + 1/θ₂ = 1 fails by {gap:e}")));
    }
    Ok(())
}

/// Conjugate exponent `θ/(θ - 1)`.
pub fn conjugate(theta: f64) -> f64 {
    theta / (theta - 1.0)
}

#[cfg(test)]
mod tests;
