use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::functional::{FunctionalKind, FunctionalSpec, Params, ToleranceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "VIOLATED")]
    Violated,
    #[serde(rename = "HYPOTHESIS_FAILED")]
    HypothesisFailed,
    #[serde(rename = "EVAL_ERROR")]
    EvalError,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "HOLDS",
            Verdict::Violated => "VIOLATED",
            Verdict::HypothesisFailed => "HYPOTHESIS_FAILED",
            Verdict::EvalError => "EVAL_ERROR",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Relation the displayed inequality asserts between its two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = ">=")]
    Geq,
    #[serde(rename = "<=")]
    Leq,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Geq => Direction::Leq,
            Direction::Leq => Direction::Geq,
        }
    }

    /// Oriented so that a non-negative value means the relation holds.
    pub fn slack(self, lhs: f64, rhs: f64) -> f64 {
        match self {
            Direction::Geq => lhs - rhs,
            Direction::Leq => rhs - lhs,
        }
    }
}

/// One sampled (or exact, at nodes) hypothesis check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub passed: bool,
    /// Smallest margin seen; negative beyond tolerance means the hypothesis failed.
    pub worst_margin: f64,
    pub samples: usize,
    /// `"sampled"` for grid/pair scans (not a proof), `"exact"` for parameter checks.
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionalMeta {
    pub kind: FunctionalKind,
    pub params: Params,
    pub nodes: usize,
}

impl From<&FunctionalSpec> for FunctionalMeta {
    fn from(s: &FunctionalSpec) -> Self {
        FunctionalMeta {
            kind: s.kind(),
            params: *s.params(),
            nodes: s.len(),
        }
    }
}

/// What a report was computed on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub a: FunctionalMeta,
    pub b: FunctionalMeta,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functions: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub constants: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub theorem: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub direction: Direction,
    pub tolerance: ToleranceSpec,
    pub verdict: Verdict,
    pub hypothesis_checks: Vec<HypothesisCheck>,
    pub instance: Instance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl InequalityReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Tolerance band the slack is compared against.
    pub fn allowed(&self) -> f64 {
        self.tolerance.bound(self.lhs.abs().max(self.rhs.abs()))
    }
}

/// HOLDS iff `slack ≥ -(abs + rel·max(|lhs|, |rhs|))`.
pub fn judge(lhs: f64, rhs: f64, direction: Direction, tol: ToleranceSpec) -> (f64, Verdict) {
    let slack = direction.slack(lhs, rhs);
    let verdict = if slack >= -tol.bound(lhs.abs().max(rhs.abs())) {
        Verdict::Holds
    } else {
        Verdict::Violated
    };
    (slack, verdict)
}
