use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Domain, RealFn};
use crate::error::{Error, Result};
use crate::expr::EvalError;

/// The concrete functionals this crate can materialize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionalKind {
    Discrete,
    Riemann,
    RiemannLiouville,
    Hadamard,
    Hypergeometric,
    Saigo,
    ErdelyiKober,
    QSaigo,
    QRiemannLiouville,
    Jackson,
    TimeScaleDelta,
}

impl FunctionalKind {
    pub const ALL: [FunctionalKind; 11] = [
        FunctionalKind::Discrete,
        FunctionalKind::Riemann,
        FunctionalKind::RiemannLiouville,
        FunctionalKind::Hadamard,
        FunctionalKind::Hypergeometric,
        FunctionalKind::Saigo,
        FunctionalKind::ErdelyiKober,
        FunctionalKind::QSaigo,
        FunctionalKind::QRiemannLiouville,
        FunctionalKind::Jackson,
        FunctionalKind::TimeScaleDelta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionalKind::Discrete => "discrete",
            FunctionalKind::Riemann => "riemann",
            FunctionalKind::RiemannLiouville => "riemann-liouville",
            FunctionalKind::Hadamard => "hadamard",
            FunctionalKind::Hypergeometric => "hypergeometric",
            FunctionalKind::Saigo => "saigo",
            FunctionalKind::ErdelyiKober => "erdelyi-kober",
            FunctionalKind::QSaigo => "q-saigo",
            FunctionalKind::QRiemannLiouville => "q-riemann-liouville",
            FunctionalKind::Jackson => "jackson",
            FunctionalKind::TimeScaleDelta => "time-scale-delta",
        }
    }

    pub fn from_name(s: &str) -> Option<FunctionalKind> {
        FunctionalKind::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Kinds whose node sums discretize a continuous integral.
    pub fn is_quadrature(self) -> bool {
        matches!(
            self,
            FunctionalKind::Riemann
                | FunctionalKind::RiemannLiouville
                | FunctionalKind::Hadamard
                | FunctionalKind::Hypergeometric
                | FunctionalKind::Saigo
                | FunctionalKind::ErdelyiKober
        )
    }
}

impl std::fmt::Display for FunctionalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Operator parameters; unused ones stay `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<f64>,
    /// Evaluation point (t, or x for Hadamard).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub a: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub b: Option<f64>,
}

/// Absolute and relative tolerance used for verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceSpec {
    pub abs: f64,
    pub rel: f64,
}

impl ToleranceSpec {
    pub fn new(abs: f64, rel: f64) -> Result<Self> {
        if !(abs >= 0.0 && rel >= 0.0) || (abs == 0.0 && rel == 0.0) {
            return Err(Error::domain(format!(
                "tolerance needs non-negative abs/rel, not both zero (got {abs}, {rel})"
            )));
        }
        Ok(ToleranceSpec { abs, rel })
    }

    pub fn for_kind(kind: FunctionalKind) -> Self {
        if kind.is_quadrature() {
            ToleranceSpec { abs: 1e-7, rel: 1e-5 }
        } else {
            ToleranceSpec { abs: 1e-10, rel: 1e-8 }
        }
    }

    /// The looser of two tolerances, componentwise.
    pub fn max(self, other: ToleranceSpec) -> Self {
        ToleranceSpec {
            abs: self.abs.max(other.abs),
            rel: self.rel.max(other.rel),
        }
    }

    pub fn bound(&self, magnitude: f64) -> f64 {
        self.abs + self.rel * magnitude
    }
}

/// A materialized isotonic linear functional: `A(f) = Σ wᵢ f(σᵢ)` with `wᵢ ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalSpec {
    kind: FunctionalKind,
    params: Params,
    resolution: usize,
    domain: Domain,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl FunctionalSpec {
    /// Validates the node table; negative or non-finite weights are an
    /// invariant violation.
    pub fn from_nodes(
        kind: FunctionalKind,
        params: Params,
        resolution: usize,
        domain: Domain,
        nodes: Vec<f64>,
        weights: Vec<f64>,
    ) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != weights.len() {
            return Err(Error::construction(format!(
                "{kind}: need equally many nodes and weights (got {} and {})",
                nodes.len(),
                weights.len()
            )));
        }
        if let Some(i) = nodes.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvariantViolation(format!("{kind}: node {i} is not finite")));
        }
        if let Some(i) = weights.iter().position(|w| !(w.is_finite() && *w >= 0.0)) {
            return Err(Error::InvariantViolation(format!(
                "{kind}: weight {i} = {} is not a non-negative finite number",
                weights[i]
            )));
        }
        Ok(FunctionalSpec {
            kind,
            params,
            resolution,
            domain,
            nodes,
            weights,
        })
    }

    pub fn kind(&self) -> FunctionalKind {
        self.kind
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn default_tolerance(&self) -> ToleranceSpec {
        ToleranceSpec::for_kind(self.kind)
    }

    /// A(1).
    pub fn mass(&self) -> f64 {
        pairwise_sum(&self.weights)
    }

    /// Values of `f` at the nodes.
    pub fn sample<F: RealFn + ?Sized>(&self, f: &F) -> Result<Vec<f64>> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                f.eval(x).map_err(|source| Error::NodeEval {
                    node: i,
                    at: x,
                    source,
                })
            })
            .collect()
    }

    /// `Σ wᵢ ∏ₖ factors[k][i]` for node-aligned value vectors.
    pub fn dot(&self, factors: &[&[f64]]) -> f64 {
        debug_assert!(factors.iter().all(|v| v.len() == self.len()));
        let terms: Vec<f64> = (0..self.len())
            .map(|i| factors.iter().fold(self.weights[i], |acc, v| acc * v[i]))
            .collect();
        pairwise_sum(&terms)
    }

    /// A(f).
    pub fn apply<F: RealFn + ?Sized>(&self, f: &F) -> Result<f64> {
        let v = self.sample(f)?;
        Ok(self.dot(&[&v]))
    }
}

/// B_yA_x(F): apply `a` in the first variable, then `b` in the second.
pub fn tensor_apply<F>(a: &FunctionalSpec, b: &FunctionalSpec, f: F) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64, EvalError> + Sync,
{
    let inner = |j: usize| -> Result<f64> {
        let y = b.nodes[j];
        let mut row = Vec::with_capacity(a.len());
        for (i, (&x, &w)) in a.nodes.iter().zip(&a.weights).enumerate() {
            let v = f(x, y).map_err(|source| Error::NodeEval { node: i, at: x, source })?;
            row.push(w * v);
        }
        Ok(b.weights[j] * pairwise_sum(&row))
    };
    // chunking only changes scheduling: each outer term is computed independently
    // and the final reduction order is fixed by index
    let outer: Vec<f64> = if a.len() * b.len() >= PARALLEL_THRESHOLD {
        (0..b.len()).into_par_iter().map(inner).collect::<Result<_>>()?
    } else {
        (0..b.len()).map(inner).collect::<Result<_>>()?
    };
    Ok(pairwise_sum(&outer))
}

const PARALLEL_THRESHOLD: usize = 1 << 16;

/// Double node sum `Σⱼ vⱼ Σᵢ wᵢ K[i][j]` over precomputed values, `kernel(i, j)`.
pub fn tensor_dot(a: &FunctionalSpec, b: &FunctionalSpec, kernel: impl Fn(usize, usize) -> f64) -> f64 {
    let mut outer = Vec::with_capacity(b.len());
    let mut row = vec![0.0; a.len()];
    for j in 0..b.len() {
        for (i, r) in row.iter_mut().enumerate() {
            *r = a.weights[i] * kernel(i, j);
        }
        outer.push(b.weights[j] * pairwise_sum(&row));
    }
    pairwise_sum(&outer)
}

/// Fixed-tree pairwise summation; the result depends only on the slice contents.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const BLOCK: usize = 32;
    if values.len() <= BLOCK {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}
