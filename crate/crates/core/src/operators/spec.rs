//! Declarative description of a functional, decodable from JSON or from a
//! compact `kind:key=value,...` string.

use serde::{Deserialize, Serialize};

use super::{
    build_discrete, build_erdelyi_kober, build_hadamard, build_hypergeometric, build_jackson,
    build_q_riemann_liouville, build_q_saigo, build_riemann, build_riemann_liouville, build_saigo,
    build_time_scale_delta, DEFAULT_M_CAP, DEFAULT_NODES, DEFAULT_Q_TERMS,
};
use crate::error::{Error, Result};
use crate::functional::{FunctionalKind, FunctionalSpec};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSpec {
    pub kind: Option<FunctionalKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    /// Evaluation point; `x` for Hadamard.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    /// Quadrature nodes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// q-series truncation K.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<f64>,
}

fn need(v: Option<f64>, name: &str, kind: FunctionalKind) -> Result<f64> {
    v.ok_or_else(|| Error::Domain(format!("{kind} needs parameter {name}")))
}

impl OperatorSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Construction(format!("operator spec: {e}")))
    }

    /// Parse `kind:key=value,key=value`. Lists (`points`, `weights`) use `;`
    /// between entries, e.g. `discrete:points=1;2,weights=1;1`.
    pub fn parse_compact(text: &str) -> Result<Self> {
        let text = text.trim();
        let (kind, rest) = match text.split_once(':') {
            Some((k, r)) => (k.trim(), r),
            None => (text, ""),
        };
        let kind = FunctionalKind::from_name(kind)
            .ok_or_else(|| Error::Construction(format!("unknown functional kind `{kind}`")))?;
        let mut spec = OperatorSpec { kind: Some(kind), ..Default::default() };
        for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Construction(format!("expected key=value, got `{item}`")))?;
            spec.set(key.trim(), value.trim())?;
        }
        Ok(spec)
    }

    /// Assign one parameter by name from its text form.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let num = |v: &str| -> Result<f64> {
            v.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::Construction(format!("`{key}` needs a finite number, got `{v}`")))
        };
        let count = |v: &str| -> Result<usize> {
            v.parse::<usize>().map_err(|_| Error::Construction(format!("`{key}` needs a count, got `{v}`")))
        };
        let list = |v: &str| -> Result<Vec<f64>> { v.split(';').map(|s| num(s.trim())).collect() };
        match key {
            "alpha" => self.alpha = Some(num(value)?),
            "beta" => self.beta = Some(num(value)?),
            "eta" => self.eta = Some(num(value)?),
            "mu" => self.mu = Some(num(value)?),
            "q" => self.q = Some(num(value)?),
            "t" | "x" => self.t = Some(num(value)?),
            "a" => self.a = Some(num(value)?),
            "b" => self.b = Some(num(value)?),
            "n" => self.n = Some(count(value)?),
            "k" | "K" => self.k = Some(count(value)?),
            "m_cap" | "m-cap" => self.m_cap = Some(count(value)?),
            "points" => self.points = list(value)?,
            "weights" => self.weights = list(value)?,
            _ => return Err(Error::Construction(format!("unknown operator parameter `{key}`"))),
        }
        Ok(())
    }

    pub fn build(&self) -> Result<FunctionalSpec> {
        let kind = self.kind.ok_or_else(|| Error::Construction("operator kind missing".into()))?;
        let n = self.n.unwrap_or(DEFAULT_NODES);
        let k = self.k.unwrap_or(DEFAULT_Q_TERMS);
        match kind {
            FunctionalKind::Discrete => {
                let w = (!self.weights.is_empty()).then_some(self.weights.as_slice());
                build_discrete(&self.points, w)
            }
            FunctionalKind::TimeScaleDelta => build_time_scale_delta(&self.points),
            FunctionalKind::Riemann => build_riemann(need(self.a, "a", kind)?, need(self.b, "b", kind)?, n),
            FunctionalKind::RiemannLiouville => {
                build_riemann_liouville(need(self.alpha, "alpha", kind)?, need(self.t, "t", kind)?, n)
            }
            FunctionalKind::Hadamard => build_hadamard(need(self.alpha, "alpha", kind)?, need(self.t, "t", kind)?, n),
            FunctionalKind::Hypergeometric => build_hypergeometric(
                need(self.alpha, "alpha", kind)?,
                need(self.beta, "beta", kind)?,
                need(self.eta, "eta", kind)?,
                self.mu.unwrap_or(0.0),
                need(self.t, "t", kind)?,
                n,
            ),
            FunctionalKind::Saigo => build_saigo(
                need(self.alpha, "alpha", kind)?,
                need(self.beta, "beta", kind)?,
                need(self.eta, "eta", kind)?,
                need(self.t, "t", kind)?,
                n,
            ),
            FunctionalKind::ErdelyiKober => {
                build_erdelyi_kober(need(self.alpha, "alpha", kind)?, need(self.eta, "eta", kind)?, need(self.t, "t", kind)?, n)
            }
            FunctionalKind::Jackson => build_jackson(need(self.q, "q", kind)?, need(self.t, "t", kind)?, k),
            FunctionalKind::QSaigo => build_q_saigo(
                need(self.alpha, "alpha", kind)?,
                need(self.beta, "beta", kind)?,
                need(self.eta, "eta", kind)?,
                need(self.q, "q", kind)?,
                need(self.t, "t", kind)?,
                k,
                self.m_cap.unwrap_or(DEFAULT_M_CAP),
            ),
            FunctionalKind::QRiemannLiouville => build_q_riemann_liouville(
                need(self.alpha, "alpha", kind)?,
                need(self.q, "q", kind)?,
                need(self.t, "t", kind)?,
                k,
            ),
        }
    }
}
