use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The set E a functional's nodes live on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Domain {
    Interval { a: f64, b: f64 },
    Points { points: Vec<f64> },
    /// `{t q^k : 0 <= k < len}`
    QGrid { t: f64, q: f64, len: usize },
}

impl Domain {
    pub fn interval(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::construction(format!("interval needs finite a < b, got [{a}, {b}]")));
        }
        Ok(Domain::Interval { a, b })
    }

    pub fn points(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::construction("point set must be non-empty"));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::construction("points must be finite"));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::construction("points must be strictly increasing"));
        }
        Ok(Domain::Points { points })
    }

    pub fn q_grid(t: f64, q: f64, len: usize) -> Result<Self> {
        if !(t > 0.0 && t.is_finite() && q > 0.0 && q < 1.0 && len >= 1) {
            return Err(Error::construction(format!(
                "q-grid needs t > 0, 0 < q < 1, len >= 1 (got t={t}, q={q}, len={len})"
            )));
        }
        Ok(Domain::QGrid { t, q, len })
    }

    /// Smallest and largest point of the domain.
    pub fn bounds(&self) -> (f64, f64) {
        match self {
            Domain::Interval { a, b } => (*a, *b),
            Domain::Points { points } => (points[0], points[points.len() - 1]),
            Domain::QGrid { t, q, len } => (t * q.powi(*len as i32 - 1), *t),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        let (lo, hi) = self.bounds();
        let slack = 1e-12 * lo.abs().max(hi.abs()).max(1.0);
        x >= lo - slack && x <= hi + slack
    }

    /// Up to `n` representative points: a uniform grid with both endpoints on an
    /// interval, every point (or an even thinning) on a discrete set.
    pub fn sample_points(&self, n: usize) -> Vec<f64> {
        let n = n.max(2);
        match self {
            Domain::Interval { a, b } => (0..n)
                .map(|i| if i + 1 == n { *b } else { a + (b - a) * i as f64 / (n - 1) as f64 })
                .collect(),
            Domain::Points { points } => thin(points, n),
            Domain::QGrid { t, q, len } => {
                let all: Vec<f64> = (0..*len).rev().map(|k| t * q.powi(k as i32)).collect();
                thin(&all, n)
            }
        }
    }
}

fn thin(points: &[f64], n: usize) -> Vec<f64> {
    if points.len() <= n {
        return points.to_vec();
    }
    let mut out: Vec<f64> = (0..n)
        .map(|i| points[i * (points.len() - 1) / (n - 1)])
        .collect();
    out.dedup();
    out
}
