use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::{EvalError, Expr};

/// Anything evaluable as a real function of one real variable.
pub trait RealFn: Send + Sync {
    fn eval(&self, x: f64) -> Result<f64, EvalError>;
}

impl<F> RealFn for F
where
    F: Fn(f64) -> Result<f64, EvalError> + Send + Sync,
{
    fn eval(&self, x: f64) -> Result<f64, EvalError> {
        self(x)
    }
}

/// Continuous piecewise-linear function on strictly increasing knots,
/// held constant outside the knot range.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    knots: Vec<f64>,
    values: Vec<f64>,
}

impl PiecewiseLinear {
    pub fn new(knots: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if knots.is_empty() || knots.len() != values.len() {
            return Err(Error::construction(
                "piecewise-linear function needs equally many knots and values (at least one)",
            ));
        }
        if knots.iter().chain(values.iter()).any(|v| !v.is_finite()) {
            return Err(Error::construction("piecewise-linear knots and values must be finite"));
        }
        if knots.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::construction("piecewise-linear knots must be strictly increasing"));
        }
        Ok(PiecewiseLinear { knots, values })
    }

    /// Knots spread uniformly over `[lo, hi]`.
    pub fn uniform(lo: f64, hi: f64, values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n < 2 || !(lo < hi) {
            return Err(Error::construction("uniform piecewise-linear needs lo < hi and two values"));
        }
        let knots = (0..n)
            .map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
            .collect();
        PiecewiseLinear::new(knots, values)
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_abs_slope(&self) -> f64 {
        self.knots
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(k, v)| ((v[1] - v[0]) / (k[1] - k[0])).abs())
            .fold(0.0, f64::max)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.knots.len();
        if x <= self.knots[0] {
            return self.values[0];
        }
        if x >= self.knots[n - 1] {
            return self.values[n - 1];
        }
        // first knot strictly greater than x
        let hi = self.knots.partition_point(|&k| k <= x);
        let lo = hi - 1;
        let (x0, x1) = (self.knots[lo], self.knots[hi]);
        let (y0, y1) = (self.values[lo], self.values[hi]);
        let s = (x - x0) / (x1 - x0);
        y0 + s * (y1 - y0)
    }
}

/// Values given only at a finite point set.
#[derive(Debug, Clone, PartialEq)]
pub struct Tabulated {
    points: Vec<f64>,
    values: Vec<f64>,
}

impl Tabulated {
    pub fn new(points: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if points.is_empty() || points.len() != values.len() {
            return Err(Error::construction("tabulated function needs equally many points and values"));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::construction("tabulated points must be strictly increasing"));
        }
        Ok(Tabulated { points, values })
    }

    fn lookup(&self, x: f64) -> Option<f64> {
        let i = self.points.partition_point(|&p| p < x);
        let tol = 1e-12 * x.abs().max(1.0);
        [i.checked_sub(1), Some(i)]
            .into_iter()
            .flatten()
            .filter(|&j| j < self.points.len())
            .find(|&j| (self.points[j] - x).abs() <= tol)
            .map(|j| self.values[j])
    }
}

/// The f, g, h, p, q, φ, ψ supplied to functionals and checkers.
#[derive(Debug, Clone)]
pub enum ScalarFunction {
    Expr(Arc<Expr>),
    Const(f64),
    Identity,
    Piecewise(Arc<PiecewiseLinear>),
    Tabulated(Arc<Tabulated>),
    /// `scale * inner(x) + offset`
    Affine { scale: f64, offset: f64, inner: Arc<ScalarFunction> },
    Sum(Arc<ScalarFunction>, Arc<ScalarFunction>),
    Product(Arc<ScalarFunction>, Arc<ScalarFunction>),
    /// `outer(inner(x))`
    Compose { outer: Arc<ScalarFunction>, inner: Arc<ScalarFunction> },
}

impl ScalarFunction {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(ScalarFunction::Expr(Arc::new(crate::expr::parse(text)?)))
    }

    pub fn piecewise(pl: PiecewiseLinear) -> Self {
        ScalarFunction::Piecewise(Arc::new(pl))
    }

    pub fn tabulated(points: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        Ok(ScalarFunction::Tabulated(Arc::new(Tabulated::new(points, values)?)))
    }

    pub fn affine(self, scale: f64, offset: f64) -> Self {
        ScalarFunction::Affine {
            scale,
            offset,
            inner: Arc::new(self),
        }
    }

    pub fn plus(self, other: ScalarFunction) -> Self {
        ScalarFunction::Sum(Arc::new(self), Arc::new(other))
    }

    pub fn minus(self, other: ScalarFunction) -> Self {
        self.plus(other.affine(-1.0, 0.0))
    }

    pub fn times(self, other: ScalarFunction) -> Self {
        ScalarFunction::Product(Arc::new(self), Arc::new(other))
    }

    /// `self ∘ inner`
    pub fn after(self, inner: ScalarFunction) -> Self {
        ScalarFunction::Compose {
            outer: Arc::new(self),
            inner: Arc::new(inner),
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64, EvalError> {
        match self {
            ScalarFunction::Expr(e) => e.eval(x),
            ScalarFunction::Const(c) => Ok(*c),
            ScalarFunction::Identity => Ok(x),
            ScalarFunction::Piecewise(pl) => Ok(pl.eval(x)),
            ScalarFunction::Tabulated(t) => t
                .lookup(x)
                .ok_or_else(|| EvalError::new(self.to_string(), x, "no tabulated value at this point")),
            ScalarFunction::Affine { scale, offset, inner } => Ok(scale * inner.eval(x)? + offset),
            ScalarFunction::Sum(a, b) => Ok(a.eval(x)? + b.eval(x)?),
            ScalarFunction::Product(a, b) => Ok(a.eval(x)? * b.eval(x)?),
            ScalarFunction::Compose { outer, inner } => outer.eval(inner.eval(x)?),
        }
    }
}

impl RealFn for ScalarFunction {
    fn eval(&self, x: f64) -> Result<f64, EvalError> {
        ScalarFunction::eval(self, x)
    }
}

impl fmt::Display for ScalarFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarFunction::Expr(e) => write!(f, "{e}"),
            ScalarFunction::Const(c) => write!(f, "{c:?}"),
            ScalarFunction::Identity => f.write_str("x"),
            ScalarFunction::Piecewise(pl) => write!(f, "pl[{} knots]", pl.knots.len()),
            ScalarFunction::Tabulated(t) => write!(f, "table{:?}", t.values),
            ScalarFunction::Affine { scale, offset, inner } => {
                write!(f, "({scale:?}*{inner} + {offset:?})")
            }
            ScalarFunction::Sum(a, b) => write!(f, "({a} + {b})"),
            ScalarFunction::Product(a, b) => write!(f, "({a} * {b})"),
            ScalarFunction::Compose { outer, inner } => write!(f, "{outer}∘{inner}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piecewise_interpolates_and_clamps() {
        let pl = PiecewiseLinear::new(vec![0.0, 1.0, 3.0], vec![0.0, 2.0, 1.0]).unwrap();
        assert_eq!(pl.eval(-5.0), 0.0);
        assert_eq!(pl.eval(0.5), 1.0);
        assert_eq!(pl.eval(1.0), 2.0);
        assert_eq!(pl.eval(2.0), 1.5);
        assert_eq!(pl.eval(9.0), 1.0);
        assert_eq!(pl.max_abs_slope(), 2.0);
        assert!(PiecewiseLinear::new(vec![0.0, 0.0], vec![1.0, 2.0]).is_err());
    }

    #[test]
    fn tabulated_lookup() {
        let f = ScalarFunction::tabulated(vec![1.0, 2.0], vec![1.0, 3.0]).unwrap();
        assert_eq!(f.eval(2.0).unwrap(), 3.0);
        assert!(f.eval(1.5).is_err());
    }

    #[test]
    fn combinators() {
        let f = ScalarFunction::Identity.affine(2.0, 1.0);
        let g = ScalarFunction::parse("x^2").unwrap();
        assert_eq!(f.clone().plus(g.clone()).eval(3.0).unwrap(), 16.0);
        assert_eq!(f.clone().times(g.clone()).eval(3.0).unwrap(), 63.0);
        assert_eq!(g.clone().after(f.clone()).eval(3.0).unwrap(), 49.0);
        assert_eq!(f.minus(g).eval(3.0).unwrap(), -2.0);
    }
}
