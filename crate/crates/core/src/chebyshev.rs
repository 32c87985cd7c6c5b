//! The Chebyshev difference T(A, B, p, q, f, g) and the three-function
//! expansion, both as products of applies and as double node sums.

use crate::error::Result;
use crate::functional::{tensor_dot, FunctionalSpec, RealFn};

/// Function values sampled once on a functional's nodes.
#[derive(Debug, Clone)]
pub struct Sampled<'a> {
    pub spec: &'a FunctionalSpec,
    pub values: Vec<Vec<f64>>,
}

impl<'a> Sampled<'a> {
    pub fn new(spec: &'a FunctionalSpec, fns: &[&dyn RealFn]) -> Result<Self> {
        let values = fns.iter().map(|f| spec.sample(*f)).collect::<Result<_>>()?;
        Ok(Sampled { spec, values })
    }

    /// Functional applied to the pointwise product of the listed columns.
    pub fn apply(&self, cols: &[usize]) -> f64 {
        let factors: Vec<&[f64]> = cols.iter().map(|&c| self.values[c].as_slice()).collect();
        self.spec.dot(&factors)
    }

    pub fn col(&self, c: usize) -> &[f64] {
        &self.values[c]
    }
}

// column layout used below
const W: usize = 0;
const F: usize = 1;
const G: usize = 2;
const H: usize = 3;

/// `B(q)A(pfg) + A(p)B(qfg) - A(pf)B(qg) - A(pg)B(qf)`.
pub fn chebyshev_difference(
    a: &FunctionalSpec,
    b: &FunctionalSpec,
    p: &dyn RealFn,
    q: &dyn RealFn,
    f: &dyn RealFn,
    g: &dyn RealFn,
) -> Result<f64> {
    let sa = Sampled::new(a, &[p, f, g])?;
    let sb = Sampled::new(b, &[q, f, g])?;
    Ok(t_sampled(&sa, &sb))
}

/// T from pre-sampled columns `[weight, f, g, ..]` on each side.
pub fn t_sampled(sa: &Sampled, sb: &Sampled) -> f64 {
    sb.apply(&[W]) * sa.apply(&[W, F, G]) + sa.apply(&[W]) * sb.apply(&[W, F, G])
        - sa.apply(&[W, F]) * sb.apply(&[W, G])
        - sa.apply(&[W, G]) * sb.apply(&[W, F])
}

/// `A(p)A(pfg) - A(pf)A(pg)`.
pub fn chebyshev_difference_single(
    a: &FunctionalSpec,
    p: &dyn RealFn,
    f: &dyn RealFn,
    g: &dyn RealFn,
) -> Result<f64> {
    let s = Sampled::new(a, &[p, f, g])?;
    Ok(s.apply(&[W]) * s.apply(&[W, F, G]) - s.apply(&[W, F]) * s.apply(&[W, G]))
}

/// The eight-term expansion of `B_yA_x(p(x)q(y)H(x,y))` with
/// `H = (f(x)-f(y))(g(x)-g(y))(h(x)-h(y))`.
#[allow(clippy::too_many_arguments)]
pub fn triple_expansion(
    a: &FunctionalSpec,
    b: &FunctionalSpec,
    p: &dyn RealFn,
    q: &dyn RealFn,
    f: &dyn RealFn,
    g: &dyn RealFn,
    h: &dyn RealFn,
) -> Result<f64> {
    let sa = Sampled::new(a, &[p, f, g, h])?;
    let sb = Sampled::new(b, &[q, f, g, h])?;
    Ok(triple_expansion_sampled(&sa, &sb))
}

/// Eight-term expansion from columns `[weight, f, g, h]`.
pub fn triple_expansion_sampled(sa: &Sampled, sb: &Sampled) -> f64 {
    let (x, y) = (sa, sb);
    x.apply(&[W, F, G, H]) * y.apply(&[W]) + x.apply(&[W, F]) * y.apply(&[W, G, H])
        + x.apply(&[W, G]) * y.apply(&[W, F, H])
        + x.apply(&[W, H]) * y.apply(&[W, F, G])
        - x.apply(&[W, G, H]) * y.apply(&[W, F])
        - x.apply(&[W, F, H]) * y.apply(&[W, G])
        - x.apply(&[W, F, G]) * y.apply(&[W, H])
        - x.apply(&[W]) * y.apply(&[W, F, G, H])
}

/// `B_yA_x(p(x)q(y)H(x,y))` as a direct double node sum.
#[allow(clippy::too_many_arguments)]
pub fn triple_tensor(
    a: &FunctionalSpec,
    b: &FunctionalSpec,
    p: &dyn RealFn,
    q: &dyn RealFn,
    f: &dyn RealFn,
    g: &dyn RealFn,
    h: &dyn RealFn,
) -> Result<f64> {
    let sa = Sampled::new(a, &[p, f, g, h])?;
    let sb = Sampled::new(b, &[q, f, g, h])?;
    Ok(triple_tensor_sampled(&sa, &sb))
}

/// Double node sum from columns `[weight, f, g, h]`.
pub fn triple_tensor_sampled(sa: &Sampled, sb: &Sampled) -> f64 {
    let (pa, fa, ga, ha) = (sa.col(W), sa.col(F), sa.col(G), sa.col(H));
    let (qb, fb, gb, hb) = (sb.col(W), sb.col(F), sb.col(G), sb.col(H));
    tensor_dot(sa.spec, sb.spec, |i, j| {
        pa[i] * qb[j] * (fa[i] - fb[j]) * (ga[i] - gb[j]) * (ha[i] - hb[j])
    })
}

/// `|sum| + Σ |terms|`-style magnitude for relative comparisons of the
/// triple identity: `B_yA_x(|p q H|)`.
pub fn triple_scale(sa: &Sampled, sb: &Sampled) -> f64 {
    let (pa, fa, ga, ha) = (sa.col(W), sa.col(F), sa.col(G), sa.col(H));
    let (qb, fb, gb, hb) = (sb.col(W), sb.col(F), sb.col(G), sb.col(H));
    let big = |x: &[f64], y: &[f64]| {
        let m = x.iter().chain(y).fold(0.0f64, |m, v| m.max(v.abs()));
        2.0 * m
    };
    let (mf, mg, mh) = (big(fa, fb), big(ga, gb), big(ha, hb));
    tensor_dot(sa.spec, sb.spec, |i, j| (pa[i] * qb[j]).abs()) * mf * mg * mh
}
