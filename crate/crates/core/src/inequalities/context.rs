use std::collections::BTreeMap;

use super::report::{
    judge, Direction, FunctionalMeta, HypothesisCheck, InequalityReport, Instance, Verdict,
};
use crate::chebyshev::Sampled;
use crate::error::{Error, Result};
use crate::functional::{Domain, FunctionalSpec, RealFn, ScalarFunction, ToleranceSpec};

/// Functionals, weight functions and tolerance shared by every checker.
#[derive(Debug, Clone)]
pub struct CheckerContext<'a> {
    pub a: &'a FunctionalSpec,
    pub b: &'a FunctionalSpec,
    pub p: ScalarFunction,
    pub q: ScalarFunction,
    /// Third weight, used only by the three-weight theorem.
    pub r: Option<ScalarFunction>,
    pub tolerance: ToleranceSpec,
    /// Uniform grid points added to the node union for hypothesis sampling.
    pub probe_grid: usize,
    /// Cap on the points used by pair scans, which are quadratic.
    pub max_probe: usize,
}

impl<'a> CheckerContext<'a> {
    /// Unit weights and the looser of the two functionals' default tolerances.
    pub fn new(a: &'a FunctionalSpec, b: &'a FunctionalSpec) -> Self {
        CheckerContext {
            a,
            b,
            p: ScalarFunction::Const(1.0),
            q: ScalarFunction::Const(1.0),
            r: None,
            tolerance: a.default_tolerance().max(b.default_tolerance()),
            probe_grid: 32,
            max_probe: 128,
        }
    }

    pub fn with_weights(mut self, p: ScalarFunction, q: ScalarFunction) -> Self {
        self.p = p;
        self.q = q;
        self
    }

    pub fn with_third_weight(mut self, r: ScalarFunction) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_tolerance(mut self, tolerance: ToleranceSpec) -> Self {
        self.tolerance = tolerance;
        self
    }

    /// Node union of A and B, plus a uniform grid over their combined range
    /// when both domains are intervals.
    pub fn probe_points(&self) -> Vec<f64> {
        let (la, ha) = self.a.domain().bounds();
        let (lb, hb) = self.b.domain().bounds();
        let (lo, hi) = (la.min(lb), ha.max(hb));
        let mut xs: Vec<f64> = self.a.nodes().iter().chain(self.b.nodes()).copied().collect();
        // point sets may carry tabulated functions, so only intervals get a grid
        let intervals = matches!(self.a.domain(), Domain::Interval { .. })
            && matches!(self.b.domain(), Domain::Interval { .. });
        if intervals && hi > lo {
            let n = self.probe_grid.max(2);
            xs.extend((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64));
        }
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        xs
    }

    /// Evenly thinned indices into `probe_points()` for the quadratic pair scans.
    pub fn pair_indices(&self, len: usize) -> Vec<usize> {
        let cap = self.max_probe.max(2);
        if len <= cap {
            return (0..len).collect();
        }
        let mut idx: Vec<usize> = (0..cap).map(|i| i * (len - 1) / (cap - 1)).collect();
        idx.dedup();
        idx
    }
}

/// Values of `f` at the probe points.
pub(crate) fn probe_values(xs: &[f64], f: &dyn RealFn) -> Result<Vec<f64>> {
    xs.iter().map(|&x| f.eval(x).map_err(Error::from)).collect()
}

/// Pointwise hypothesis: every margin must be `≥ -tol`.
pub(crate) fn pointwise(name: &str, margins: impl IntoIterator<Item = f64>, tol: f64) -> HypothesisCheck {
    let mut worst = f64::INFINITY;
    let mut samples = 0;
    for m in margins {
        worst = worst.min(m);
        samples += 1;
    }
    if samples == 0 {
        worst = 0.0;
    }
    HypothesisCheck {
        name: name.to_string(),
        passed: worst >= -tol,
        worst_margin: worst,
        samples,
        method: "sampled".into(),
    }
}

/// Pair hypothesis over all pairs drawn from `idx`.
pub(crate) fn pairwise(name: &str, idx: &[usize], margin: impl Fn(usize, usize) -> f64, tol: f64) -> HypothesisCheck {
    let mut worst = f64::INFINITY;
    let mut samples = 0;
    for (k, &i) in idx.iter().enumerate() {
        for &j in &idx[k + 1..] {
            worst = worst.min(margin(i, j));
            samples += 1;
        }
    }
    if samples == 0 {
        worst = 0.0;
    }
    HypothesisCheck {
        name: name.to_string(),
        passed: worst >= -tol,
        worst_margin: worst,
        samples,
        method: "sampled".into(),
    }
}

/// A parameter condition that is checked exactly.
pub(crate) fn exact(name: &str, ok: bool, margin: f64) -> HypothesisCheck {
    HypothesisCheck {
        name: name.to_string(),
        passed: ok,
        worst_margin: if margin.is_finite() { margin } else { 0.0 },
        samples: 1,
        method: "exact".into(),
    }
}

/// Sampled columns `[weight, fns...]` on one functional.
pub(crate) struct Side<'s> {
    s: Sampled<'s>,
}

impl<'s> Side<'s> {
    pub fn new(spec: &'s FunctionalSpec, weight: &ScalarFunction, fns: &[&ScalarFunction]) -> Result<Self> {
        let mut all: Vec<&dyn RealFn> = vec![weight];
        all.extend(fns.iter().map(|f| *f as &dyn RealFn));
        Ok(Side {
            s: Sampled::new(spec, &all)?,
        })
    }

    /// Functional of `weight · Π cols`; `fns[i]` is column `i + 1`.
    pub fn ap(&self, cols: &[usize]) -> f64 {
        let mut all = Vec::with_capacity(cols.len() + 1);
        all.push(0);
        all.extend_from_slice(cols);
        self.s.apply(&all)
    }

    /// Append a column computed row-wise from the existing ones.
    pub fn derive(&mut self, op: impl Fn(&[f64]) -> f64) -> usize {
        let n = self.s.spec.len();
        let width = self.s.values.len();
        let mut row = vec![0.0; width];
        let col = (0..n)
            .map(|i| {
                for (c, r) in row.iter_mut().enumerate() {
                    *r = self.s.values[c][i];
                }
                op(&row)
            })
            .collect();
        self.s.values.push(col);
        self.s.values.len() - 1
    }

    pub fn col(&self, c: usize) -> &[f64] {
        self.s.col(c)
    }
}

/// Accumulates hypothesis checks and assembles reports for one checker call.
pub(crate) struct Run<'c, 'a> {
    pub ctx: &'c CheckerContext<'a>,
    theorem: String,
    checks: Vec<HypothesisCheck>,
    instance: Instance,
    notes: Vec<String>,
    error: Option<String>,
    pub xs: Vec<f64>,
    pub pairs: Vec<usize>,
}

impl<'c, 'a> Run<'c, 'a> {
    pub fn new(
        ctx: &'c CheckerContext<'a>,
        theorem: &str,
        functions: &[(&str, &ScalarFunction)],
        constants: &[(&str, f64)],
    ) -> Self {
        let mut fmap: BTreeMap<String, String> = functions
            .iter()
            .map(|(n, f)| (n.to_string(), f.to_string()))
            .collect();
        fmap.insert("p".into(), ctx.p.to_string());
        fmap.insert("q".into(), ctx.q.to_string());
        if let Some(r) = &ctx.r {
            fmap.insert("r".into(), r.to_string());
        }
        let cmap = constants
            .iter()
            .map(|(n, v)| (n.to_string(), if v.is_finite() { *v } else { 0.0 }))
            .collect();
        let mut run = Run {
            ctx,
            theorem: theorem.to_string(),
            checks: Vec::new(),
            instance: Instance {
                a: FunctionalMeta::from(ctx.a),
                b: FunctionalMeta::from(ctx.b),
                functions: fmap,
                constants: cmap,
            },
            notes: Vec::new(),
            error: None,
            xs: Vec::new(),
            pairs: Vec::new(),
        };
        run.xs = ctx.probe_points();
        run.pairs = ctx.pair_indices(run.xs.len());
        run.weight_checks();
        run
    }

    fn weight_checks(&mut self) {
        let ctx = self.ctx;
        let mut specs: Vec<(&str, &ScalarFunction, Vec<&FunctionalSpec>)> =
            vec![("p >= 0 on A nodes", &ctx.p, vec![ctx.a]), ("q >= 0 on B nodes", &ctx.q, vec![ctx.b])];
        if let Some(r) = &ctx.r {
            specs.push(("r >= 0 on A and B nodes", r, vec![ctx.a, ctx.b]));
        }
        for (name, w, on) in specs {
            let vals: Result<Vec<f64>> = on
                .iter()
                .flat_map(|s| s.nodes().iter())
                .map(|&x| w.eval(x).map_err(Error::from))
                .collect();
            match vals {
                Ok(v) => {
                    let mut c = pointwise(name, v, 0.0);
                    c.method = "exact".into();
                    self.checks.push(c);
                }
                Err(e) => self.fail(e),
            }
        }
    }

    pub fn hyp(&mut self, c: HypothesisCheck) {
        self.checks.push(c);
    }

    pub fn note(&mut self, s: &str) {
        self.notes.push(s.to_string());
    }

    pub fn fail(&mut self, e: Error) {
        if self.error.is_none() {
            self.error = Some(e.to_string());
        }
    }

    /// Run hypothesis sampling; an evaluation error marks the run.
    pub fn sample(&mut self, body: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = body(self) {
            self.fail(e);
        }
    }

    pub fn values(&self, f: &ScalarFunction) -> Result<Vec<f64>> {
        probe_values(&self.xs, f)
    }

    pub fn tol(&self) -> f64 {
        self.ctx.tolerance.abs
    }

    pub fn finish(self, direction: Direction, compute: impl FnOnce() -> Result<(f64, f64)>) -> InequalityReport {
        let theorem = self.theorem.clone();
        self.finish_many(&[(theorem.as_str(), direction)], || Ok(vec![compute()?]))
            .pop()
            .expect("one report")
    }

    pub fn finish_many(
        self,
        parts: &[(&str, Direction)],
        compute: impl FnOnce() -> Result<Vec<(f64, f64)>>,
    ) -> Vec<InequalityReport> {
        let hyp_ok = self.checks.iter().all(|c| c.passed);
        let mut error = self.error.clone();
        let sides = if error.is_none() {
            match compute() {
                Ok(v) if v.iter().all(|(l, r)| l.is_finite() && r.is_finite()) => Some(v),
                Ok(_) => {
                    error = Some("non-finite inequality side".into());
                    None
                }
                Err(e) => {
                    error = Some(e.to_string());
                    None
                }
            }
        } else {
            None
        };
        let tol = self.ctx.tolerance;
        parts
            .iter()
            .enumerate()
            .map(|(i, (name, dir))| {
                let (lhs, rhs, slack, verdict) = match &sides {
                    Some(v) => {
                        let (l, r) = v[i];
                        let (slack, verdict) = judge(l, r, *dir, tol);
                        let verdict = if hyp_ok { verdict } else { Verdict::HypothesisFailed };
                        (l, r, slack, verdict)
                    }
                    None => (0.0, 0.0, 0.0, Verdict::EvalError),
                };
                InequalityReport {
                    theorem: name.to_string(),
                    lhs,
                    rhs,
                    slack,
                    direction: *dir,
                    tolerance: tol,
                    verdict,
                    hypothesis_checks: self.checks.clone(),
                    instance: self.instance.clone(),
                    error: error.clone(),
                    notes: self.notes.clone(),
                }
            })
            .collect()
    }
}

fn max_abs(vs: &[&[f64]]) -> f64 {
    vs.iter().flat_map(|v| v.iter()).fold(0.0f64, |m, x| m.max(x.abs()))
}

impl Run<'_, '_> {
    /// Tolerance for comparisons on values of magnitude `scale`.
    fn tol_at(&self, scale: f64) -> f64 {
        self.tol() * scale.max(1.0)
    }

    /// `lower ≤ f ≤ upper` at every probe point; `None` bounds are skipped.
    pub fn between(&mut self, name: &str, lower: Option<&[f64]>, f: &[f64], upper: Option<&[f64]>) {
        let mut all: Vec<&[f64]> = vec![f];
        all.extend(lower);
        all.extend(upper);
        let tol = self.tol_at(max_abs(&all));
        let margins = (0..f.len()).map(|i| {
            let lo = lower.map_or(f64::INFINITY, |l| f[i] - l[i]);
            let hi = upper.map_or(f64::INFINITY, |u| u[i] - f[i]);
            lo.min(hi)
        });
        let c = pointwise(name, margins, tol);
        self.hyp(c);
    }

    /// `|f(x) - f(y)| ≤ m·|h(x) - h(y)|` over the pair sample.
    pub fn lipschitz(&mut self, name: &str, f: &[f64], m: f64, h: &[f64]) {
        let tol = self.tol_at(max_abs(&[f]));
        let c = pairwise(name, &self.pairs, |i, j| m * (h[i] - h[j]).abs() - (f[i] - f[j]).abs(), tol);
        self.hyp(c);
    }

    /// `|f(x) - f(y)| ≤ m·|x - y|^r` over the pair sample.
    pub fn holder(&mut self, name: &str, f: &[f64], m: f64, r: f64) {
        let tol = self.tol_at(max_abs(&[f]));
        let xs = &self.xs;
        let c = pairwise(name, &self.pairs, |i, j| m * (xs[i] - xs[j]).abs().powf(r) - (f[i] - f[j]).abs(), tol);
        self.hyp(c);
    }

    /// `σ·(f(x) - f(y))(g(x) - g(y)) ≥ 0` over the pair sample.
    pub fn ordered(&mut self, name: &str, f: &[f64], g: &[f64], sign: f64) {
        let tol = self.tol_at(max_abs(&[f]) * max_abs(&[g]));
        let c = pairwise(name, &self.pairs, |i, j| sign * (f[i] - f[j]) * (g[i] - g[j]), tol);
        self.hyp(c);
    }

    /// `f > 0`, checked as `f ≥ tol`.
    pub fn positive(&mut self, name: &str, f: &[f64]) {
        let tol = self.tol();
        let c = pointwise(name, f.iter().map(|v| v - tol), 0.0);
        self.hyp(c);
    }

    pub fn exact(&mut self, name: &str, ok: bool, margin: f64) {
        self.hyp(exact(name, ok, margin));
    }
}
