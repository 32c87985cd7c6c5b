use super::quadrature::{split_singular_rule, QuadratureRule};
use super::DEFAULT_NODES;
use crate::error::{Error, Result};
use crate::functional::{Domain, FunctionalKind, FunctionalSpec, Params};
use crate::special::{gamma, gauss_2f1};

/// `A(f) = Σ wᵢ f(xᵢ)`; unit weights when `weights` is `None`.
pub fn build_discrete(points: &[f64], weights: Option<&[f64]>) -> Result<FunctionalSpec> {
    if points.is_empty() {
        return Err(Error::construction("discrete functional needs at least one point"));
    }
    let w = match weights {
        Some(w) if w.len() != points.len() => {
            return Err(Error::construction(format!(
                "{} weights given for {} points",
                w.len(),
                points.len()
            )))
        }
        Some(w) => {
            if let Some(i) = w.iter().position(|v| !(v.is_finite() && *v >= 0.0)) {
                return Err(Error::construction(format!("weight {i} = {} is negative or not finite", w[i])));
            }
            w.to_vec()
        }
        None => vec![1.0; points.len()],
    };
    let mut sorted = points.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.dedup();
    let domain = Domain::points(sorted)?;
    FunctionalSpec::from_nodes(
        FunctionalKind::Discrete,
        Params::default(),
        points.len(),
        domain,
        points.to_vec(),
        w,
    )
}

/// `∫_a^b f` by an n-point Gauss–Legendre rule.
pub fn build_riemann(a: f64, b: f64, n: usize) -> Result<FunctionalSpec> {
    build_riemann_composite(a, b, 1, n)
}

/// `∫_a^b f` by `panels` equal Gauss–Legendre panels of `per_panel` nodes each.
pub fn build_riemann_composite(a: f64, b: f64, panels: usize, per_panel: usize) -> Result<FunctionalSpec> {
    let domain = Domain::interval(a, b).map_err(|_| Error::domain(format!("Riemann needs a < b, got [{a}, {b}]")))?;
    if per_panel < 2 || panels == 0 {
        return Err(Error::domain(format!(
            "Riemann needs at least 2 nodes per panel and one panel (got {per_panel}, {panels})"
        )));
    }
    let rule = QuadratureRule::legendre(per_panel)?;
    let h = (b - a) / panels as f64;
    let mut nodes = Vec::with_capacity(panels * per_panel);
    let mut weights = Vec::with_capacity(panels * per_panel);
    for p in 0..panels {
        let lo = a + h * p as f64;
        for (&u, &w) in rule.nodes.iter().zip(&rule.weights) {
            nodes.push(lo + h * u);
            weights.push(h * w);
        }
    }
    let params = Params {
        a: Some(a),
        b: Some(b),
        ..Params::default()
    };
    FunctionalSpec::from_nodes(FunctionalKind::Riemann, params, panels * per_panel, domain, nodes, weights)
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0 && v.is_finite()) {
        return Err(Error::domain(format!("{name} must be positive and finite, got {v}")));
    }
    Ok(())
}

fn check_nodes(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::domain(format!("need at least 4 nodes, got {n}")));
    }
    Ok(())
}

/// `J^α f(t) = Γ(α)⁻¹ ∫₀^t (t-σ)^{α-1} f(σ) dσ`.
pub fn build_riemann_liouville(alpha: f64, t: f64, n: usize) -> Result<FunctionalSpec> {
    check_positive("alpha", alpha)?;
    check_positive("t", t)?;
    check_nodes(n)?;
    let (u, w) = split_singular_rule(0.0, alpha - 1.0, n)?;
    let scale = t.powf(alpha) / gamma(alpha)?;
    let params = Params {
        alpha: Some(alpha),
        t: Some(t),
        ..Params::default()
    };
    FunctionalSpec::from_nodes(
        FunctionalKind::RiemannLiouville,
        params,
        n,
        Domain::interval(0.0, t)?,
        u.iter().map(|u| t * u).collect(),
        w.iter().map(|w| scale * w).collect(),
    )
}

/// `_HJ^α f(x) = Γ(α)⁻¹ ∫₁^x (log(x/y))^{α-1} f(y) dy / y`, mapped onto
/// Riemann–Liouville at `log x` with nodes `e^σ`.
pub fn build_hadamard(alpha: f64, x: f64, n: usize) -> Result<FunctionalSpec> {
    check_positive("alpha", alpha)?;
    if !(x > 1.0 && x.is_finite()) {
        return Err(Error::domain(format!("Hadamard integral needs x > 1, got {x}")));
    }
    let rl = build_riemann_liouville(alpha, x.ln(), n)?;
    let params = Params {
        alpha: Some(alpha),
        t: Some(x),
        ..Params::default()
    };
    let nodes = rl.nodes().iter().map(|s| s.exp().clamp(1.0, x)).collect();
    FunctionalSpec::from_nodes(
        FunctionalKind::Hadamard,
        params,
        n,
        Domain::interval(1.0, x)?,
        nodes,
        rl.weights().to_vec(),
    )
}

/// Parameter constraints under which the hypergeometric operator is isotonic.
pub fn hypergeometric_admissible(alpha: f64, beta: f64, eta: f64, mu: f64) -> Result<()> {
    let finite = [alpha, beta, eta, mu].iter().all(|v| v.is_finite());
    if !finite || !(alpha > 0.0 && alpha > -beta - mu && mu > -1.0 && beta - 1.0 < eta && eta < 0.0) {
        // the R-L specialization sits on the boundary η = 0 with b = -η = 0
        if finite && eta == 0.0 && beta == -alpha && mu == 0.0 && alpha > 0.0 {
            return Ok(());
        }
        return Err(Error::domain(format!(
            "hypergeometric operator needs α > max(0, -β-μ), μ > -1, β-1 < η < 0 \
             (got α={alpha}, β={beta}, η={eta}, μ={mu})"
        )));
    }
    Ok(())
}

/// `t^{-α-β-2μ}/Γ(α) ∫₀^t σ^μ (t-σ)^{α-1} ₂F₁(α+β+μ, -η; α; 1-σ/t) f(σ) dσ`.
pub fn build_hypergeometric(alpha: f64, beta: f64, eta: f64, mu: f64, t: f64, n: usize) -> Result<FunctionalSpec> {
    hypergeometric_with_kind(FunctionalKind::Hypergeometric, alpha, beta, eta, mu, t, n)
}

fn hypergeometric_with_kind(
    kind: FunctionalKind,
    alpha: f64,
    beta: f64,
    eta: f64,
    mu: f64,
    t: f64,
    n: usize,
) -> Result<FunctionalSpec> {
    check_positive("t", t)?;
    check_nodes(n)?;
    hypergeometric_admissible(alpha, beta, eta, mu)?;
    let (a, b, c) = (alpha + beta + mu, -eta, alpha);
    // near σ = 0 the ₂F₁ factor grows like u^{η-β-μ} when that exponent is negative
    let left = if b == 0.0 { mu } else { mu.min(eta - beta) };
    let (u, w) = split_singular_rule(left, alpha - 1.0, n)?;
    let scale = t.powf(-beta - mu) / gamma(alpha)?;
    let mut weights = Vec::with_capacity(n);
    for (&ui, &wi) in u.iter().zip(&w) {
        let kernel = if b == 0.0 { 1.0 } else { gauss_2f1(a, b, c, 1.0 - ui)? };
        let extra = if mu == left { 1.0 } else { ui.powf(mu - left) };
        weights.push(scale * wi * extra * kernel);
    }
    let params = Params {
        alpha: Some(alpha),
        beta: Some(beta),
        eta: Some(eta),
        mu: Some(mu),
        t: Some(t),
        ..Params::default()
    };
    FunctionalSpec::from_nodes(
        kind,
        params,
        n,
        Domain::interval(0.0, t)?,
        u.iter().map(|u| t * u).collect(),
        weights,
    )
}

/// Saigo operator: the hypergeometric operator at μ = 0.
pub fn build_saigo(alpha: f64, beta: f64, eta: f64, t: f64, n: usize) -> Result<FunctionalSpec> {
    hypergeometric_with_kind(FunctionalKind::Saigo, alpha, beta, eta, 0.0, t, n)
}

/// Erdélyi–Kober operator: the hypergeometric operator at β = μ = 0.
pub fn build_erdelyi_kober(alpha: f64, eta: f64, t: f64, n: usize) -> Result<FunctionalSpec> {
    hypergeometric_with_kind(FunctionalKind::ErdelyiKober, alpha, 0.0, eta, 0.0, t, n)
}

/// Δ-integral on the finite time scale `points`: `Σ f(tᵢ)(tᵢ₊₁ - tᵢ)`.
pub fn build_time_scale_delta(points: &[f64]) -> Result<FunctionalSpec> {
    if points.len() < 2 {
        return Err(Error::construction("time scale needs at least two points"));
    }
    let domain = Domain::points(points.to_vec())?;
    let nodes = points[..points.len() - 1].to_vec();
    let weights = points.windows(2).map(|w| w[1] - w[0]).collect();
    FunctionalSpec::from_nodes(
        FunctionalKind::TimeScaleDelta,
        Params::default(),
        points.len(),
        domain,
        nodes,
        weights,
    )
}

/// Default node count for the singular-kernel builders.
pub fn default_nodes() -> usize {
    DEFAULT_NODES
}
