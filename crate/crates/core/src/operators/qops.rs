use crate::error::{Error, Result};
use crate::functional::{Domain, FunctionalKind, FunctionalSpec, Params};
use crate::special::{q_gamma, q_pochhammer, SeriesConfig};

/// Default number of Jackson nodes for the q-operators.
pub const DEFAULT_Q_TERMS: usize = 128;
/// Default cap on the q-Saigo inner series.
pub const DEFAULT_M_CAP: usize = 512;

fn check_q_t(q: f64, t: f64, k_terms: usize) -> Result<()> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::domain(format!("q must lie in (0, 1), got {q}")));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("t must be positive, got {t}")));
    }
    if k_terms == 0 {
        return Err(Error::domain("need at least one Jackson node"));
    }
    Ok(())
}

/// Smallest `K` with `q^K < tol`, so a Jackson sum truncated at `K` has a
/// relative tail below `tol`.
pub fn jackson_terms(q: f64, tol: f64) -> Result<usize> {
    if !(q > 0.0 && q < 1.0) || !(tol > 0.0 && tol < 1.0) {
        return Err(Error::domain(format!("jackson_terms needs q, tol in (0, 1), got {q}, {tol}")));
    }
    Ok(((tol.ln() / q.ln()).ceil() as usize).max(1))
}

fn jackson_nodes(q: f64, t: f64, k_terms: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = Vec::with_capacity(k_terms);
    let mut weights = Vec::with_capacity(k_terms);
    let mut qk = 1.0;
    for _ in 0..k_terms {
        nodes.push(t * qk);
        weights.push(t * (1.0 - q) * qk);
        qk *= q;
    }
    (nodes, weights)
}

/// Jackson integral `t(1-q) Σ_{k<K} q^k f(t q^k)`.
pub fn build_jackson(q: f64, t: f64, k_terms: usize) -> Result<FunctionalSpec> {
    check_q_t(q, t, k_terms)?;
    let (nodes, weights) = jackson_nodes(q, t, k_terms);
    let params = Params {
        q: Some(q),
        t: Some(t),
        ..Params::default()
    };
    FunctionalSpec::from_nodes(
        FunctionalKind::Jackson,
        params,
        k_terms,
        Domain::q_grid(t, q, k_terms)?,
        nodes,
        weights,
    )
}

/// `(q^{k+1}; q)_{α-1}` for `k = 0..K` by the ratio `(1-q^{k+α})/(1-q^{k+1})`.
fn kernel_factors(alpha: f64, q: f64, k_terms: usize) -> Result<Vec<f64>> {
    let mut r = q_pochhammer(q, q, alpha - 1.0)?;
    let mut out = Vec::with_capacity(k_terms);
    let mut qk = 1.0;
    for _ in 0..k_terms {
        out.push(r);
        r *= (1.0 - qk * q.powf(alpha)) / (1.0 - qk * q);
        qk *= q;
    }
    Ok(out)
}

/// Inner series of the q-Saigo kernel at node `τ = t q^k`.
///
/// The factor `(-1)^m q^{-m(m-1)/2} (q^k - 1)_q^m` equals `∏_{j<m} (1 - q^{k-j})`,
/// which is used directly: it stays in `[0, 1]` and makes the series stop at `m = k`.
pub(crate) fn q_saigo_series(
    alpha: f64,
    beta: f64,
    eta: f64,
    q: f64,
    k: usize,
    m_cap: usize,
    rel_tol: f64,
) -> Result<f64> {
    let ratio = q.powf(eta - beta);
    let (qab, qme, qa) = (q.powf(alpha + beta), q.powf(-eta), q.powf(alpha));
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut qm1 = 1.0; // q^{m-1}
    let mut small = 0;
    for m in 1..=m_cap {
        if m > k {
            return Ok(sum);
        }
        let num = (1.0 - qab * qm1) * (1.0 - qme * qm1);
        let den = (1.0 - qa * qm1) * (1.0 - qm1 * q);
        term *= num / den * ratio * (1.0 - q.powi((k + 1 - m) as i32));
        qm1 *= q;
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Range(format!("q-Saigo inner series overflowed at node {k}")));
        }
        if term.abs() <= rel_tol * sum.abs() {
            small += 1;
            if small == 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    if k < m_cap {
        return Ok(sum);
    }
    Err(Error::Truncation {
        what: format!("q-Saigo inner series at node {k}"),
        terms: m_cap,
    })
}

/// Constraints under which the q-Saigo operator is isotonic.
pub fn q_saigo_admissible(alpha: f64, beta: f64, eta: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha + beta > 0.0 && eta < 0.0) || !beta.is_finite() || !eta.is_finite() {
        return Err(Error::domain(format!(
            "q-Saigo operator needs α > 0, α+β > 0, η < 0 (got α={alpha}, β={beta}, η={eta})"
        )));
    }
    Ok(())
}

fn q_saigo_weights(
    alpha: f64,
    beta: f64,
    eta: f64,
    q: f64,
    t: f64,
    k_terms: usize,
    m_cap: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let (nodes, jw) = jackson_nodes(q, t, k_terms);
    let kf = kernel_factors(alpha, q, k_terms)?;
    let pre = t.powf(-beta - 1.0) / q_gamma(q, alpha)?;
    let rel_tol = SeriesConfig::default().rel_tol;
    let mut weights = Vec::with_capacity(k_terms);
    for k in 0..k_terms {
        let s = q_saigo_series(alpha, beta, eta, q, k, m_cap, rel_tol)?;
        weights.push(pre * jw[k] * kf[k] * s);
    }
    Ok((nodes, weights))
}

/// q-analogue of the Saigo integral on the nodes `t q^k`, `k < K`.
pub fn build_q_saigo(
    alpha: f64,
    beta: f64,
    eta: f64,
    q: f64,
    t: f64,
    k_terms: usize,
    m_cap: usize,
) -> Result<FunctionalSpec> {
    check_q_t(q, t, k_terms)?;
    q_saigo_admissible(alpha, beta, eta)?;
    if m_cap == 0 {
        return Err(Error::domain("M_cap must be at least 1"));
    }
    let (nodes, weights) = q_saigo_weights(alpha, beta, eta, q, t, k_terms, m_cap)?;
    let params = Params {
        alpha: Some(alpha),
        beta: Some(beta),
        eta: Some(eta),
        q: Some(q),
        t: Some(t),
        ..Params::default()
    };
    FunctionalSpec::from_nodes(
        FunctionalKind::QSaigo,
        params,
        k_terms,
        Domain::q_grid(t, q, k_terms)?,
        nodes,
        weights,
    )
}

/// q-Riemann–Liouville integral `t^{α-1}/Γ_q(α) ∫₀^t (qτ/t; q)_{α-1} f(τ) d_qτ`.
pub fn build_q_riemann_liouville(alpha: f64, q: f64, t: f64, k_terms: usize) -> Result<FunctionalSpec> {
    check_q_t(q, t, k_terms)?;
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::domain(format!("alpha must be positive, got {alpha}")));
    }
    let (nodes, jw) = jackson_nodes(q, t, k_terms);
    let kf = kernel_factors(alpha, q, k_terms)?;
    let pre = t.powf(alpha - 1.0) / q_gamma(q, alpha)?;
    let weights = jw.iter().zip(&kf).map(|(w, r)| pre * w * r).collect();
    let params = Params {
        alpha: Some(alpha),
        q: Some(q),
        t: Some(t),
        ..Params::default()
    };
    FunctionalSpec::from_nodes(
        FunctionalKind::QRiemannLiouville,
        params,
        k_terms,
        Domain::q_grid(t, q, k_terms)?,
        nodes,
        weights,
    )
}
