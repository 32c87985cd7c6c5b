//! q-Pochhammer symbols and the q-Gamma function for `0 < q < 1`.

use super::SeriesConfig;
use crate::error::{Error, Result};

// Hard ceiling on product length; q = 1 - 1e-6 needs about 3.7e7 factors.
const MAX_PRODUCT_FACTORS: usize = 50_000_000;

fn check_q(q: f64) -> Result<()> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::domain(format!("q must lie in (0, 1), got {q}")));
    }
    Ok(())
}

/// Finite product (a; q)_n = ∏_{k<n} (1 - a qᵏ).
pub fn q_pochhammer_finite(a: f64, q: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    let mut qk = 1.0;
    for _ in 0..n {
        acc *= 1.0 - a * qk;
        qk *= q;
    }
    acc
}

/// (a; q)_α = ∏_{k≥0} (1 - a qᵏ) / ∏_{k≥0} (1 - a q^{α+k}) for real α.
pub fn q_pochhammer(a: f64, q: f64, alpha: f64) -> Result<f64> {
    q_pochhammer_with(a, q, alpha, &SeriesConfig::default())
}

pub fn q_pochhammer_with(a: f64, q: f64, alpha: f64, cfg: &SeriesConfig) -> Result<f64> {
    check_q(q)?;
    if !a.is_finite() || !alpha.is_finite() {
        return Err(Error::domain("q-Pochhammer arguments must be finite"));
    }
    if alpha == 0.0 || a == 0.0 {
        return Ok(1.0);
    }
    let q_alpha = q.powf(alpha);
    // both factor sequences are below the tail tolerance once |a| q^{k + min(0, α)} is
    let lead = a.abs() * q_alpha.max(1.0);
    let mut acc = 1.0;
    let mut qk = 1.0;
    for _ in 0..MAX_PRODUCT_FACTORS {
        if lead * qk < cfg.product_tail_tol {
            return Ok(acc);
        }
        let num = 1.0 - a * qk;
        let den = 1.0 - a * q_alpha * qk;
        if den == 0.0 {
            return Err(Error::domain(format!(
                "q-Pochhammer ({a}; {q})_{alpha} has a vanishing denominator factor"
            )));
        }
        acc *= num / den;
        qk *= q;
    }
    Err(Error::Truncation {
        what: format!("q-Pochhammer ({a}; {q})_{alpha}"),
        terms: MAX_PRODUCT_FACTORS,
    })
}

/// q-analogue of the power: (t - a)_qⁿ = tⁿ (a/t; q)_n.
pub fn q_bracket_power(t: f64, a: f64, q: f64, n: u32) -> Result<f64> {
    check_q(q)?;
    if n == 0 {
        return Ok(1.0);
    }
    if a == 0.0 {
        return Ok(t.powi(n as i32));
    }
    if t == 0.0 {
        return Err(Error::domain("q-bracket power (0 - a)_q^n with a != 0"));
    }
    Ok(t.powi(n as i32) * q_pochhammer_finite(a / t, q, n))
}

/// Γ_q(x) = (q; q)_∞ / (q^x; q)_∞ · (1 - q)^{1-x}.
pub fn q_gamma(q: f64, x: f64) -> Result<f64> {
    q_gamma_with(q, x, &SeriesConfig::default())
}

pub fn q_gamma_with(q: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    check_q(q)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("q-gamma requires x > 0, got {x}")));
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    Ok(q_pochhammer_with(q, q, x - 1.0, cfg)? * (1.0 - q).powf(1.0 - x))
}
