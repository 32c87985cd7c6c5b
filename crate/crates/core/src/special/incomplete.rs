use super::{gamma, SeriesConfig};
use crate::error::{Error, Result};

const TINY: f64 = 1e-300;

/// Lower incomplete gamma γ(s, x) = ∫₀ˣ t^{s-1} e^{-t} dt.
pub fn lower_incomplete_gamma(s: f64, x: f64) -> Result<f64> {
    lower_incomplete_gamma_with(s, x, &SeriesConfig::default())
}

pub fn lower_incomplete_gamma_with(s: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    check_args(s, x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x < s + 1.0 {
        lower_series(s, x, cfg)
    } else {
        let upper = upper_continued_fraction(s, x, cfg)?;
        Ok(gamma(s)? - upper)
    }
}

/// Upper incomplete gamma Γ(s, x) = ∫ₓ^∞ t^{s-1} e^{-t} dt.
pub fn upper_incomplete_gamma(s: f64, x: f64) -> Result<f64> {
    let cfg = SeriesConfig::default();
    check_args(s, x)?;
    if x < s + 1.0 {
        Ok(gamma(s)? - lower_series(s, x, &cfg)?)
    } else {
        upper_continued_fraction(s, x, &cfg)
    }
}

fn check_args(s: f64, x: f64) -> Result<()> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain(format!("incomplete gamma requires s > 0, got {s}")));
    }
    if !(x >= 0.0) {
        return Err(Error::domain(format!("incomplete gamma requires x >= 0, got {x}")));
    }
    Ok(())
}

// γ(s,x) = x^s e^{-x} Σ_n x^n / (s (s+1) ... (s+n))
fn lower_series(s: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    let mut term = 1.0 / s;
    let mut sum = term;
    let mut small = 0;
    for n in 1..=cfg.max_terms {
        term *= x / (s + n as f64);
        sum += term;
        if term.abs() <= cfg.rel_tol * sum.abs() {
            small += 1;
            if small == 2 {
                return Ok(sum * (s * x.ln() - x).exp());
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Truncation {
        what: "lower incomplete gamma series".into(),
        terms: cfg.max_terms,
    })
}

// Modified Lentz evaluation of the continued fraction for Γ(s,x).
fn upper_continued_fraction(s: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    let mut b = x + 1.0 - s;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=cfg.max_terms {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() <= cfg.rel_tol {
            return Ok((s * x.ln() - x).exp() * h);
        }
    }
    Err(Error::Truncation {
        what: "upper incomplete gamma continued fraction".into(),
        terms: cfg.max_terms,
    })
}
