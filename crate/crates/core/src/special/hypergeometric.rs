//! Gauss hypergeometric function ₂F₁(a, b; c; z) on the real interval (-1, 1).
//!
//! Regions:
//! - `|z| <= 0.5`: direct power series.
//! - `z < -0.5`: Pfaff transformation onto `z/(z-1) ∈ (1/3, 1/2)`.
//! - `z > 0.5`: the `1 - z` connection formula. The logarithmic case
//!   (`c - a - b` an integer) is rejected with [`Error::Unsupported`].

use super::{is_non_positive_integer, ln_gamma_sign, SeriesConfig};
use crate::error::{Error, Result};

pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    gauss_2f1_with(a, b, c, z, &SeriesConfig::default())
}

pub fn gauss_2f1_with(a: f64, b: f64, c: f64, z: f64, cfg: &SeriesConfig) -> Result<f64> {
    if [a, b, c, z].iter().any(|v| !v.is_finite()) {
        return Err(Error::domain("2F1 arguments must be finite"));
    }
    if is_non_positive_integer(c) {
        return Err(Error::domain(format!("2F1 requires c not a non-positive integer, got {c}")));
    }
    if !(z.abs() < 1.0) {
        return Err(Error::domain(format!("2F1 requires |z| < 1, got {z}")));
    }
    if z == 0.0 || a == 0.0 || b == 0.0 {
        return Ok(1.0);
    }
    // a terminating series is a polynomial: sum it directly anywhere in (-1, 1)
    if is_non_positive_integer(a) || is_non_positive_integer(b) {
        return direct_series(a, b, c, z, cfg);
    }
    if z < -0.5 {
        let w = z / (z - 1.0);
        let f = gauss_2f1_with(a, c - b, c, w, cfg)?;
        return Ok((1.0 - z).powf(-a) * f);
    }
    if z <= 0.5 {
        return direct_series(a, b, c, z, cfg);
    }
    connection(a, b, c, z, cfg)
}

/// Terms `(a)_n (b)_n / ((c)_n n!) zⁿ` of the defining series, starting at n = 0.
pub fn gauss_2f1_series_terms(a: f64, b: f64, c: f64, z: f64) -> impl Iterator<Item = f64> {
    let mut term = 1.0;
    let mut n = 0u64;
    std::iter::from_fn(move || {
        let out = term;
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        n += 1;
        Some(out)
    })
}

fn direct_series(a: f64, b: f64, c: f64, z: f64, cfg: &SeriesConfig) -> Result<f64> {
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut small = 0;
    for n in 0..cfg.max_terms {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        if !sum.is_finite() {
            return Err(Error::Range(format!("2F1({a}, {b}; {c}; {z}) series overflowed")));
        }
        if term.abs() <= cfg.rel_tol * sum.abs() {
            small += 1;
            if small == 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Truncation {
        what: format!("2F1({a}, {b}; {c}; {z}) series"),
        terms: cfg.max_terms,
    })
}

/// Γ(num0)Γ(num1) / (Γ(den0)Γ(den1)) with poles in the denominator giving 0.
fn gamma_ratio(num: [f64; 2], den: [f64; 2]) -> Result<f64> {
    if den.iter().any(|&d| is_non_positive_integer(d)) {
        return Ok(0.0);
    }
    let mut log = 0.0;
    let mut sign = 1.0;
    for x in num {
        let (l, s) = ln_gamma_sign(x)?;
        log += l;
        sign *= s;
    }
    for x in den {
        let (l, s) = ln_gamma_sign(x)?;
        log -= l;
        sign *= s;
    }
    Ok(sign * log.exp())
}

fn connection(a: f64, b: f64, c: f64, z: f64, cfg: &SeriesConfig) -> Result<f64> {
    let d = c - a - b;
    if (d - d.round()).abs() <= 1e-12 * d.abs().max(1.0) {
        return Err(Error::Unsupported(format!(
            "2F1 connection formula in the logarithmic case c - a - b = {d}"
        )));
    }
    let w = 1.0 - z;
    let c1 = gamma_ratio([c, d], [c - a, c - b])?;
    let c2 = gamma_ratio([c, -d], [a, b])?;
    let mut v = 0.0;
    if c1 != 0.0 {
        v += c1 * direct_series(a, b, 1.0 - d, w, cfg)?;
    }
    if c2 != 0.0 {
        v += c2 * w.powf(d) * direct_series(c - a, c - b, 1.0 + d, w, cfg)?;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    /// Plain partial sum with a fixed number of terms.
    fn brute_sum(a: f64, b: f64, c: f64, z: f64, terms: usize) -> f64 {
        gauss_2f1_series_terms(a, b, c, z).take(terms).sum()
    }

    #[test]
    fn trivial_values() {
        assert_eq!(gauss_2f1(1.3, 2.2, 0.7, 0.0).unwrap(), 1.0);
        assert_eq!(gauss_2f1(0.0, 2.2, 0.7, 0.9).unwrap(), 1.0);
    }

    #[test]
    fn log_identity() {
        let want = 2.0 * 2f64.ln();
        assert!(rel(gauss_2f1(1.0, 1.0, 2.0, 0.5).unwrap(), want) < 1e-14);
        assert!(rel(brute_sum(1.0, 1.0, 2.0, 0.5, 10_000), want) < 1e-14);
        // on the connection side: -ln(1-z)/z at z = 0.9 is the logarithmic case
        assert!(matches!(gauss_2f1(1.0, 1.0, 2.0, 0.9), Err(Error::Unsupported(_))));
    }

    #[test]
    fn connection_agrees_with_long_series() {
        // direct summation converges (slowly) for z < 1 too; use it as the oracle
        for &(a, b, c, z) in &[
            (0.3, 0.5, 1.7, 0.75),
            (1.2, -0.4, 2.9, 0.9),
            (0.8, 0.35, 0.6, 0.8),
            (2.5, 0.7, 1.1, 0.6),
        ] {
            let oracle = brute_sum(a, b, c, z, 20_000);
            let v = gauss_2f1(a, b, c, z).unwrap();
            assert!(rel(v, oracle) < 1e-9, "({a},{b},{c},{z}): {v} vs {oracle}");
        }
    }

    #[test]
    fn closed_forms() {
        // 2F1(a, b; b; z) = (1-z)^{-a}
        for z in [-0.9, -0.3, 0.2, 0.7, 0.95] {
            let v = gauss_2f1(0.4, 1.3, 1.3, z).unwrap();
            assert!(rel(v, (1.0 - z).powf(-0.4)) < 1e-12, "z={z}");
        }
        // 2F1(1/2, 1; 3/2; -z²) = atan(z)/z
        let z: f64 = 0.95;
        let v = gauss_2f1(0.5, 1.0, 1.5, -z * z).unwrap();
        assert!(rel(v, z.atan() / z) < 1e-12);
    }

    #[test]
    fn polynomial_case() {
        // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z²/(c(c+1))
        let (b, c, z) = (1.5, 2.5, 0.9);
        let want = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
        assert!(rel(gauss_2f1(-2.0, b, c, z).unwrap(), want) < 1e-14);
    }

    #[test]
    fn errors() {
        assert!(matches!(gauss_2f1(1.0, 1.0, -2.0, 0.1), Err(Error::Domain(_))));
        assert!(matches!(gauss_2f1(1.0, 1.0, 2.0, 1.0), Err(Error::Domain(_))));
        // c - a - b = -1, z > 0.5
        assert!(matches!(gauss_2f1(1.0, 1.0, 1.0, 0.7), Err(Error::Unsupported(_))));
        let tight = SeriesConfig { rel_tol: 1e-14, max_terms: 100, product_tail_tol: 1e-16 };
        assert!(matches!(
            gauss_2f1_with(50.0, 50.0, 0.5, 0.5, &tight),
            Err(Error::Truncation { .. })
        ));
    }

    #[test]
    fn partial_sums_increase_for_positive_parameters() {
        let mut sum = 0.0;
        for t in gauss_2f1_series_terms(0.7, 1.9, 2.2, 0.8).take(500) {
            assert!(t > 0.0);
            let next = sum + t;
            assert!(next > sum || t < sum * 1e-15);
            sum = next;
        }
    }
}
