use std::f64::consts::PI;

use super::is_non_positive_integer;
use crate::error::{Error, Result};

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest argument with a finite Γ in double precision.
const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

fn lanczos_sum(z: f64) -> f64 {
    // z is the shifted argument x - 1
    let mut acc = LANCZOS_COEF[0];
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    acc
}

/// sin(πx) with argument reduction so that sin vanishes exactly at integers.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).floor();
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r < 0.5 {
        (PI * r).sin()
    } else if r < 1.5 {
        (PI * (1.0 - r)).sin()
    } else {
        (PI * (r - 2.0)).sin()
    }
}

/// Γ(x) for real x that is not a non-positive integer.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("gamma of NaN"));
    }
    if is_non_positive_integer(x) {
        return Err(Error::domain(format!("gamma has a pole at {x}")));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::Range(format!("gamma({x}) overflows")));
    }
    if x == x.round() && x <= 171.0 {
        // exact factorial
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return Ok(acc);
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let g = gamma(1.0 - x)?;
        let v = PI / (s * g);
        if !v.is_finite() {
            return Err(Error::Range(format!("gamma({x}) is not finite")));
        }
        return Ok(v);
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    // split the power so the intermediate does not overflow near the top of the range
    let half = t.powf((z + 0.5) / 2.0);
    let v = (2.0 * PI).sqrt() * half * (-t).exp() * half * lanczos_sum(z);
    if !v.is_finite() {
        return Err(Error::Range(format!("gamma({x}) is not finite")));
    }
    Ok(v)
}

/// ln|Γ(x)| together with the sign of Γ(x).
pub fn ln_gamma_sign(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() {
        return Err(Error::domain("ln_gamma of NaN"));
    }
    if is_non_positive_integer(x) {
        return Err(Error::domain(format!("gamma has a pole at {x}")));
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let (lg, sg) = ln_gamma_sign(1.0 - x)?;
        let sign = if s < 0.0 { -sg } else { sg };
        return Ok((PI.ln() - s.abs().ln() - lg, sign));
    }
    if x == 1.0 || x == 2.0 {
        return Ok((0.0, 1.0));
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    let v = 0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln();
    Ok((v, 1.0))
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    Ok(ln_gamma_sign(x)?.0)
}

/// 1/Γ(x), which is entire: zero at the poles of Γ.
pub fn reciprocal_gamma(x: f64) -> f64 {
    if is_non_positive_integer(x) {
        return 0.0;
    }
    if x <= GAMMA_MAX_ARG {
        if let Ok(g) = gamma(x) {
            return 1.0 / g;
        }
    }
    match ln_gamma_sign(x) {
        Ok((lg, s)) => s * (-lg).exp(),
        Err(_) => f64::NAN,
    }
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
pub fn pochhammer(a: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for k in 0..n {
        acc *= a + k as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn gamma_small_integers() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert_eq!(gamma(2.0).unwrap(), 1.0);
    }

    #[test]
    fn gamma_half_duplication() {
        let g = gamma(0.5).unwrap();
        assert!(rel(g * g, PI) < 1e-14);
    }

    #[test]
    fn gamma_half_against_quadrature() {
        // ∫₀^∞ t^{-1/2} e^{-t} dt = 2∫₀^∞ e^{-u²} du, composite Simpson on [0, 12]
        let n = 200_000;
        let h = 12.0 / n as f64;
        let f = |u: f64| (-u * u).exp();
        let mut s = f(0.0) + f(12.0);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            s += w * f(i as f64 * h);
        }
        let integral = 2.0 * s * h / 3.0;
        assert!(rel(gamma(0.5).unwrap(), integral) < 1e-12);
    }

    #[test]
    fn gamma_poles_and_overflow() {
        assert!(matches!(gamma(0.0), Err(Error::Domain(_))));
        assert!(matches!(gamma(-3.0), Err(Error::Domain(_))));
        assert!(matches!(gamma(172.0), Err(Error::Range(_))));
        assert!(gamma(171.0).unwrap().is_finite());
    }

    #[test]
    fn gamma_negative_non_integer() {
        // Γ(-0.5) = -2√π
        assert!(rel(gamma(-0.5).unwrap(), -2.0 * PI.sqrt()) < 1e-14);
    }

    #[test]
    fn gamma_large_half_integers() {
        // Γ(n + 1/2) = (2n)! √π / (4^n n!), checked in log space
        for n in [10u32, 50, 100, 160] {
            let mut lg = 0.5 * PI.ln();
            for k in (n + 1)..=(2 * n) {
                lg += (k as f64).ln();
            }
            lg -= (n as f64) * 4f64.ln();
            let v = gamma(n as f64 + 0.5).unwrap();
            assert!(rel(v.ln(), lg) < 1e-13, "n={n}");
            assert!(rel(ln_gamma(n as f64 + 0.5).unwrap(), lg) < 1e-13);
        }
    }

    #[test]
    fn ln_gamma_sign_negative() {
        let (lg, s) = ln_gamma_sign(-1.5).unwrap();
        // Γ(-1.5) = 4√π/3
        assert_eq!(s, 1.0);
        assert!(rel(lg.exp(), 4.0 * PI.sqrt() / 3.0) < 1e-13);
        let (_, s) = ln_gamma_sign(-0.5).unwrap();
        assert_eq!(s, -1.0);
    }

    #[test]
    fn reciprocal_gamma_at_poles() {
        assert_eq!(reciprocal_gamma(0.0), 0.0);
        assert_eq!(reciprocal_gamma(-4.0), 0.0);
        assert!(rel(reciprocal_gamma(3.0), 0.5) < 1e-15);
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(7.3, 0), 1.0);
        assert_eq!(pochhammer(3.0, 2), 12.0);
        assert_eq!(pochhammer(0.5, 3), 1.875);
    }
}
