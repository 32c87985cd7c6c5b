use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Domain, FunctionalSpec, RealFn};
use crate::error::{Error, Result};

/// Outcome of a randomized axiom check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    /// Worst observed value: max deviation for linearity, min A(f) for isotonicity.
    pub worst: f64,
    /// Magnitude the deviation is measured against.
    pub scale: f64,
    pub trials: usize,
    pub passed: bool,
}

fn random_poly(rng: &mut ChaCha8Rng, x_scale: f64) -> impl Fn(f64) -> f64 {
    let deg = rng.gen_range(0..=4);
    let coef: Vec<f64> = (0..=deg).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    move |x: f64| {
        let u = x / x_scale;
        coef.iter().rev().fold(0.0, |acc, c| acc * u + c)
    }
}

fn node_scale(a: &FunctionalSpec) -> f64 {
    a.nodes().iter().fold(1.0f64, |m, x| m.max(x.abs()))
}

/// Max over trials of `|A(af+bg) − aA(f) − bA(g)|` with random polynomials.
pub fn check_linearity(a: &FunctionalSpec, trials: usize, seed: u64) -> Result<AxiomReport> {
    if trials == 0 {
        return Err(Error::domain("check_linearity needs at least one trial"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = node_scale(a);
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for _ in 0..trials {
        let f = random_poly(&mut rng, xs);
        let g = random_poly(&mut rng, xs);
        let ca: f64 = rng.gen_range(-10.0..=10.0);
        let cb: f64 = rng.gen_range(-10.0..=10.0);
        let fv = a.sample(&|x: f64| Ok(f(x)))?;
        let gv = a.sample(&|x: f64| Ok(g(x)))?;
        let combined: Vec<f64> = fv.iter().zip(&gv).map(|(u, v)| ca * u + cb * v).collect();
        let lhs = a.dot(&[&combined]);
        let af = a.dot(&[&fv]);
        let ag = a.dot(&[&gv]);
        worst = worst.max((lhs - ca * af - cb * ag).abs());
        let abs_f: Vec<f64> = fv.iter().map(|v| v.abs()).collect();
        let abs_g: Vec<f64> = gv.iter().map(|v| v.abs()).collect();
        scale = scale.max(ca.abs() * a.dot(&[&abs_f]) + cb.abs() * a.dot(&[&abs_g]));
    }
    Ok(AxiomReport {
        worst,
        scale,
        trials,
        passed: worst <= 1e-12 * scale.max(f64::MIN_POSITIVE) + f64::MIN_POSITIVE,
    })
}

/// Min over trials of A(f) for squares of random polynomials.
pub fn check_isotonicity(a: &FunctionalSpec, trials: usize, seed: u64) -> Result<AxiomReport> {
    if trials == 0 {
        return Err(Error::domain("check_isotonicity needs at least one trial"));
    }
    if let Some(i) = a.weights().iter().position(|w| *w < 0.0) {
        return Err(Error::InvariantViolation(format!("weight {i} is negative")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = node_scale(a);
    let mut worst = f64::INFINITY;
    let mut scale = 0.0f64;
    for _ in 0..trials {
        let p = random_poly(&mut rng, xs);
        let v = a.apply(&|x: f64| Ok(p(x) * p(x)))?;
        worst = worst.min(v);
        scale = scale.max(v.abs());
    }
    Ok(AxiomReport {
        worst,
        scale,
        trials,
        passed: worst >= 0.0,
    })
}

/// Result of a sampled synchronicity scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SyncReport {
    /// Smallest `(f(x)-f(y))(g(x)-g(y))` seen.
    pub min_product: f64,
    pub pairs: usize,
    pub synchronous: bool,
}

/// Sampled check that f and g are similarly ordered on `d`.
pub fn check_synchronous<F, G>(f: &F, g: &G, d: &Domain, samples: usize) -> bool
where
    F: RealFn + ?Sized,
    G: RealFn + ?Sized,
{
    check_synchronous_with(f, g, d, samples, 1e-10).is_ok_and(|r| r.synchronous)
}

/// As [`check_synchronous`], returning the scan details; `tol_abs` absorbs rounding.
pub fn check_synchronous_with<F, G>(
    f: &F,
    g: &G,
    d: &Domain,
    samples: usize,
    tol_abs: f64,
) -> Result<SyncReport>
where
    F: RealFn + ?Sized,
    G: RealFn + ?Sized,
{
    if samples < 2 {
        return Err(Error::domain("check_synchronous needs at least two samples"));
    }
    let xs = d.sample_points(samples);
    let fv: Vec<f64> = xs.iter().map(|&x| f.eval(x)).collect::<Result<_, _>>()?;
    let gv: Vec<f64> = xs.iter().map(|&x| g.eval(x)).collect::<Result<_, _>>()?;
    let mut min_product = f64::INFINITY;
    let mut pairs = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            min_product = min_product.min((fv[i] - fv[j]) * (gv[i] - gv[j]));
            pairs += 1;
        }
    }
    if pairs == 0 {
        min_product = 0.0;
    }
    Ok(SyncReport {
        min_product,
        pairs,
        synchronous: min_product >= -tol_abs,
    })
}
