//! Random functions whose hypotheses hold by construction.
//!
//! Everything is piecewise linear on 16 uniform knots, optionally composed
//! with another such function, so bounds and slopes are exact.

use rand::Rng;

use crate::error::{Error, Result};
use crate::functional::{PiecewiseLinear, ScalarFunction};
use crate::inequalities::Order;

pub const KNOTS: usize = 16;

fn pl(lo: f64, hi: f64, values: Vec<f64>) -> Result<ScalarFunction> {
    Ok(ScalarFunction::piecewise(PiecewiseLinear::uniform(lo, hi, values)?))
}

fn check_range(lo: f64, hi: f64) -> Result<()> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::domain(format!("generator range needs lo < hi, got [{lo}, {hi}]")));
    }
    Ok(())
}

/// Values of a random continuous function on the knots, in `[-1, 1]`.
pub fn random_values<R: Rng>(rng: &mut R) -> Vec<f64> {
    (0..KNOTS).map(|_| rng.gen_range(-1.0..=1.0)).collect()
}

/// Knot values of a nondecreasing function with slopes in `[min_step, 1]`
/// per knot spacing, starting at 0.
fn increasing_values<R: Rng>(rng: &mut R, min_step: f64) -> Vec<f64> {
    let mut v = Vec::with_capacity(KNOTS);
    let mut acc = 0.0;
    v.push(acc);
    for _ in 1..KNOTS {
        acc += rng.gen_range(min_step..=1.0);
        v.push(acc);
    }
    v
}

/// A strictly increasing piecewise-linear function on `[lo, hi]`.
pub fn gen_increasing<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> Result<ScalarFunction> {
    check_range(lo, hi)?;
    let v = increasing_values(rng, 0.1);
    let scale = 1.0 / v[KNOTS - 1];
    pl(lo, hi, v.into_iter().map(|y| y * scale).collect())
}

/// A positive piecewise-linear function with values in `[lo_val, hi_val]`.
pub fn gen_positive<R: Rng>(rng: &mut R, lo: f64, hi: f64, lo_val: f64, hi_val: f64) -> Result<ScalarFunction> {
    check_range(lo, hi)?;
    pl(lo, hi, (0..KNOTS).map(|_| rng.gen_range(lo_val..=hi_val)).collect())
}

/// Similarly (or oppositely) ordered pair.
#[derive(Debug, Clone)]
pub struct OrderedPair {
    pub f: ScalarFunction,
    pub g: ScalarFunction,
    pub order: Order,
}

/// `f = amp·φ₁∘u`, `g = ±amp·φ₂∘u` with φ₁, φ₂ strictly increasing and u a
/// shared random function; the sign of g's map sets the ordering.
pub fn gen_synchronous_pair<R: Rng>(rng: &mut R, lo: f64, hi: f64, order: Order, amp: f64) -> Result<OrderedPair> {
    check_range(lo, hi)?;
    let u = pl(lo, hi, random_values(rng))?;
    let phi1: Vec<f64> = increasing_values(rng, 0.05).into_iter().map(|v| amp * v / KNOTS as f64).collect();
    let phi2: Vec<f64> = increasing_values(rng, 0.05)
        .into_iter()
        .map(|v| order.sign() * amp * v / KNOTS as f64)
        .collect();
    let f = pl(-1.0, 1.0, phi1)?.after(u.clone());
    let g = pl(-1.0, 1.0, phi2)?.after(u);
    Ok(OrderedPair { f, g, order })
}

/// `m + (M - m)·s` with `s` a random function in `[0, 1]` that touches both ends.
pub fn gen_bounded<R: Rng>(rng: &mut R, m: f64, big_m: f64, lo: f64, hi: f64) -> Result<ScalarFunction> {
    if !(m <= big_m) {
        return Err(Error::domain(format!("bounded generator needs m <= M, got {m} > {big_m}")));
    }
    check_range(lo, hi)?;
    let mut s: Vec<f64> = (0..KNOTS).map(|_| rng.gen_range(0.0..=1.0)).collect();
    let i = rng.gen_range(0..KNOTS);
    let j = (i + 1 + rng.gen_range(0..KNOTS - 1)) % KNOTS;
    s[i] = 0.0;
    s[j] = 1.0;
    pl(lo, hi, s.into_iter().map(|v| (m + (big_m - m) * v).clamp(m, big_m)).collect())
}

/// `f = M·s∘h` with `s` 1-Lipschitz on `[h_lo, h_hi]` (one slope exactly ±1),
/// so `|f(x) - f(y)| ≤ M|h(x) - h(y)|`.
pub fn gen_lipschitz<R: Rng>(rng: &mut R, m: f64, h: &ScalarFunction, h_lo: f64, h_hi: f64) -> Result<ScalarFunction> {
    check_range(h_lo, h_hi)?;
    let dx = (h_hi - h_lo) / (KNOTS - 1) as f64;
    let tight = rng.gen_range(0..KNOTS - 1);
    let mut v = Vec::with_capacity(KNOTS);
    let mut acc = rng.gen_range(-1.0..=1.0);
    v.push(m * acc);
    for k in 0..KNOTS - 1 {
        let slope = if k == tight {
            if rng.gen_bool(0.5) { 1.0 } else { -1.0 }
        } else {
            rng.gen_range(-1.0..=1.0)
        };
        acc += slope * dx;
        v.push(m * acc);
    }
    Ok(pl(h_lo, h_hi, v)?.after(h.clone()))
}

/// `H(λ·(x - c)₊^r + (1 - λ)·D^{r-1}·ℓ(x))` with ℓ 1-Lipschitz and `D = hi - lo`;
/// both parts are r-Hölder with constant 1 on `[lo, hi]`.
pub fn gen_holder<R: Rng>(rng: &mut R, h: f64, r: f64, lo: f64, hi: f64) -> Result<ScalarFunction> {
    check_range(lo, hi)?;
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::domain(format!("Hoelder exponent must lie in (0, 1], got {r}")));
    }
    let lambda = rng.gen_range(0.0..=1.0);
    let c = rng.gen_range(lo..hi);
    let cusp = ScalarFunction::parse(&format!("max(x - ({c:?}), 0)^({r:?})"))?;
    let lip = gen_lipschitz(rng, 1.0, &ScalarFunction::Identity, lo, hi)?;
    let d = (hi - lo).powf(r - 1.0);
    Ok(cusp.affine(h * lambda, 0.0).plus(lip.affine(h * (1.0 - lambda) * d, 0.0)))
}

/// Lower and upper bounding functions around `f`: `f - gap₁`, `f + gap₂`
/// with random non-negative gaps of size at most `amp`.
pub fn gen_envelope<R: Rng>(rng: &mut R, f: &ScalarFunction, lo: f64, hi: f64, amp: f64) -> Result<(ScalarFunction, ScalarFunction)> {
    let g1 = gen_positive(rng, lo, hi, 0.0, amp)?;
    let g2 = gen_positive(rng, lo, hi, 0.0, amp)?;
    Ok((f.clone().minus(g1), f.clone().plus(g2)))
}
