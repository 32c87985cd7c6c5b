//! One reproducible trial: functionals, functions and hypothesis data, all
//! drawn from a per-trial seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::gen::{
    gen_bounded, gen_envelope, gen_holder, gen_increasing, gen_lipschitz, gen_positive, gen_synchronous_pair,
    random_values, KNOTS,
};
use crate::error::{Error, Result};
use crate::functional::{FunctionalKind, FunctionalSpec, PiecewiseLinear, ScalarFunction, ToleranceSpec};
use crate::inequalities::{self as ineq, conjugate, CheckerContext, Checker, InequalityReport, Order};
use crate::operators::{
    build_discrete, build_hadamard, build_jackson, build_q_saigo, build_riemann, build_riemann_liouville,
    build_saigo, build_time_scale_delta,
};

/// Everything needed to rebuild and rerun one trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub trial: u64,
    pub seed: u64,
    pub checker: Checker,
    pub kind: FunctionalKind,
    /// Quadrature nodes (and the point cap for discrete kinds).
    pub nodes: usize,
    /// Nodes of the Hadamard operators in the Hadamard example.
    pub hadamard_nodes: usize,
    /// Jackson / q-Saigo truncation K.
    pub q_terms: usize,
    pub m_cap: usize,
    /// Scale of every generated function and of the constants tied to it.
    pub amplitude: f64,
    /// 1 keeps the drawn parameters; 0 moves them to the centre of their box.
    pub interior: f64,
    /// Index of the hypothesis to break (negative control), if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corruption: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<ToleranceSpec>,
}

/// Per-trial seed from the suite seed and the cell and trial indices (splitmix64).
pub fn trial_seed(seed: u64, kind: FunctionalKind, checker: Checker, trial: u64) -> u64 {
    let mut z = seed
        ^ (kind as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (checker as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
        ^ trial.wrapping_mul(0x94D0_49BB_1331_11EB);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Number of distinct hypothesis corruptions for a checker; index 0 is
/// always a negative weight except for the Hadamard example.
pub fn corruption_count(checker: Checker) -> usize {
    match checker {
        Checker::ChebyshevTwo => 2,
        Checker::LipschitzPair => 4,
        Checker::MGLipschitz => 2,
        Checker::HolderPair => 3,
        Checker::VariableBounds => 3,
        Checker::ConstantBounds => 2,
        Checker::NearFunction => 2,
        Checker::FourBounds => 3,
        Checker::FourConstBounds => 3,
        Checker::YoungBounds => 3,
        Checker::YoungSquare => 2,
        Checker::YoungFour => 4,
        Checker::TriplePositiveWeight => 3,
        Checker::TripleGruss => 4,
        Checker::TripleLipschitz => 4,
        Checker::ThreeWeights => 3,
        Checker::HadamardExample => 2,
    }
}

/// Uniform draws in `[0, 1]` pulled toward 1/2 by the interior factor.
struct Draws {
    rng: ChaCha8Rng,
    interior: f64,
}

impl Draws {
    fn u(&mut self) -> f64 {
        0.5 + self.interior * (self.rng.gen_range(0.0..=1.0) - 0.5)
    }

    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.u()
    }
}

fn nodes_in<R: Rng>(rng: &mut R, cap: usize) -> Vec<f64> {
    // draw the full set first so the cap does not shift later draws
    let drawn = rng.gen_range(2..=10usize);
    let mut pts: Vec<f64> = (0..10).map(|_| (rng.gen_range(0.0..2.0f64) * 1e6).round() / 1e6).collect();
    pts.truncate(drawn.min(cap.max(2)));
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    if pts.len() < 2 {
        pts = vec![0.25, 1.5];
    }
    pts
}

fn build_functional(kind: FunctionalKind, d: &mut Draws, spec: &InstanceSpec) -> Result<FunctionalSpec> {
    let n = spec.nodes;
    match kind {
        FunctionalKind::Discrete => {
            let pts = nodes_in(&mut d.rng, n);
            let w: Vec<f64> = (0..pts.len()).map(|_| d.rng.gen_range(0.1..2.0)).collect();
            build_discrete(&pts, Some(&w))
        }
        FunctionalKind::TimeScaleDelta => {
            let mut pts = nodes_in(&mut d.rng, n + 1);
            if pts.len() < 3 {
                pts.push(pts[pts.len() - 1] + 0.5);
            }
            build_time_scale_delta(&pts)
        }
        FunctionalKind::Riemann => {
            let a = d.range(0.0, 1.0);
            let len = d.range(0.5, 2.0);
            build_riemann(a, a + len, n)
        }
        FunctionalKind::RiemannLiouville => {
            let alpha = d.range(0.3, 3.0);
            let t = d.range(0.5, 3.0);
            build_riemann_liouville(alpha, t, n.max(4))
        }
        FunctionalKind::Hadamard => {
            let alpha = d.range(0.3, 3.0);
            let x = d.range(1.2, 4.0);
            build_hadamard(alpha, x, n.max(4))
        }
        FunctionalKind::Saigo | FunctionalKind::Hypergeometric | FunctionalKind::ErdelyiKober => {
            // η in (β - 1, 0) and η - β kept away from the integers
            for _ in 0..64 {
                let alpha = d.range(0.4, 2.5);
                let beta = d.range(-0.3, 0.6);
                let eta = (beta - 1.0) * d.range(0.1, 0.9);
                let t = d.range(0.5, 3.0);
                let gap = eta - beta;
                if (gap - gap.round()).abs() < 0.05 {
                    continue;
                }
                return match kind {
                    FunctionalKind::Saigo => build_saigo(alpha, beta, eta, t, n.max(4)),
                    FunctionalKind::ErdelyiKober => crate::operators::build_erdelyi_kober(alpha, eta, t, n.max(4)),
                    _ => crate::operators::build_hypergeometric(alpha, beta, eta, d.range(0.0, 0.5), t, n.max(4)),
                };
            }
            Err(Error::domain("no admissible hypergeometric parameters drawn"))
        }
        FunctionalKind::Jackson => {
            let q = d.range(0.3, 0.9);
            let t = d.range(0.5, 3.0);
            build_jackson(q, t, spec.q_terms)
        }
        FunctionalKind::QSaigo => {
            let alpha = d.range(0.4, 2.0);
            let beta = d.range(-0.3, 0.6);
            let eta = (beta - 1.0) * d.range(0.1, 0.9);
            let q = d.range(0.3, 0.85);
            let t = d.range(0.5, 2.0);
            build_q_saigo(alpha, beta, eta, q, t, spec.q_terms, spec.m_cap)
        }
        FunctionalKind::QRiemannLiouville => {
            let alpha = d.range(0.3, 3.0);
            let q = d.range(0.3, 0.9);
            let t = d.range(0.5, 3.0);
            crate::operators::build_q_riemann_liouville(alpha, q, t, spec.q_terms)
        }
    }
}

fn order_of<R: Rng>(rng: &mut R) -> Order {
    if rng.gen_bool(0.5) {
        Order::Synchronous
    } else {
        Order::Asynchronous
    }
}

fn flip(o: Order) -> Order {
    match o {
        Order::Synchronous => Order::Asynchronous,
        Order::Asynchronous => Order::Synchronous,
    }
}

fn weight<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> Result<ScalarFunction> {
    if rng.gen_bool(0.5) {
        Ok(ScalarFunction::Const(1.0))
    } else {
        gen_positive(rng, lo, hi, 0.2, 2.0)
    }
}

/// A random function of size `amp` on `[lo, hi]`.
fn free<R: Rng>(rng: &mut R, lo: f64, hi: f64, amp: f64) -> Result<ScalarFunction> {
    let v = random_values(rng).into_iter().map(|y| amp * y).collect();
    Ok(ScalarFunction::piecewise(PiecewiseLinear::uniform(lo, hi, v)?))
}

fn bounds<R: Rng>(rng: &mut R, amp: f64) -> (f64, f64) {
    let m = amp * rng.gen_range(-1.0..1.0);
    (m, m + amp * rng.gen_range(0.5..2.0))
}

/// Constant-bounded `f` on `[m, M]`; corrupted copies sit above `M` everywhere.
fn shifted_above(f: ScalarFunction, m: f64, big_m: f64, amp: f64) -> ScalarFunction {
    f.affine(1.0, big_m - m + 0.1 * amp)
}

impl InstanceSpec {
    /// Build the trial and run its checker.
    pub fn run(&self) -> Result<Vec<InequalityReport>> {
        let mut d = Draws {
            rng: ChaCha8Rng::seed_from_u64(self.seed ^ 0x5EED_0001),
            interior: self.interior.clamp(0.0, 1.0),
        };
        let mut fr = ChaCha8Rng::seed_from_u64(self.seed ^ 0x5EED_0002);
        let amp = self.amplitude;
        let corrupt = self.corruption.map(|c| c % corruption_count(self.checker));

        if self.checker == Checker::HadamardExample {
            let alpha = d.range(0.3, 2.5);
            let beta = d.range(0.3, 2.5);
            let t = d.range(1.2, 5.0);
            let id = ScalarFunction::Identity;
            let (m1, m2) = (amp * fr.gen_range(0.5..2.0), amp * fr.gen_range(0.5..2.0));
            let mut f = gen_lipschitz(&mut fr, m1, &id, 1.0, t)?;
            let mut g = gen_lipschitz(&mut fr, m2, &id, 1.0, t)?;
            match corrupt {
                Some(0) => f = f.plus(id.clone().affine(3.0 * m1, 0.0)),
                Some(_) => g = g.plus(id.clone().affine(3.0 * m2, 0.0)),
                None => {}
            }
            let r = ineq::check_hadamard_example(alpha, beta, t, &f, &g, m1, m2, self.hadamard_nodes, self.tolerance)?;
            return Ok(vec![r]);
        }

        let a = build_functional(self.kind, &mut d, self)?;
        let b = build_functional(self.kind, &mut d, self)?;
        let (la, ha) = a.domain().bounds();
        let (lb, hb) = b.domain().bounds();
        let (lo, hi) = (la.min(lb), ha.max(hb));
        if !(hi > lo) {
            return Err(Error::domain("instance domain collapsed to a point"));
        }
        let mut p = weight(&mut fr, lo, hi)?;
        let q = weight(&mut fr, lo, hi)?;
        if corrupt == Some(0) {
            // p ≤ 2 everywhere, so this is negative at every node
            p = p.affine(1.0, -3.0);
        }
        let mut ctx = CheckerContext::new(&a, &b).with_weights(p, q);
        if let Some(tol) = self.tolerance {
            ctx = ctx.with_tolerance(tol);
        }
        let c = corrupt.unwrap_or(0);
        let is = |k: usize| corrupt.is_some() && c == k;

        let out = match self.checker {
            Checker::ChebyshevTwo => {
                let order = order_of(&mut fr);
                let pair = gen_synchronous_pair(&mut fr, lo, hi, order, amp)?;
                let claim = if is(1) { flip(pair.order) } else { pair.order };
                vec![ineq::check_chebyshev_two(&ctx, &pair.f, &pair.g, claim)]
            }
            Checker::LipschitzPair => {
                let h_order = order_of(&mut fr);
                let h1 = gen_increasing(&mut fr, lo, hi)?;
                let h2 = gen_increasing(&mut fr, lo, hi)?;
                let h2 = if h_order == Order::Asynchronous { h2.affine(-1.0, 1.0) } else { h2 };
                let (m1, m2) = (amp * fr.gen_range(0.5..2.0), amp * fr.gen_range(0.5..2.0));
                let mut f = gen_lipschitz(&mut fr, m1, &h1, 0.0, 1.0)?;
                let mut g = gen_lipschitz(&mut fr, m2, &h2, 0.0, 1.0)?;
                if is(1) {
                    f = f.plus(h1.clone().affine(3.0 * m1, 0.0));
                }
                if is(2) {
                    g = g.plus(h2.clone().affine(3.0 * m2, 0.0));
                }
                let claim = if is(3) { flip(h_order) } else { h_order };
                vec![ineq::check_lipschitz_pair(&ctx, &f, &g, m1, &h1, m2, &h2, claim)]
            }
            Checker::MGLipschitz => {
                let g = gen_increasing(&mut fr, lo, hi)?.affine(amp, 0.0);
                let m = fr.gen_range(0.5..2.0);
                let mut f = gen_lipschitz(&mut fr, m, &g, 0.0, amp)?;
                if is(1) {
                    f = f.plus(g.clone().affine(3.0 * m, 0.0));
                }
                vec![ineq::check_m_g_lipschitz(&ctx, &f, &g, m)]
            }
            Checker::HolderPair => {
                let (r, s) = (fr.gen_range(0.2..=1.0), fr.gen_range(0.2..=1.0));
                let (h1, h2) = (amp * fr.gen_range(0.5..2.0), amp * fr.gen_range(0.5..2.0));
                let mut f = gen_holder(&mut fr, h1, r, lo, hi)?;
                let mut g = gen_holder(&mut fr, h2, s, lo, hi)?;
                if is(1) || is(2) {
                    // a slope steep enough to beat H|x - y|^e at every probed distance
                    let xs = ctx.probe_points();
                    let delta = xs.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
                    let (hh, e) = if is(1) { (h1, r) } else { (h2, s) };
                    let slope = ScalarFunction::Identity.affine(3.0 * hh * delta.powf(e - 1.0).max(1.0), 0.0);
                    if is(1) {
                        f = f.plus(slope);
                    } else {
                        g = g.plus(slope);
                    }
                }
                vec![ineq::check_holder_pair(&ctx, &f, &g, h1, h2, r, s)]
            }
            Checker::VariableBounds => {
                let f = free(&mut fr, lo, hi, amp)?;
                let (mut l, mut u) = gen_envelope(&mut fr, &f, lo, hi, amp)?;
                if is(1) {
                    u = l.clone().affine(1.0, -0.1 * amp);
                } else if is(2) {
                    l = u.clone().affine(1.0, 0.1 * amp);
                }
                vec![ineq::check_variable_bounds(&ctx, &f, &l, &u)]
            }
            Checker::ConstantBounds => {
                let (m, big_m) = bounds(&mut fr, amp);
                let mut f = gen_bounded(&mut fr, m, big_m, lo, hi)?;
                if is(1) {
                    f = shifted_above(f, m, big_m, amp);
                }
                vec![ineq::check_constant_bounds(&ctx, &f, m, big_m)]
            }
            Checker::NearFunction => {
                let phi = free(&mut fr, lo, hi, amp)?;
                let m = amp * fr.gen_range(0.2..1.0);
                let gap: Vec<f64> = (0..KNOTS).map(|_| m * fr.gen_range(-0.9..0.9)).collect();
                let mut f = phi.clone().plus(ScalarFunction::piecewise(PiecewiseLinear::uniform(lo, hi, gap)?));
                if is(1) {
                    f = phi.clone().affine(1.0, 1.5 * m);
                }
                vec![ineq::check_near_function(&ctx, &f, &phi, m)]
            }
            Checker::FourBounds | Checker::YoungFour => {
                let f = free(&mut fr, lo, hi, amp)?;
                let g = free(&mut fr, lo, hi, amp)?;
                let (l1, mut u1) = gen_envelope(&mut fr, &f, lo, hi, amp)?;
                let (l2, mut u2) = gen_envelope(&mut fr, &g, lo, hi, amp)?;
                if is(1) {
                    u1 = l1.clone().affine(1.0, -0.1 * amp);
                }
                if is(2) {
                    u2 = l2.clone().affine(1.0, -0.1 * amp);
                }
                if self.checker == Checker::FourBounds {
                    ineq::check_four_bounds(&ctx, &f, &g, &l1, &u1, &l2, &u2)
                } else {
                    let t1 = fr.gen_range(1.2..5.0);
                    let t2 = if is(3) { conjugate(t1) + 1.0 } else { conjugate(t1) };
                    ineq::check_young_four(&ctx, &f, &g, &l1, &u1, &l2, &u2, t1, t2)
                }
            }
            Checker::FourConstBounds => {
                let (m, big_m) = bounds(&mut fr, amp);
                let (n, big_n) = bounds(&mut fr, amp);
                let mut f = gen_bounded(&mut fr, m, big_m, lo, hi)?;
                let mut g = gen_bounded(&mut fr, n, big_n, lo, hi)?;
                if is(1) {
                    f = shifted_above(f, m, big_m, amp);
                }
                if is(2) {
                    g = shifted_above(g, n, big_n, amp);
                }
                ineq::check_four_const_bounds(&ctx, &f, &g, m, big_m, n, big_n)
            }
            Checker::YoungBounds => {
                let f = free(&mut fr, lo, hi, amp)?;
                let (l, mut u) = gen_envelope(&mut fr, &f, lo, hi, amp)?;
                if is(1) {
                    u = l.clone().affine(1.0, -0.1 * amp);
                }
                let t1 = fr.gen_range(1.2..5.0);
                let t2 = if is(2) { conjugate(t1) + 1.0 } else { conjugate(t1) };
                vec![ineq::check_young_bounds(&ctx, &f, &l, &u, t1, t2)]
            }
            Checker::YoungSquare => {
                let (m, big_m) = bounds(&mut fr, amp);
                let mut f = gen_bounded(&mut fr, m, big_m, lo, hi)?;
                if is(1) {
                    f = shifted_above(f, m, big_m, amp);
                }
                vec![ineq::check_young_square(&ctx, &f, m, big_m)]
            }
            Checker::TriplePositiveWeight => {
                let order = order_of(&mut fr);
                let pair = gen_synchronous_pair(&mut fr, lo, hi, order, amp)?;
                let mut h = gen_positive(&mut fr, lo, hi, 0.1 * amp, 2.0 * amp)?;
                if is(1) {
                    h = h.affine(-1.0, 0.0);
                }
                let claim = if is(2) { flip(pair.order) } else { pair.order };
                vec![ineq::check_triple_positive_weight(&ctx, &pair.f, &pair.g, &h, claim)]
            }
            Checker::TripleGruss => {
                let bs = [bounds(&mut fr, amp), bounds(&mut fr, amp), bounds(&mut fr, amp)];
                let mut fs = Vec::with_capacity(3);
                for (i, &(lo_b, hi_b)) in bs.iter().enumerate() {
                    let f = gen_bounded(&mut fr, lo_b, hi_b, lo, hi)?;
                    fs.push(if is(i + 1) { shifted_above(f, lo_b, hi_b, amp) } else { f });
                }
                vec![ineq::check_triple_gruss(&ctx, &fs[0], &fs[1], &fs[2], bs[0], bs[1], bs[2])]
            }
            Checker::TripleLipschitz => {
                let g = gen_increasing(&mut fr, lo, hi)?;
                let ms = [fr.gen_range(0.5..2.0), fr.gen_range(0.5..2.0), fr.gen_range(0.5..2.0)].map(|m| amp * m);
                let mut fs = Vec::with_capacity(3);
                for (i, &m) in ms.iter().enumerate() {
                    let f = gen_lipschitz(&mut fr, m, &g, 0.0, 1.0)?;
                    fs.push(if is(i + 1) { f.plus(g.clone().affine(3.0 * m, 0.0)) } else { f });
                }
                vec![ineq::check_triple_lipschitz(&ctx, [&fs[0], &fs[1], &fs[2]], &g, ms)]
            }
            Checker::ThreeWeights => {
                let order = order_of(&mut fr);
                let pair = gen_synchronous_pair(&mut fr, lo, hi, order, amp)?;
                let mut r = gen_positive(&mut fr, lo, hi, 0.2, 2.0)?;
                if is(2) {
                    r = r.affine(1.0, -3.0);
                }
                let claim = if is(1) { flip(pair.order) } else { pair.order };
                let ctx = ctx.with_third_weight(r);
                vec![ineq::check_three_weights(&ctx, &pair.f, &pair.g, claim)]
            }
            Checker::HadamardExample => unreachable!("handled above"),
        };
        Ok(out)
    }
}
