use crate::error::{Error, Result};
use crate::special::ln_gamma;

/// Gauss rule family on the reference interval `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RuleFamily {
    Legendre,
    /// Weight `u^p_exp (1-u)^q_exp`.
    Jacobi { p_exp: f64, q_exp: f64 },
}

/// Nodes and weights of an n-point Gauss rule on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub family: RuleFamily,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn legendre(n: usize) -> Result<Self> {
        let mut r = Self::jacobi(0.0, 0.0, n)?;
        r.family = RuleFamily::Legendre;
        Ok(r)
    }

    /// Gauss–Jacobi rule for `∫₀¹ u^p (1-u)^q g(u) du` via Golub–Welsch.
    pub fn jacobi(p_exp: f64, q_exp: f64, n: usize) -> Result<Self> {
        if !(p_exp > -1.0 && q_exp > -1.0) || !p_exp.is_finite() || !q_exp.is_finite() {
            return Err(Error::domain(format!(
                "Jacobi exponents must exceed -1 (got {p_exp}, {q_exp})"
            )));
        }
        if n == 0 {
            return Err(Error::domain("quadrature rule needs at least one node"));
        }
        // recurrence on [-1, 1] with weight (1-x)^a (1+x)^b, u = (1+x)/2
        let (a, b) = (q_exp, p_exp);
        let ab = a + b;
        let mut diag = Vec::with_capacity(n);
        let mut off = vec![0.0; n];
        for k in 0..n {
            let kf = k as f64;
            let s = 2.0 * kf + ab;
            diag.push(if k == 0 {
                (b - a) / (ab + 2.0)
            } else {
                (b * b - a * a) / (s * (s + 2.0))
            });
            if k + 1 < n {
                let j = kf + 1.0;
                let s = 2.0 * j + ab;
                let beta = if k == 0 {
                    4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
                } else {
                    4.0 * j * (j + a) * (j + b) * (j + ab) / (s * s * (s + 1.0) * (s - 1.0))
                };
                off[k] = beta.sqrt();
            }
        }
        let mut first = vec![0.0; n];
        first[0] = 1.0;
        tridiagonal_ql(&mut diag, &mut off, &mut first)?;
        let ln_mu0 = ln_gamma(p_exp + 1.0)? + ln_gamma(q_exp + 1.0)? - ln_gamma(p_exp + q_exp + 2.0)?;
        let mu0 = ln_mu0.exp();
        let mut pairs: Vec<(f64, f64)> = diag
            .iter()
            .zip(&first)
            .map(|(&x, &z)| (((1.0 + x) / 2.0).clamp(0.0, 1.0), mu0 * z * z))
            .collect();
        pairs.sort_by(|l, r| l.0.total_cmp(&r.0));
        let (nodes, weights) = pairs.into_iter().unzip();
        Ok(QuadratureRule {
            family: RuleFamily::Jacobi { p_exp, q_exp },
            nodes,
            weights,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&u, &w)| w * g(u)).sum()
    }
}

/// Implicit QL on a symmetric tridiagonal matrix; `z` carries the first
/// components of the eigenvectors.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::Truncation {
                    what: "tridiagonal QL iteration".into(),
                    terms: iter,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                let zf = z[i + 1];
                z[i + 1] = s * z[i] + c * zf;
                z[i] = c * z[i] - s * zf;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Rule on `[0, 1]` for `∫ u^left (1-u)^right g(u) du` split at 1/2.
///
/// The left half uses `u = v²/2`, which also smooths `g` when it behaves like
/// a fractional power at 0; the right half folds `u^left` into the weights.
/// Each half gets `n / 2` nodes.
pub(crate) fn split_singular_rule(left: f64, right: f64, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let half = (n / 2).max(1);
    let lrule = QuadratureRule::jacobi(2.0 * left + 1.0, 0.0, half)?;
    let rrule = QuadratureRule::jacobi(right, 0.0, n - half)?;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let lscale = 2f64.powf(-left);
    for (&v, &w) in lrule.nodes.iter().zip(&lrule.weights) {
        let u = 0.5 * v * v;
        nodes.push(u);
        weights.push(w * lscale * (1.0 - u).powf(right));
    }
    let rscale = 2f64.powf(-right - 1.0);
    let mut right_part: Vec<(f64, f64)> = rrule
        .nodes
        .iter()
        .zip(&rrule.weights)
        .map(|(&s, &w)| {
            let u = 1.0 - 0.5 * s;
            (u, w * rscale * u.powf(left))
        })
        .collect();
    right_part.reverse();
    for (u, w) in right_part {
        nodes.push(u);
        weights.push(w);
    }
    Ok((nodes, weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma;

    fn beta(a: f64, b: f64) -> f64 {
        gamma(a).unwrap() * gamma(b).unwrap() / gamma(a + b).unwrap()
    }

    #[test]
    fn monomial_moments_exact_to_degree_2n_minus_1() {
        for &(p, q) in &[(0.0, 0.0), (-0.5, 0.5), (0.3, -0.7), (2.0, 1.5), (-0.9, -0.9)] {
            for n in [1usize, 2, 5, 12] {
                let r = QuadratureRule::jacobi(p, q, n).unwrap();
                assert!(r.weights.iter().all(|&w| w > 0.0));
                assert!(r.nodes.iter().all(|&u| u > 0.0 && u < 1.0));
                for k in 0..2 * n {
                    let exact = beta(p + 1.0 + k as f64, q + 1.0);
                    let got = r.integrate(|u| u.powi(k as i32));
                    assert!(
                        (got - exact).abs() <= 1e-12 * exact,
                        "p={p} q={q} n={n} k={k}: {got} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn matches_dense_eigensolver() {
        // Jacobi matrix for Legendre on [-1, 1]; eigenvalues map to our nodes
        let n = 10;
        let mut m = nalgebra::DMatrix::<f64>::zeros(n, n);
        for k in 1..n {
            let kf = k as f64;
            let b = kf / (4.0 * kf * kf - 1.0).sqrt();
            m[(k, k - 1)] = b;
            m[(k - 1, k)] = b;
        }
        let eig = m.symmetric_eigen();
        let mut ev: Vec<f64> = eig.eigenvalues.iter().map(|x| (1.0 + x) / 2.0).collect();
        ev.sort_by(f64::total_cmp);
        let r = QuadratureRule::legendre(n).unwrap();
        for (a, b) in ev.iter().zip(&r.nodes) {
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn split_rule_handles_root_singularity() {
        let (u, w) = split_singular_rule(0.0, -0.5, 64).unwrap();
        // ∫ (1-u)^{-1/2} u^{1/2} du = B(3/2, 1/2) = π/2
        let got: f64 = u.iter().zip(&w).map(|(u, w)| w * u.sqrt()).sum();
        assert!((got - std::f64::consts::FRAC_PI_2).abs() < 1e-13);
        let (u, w) = split_singular_rule(-0.6, 0.4, 64).unwrap();
        let got: f64 = u.iter().zip(&w).map(|(u, w)| w * u.powf(0.5)).sum();
        let exact = beta(0.9, 1.4);
        assert!((got - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(QuadratureRule::jacobi(-1.0, 0.0, 4).is_err());
        assert!(QuadratureRule::jacobi(0.0, 0.0, 0).is_err());
    }
}
