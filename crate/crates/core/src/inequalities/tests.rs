use super::*;
use crate::chebyshev::chebyshev_difference;
use crate::functional::{FunctionalSpec, ScalarFunction as SF};
use crate::operators::{build_discrete, build_riemann};

fn two() -> FunctionalSpec {
    build_discrete(&[1.0, 2.0], None).unwrap()
}

fn unit(n: usize) -> FunctionalSpec {
    build_riemann(0.0, 1.0, n).unwrap()
}

fn tab(values: &[f64]) -> SF {
    let pts = (1..=values.len()).map(|i| i as f64).collect();
    SF::tabulated(pts, values.to_vec()).unwrap()
}

fn ex(s: &str) -> SF {
    SF::parse(s).unwrap()
}

fn c(v: f64) -> SF {
    SF::Const(v)
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

fn assert_zero_slack(r: &InequalityReport) {
    assert_eq!(r.verdict, Verdict::Holds, "{r:?}");
    assert!(r.slack.abs() <= r.tolerance.abs, "{}: slack {}", r.theorem, r.slack);
}

#[test]
fn chebyshev_two_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    let r = check_chebyshev_two(&ctx, &tab(&[1.0, 2.0]), &tab(&[1.0, 3.0]), Order::Synchronous);
    assert_eq!((r.lhs, r.rhs, r.slack, r.verdict), (28.0, 24.0, 4.0, Verdict::Holds));
    assert_eq!(r.direction, Direction::Geq);

    assert_zero_slack(&check_chebyshev_two(&ctx, &c(3.0), &tab(&[1.0, 3.0]), Order::Synchronous));

    let f = tab(&[1.0, 2.0]);
    let neg = tab(&[-1.0, -2.0]);
    let r = check_chebyshev_two(&ctx, &f, &neg, Order::Asynchronous);
    assert_eq!(r.direction, Direction::Leq);
    assert_eq!(r.verdict, Verdict::Holds);
    assert!(r.slack > 0.0);
    // claiming the wrong ordering is a hypothesis failure, not a violation
    let r = check_chebyshev_two(&ctx, &f, &neg, Order::Synchronous);
    assert_eq!(r.verdict, Verdict::HypothesisFailed);
}

#[test]
fn lipschitz_pair_examples() {
    let a = unit(16);
    let ctx = CheckerContext::new(&a, &a);
    let x = SF::Identity;
    let r = check_lipschitz_pair(&ctx, &x, &x, 1.0, &x, 1.0, &x, Order::Synchronous);
    assert_zero_slack(&r);

    let r = check_lipschitz_pair(&ctx, &ex("sin(x)"), &x, 1.0, &x, 1.0, &x, Order::Synchronous);
    assert_eq!(r.verdict, Verdict::Holds);
    // oracle: T(sin, x) = 2(∫x sin x - ∫sin x ∫x), T(x, x) = 2(1/3 - 1/4)
    let (s1, c1) = (1f64.sin(), 1f64.cos());
    let t_sin = 2.0 * ((s1 - c1) - 0.5 * (1.0 - c1));
    assert!(close(r.lhs, t_sin, 1e-12) && close(r.rhs, 1.0 / 6.0, 1e-12), "{r:?}");

    let r = check_lipschitz_pair(&ctx, &x, &x, 0.1, &x, 1.0, &x, Order::Synchronous);
    assert_eq!(r.verdict, Verdict::HypothesisFailed);
    assert!(r.hypothesis_checks.iter().any(|h| !h.passed && h.name.contains("M1")));

    // oppositely ordered h: the bound is -M1 M2 T(h1, h2) >= 0
    let r = check_lipschitz_pair(&ctx, &x, &ex("-x"), 1.0, &x, 1.0, &ex("-x"), Order::Asynchronous);
    assert_zero_slack(&r);
    assert!(r.rhs > 0.0);
}

#[test]
fn m_g_lipschitz_examples() {
    let a = unit(16);
    let ctx = CheckerContext::new(&a, &a);
    let f = ex("x^2 + x");
    let r = check_m_g_lipschitz(&ctx, &f, &f, 1.0);
    assert_zero_slack(&r);
    assert!(r.notes.iter().any(|n| n.contains("B(qfg)")));

    assert_eq!(check_m_g_lipschitz(&ctx, &c(2.0), &ex("exp(x)"), 0.5).lhs, 0.0);

    let d = build_discrete(&[1.0, 2.0, 3.0], None).unwrap();
    let ctx = CheckerContext::new(&d, &d);
    let (fv, gv) = ([1.0, 2.0, 2.0], [1.0, 2.0, 3.0]);
    let r = check_m_g_lipschitz(&ctx, &tab(&fv), &tab(&gv), 1.0);
    // brute force over the 3×3 pair grid
    let mut t = 0.0;
    let mut q = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            t += (fv[i] - fv[j]) * (gv[i] - gv[j]);
            q += (gv[i] - gv[j]) * (gv[i] - gv[j]);
        }
    }
    assert_eq!(r.verdict, Verdict::Holds);
    assert!(close(r.lhs, t, 1e-14) && close(r.rhs, q, 1e-14), "{r:?} vs {t} {q}");
}

#[test]
fn holder_pair_examples() {
    let a = build_riemann(1.0, 3.0, 12).unwrap();
    let ctx = CheckerContext::new(&a, &a);
    let x = SF::Identity;
    // r = s = 1 makes |x - y|² a polynomial, so the factor is exact
    let r = check_holder_pair(&ctx, &x, &x, 1.0, 1.0, 1.0, 1.0);
    assert_eq!(r.verdict, Verdict::Holds);
    let want = 2.0 * 2f64.powi(4) / (3.0 * 4.0);
    assert!(close(r.rhs, want, 1e-12), "{} vs {want}", r.rhs);
    assert_zero_slack(&r);

    assert_eq!(check_holder_pair(&ctx, &c(1.0), &ex("sqrt(x)"), 1.0, 1.0, 1.0, 0.5).lhs, 0.0);
    let r = check_holder_pair(&ctx, &ex("2*x"), &x, 1.0, 1.0, 1.0, 1.0);
    assert_eq!(r.verdict, Verdict::HypothesisFailed);
    let r = check_holder_pair(&ctx, &x, &x, 1.0, 1.0, 1.5, 1.0);
    assert_eq!(r.verdict, Verdict::HypothesisFailed);
}

#[test]
fn variable_and_constant_bounds() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    let f = tab(&[1.0, 2.0]);
    assert_zero_slack(&check_variable_bounds(&ctx, &f, &f, &f));
    let r = check_variable_bounds(&ctx, &f, &tab(&[0.0, 1.0]), &tab(&[2.0, 3.0]));
    // A(φ₂)B(f) + A(f)B(φ₁) = 5·3 + 3·1 ; A(φ₂)B(φ₁) + A(f)B(f) = 5·1 + 9
    assert_eq!((r.lhs, r.rhs, r.verdict), (18.0, 14.0, Verdict::Holds));

    let r = check_constant_bounds(&ctx, &f, 1.0, 2.0);
    assert_eq!((r.lhs, r.rhs, r.verdict), (18.0, 17.0, Verdict::Holds));
    assert_zero_slack(&check_constant_bounds(&ctx, &c(0.5), 0.5, 0.5));
    assert_eq!(check_constant_bounds(&ctx, &f, 1.5, 2.0).verdict, Verdict::HypothesisFailed);

    let u = unit(8);
    let ctx = CheckerContext::new(&u, &u);
    let r = check_variable_bounds(&ctx, &SF::Identity, &ex("x - 0.1"), &ex("x + 0.1"));
    assert_eq!(r.verdict, Verdict::Holds);
    // exact: slack = B_yA_x((φ₂(x) - x)(y - φ₁(y))) = 0.01
    assert!(close(r.slack, 0.01, 1e-12));
    let r = check_constant_bounds(&ctx, &SF::Identity, 0.0, 1.0);
    // M A(1)B(x) + m A(x)B(1) - Mm - A(x)B(x) = 1/2 - 1/4
    assert!(close(r.slack, 0.25, 1e-13));
}

#[test]
fn near_function_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    let f = tab(&[1.0, 2.0]);
    let r = check_near_function(&ctx, &f, &f, 0.3);
    assert_eq!(r.verdict, Verdict::Holds);
    // with φ = f the slack is B_yA_x(M(M + ...)) = M²·A(1)B(1) by the variable-bounds identity
    assert!(close(r.slack, 0.09 * 4.0, 1e-14));

    let r = check_near_function(&ctx, &f, &tab(&[1.1, 1.9]), 0.2);
    assert_eq!(r.verdict, Verdict::Holds);
    // brute force of the variable-bounds form with φ ∓ M
    let (fv, pv, m) = ([1.0, 2.0], [1.1, 1.9], 0.2);
    let mut s = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            s += (pv[i] + m - fv[i]) * (fv[j] - (pv[j] - m));
        }
    }
    assert!(close(r.slack, s, 1e-13), "{} vs {s}", r.slack);

    assert_eq!(check_near_function(&ctx, &f, &tab(&[1.0, 2.5]), 0.0).verdict, Verdict::HypothesisFailed);
    // the strict bound: |f - φ| = M exactly fails
    assert_eq!(check_near_function(&ctx, &f, &tab(&[1.2, 2.0]), 0.2).verdict, Verdict::HypothesisFailed);
}

#[test]
fn four_bounds_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    let (f, g) = (tab(&[1.0, 2.0]), tab(&[2.0, 3.0]));
    for r in check_four_bounds(&ctx, &f, &g, &f, &f, &g, &g) {
        assert_zero_slack(&r);
    }
    let reports = check_four_bounds(
        &ctx,
        &f,
        &g,
        &tab(&[0.0, 1.0]),
        &tab(&[2.0, 3.0]),
        &tab(&[1.0, 2.0]),
        &tab(&[3.0, 4.0]),
    );
    assert_eq!(reports.len(), 4);
    let dirs: Vec<_> = reports.iter().map(|r| r.direction).collect();
    assert_eq!(dirs, [Direction::Geq, Direction::Leq, Direction::Leq, Direction::Geq]);
    // each slack is (±)A(f - φ)·B(g - ψ): |A(f-φ)| = 2, |B(g-ψ)| = 2
    for r in &reports {
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(close(r.slack, 4.0, 1e-14), "{r:?}");
    }

    let u = unit(12);
    let ctx = CheckerContext::new(&u, &u);
    let x2 = ex("x^2");
    for r in check_four_bounds(&ctx, &SF::Identity, &x2, &ex("x-0.2"), &ex("x+0.2"), &ex("x^2-0.2"), &ex("x^2+0.2")) {
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(close(r.slack, 0.04, 1e-12));
    }
}

#[test]
fn four_const_bounds_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    for r in check_four_const_bounds(&ctx, &c(1.5), &c(2.5), 1.5, 1.5, 2.5, 2.5) {
        assert_zero_slack(&r);
    }
    let (f, g) = (tab(&[1.0, 2.0]), tab(&[2.0, 3.0]));
    let reports = check_four_const_bounds(&ctx, &f, &g, 1.0, 2.0, 2.0, 3.0);
    // slacks: A(f-m)B(g-n) = 1·1, A(f-m)B(N-g) = 1·1, ...
    for r in &reports {
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(close(r.slack, 1.0, 1e-14), "{r:?}");
    }
    let u = unit(8);
    let ctx = CheckerContext::new(&u, &u);
    let slacks: Vec<f64> = check_four_const_bounds(&ctx, &SF::Identity, &ex("x^2"), 0.0, 1.0, 0.0, 1.0)
        .iter()
        .map(|r| r.slack)
        .collect();
    // A(x)B(x²), A(x)B(1-x²), A(1-x)B(x²), A(1-x)B(1-x²)
    let want = [1.0 / 6.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 3.0];
    for (s, w) in slacks.iter().zip(want) {
        assert!(close(*s, w, 1e-13), "{s} vs {w}");
    }
    assert_eq!(
        check_four_const_bounds(&ctx, &SF::Identity, &ex("x^2"), 0.0, 1.0, 0.5, 1.0)[0].verdict,
        Verdict::HypothesisFailed
    );
}

#[test]
fn young_bounds_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    let f = tab(&[1.0, 2.0]);
    assert_zero_slack(&check_young_bounds(&ctx, &f, &f, &f, 2.0, 2.0));

    let r = check_young_bounds(&ctx, &f, &tab(&[0.0, 1.0]), &tab(&[2.0, 3.0]), 2.0, 2.0);
    assert_eq!(r.verdict, Verdict::Holds);
    // slack = Σᵢⱼ [aᵢ²/2 + bⱼ²/2 - aᵢbⱼ] with a = φ₂ - f, b = f - φ₁
    let (fv, l, u) = ([1.0, 2.0], [0.0, 1.0], [2.0, 3.0]);
    let mut s = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let (ai, bj) = (u[i] - fv[i], fv[j] - l[j]);
            s += ai * ai / 2.0 + bj * bj / 2.0 - ai * bj;
        }
    }
    assert!(close(r.slack, s, 1e-14), "{} vs {s}", r.slack);

    let u = unit(24);
    let ctx = CheckerContext::new(&u, &u);
    let r = check_young_bounds(&ctx, &SF::Identity, &ex("x-0.3"), &ex("x+0.3"), 3.0, 1.5);
    assert_eq!(r.verdict, Verdict::Holds);
    // constant gaps 0.3: 0.3³/3 + 0.3^1.5/1.5 - 0.3·0.3
    let want = 0.027 / 3.0 + 0.3f64.powf(1.5) / 1.5 - 0.09;
    assert!(close(r.slack, want, 1e-12), "{} vs {want}", r.slack);

    assert_eq!(check_young_bounds(&ctx, &SF::Identity, &ex("x-0.3"), &ex("x+0.3"), 3.0, 2.0).verdict, Verdict::HypothesisFailed);
}

#[test]
fn young_square_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    assert_zero_slack(&check_young_square(&ctx, &c(1.7), 1.7, 1.7));
    let f = tab(&[1.0, 2.0]);
    let r = check_young_square(&ctx, &f, 1.0, 2.0);
    assert_eq!(r.verdict, Verdict::Holds);
    // slack = Σᵢⱼ (M + m - fᵢ - fⱼ)² = 1 + 0 + 0 + 1
    assert!(close(r.slack, 2.0, 1e-14));
    assert!(r.notes.iter().any(|n| n.contains("m, M")));

    let u = unit(8);
    let ctx = CheckerContext::new(&u, &u);
    let r = check_young_square(&ctx, &SF::Identity, 0.0, 1.0);
    // ∫∫(1 - x - y)² = 1/6
    assert!(close(r.slack, 1.0 / 6.0, 1e-13));
}

#[test]
fn young_four_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    let (f, g) = (tab(&[1.0, 2.0]), tab(&[2.0, 3.0]));
    let (l1, u1, l2, u2) = (tab(&[0.0, 1.0]), tab(&[2.0, 3.0]), tab(&[1.0, 2.0]), tab(&[3.0, 4.0]));
    let r = check_young_four(&ctx, &f, &g, &l1, &f, &l2, &g, 2.0, 2.0);
    assert_zero_slack(&r[0]);
    for r in check_young_four(&ctx, &f, &g, &l1, &u1, &l2, &u2, 2.0, 2.0) {
        // all gaps are 1: 4/2 + 4/2 - 2·2
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.slack.abs() < 1e-14);
    }
    let u = unit(12);
    let ctx = CheckerContext::new(&u, &u);
    let reports = check_young_four(
        &ctx,
        &SF::Identity,
        &ex("x^2"),
        &ex("x-0.2"),
        &ex("x+0.2"),
        &ex("x^2-0.2"),
        &ex("x^2+0.2"),
        3.0,
        1.5,
    );
    let want = 0.008 / 3.0 + 0.2f64.powf(1.5) / 1.5 - 0.04;
    for r in reports {
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(close(r.slack, want, 1e-12), "{} vs {want}", r.slack);
    }
}

#[test]
fn triple_positive_weight_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    let (f, g) = (tab(&[1.0, 2.0]), tab(&[1.0, 3.0]));
    let r = check_triple_positive_weight(&ctx, &f, &g, &tab(&[1.0, 1.0]), Order::Synchronous);
    assert_eq!(r.verdict, Verdict::Holds);
    assert!(close(r.slack, 8.0, 1e-14));
    let r = check_triple_positive_weight(&ctx, &f, &g, &tab(&[1.0, 0.0]), Order::Synchronous);
    assert_eq!(r.verdict, Verdict::HypothesisFailed);
    let r = check_triple_positive_weight(&ctx, &f, &tab(&[3.0, 1.0]), &c(2.0), Order::Asynchronous);
    assert_eq!((r.direction, r.verdict), (Direction::Leq, Verdict::Holds));
}

#[test]
fn triple_with_unit_h_is_twice_chebyshev() {
    let a = build_riemann(0.0, 2.0, 10).unwrap();
    let b = build_riemann(0.5, 1.5, 7).unwrap();
    let ctx = CheckerContext::new(&a, &b).with_weights(ex("1 + x"), ex("exp(-x)"));
    let (f, g) = (ex("x^3"), ex("sqrt(x + 1)"));
    let two_fn = check_chebyshev_two(&ctx, &f, &g, Order::Synchronous);
    let three = check_triple_positive_weight(&ctx, &f, &g, &c(1.0), Order::Synchronous);
    assert!(close(three.slack, 2.0 * two_fn.slack, 1e-10), "{} vs {}", three.slack, two_fn.slack);
}

#[test]
fn triple_gruss_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    let (f, g, h) = (tab(&[1.0, 2.0]), tab(&[1.0, 3.0]), tab(&[0.0, 1.0]));
    let r = check_triple_gruss(&ctx, &c(1.0), &g, &h, (1.0, 1.0), (1.0, 3.0), (0.0, 1.0));
    assert_eq!((r.lhs, r.verdict), (0.0, Verdict::Holds));
    let r = check_triple_gruss(&ctx, &f, &g, &h, (1.0, 2.0), (1.0, 3.0), (0.0, 1.0));
    // H(1,2) = H(2,1) = -(1)(2)(1)... |Σ H| over ordered pairs: H(x,y) = -H(y,x), so 0
    assert_eq!(r.verdict, Verdict::Holds);
    assert!(r.lhs.abs() < 1e-14);
    assert_eq!(r.rhs, 2.0 * 4.0);
    assert!(r.notes.iter().any(|n| n.contains("B(qfgh)")));

    let u = unit(12);
    let ctx = CheckerContext::new(&u, &u);
    let r = check_triple_gruss(&ctx, &SF::Identity, &ex("x^2"), &ex("x^3"), (0.0, 1.0), (0.0, 1.0), (0.0, 1.0));
    assert_eq!(r.verdict, Verdict::Holds);
    assert!(close(r.rhs, 1.0, 1e-14));
    let r = check_triple_gruss(&ctx, &SF::Identity, &ex("x^2"), &ex("x^3"), (0.0, 0.5), (0.0, 1.0), (0.0, 1.0));
    assert_eq!(r.verdict, Verdict::HypothesisFailed);
}

#[test]
fn triple_gruss_with_different_weights() {
    // with p ≠ q the expansion no longer cancels and the bound is exercised
    let a = build_discrete(&[1.0, 2.0], Some(&[1.0, 3.0])).unwrap();
    let b = build_discrete(&[1.0, 2.0], Some(&[2.0, 0.5])).unwrap();
    let ctx = CheckerContext::new(&a, &b);
    let (f, g, h) = (tab(&[1.0, 2.0]), tab(&[1.0, 3.0]), tab(&[0.0, 1.0]));
    let r = check_triple_gruss(&ctx, &f, &g, &h, (1.0, 2.0), (1.0, 3.0), (0.0, 1.0));
    // B_yA_x(H): pairs (x=2, y=1) weight 3·2 and (x=1, y=2) weight 1·0.5, H(2,1) = 2
    assert!(close(r.lhs, (6.0 - 0.5) * 2.0, 1e-14), "{r:?}");
    assert_eq!(r.verdict, Verdict::Holds);
}

#[test]
fn triple_lipschitz_examples() {
    let u = unit(16);
    let ctx = CheckerContext::new(&u, &u).with_weights(ex("1 + x"), c(1.0));
    let x = SF::Identity;
    let r = check_triple_lipschitz(&ctx, [&x, &x, &x], &x, [1.0; 3]);
    assert_eq!(r.verdict, Verdict::Holds);
    // H(x, y) = (x - y)³, |B_yA_x(pqH)| ≤ B_yA_x(pq|x-y|³)
    assert!(r.lhs < r.rhs);
    let r = check_triple_lipschitz(&ctx, [&c(2.0), &x, &x], &x, [0.0, 1.0, 1.0]);
    assert_eq!(r.verdict, Verdict::Holds);
    assert!(r.lhs < 1e-14);
    let s = ex("sin(x)");
    let r = check_triple_lipschitz(&ctx, [&s, &s, &s], &x, [1.0; 3]);
    assert_eq!(r.verdict, Verdict::Holds);
    let r = check_triple_lipschitz(&ctx, [&ex("2*x"), &s, &s], &x, [1.0; 3]);
    assert_eq!(r.verdict, Verdict::HypothesisFailed);
}

#[test]
fn three_weights_examples() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a).with_third_weight(c(1.0));
    let r = check_three_weights(&ctx, &c(2.0), &tab(&[1.0, 3.0]), Order::Synchronous);
    assert_zero_slack(&r);

    let (f, g) = (tab(&[1.0, 2.0]), tab(&[1.0, 3.0]));
    let r = check_three_weights(&ctx, &f, &g, Order::Synchronous);
    assert_eq!(r.verdict, Verdict::Holds);
    // three scaled Chebyshev slacks, each 4, times A(·) = 2
    assert!(close(r.slack, 24.0, 1e-14));

    let r = check_three_weights(&ctx, &f, &tab(&[3.0, 1.0]), Order::Asynchronous);
    assert_eq!((r.direction, r.verdict), (Direction::Leq, Verdict::Holds));

    let r = check_three_weights(&CheckerContext::new(&a, &a), &f, &g, Order::Synchronous);
    assert_eq!(r.verdict, Verdict::EvalError);
}

#[test]
fn three_weights_matches_proof_decomposition() {
    let a = build_riemann(0.0, 1.0, 9).unwrap();
    let b = build_discrete(&[0.1, 0.4, 0.8, 0.9], Some(&[0.3, 1.0, 0.2, 0.7])).unwrap();
    let (p, q, r) = (ex("1 + x^2"), ex("2 - x"), ex("exp(x)"));
    let ctx = CheckerContext::new(&a, &b).with_weights(p.clone(), q.clone()).with_third_weight(r.clone());
    let (f, g) = (ex("x^2"), ex("x + sin(x)"));
    let rep = check_three_weights(&ctx, &f, &g, Order::Synchronous);
    let s1 = chebyshev_difference(&a, &b, &q, &r, &f, &g).unwrap();
    let s2 = chebyshev_difference(&a, &b, &p, &r, &f, &g).unwrap();
    let s3 = chebyshev_difference(&a, &b, &p, &q, &f, &g).unwrap();
    let want = a.apply(&p).unwrap() * s1 + a.apply(&q).unwrap() * s2 + a.apply(&r).unwrap() * s3;
    assert_eq!(rep.verdict, Verdict::Holds);
    assert!((rep.slack - want).abs() <= 1e-10 * want.abs(), "{} vs {want}", rep.slack);
}

#[test]
fn hadamard_example_examples() {
    let x = SF::Identity;
    let r = check_hadamard_example(1.5, 0.5, 3.0, &c(2.0), &x, 0.0, 1.0, 64, None).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert!(r.lhs.abs() < 1e-10);

    let e = std::f64::consts::E;
    let r = check_hadamard_example(1.0, 1.0, e, &x, &x, 1.0, 1.0, 64, None).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    // α = β = 1: A(xᵏ) = (eᵏ - 1)/k, mass 1, so T(x, x) = 2((e² - 1)/2 - (e - 1)²)
    let want = 2.0 * ((e * e - 1.0) / 2.0 - (e - 1.0) * (e - 1.0));
    assert!(close(r.rhs, want, 1e-13), "{} vs {want}", r.rhs);
    assert!(close(r.lhs, want, 1e-10));
    let oracle = hadamard_example_oracle(1.0, 1.0, e, 64).unwrap();
    assert!(close(oracle, want, 1e-12));

    for (al, be, t) in [(0.5, 2.0, 1.5), (2.0, 0.5, 5.0), (0.5, 0.5, e)] {
        let rhs = hadamard_example_rhs(al, be, t, 1.0, 1.0).unwrap();
        let oracle = hadamard_example_oracle(al, be, t, 64).unwrap();
        assert!((rhs - oracle).abs() <= 1e-5 * rhs, "({al}, {be}, {t}): {rhs} vs {oracle}");
    }
    let r = check_hadamard_example(1.0, 1.0, e, &ex("3*x"), &x, 1.0, 1.0, 64, None).unwrap();
    assert_eq!(r.verdict, Verdict::HypothesisFailed);
    assert!(check_hadamard_example(1.0, 1.0, 0.5, &x, &x, 1.0, 1.0, 64, None).is_err());
}

#[test]
fn negative_weight_is_a_hypothesis_failure() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a).with_weights(tab(&[1.0, -0.5]), c(1.0));
    let r = check_chebyshev_two(&ctx, &tab(&[1.0, 2.0]), &tab(&[1.0, 3.0]), Order::Synchronous);
    assert_eq!(r.verdict, Verdict::HypothesisFailed);
}

#[test]
fn evaluation_failure_is_reported() {
    let u = unit(8);
    let ctx = CheckerContext::new(&u, &u);
    let r = check_variable_bounds(&ctx, &ex("log(x - 0.5)"), &c(-100.0), &c(100.0));
    assert_eq!(r.verdict, Verdict::EvalError);
    assert!(r.error.is_some());
    assert_eq!((r.lhs, r.rhs, r.slack), (0.0, 0.0, 0.0));
}

#[test]
fn report_json_round_trip() {
    let a = two();
    let ctx = CheckerContext::new(&a, &a);
    let r = check_four_bounds(
        &ctx,
        &tab(&[1.0, 2.0]),
        &tab(&[2.0, 3.0]),
        &tab(&[0.0, 1.0]),
        &tab(&[2.0, 3.0]),
        &tab(&[1.0, 2.0]),
        &tab(&[3.0, 4.0]),
    );
    let s = serde_json::to_string(&r).unwrap();
    let back: Vec<InequalityReport> = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v[1]["verdict"], "HOLDS");
    assert_eq!(v[1]["direction"], "<=");
    assert!(v[0]["tolerance"]["abs"].is_number());
}

#[test]
fn verdict_matches_tolerance_rule() {
    let tol = crate::functional::ToleranceSpec::new(1e-10, 1e-8).unwrap();
    assert_eq!(judge(1.0, 1.0 + 5e-9, Direction::Geq, tol).1, Verdict::Holds);
    assert_eq!(judge(1.0, 1.0 + 2e-8, Direction::Geq, tol).1, Verdict::Violated);
    assert_eq!(judge(3.0, 2.0, Direction::Leq, tol), (-1.0, Verdict::Violated));
}

#[test]
fn bound_spec_validation() {
    let ok = BoundSpec { m: Some(0.0), big_m: Some(1.0), theta1: Some(3.0), theta2: Some(1.5), ..Default::default() };
    assert!(ok.validate().is_ok());
    assert!(BoundSpec { m: Some(2.0), big_m: Some(1.0), ..Default::default() }.validate().is_err());
    assert!(BoundSpec { theta1: Some(2.0), theta2: Some(3.0), ..Default::default() }.validate().is_err());
    assert!(BoundSpec { r: Some(1.2), ..Default::default() }.validate().is_err());
    assert!(BoundSpec { h1: Some(0.0), ..Default::default() }.validate().is_err());
    assert!((conjugate(3.0) - 1.5).abs() < 1e-15);
}

#[test]
fn checker_names_round_trip() {
    for c in Checker::ALL {
        assert_eq!(Checker::from_name(c.name()), Some(c));
        assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.name()));
    }
}
