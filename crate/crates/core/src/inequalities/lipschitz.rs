use super::context::{CheckerContext, Run, Side};
use super::{Direction, InequalityReport, Order};
use crate::error::Result;
use crate::functional::{tensor_apply, tensor_dot, ScalarFunction, ToleranceSpec};
use crate::operators::build_hadamard;
use crate::special::{gamma, lower_incomplete_gamma};

/// `A(pfg)B(q) + A(p)B(qfg)` against `A(pf)B(qg) + A(pg)B(qf)`; the relation
/// reverses for asynchronous f, g.
pub fn check_chebyshev_two(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    g: &ScalarFunction,
    order: Order,
) -> InequalityReport {
    let mut run = Run::new(ctx, "chebyshev-two", &[("f", f), ("g", g)], &[]);
    run.note(&format!("ordering: {}", order.name()));
    run.sample(|run| {
        let (fv, gv) = (run.values(f)?, run.values(g)?);
        run.ordered(&format!("f, g {}", order.name()), &fv, &gv, order.sign());
        Ok(())
    });
    run.finish(order.direction(), || {
        let a = Side::new(ctx.a, &ctx.p, &[f, g])?;
        let b = Side::new(ctx.b, &ctx.q, &[f, g])?;
        let lhs = a.ap(&[1, 2]) * b.ap(&[]) + a.ap(&[]) * b.ap(&[1, 2]);
        let rhs = a.ap(&[1]) * b.ap(&[2]) + a.ap(&[2]) * b.ap(&[1]);
        Ok((lhs, rhs))
    })
}

/// T from sides sampled as `[w, f, g]`.
fn t_of(a: &Side, b: &Side, f: usize, g: usize) -> f64 {
    b.ap(&[]) * a.ap(&[f, g]) + a.ap(&[]) * b.ap(&[f, g]) - a.ap(&[f]) * b.ap(&[g]) - a.ap(&[g]) * b.ap(&[f])
}

/// `|T(f, g)| ≤ M₁M₂·σ·T(h₁, h₂)` for `f` M₁-h₁-Lipschitz, `g` M₂-h₂-Lipschitz,
/// with `σ = -1` when h₁, h₂ are oppositely ordered (so the bound is non-negative).
#[allow(clippy::too_many_arguments)]
pub fn check_lipschitz_pair(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    g: &ScalarFunction,
    m1: f64,
    h1: &ScalarFunction,
    m2: f64,
    h2: &ScalarFunction,
    h_order: Order,
) -> InequalityReport {
    let mut run = Run::new(
        ctx,
        "lipschitz-pair",
        &[("f", f), ("g", g), ("h1", h1), ("h2", h2)],
        &[("M1", m1), ("M2", m2)],
    );
    run.note(&format!("h1, h2 ordering: {}", h_order.name()));
    if h_order == Order::Asynchronous {
        run.note("oppositely ordered h: bound written as -M1 M2 T(h1, h2)");
    }
    run.exact("M1, M2 >= 0", m1 >= 0.0 && m2 >= 0.0, m1.min(m2));
    run.sample(|run| {
        let (fv, gv, h1v, h2v) = (run.values(f)?, run.values(g)?, run.values(h1)?, run.values(h2)?);
        run.lipschitz("f is M1-h1-Lipschitz", &fv, m1, &h1v);
        run.lipschitz("g is M2-h2-Lipschitz", &gv, m2, &h2v);
        run.ordered(&format!("h1, h2 {}", h_order.name()), &h1v, &h2v, h_order.sign());
        Ok(())
    });
    run.finish(Direction::Leq, || {
        let a = Side::new(ctx.a, &ctx.p, &[f, g, h1, h2])?;
        let b = Side::new(ctx.b, &ctx.q, &[f, g, h1, h2])?;
        Ok((t_of(&a, &b, 1, 2).abs(), m1 * m2 * h_order.sign() * t_of(&a, &b, 3, 4)))
    })
}

/// `|T(f, g)| ≤ M(A(pg²)B(q) - 2A(pg)B(qg) + A(p)B(qg²))` for f M-g-Lipschitz.
pub fn check_m_g_lipschitz(ctx: &CheckerContext, f: &ScalarFunction, g: &ScalarFunction, m: f64) -> InequalityReport {
    let mut run = Run::new(ctx, "m-g-lipschitz", &[("f", f), ("g", g)], &[("M", m)]);
    run.note("normalized display: B(qfh) read as B(qfg)");
    run.exact("M >= 0", m >= 0.0, m);
    run.sample(|run| {
        let (fv, gv) = (run.values(f)?, run.values(g)?);
        run.lipschitz("f is M-g-Lipschitz", &fv, m, &gv);
        Ok(())
    });
    run.finish(Direction::Leq, || {
        let a = Side::new(ctx.a, &ctx.p, &[f, g])?;
        let b = Side::new(ctx.b, &ctx.q, &[f, g])?;
        let quad = a.ap(&[2, 2]) * b.ap(&[]) - 2.0 * a.ap(&[2]) * b.ap(&[2]) + a.ap(&[]) * b.ap(&[2, 2]);
        Ok((t_of(&a, &b, 1, 2).abs(), m * quad))
    })
}

/// `|T(f, g)| ≤ H₁H₂·B_yA_x(p(x)q(y)|x - y|^{r+s})` for r-, s-Hölder f, g.
#[allow(clippy::too_many_arguments)]
pub fn check_holder_pair(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    g: &ScalarFunction,
    h1: f64,
    h2: f64,
    r: f64,
    s: f64,
) -> InequalityReport {
    let mut run = Run::new(
        ctx,
        "holder-pair",
        &[("f", f), ("g", g)],
        &[("H1", h1), ("H2", h2), ("r", r), ("s", s)],
    );
    run.exact("H1, H2 > 0", h1 > 0.0 && h2 > 0.0, h1.min(h2));
    run.exact("r, s in (0, 1]", r > 0.0 && r <= 1.0 && s > 0.0 && s <= 1.0, r.min(s).min(1.0 - r.max(s)));
    run.sample(|run| {
        let (fv, gv) = (run.values(f)?, run.values(g)?);
        run.holder("f is r-Hoelder with H1", &fv, h1, r);
        run.holder("g is s-Hoelder with H2", &gv, h2, s);
        Ok(())
    });
    run.finish(Direction::Leq, || {
        let a = Side::new(ctx.a, &ctx.p, &[f, g])?;
        let b = Side::new(ctx.b, &ctx.q, &[f, g])?;
        let (xa, xb) = (ctx.a.nodes(), ctx.b.nodes());
        let (pa, qb) = (a.col(0), b.col(0));
        let e = r + s;
        let factor = tensor_dot(ctx.a, ctx.b, |i, j| pa[i] * qb[j] * (xa[i] - xb[j]).abs().powf(e));
        Ok((t_of(&a, &b, 1, 2).abs(), h1 * h2 * factor))
    })
}

/// Closed-form bound of the Hadamard example:
/// `M₁M₂ t²/(Γ(α)Γ(β)) [log^α t γ(β, 2 log t)/(2^β α) + log^β t γ(α, 2 log t)/(2^α β)
///  - 2 γ(α, log t) γ(β, log t)]`.
pub fn hadamard_example_rhs(alpha: f64, beta: f64, t: f64, m1: f64, m2: f64) -> Result<f64> {
    let l = t.ln();
    let bracket = l.powf(alpha) * lower_incomplete_gamma(beta, 2.0 * l)? / (2f64.powf(beta) * alpha)
        + l.powf(beta) * lower_incomplete_gamma(alpha, 2.0 * l)? / (2f64.powf(alpha) * beta)
        - 2.0 * lower_incomplete_gamma(alpha, l)? * lower_incomplete_gamma(beta, l)?;
    Ok(m1 * m2 * t * t / (gamma(alpha)? * gamma(beta)?) * bracket)
}

/// `B_yA_x((x - y)²)` with A, B the Hadamard operators of orders α, β at `t`;
/// the bound above with M₁ = M₂ = 1 as a double node sum.
pub fn hadamard_example_oracle(alpha: f64, beta: f64, t: f64, n: usize) -> Result<f64> {
    let a = build_hadamard(alpha, t, n)?;
    let b = build_hadamard(beta, t, n)?;
    tensor_apply(&a, &b, |x, y| Ok((x - y) * (x - y)))
}

/// Hadamard operators with `p = q = 1` and `h₁ = h₂ = id`: T(f, g) against
/// the incomplete-gamma bound. `tolerance` defaults to the quadrature default.
#[allow(clippy::too_many_arguments)]
pub fn check_hadamard_example(
    alpha: f64,
    beta: f64,
    t: f64,
    f: &ScalarFunction,
    g: &ScalarFunction,
    m1: f64,
    m2: f64,
    n: usize,
    tolerance: Option<ToleranceSpec>,
) -> Result<InequalityReport> {
    let a = build_hadamard(alpha, t, n)?;
    let b = build_hadamard(beta, t, n)?;
    let mut ctx = CheckerContext::new(&a, &b);
    if let Some(tol) = tolerance {
        ctx = ctx.with_tolerance(tol);
    }
    let mut run = Run::new(
        &ctx,
        "hadamard-example",
        &[("f", f), ("g", g)],
        &[("alpha", alpha), ("beta", beta), ("t", t), ("M1", m1), ("M2", m2)],
    );
    run.exact("M1, M2 >= 0", m1 >= 0.0 && m2 >= 0.0, m1.min(m2));
    run.sample(|run| {
        let (fv, gv) = (run.values(f)?, run.values(g)?);
        let id = run.xs.clone();
        run.lipschitz("f is M1-Lipschitz", &fv, m1, &id);
        run.lipschitz("g is M2-Lipschitz", &gv, m2, &id);
        Ok(())
    });
    Ok(run.finish(Direction::Leq, || {
        let l = t.ln();
        // the displayed left side uses the exact masses HJ^α(1)(t) = log^α t / Γ(α + 1)
        let mass_a = l.powf(alpha) / gamma(alpha + 1.0)?;
        let mass_b = l.powf(beta) / gamma(beta + 1.0)?;
        let one = ScalarFunction::Const(1.0);
        let sa = Side::new(&a, &one, &[f, g])?;
        let sb = Side::new(&b, &one, &[f, g])?;
        let lhs = mass_b * sa.ap(&[1, 2]) + mass_a * sb.ap(&[1, 2])
            - sa.ap(&[1]) * sb.ap(&[2])
            - sa.ap(&[2]) * sb.ap(&[1]);
        Ok((lhs, hadamard_example_rhs(alpha, beta, t, m1, m2)?))
    }))
}
