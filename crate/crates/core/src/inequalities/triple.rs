use super::context::{CheckerContext, Run, Side};
use super::{Direction, InequalityReport, Order};
use crate::chebyshev::{triple_expansion_sampled, Sampled};
use crate::error::Error;
use crate::functional::{tensor_dot, RealFn, ScalarFunction};

/// Positive-weight h: `A(pfgh)B(q) + A(pfg)B(qh) + A(ph)B(qfg) + A(p)B(qfgh)`
/// against `A(pfh)B(qg) + A(pf)B(qgh) + A(pgh)B(qf) + A(pg)B(qfh)`.
pub fn check_triple_positive_weight(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    g: &ScalarFunction,
    h: &ScalarFunction,
    order: Order,
) -> InequalityReport {
    let mut run = Run::new(ctx, "triple-positive-weight", &[("f", f), ("g", g), ("h", h)], &[]);
    run.note(&format!("ordering: {}", order.name()));
    run.sample(|run| {
        let (fv, gv, hv) = (run.values(f)?, run.values(g)?, run.values(h)?);
        run.ordered(&format!("f, g {}", order.name()), &fv, &gv, order.sign());
        run.positive("h > 0", &hv);
        Ok(())
    });
    run.finish(order.direction(), || {
        // columns: 1 f, 2 g, 3 h
        let a = Side::new(ctx.a, &ctx.p, &[f, g, h])?;
        let b = Side::new(ctx.b, &ctx.q, &[f, g, h])?;
        let lhs = a.ap(&[1, 2, 3]) * b.ap(&[])
            + a.ap(&[1, 2]) * b.ap(&[3])
            + a.ap(&[3]) * b.ap(&[1, 2])
            + a.ap(&[]) * b.ap(&[1, 2, 3]);
        let rhs = a.ap(&[1, 3]) * b.ap(&[2])
            + a.ap(&[1]) * b.ap(&[2, 3])
            + a.ap(&[2, 3]) * b.ap(&[1])
            + a.ap(&[2]) * b.ap(&[1, 3]);
        Ok((lhs, rhs))
    })
}

fn expansion(ctx: &CheckerContext, fs: [&ScalarFunction; 3]) -> crate::error::Result<f64> {
    let sa = Sampled::new(ctx.a, &[&ctx.p as &dyn RealFn, fs[0], fs[1], fs[2]])?;
    let sb = Sampled::new(ctx.b, &[&ctx.q as &dyn RealFn, fs[0], fs[1], fs[2]])?;
    Ok(triple_expansion_sampled(&sa, &sb))
}

/// `|eight-term expansion| ≤ (M-m)(N-n)(K-k)A(p)B(q)` for bounded f, g, h.
#[allow(clippy::too_many_arguments)]
pub fn check_triple_gruss(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    g: &ScalarFunction,
    h: &ScalarFunction,
    (m, big_m): (f64, f64),
    (n, big_n): (f64, f64),
    (k, big_k): (f64, f64),
) -> InequalityReport {
    let mut run = Run::new(
        ctx,
        "triple-gruss",
        &[("f", f), ("g", g), ("h", h)],
        &[("m", m), ("M", big_m), ("n", n), ("N", big_n), ("k", k), ("K", big_k)],
    );
    run.note("normalized display: B(fgh) read as B(qfgh)");
    for (name, lo, hi) in [("m <= M", m, big_m), ("n <= N", n, big_n), ("k <= K", k, big_k)] {
        run.exact(name, lo <= hi, hi - lo);
    }
    run.sample(|run| {
        for (name, func, lo, hi) in [
            ("m <= f <= M", f, m, big_m),
            ("n <= g <= N", g, n, big_n),
            ("k <= h <= K", h, k, big_k),
        ] {
            let v = run.values(func)?;
            let len = v.len();
            run.between(name, Some(&vec![lo; len]), &v, Some(&vec![hi; len]));
        }
        Ok(())
    });
    run.finish(Direction::Leq, || {
        let mass = ctx.a.apply(&ctx.p)? * ctx.b.apply(&ctx.q)?;
        let lhs = expansion(ctx, [f, g, h])?.abs();
        Ok((lhs, (big_m - m) * (big_n - n) * (big_k - k) * mass))
    })
}

/// `|expansion(f₁, f₂, f₃)| ≤ M₁M₂M₃·B_yA_x(p(x)q(y)|g(x) - g(y)|³)` for
/// Mᵢ-g-Lipschitz fᵢ.
pub fn check_triple_lipschitz(
    ctx: &CheckerContext,
    fs: [&ScalarFunction; 3],
    g: &ScalarFunction,
    ms: [f64; 3],
) -> InequalityReport {
    let mut run = Run::new(
        ctx,
        "triple-lipschitz",
        &[("f1", fs[0]), ("f2", fs[1]), ("f3", fs[2]), ("g", g)],
        &[("M1", ms[0]), ("M2", ms[1]), ("M3", ms[2])],
    );
    run.exact("M1, M2, M3 >= 0", ms.iter().all(|&m| m >= 0.0), ms.iter().copied().fold(f64::INFINITY, f64::min));
    run.sample(|run| {
        let gv = run.values(g)?;
        for (i, (f, m)) in fs.iter().zip(ms).enumerate() {
            let fv = run.values(f)?;
            run.lipschitz(&format!("f{} is M{}-g-Lipschitz", i + 1, i + 1), &fv, m, &gv);
        }
        Ok(())
    });
    run.finish(Direction::Leq, || {
        let lhs = expansion(ctx, fs)?.abs();
        let a = Side::new(ctx.a, &ctx.p, &[g])?;
        let b = Side::new(ctx.b, &ctx.q, &[g])?;
        let (pa, ga, qb, gb) = (a.col(0), a.col(1), b.col(0), b.col(1));
        let cube = tensor_dot(ctx.a, ctx.b, |i, j| pa[i] * qb[j] * (ga[i] - gb[j]).abs().powi(3));
        Ok((lhs, ms[0] * ms[1] * ms[2] * cube))
    })
}

/// Three weights p, q, r: the sum of the three weighted Chebyshev inequalities.
pub fn check_three_weights(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    g: &ScalarFunction,
    order: Order,
) -> InequalityReport {
    let one = ScalarFunction::Const(1.0);
    let r = ctx.r.clone();
    let r = r.as_ref().unwrap_or(&one);
    let mut run = Run::new(ctx, "three-weights", &[("f", f), ("g", g)], &[]);
    run.note(&format!("ordering: {}", order.name()));
    if ctx.r.is_none() {
        run.fail(Error::domain("three-weights needs a third weight r"));
    }
    run.sample(|run| {
        let qa = ctx.a.sample(&ctx.q)?;
        let c = super::context::pointwise("q >= 0 on A nodes", qa, 0.0);
        run.hyp(c);
        let (fv, gv) = (run.values(f)?, run.values(g)?);
        run.ordered(&format!("f, g {}", order.name()), &fv, &gv, order.sign());
        Ok(())
    });
    run.finish(order.direction(), || {
        // every side carries columns 1 f, 2 g under its own weight
        let ap = Side::new(ctx.a, &ctx.p, &[f, g])?;
        let aq = Side::new(ctx.a, &ctx.q, &[f, g])?;
        let ar = Side::new(ctx.a, r, &[f, g])?;
        let bq = Side::new(ctx.b, &ctx.q, &[f, g])?;
        let br = Side::new(ctx.b, r, &[f, g])?;
        let (mp, mq, mr) = (ap.ap(&[]), aq.ap(&[]), ar.ap(&[]));
        let (nq, nr) = (bq.ap(&[]), br.ap(&[]));
        let lhs = mp * (2.0 * mq * br.ap(&[1, 2]) + mr * bq.ap(&[1, 2]) + nr * aq.ap(&[1, 2]))
            + ap.ap(&[1, 2]) * (mq * nr + mr * nq);
        let rhs = mp * (aq.ap(&[1]) * br.ap(&[2]) + aq.ap(&[2]) * br.ap(&[1]))
            + mq * (ap.ap(&[1]) * br.ap(&[2]) + ap.ap(&[2]) * br.ap(&[1]))
            + mr * (ap.ap(&[1]) * bq.ap(&[2]) + ap.ap(&[2]) * bq.ap(&[1]));
        Ok((lhs, rhs))
    })
}
