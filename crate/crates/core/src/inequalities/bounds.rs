use super::context::{CheckerContext, Run, Side};
use super::{young_exponents, Direction, InequalityReport};
use crate::functional::ScalarFunction;

/// `A(pφ₂)B(qf) + A(pf)B(qφ₁) ≥ A(pφ₂)B(qφ₁) + A(pf)B(qf)` for `φ₁ ≤ f ≤ φ₂`.
pub fn check_variable_bounds(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    phi1: &ScalarFunction,
    phi2: &ScalarFunction,
) -> InequalityReport {
    let mut run = Run::new(ctx, "variable-bounds", &[("f", f), ("phi1", phi1), ("phi2", phi2)], &[]);
    run.sample(|run| {
        let (fv, l, u) = (run.values(f)?, run.values(phi1)?, run.values(phi2)?);
        run.between("phi1 <= f <= phi2", Some(&l), &fv, Some(&u));
        Ok(())
    });
    run.finish(Direction::Geq, || {
        // columns: 1 f, 2 φ₁, 3 φ₂
        let a = Side::new(ctx.a, &ctx.p, &[f, phi1, phi2])?;
        let b = Side::new(ctx.b, &ctx.q, &[f, phi1, phi2])?;
        let lhs = a.ap(&[3]) * b.ap(&[1]) + a.ap(&[1]) * b.ap(&[2]);
        let rhs = a.ap(&[3]) * b.ap(&[2]) + a.ap(&[1]) * b.ap(&[1]);
        Ok((lhs, rhs))
    })
}

/// `M A(p)B(qf) + m A(pf)B(q) ≥ Mm A(p)B(q) + A(pf)B(qf)` for `m ≤ f ≤ M`.
pub fn check_constant_bounds(ctx: &CheckerContext, f: &ScalarFunction, m: f64, big_m: f64) -> InequalityReport {
    let mut run = Run::new(ctx, "constant-bounds", &[("f", f)], &[("m", m), ("M", big_m)]);
    run.exact("m <= M", m <= big_m, big_m - m);
    run.sample(|run| {
        let fv = run.values(f)?;
        let (l, u) = (vec![m; fv.len()], vec![big_m; fv.len()]);
        run.between("m <= f <= M", Some(&l), &fv, Some(&u));
        Ok(())
    });
    run.finish(Direction::Geq, || {
        let a = Side::new(ctx.a, &ctx.p, &[f])?;
        let b = Side::new(ctx.b, &ctx.q, &[f])?;
        let lhs = big_m * a.ap(&[]) * b.ap(&[1]) + m * a.ap(&[1]) * b.ap(&[]);
        let rhs = big_m * m * a.ap(&[]) * b.ap(&[]) + a.ap(&[1]) * b.ap(&[1]);
        Ok((lhs, rhs))
    })
}

/// Variable bounds `φ ∓ M` written out, for `|f - φ| < M`.
pub fn check_near_function(ctx: &CheckerContext, f: &ScalarFunction, phi: &ScalarFunction, m: f64) -> InequalityReport {
    let mut run = Run::new(ctx, "near-function", &[("f", f), ("phi", phi)], &[("M", m)]);
    run.exact("M > 0", m > 0.0, m);
    run.sample(|run| {
        let (fv, pv) = (run.values(f)?, run.values(phi)?);
        // strict bound checked as |f - φ| ≤ M - tol
        let tol = run.tol();
        let margins: Vec<f64> = fv.iter().zip(&pv).map(|(a, b)| m - tol - (a - b).abs()).collect();
        let c = super::context::pointwise("|f - phi| < M", margins, 0.0);
        run.hyp(c);
        Ok(())
    });
    run.finish(Direction::Geq, || {
        // columns: 1 f, 2 φ
        let a = Side::new(ctx.a, &ctx.p, &[f, phi])?;
        let b = Side::new(ctx.b, &ctx.q, &[f, phi])?;
        let (ap, bq) = (a.ap(&[]), b.ap(&[]));
        let lhs = a.ap(&[2]) * b.ap(&[1])
            + a.ap(&[1]) * b.ap(&[2])
            + m * ap * b.ap(&[1])
            + m * a.ap(&[2]) * bq
            + m * m * ap * bq;
        let rhs = a.ap(&[2]) * b.ap(&[2]) + m * ap * b.ap(&[2]) + m * a.ap(&[1]) * bq + a.ap(&[1]) * b.ap(&[1]);
        Ok((lhs, rhs))
    })
}

const FOUR: [(&str, Direction); 4] = [
    ("four-bounds-1", Direction::Geq),
    ("four-bounds-2", Direction::Leq),
    ("four-bounds-3", Direction::Leq),
    ("four-bounds-4", Direction::Geq),
];

const FOUR_CONST: [(&str, Direction); 4] = [
    ("four-const-bounds-1", Direction::Geq),
    ("four-const-bounds-2", Direction::Leq),
    ("four-const-bounds-3", Direction::Leq),
    ("four-const-bounds-4", Direction::Geq),
];

/// The four inequalities for `φ₁ ≤ f ≤ φ₂`, `ψ₁ ≤ g ≤ ψ₂`.
#[allow(clippy::too_many_arguments)]
pub fn check_four_bounds(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    g: &ScalarFunction,
    phi1: &ScalarFunction,
    phi2: &ScalarFunction,
    psi1: &ScalarFunction,
    psi2: &ScalarFunction,
) -> Vec<InequalityReport> {
    let fns = [("f", f), ("g", g), ("phi1", phi1), ("phi2", phi2), ("psi1", psi1), ("psi2", psi2)];
    let mut run = Run::new(ctx, "four-bounds", &fns, &[]);
    run.sample(|run| {
        let (fv, gv) = (run.values(f)?, run.values(g)?);
        let (l1, u1, l2, u2) = (run.values(phi1)?, run.values(phi2)?, run.values(psi1)?, run.values(psi2)?);
        run.between("phi1 <= f <= phi2", Some(&l1), &fv, Some(&u1));
        run.between("psi1 <= g <= psi2", Some(&l2), &gv, Some(&u2));
        Ok(())
    });
    run.finish_many(&FOUR, || {
        // columns: 1 f, 2 g, 3 φ₁, 4 φ₂, 5 ψ₁, 6 ψ₂
        let fs = [f, g, phi1, phi2, psi1, psi2];
        let a = Side::new(ctx.a, &ctx.p, &fs)?;
        let b = Side::new(ctx.b, &ctx.q, &fs)?;
        let phi = [a.ap(&[3]), a.ap(&[4])];
        let psi = [b.ap(&[5]), b.ap(&[6])];
        let (af, bg) = (a.ap(&[1]), b.ap(&[2]));
        // (φ₁,ψ₁), (φ₁,ψ₂), (φ₂,ψ₁), (φ₂,ψ₂)
        let mut out = Vec::with_capacity(4);
        for ph in phi {
            for ps in psi {
                out.push((ph * ps + af * bg, ph * bg + af * ps));
            }
        }
        Ok(out)
    })
}

/// The four inequalities for `m ≤ f ≤ M`, `n ≤ g ≤ N`.
#[allow(clippy::too_many_arguments)]
pub fn check_four_const_bounds(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    g: &ScalarFunction,
    m: f64,
    big_m: f64,
    n: f64,
    big_n: f64,
) -> Vec<InequalityReport> {
    let mut run = Run::new(
        ctx,
        "four-const-bounds",
        &[("f", f), ("g", g)],
        &[("m", m), ("M", big_m), ("n", n), ("N", big_n)],
    );
    run.exact("m <= M", m <= big_m, big_m - m);
    run.exact("n <= N", n <= big_n, big_n - n);
    run.sample(|run| {
        let (fv, gv) = (run.values(f)?, run.values(g)?);
        let len = fv.len();
        run.between("m <= f <= M", Some(&vec![m; len]), &fv, Some(&vec![big_m; len]));
        run.between("n <= g <= N", Some(&vec![n; len]), &gv, Some(&vec![big_n; len]));
        Ok(())
    });
    run.finish_many(&FOUR_CONST, || {
        let a = Side::new(ctx.a, &ctx.p, &[f, g])?;
        let b = Side::new(ctx.b, &ctx.q, &[f, g])?;
        let (ap, bq, af, bg) = (a.ap(&[]), b.ap(&[]), a.ap(&[1]), b.ap(&[2]));
        let mut out = Vec::with_capacity(4);
        for c1 in [m, big_m] {
            for c2 in [n, big_n] {
                out.push((c1 * c2 * ap * bq + af * bg, c1 * ap * bg + c2 * af * bq));
            }
        }
        Ok(out)
    })
}

fn clamped_pow(base: f64, e: f64) -> f64 {
    base.max(0.0).powf(e)
}

/// Young-inequality bound for `φ₁ ≤ f ≤ φ₂` with conjugate exponents θ₁, θ₂.
pub fn check_young_bounds(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    phi1: &ScalarFunction,
    phi2: &ScalarFunction,
    theta1: f64,
    theta2: f64,
) -> InequalityReport {
    let mut run = Run::new(
        ctx,
        "young-bounds",
        &[("f", f), ("phi1", phi1), ("phi2", phi2)],
        &[("theta1", theta1), ("theta2", theta2)],
    );
    let gap = 1.0 / theta1 + 1.0 / theta2 - 1.0;
    run.exact("theta1, theta2 conjugate", young_exponents(theta1, theta2).is_ok(), -gap.abs());
    run.sample(|run| {
        let (fv, l, u) = (run.values(f)?, run.values(phi1)?, run.values(phi2)?);
        run.between("phi1 <= f <= phi2", Some(&l), &fv, Some(&u));
        Ok(())
    });
    run.finish(Direction::Geq, || {
        // columns: 1 f, 2 φ₁, 3 φ₂, then (φ₂ - f)^θ₁ and (f - φ₁)^θ₂
        let mut a = Side::new(ctx.a, &ctx.p, &[f, phi1, phi2])?;
        let mut b = Side::new(ctx.b, &ctx.q, &[f, phi1, phi2])?;
        let up = a.derive(|r| clamped_pow(r[3] - r[1], theta1));
        let down = b.derive(|r| clamped_pow(r[1] - r[2], theta2));
        let lhs = b.ap(&[]) * a.ap(&[up]) / theta1
            + a.ap(&[]) * b.ap(&[down]) / theta2
            + a.ap(&[3]) * b.ap(&[2])
            + a.ap(&[1]) * b.ap(&[1]);
        let rhs = a.ap(&[3]) * b.ap(&[1]) + a.ap(&[1]) * b.ap(&[2]);
        Ok((lhs, rhs))
    })
}

/// `(M+m)²A(p)B(q) + A(pf²)B(q) + 2A(pf)B(qf) + A(p)B(qf²) ≥ 2(M+m)[A(p)B(qf) + A(pf)B(q)]`.
pub fn check_young_square(ctx: &CheckerContext, f: &ScalarFunction, m: f64, big_m: f64) -> InequalityReport {
    let mut run = Run::new(ctx, "young-square", &[("f", f)], &[("m", m), ("M", big_m)]);
    run.note("normalized display: m, n read as m, M");
    run.exact("m <= M", m <= big_m, big_m - m);
    run.sample(|run| {
        let fv = run.values(f)?;
        let len = fv.len();
        run.between("m <= f <= M", Some(&vec![m; len]), &fv, Some(&vec![big_m; len]));
        Ok(())
    });
    run.finish(Direction::Geq, || {
        let a = Side::new(ctx.a, &ctx.p, &[f])?;
        let b = Side::new(ctx.b, &ctx.q, &[f])?;
        let (ap, bq) = (a.ap(&[]), b.ap(&[]));
        let s = big_m + m;
        let lhs = s * s * ap * bq + a.ap(&[1, 1]) * bq + 2.0 * a.ap(&[1]) * b.ap(&[1]) + ap * b.ap(&[1, 1]);
        let rhs = 2.0 * s * (ap * b.ap(&[1]) + a.ap(&[1]) * bq);
        Ok((lhs, rhs))
    })
}

const YOUNG_FOUR: [(&str, Direction); 4] = [
    ("young-four-1", Direction::Geq),
    ("young-four-2", Direction::Geq),
    ("young-four-3", Direction::Geq),
    ("young-four-4", Direction::Geq),
];

/// The four Young bounds on the gaps `φ₂ - f`, `f - φ₁` against `ψ₂ - g`, `g - ψ₁`.
#[allow(clippy::too_many_arguments)]
pub fn check_young_four(
    ctx: &CheckerContext,
    f: &ScalarFunction,
    g: &ScalarFunction,
    phi1: &ScalarFunction,
    phi2: &ScalarFunction,
    psi1: &ScalarFunction,
    psi2: &ScalarFunction,
    theta1: f64,
    theta2: f64,
) -> Vec<InequalityReport> {
    let fns = [("f", f), ("g", g), ("phi1", phi1), ("phi2", phi2), ("psi1", psi1), ("psi2", psi2)];
    let mut run = Run::new(ctx, "young-four", &fns, &[("theta1", theta1), ("theta2", theta2)]);
    let gap = 1.0 / theta1 + 1.0 / theta2 - 1.0;
    run.exact("theta1, theta2 conjugate", young_exponents(theta1, theta2).is_ok(), -gap.abs());
    run.sample(|run| {
        let (fv, gv) = (run.values(f)?, run.values(g)?);
        let (l1, u1, l2, u2) = (run.values(phi1)?, run.values(phi2)?, run.values(psi1)?, run.values(psi2)?);
        run.between("phi1 <= f <= phi2", Some(&l1), &fv, Some(&u1));
        run.between("psi1 <= g <= psi2", Some(&l2), &gv, Some(&u2));
        Ok(())
    });
    run.finish_many(&YOUNG_FOUR, || {
        // columns: 1 f, 2 g, 3 φ₁, 4 φ₂, 5 ψ₁, 6 ψ₂
        let fs = [f, g, phi1, phi2, psi1, psi2];
        let mut a = Side::new(ctx.a, &ctx.p, &fs)?;
        let mut b = Side::new(ctx.b, &ctx.q, &fs)?;
        let gaps_a = [a.derive(|r| r[4] - r[1]), a.derive(|r| r[1] - r[3])];
        let pows_a = [
            a.derive(|r| clamped_pow(r[4] - r[1], theta1)),
            a.derive(|r| clamped_pow(r[1] - r[3], theta1)),
        ];
        let gaps_b = [b.derive(|r| r[6] - r[2]), b.derive(|r| r[2] - r[5])];
        let pows_b = [
            b.derive(|r| clamped_pow(r[6] - r[2], theta2)),
            b.derive(|r| clamped_pow(r[2] - r[5], theta2)),
        ];
        let (ap, bq) = (a.ap(&[]), b.ap(&[]));
        let mut out = Vec::with_capacity(4);
        for i in 0..2 {
            for j in 0..2 {
                let lhs = a.ap(&[pows_a[i]]) * bq / theta1 + ap * b.ap(&[pows_b[j]]) / theta2;
                out.push((lhs, a.ap(&[gaps_a[i]]) * b.ap(&[gaps_b[j]])));
            }
        }
        Ok(out)
    })
}
