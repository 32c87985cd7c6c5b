use std::fmt;

use super::Expr;

/// Fully parenthesized rendering that re-parses to an equivalent tree.
pub(super) fn write_expr(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Const(c) if *c < 0.0 || (*c == 0.0 && c.is_sign_negative()) => {
            write!(f, "(-{:?})", -c)
        }
        Expr::Const(c) => write!(f, "{c:?}"),
        Expr::Var => f.write_str("x"),
        Expr::Neg(inner) => {
            f.write_str("(-")?;
            write_expr(inner, f)?;
            f.write_str(")")
        }
        Expr::Binary { op, lhs, rhs } => {
            f.write_str("(")?;
            write_expr(lhs, f)?;
            write!(f, " {} ", op.symbol())?;
            write_expr(rhs, f)?;
            f.write_str(")")
        }
        Expr::Call { func, args } => {
            write!(f, "{}(", func.name())?;
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write_expr(a, f)?;
            }
            f.write_str(")")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse, BinOp, Expr, Func};
    use proptest::prelude::*;

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0.0f64..100.0).prop_map(Expr::Const),
            (-5.0f64..5.0).prop_map(Expr::Const),
            Just(Expr::Var),
        ];
        leaf.prop_recursive(5, 48, 3, |inner| {
            prop_oneof![
                inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
                (
                    prop_oneof![
                        Just(BinOp::Add),
                        Just(BinOp::Sub),
                        Just(BinOp::Mul),
                        Just(BinOp::Div),
                        Just(BinOp::Pow)
                    ],
                    inner.clone(),
                    inner.clone()
                )
                    .prop_map(|(op, l, r)| Expr::binary(op, l, r)),
                (prop::sample::select(Func::ALL.to_vec()), inner.clone(), inner)
                    .prop_map(|(func, a, b)| {
                        let args = if func.arity() == 2 { vec![a, b] } else { vec![a] };
                        Expr::Call { func, args }
                    }),
            ]
        })
    }

    fn same(a: &Result<f64, super::super::EvalError>, b: &Result<f64, super::super::EvalError>) -> bool {
        match (a, b) {
            (Ok(x), Ok(y)) => x == y || (x - y).abs() <= 1e-12 * x.abs().max(y.abs()),
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn print_then_parse_evaluates_identically(e in arb_expr(), seed in 0u64..1000) {
            let text = e.to_string();
            let back = parse(&text).expect("printer output must parse");
            for k in 0..100u64 {
                let x = ((seed * 100 + k) as f64 * 0.618_033_988_75).fract() * 8.0 - 4.0;
                prop_assert!(same(&e.eval(x), &back.eval(x)), "{} at {}", text, x);
            }
        }

        #[test]
        fn parsing_is_total(s in "\\PC{0,64}") {
            let _ = parse(&s);
        }

        #[test]
        fn parsing_is_total_on_grammar_alphabet(s in "[x0-9.eE+*/^(),a-z -]{0,48}") {
            if let Ok(e) = parse(&s) {
                let _ = e.eval(0.5);
            }
        }
    }
}
