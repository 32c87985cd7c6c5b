//! One-variable expression language used to supply f, g, h, p, q, φ, ψ as text.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' unary)?
//! atom   := number | 'x' | name '(' expr (',' expr)* ')' | '(' expr ')'
//! number := digits ['.' digits] [('e' | 'E') ['+' | '-'] digits]
//! name   := exp | log | sin | cos | abs | sqrt | pow | min | max
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-x^2`
//! is `-(x^2)` and `2^-x` is `2^(-x)`.

mod parser;
mod printer;

use std::fmt;

use thiserror::Error;

pub use parser::parse;

/// Text of the grammar, reproduced in the CLI help.
pub const GRAMMAR: &str = "\
expr   := term (('+' | '-') term)*
term   := unary (('*' | '/') unary)*
unary  := '-' unary | power
power  := atom ('^' unary)?
atom   := number | 'x' | name '(' expr (',' expr)* ')' | '(' expr ')'
number := digits ['.' digits] [('e' | 'E') ['+' | '-'] digits]
name   := exp | log | sin | cos | abs | sqrt   (one argument)
        | pow | min | max                      (two arguments)
'^' is right-associative and binds tighter than unary minus.";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Exp,
    Log,
    Sin,
    Cos,
    Abs,
    Sqrt,
    Pow,
    Min,
    Max,
}

impl Func {
    pub const ALL: [Func; 9] = [
        Func::Exp,
        Func::Log,
        Func::Sin,
        Func::Cos,
        Func::Abs,
        Func::Sqrt,
        Func::Pow,
        Func::Min,
        Func::Max,
    ];

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Abs => "abs",
            Func::Sqrt => "sqrt",
            Func::Pow => "pow",
            Func::Min => "min",
            Func::Max => "max",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Pow | Func::Min | Func::Max => 2,
            _ => 1,
        }
    }
}

/// Expression tree. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Var,
    Neg(Box<Expr>),
    Binary { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr> },
    Call { func: Func, args: Vec<Expr> },
}

/// Syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: expected {expected}, found {found}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

/// Evaluation failure, carrying the offending sub-expression.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("cannot evaluate `{expr}` at x = {x}: {reason}")]
pub struct EvalError {
    pub expr: String,
    pub x: f64,
    pub reason: String,
}

impl EvalError {
    pub fn new(expr: impl Into<String>, x: f64, reason: impl Into<String>) -> Self {
        EvalError {
            expr: expr.into(),
            x,
            reason: reason.into(),
        }
    }
}

impl Expr {
    pub fn constant(c: f64) -> Expr {
        Expr::Const(c)
    }

    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        }
    }

    pub fn call(func: Func, args: Vec<Expr>) -> Expr {
        debug_assert_eq!(args.len(), func.arity());
        Expr::Call { func, args }
    }

    pub fn eval(&self, x: f64) -> Result<f64, EvalError> {
        let v = match self {
            Expr::Const(c) => return Ok(*c),
            Expr::Var => return Ok(x),
            Expr::Neg(e) => -e.eval(x)?,
            Expr::Binary { op, lhs, rhs } => {
                let a = lhs.eval(x)?;
                let b = rhs.eval(x)?;
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b == 0.0 {
                            return Err(EvalError::new(self.to_string(), x, "division by zero"));
                        }
                        a / b
                    }
                    BinOp::Pow => a.powf(b),
                }
            }
            Expr::Call { func, args } => {
                let a = args[0].eval(x)?;
                match func {
                    Func::Exp => a.exp(),
                    Func::Log => {
                        if a <= 0.0 {
                            return Err(EvalError::new(
                                self.to_string(),
                                x,
                                format!("log of non-positive value {a}"),
                            ));
                        }
                        a.ln()
                    }
                    Func::Sin => a.sin(),
                    Func::Cos => a.cos(),
                    Func::Abs => a.abs(),
                    Func::Sqrt => {
                        if a < 0.0 {
                            return Err(EvalError::new(
                                self.to_string(),
                                x,
                                format!("sqrt of negative value {a}"),
                            ));
                        }
                        a.sqrt()
                    }
                    Func::Pow => a.powf(args[1].eval(x)?),
                    Func::Min => a.min(args[1].eval(x)?),
                    Func::Max => a.max(args[1].eval(x)?),
                }
            }
        };
        if !v.is_finite() {
            return Err(EvalError::new(self.to_string(), x, format!("result {v} is not finite")));
        }
        Ok(v)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        printer::write_expr(self, f)
    }
}

impl std::str::FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str, x: f64) -> f64 {
        parse(s).unwrap().eval(x).unwrap()
    }

    #[test]
    fn basic_examples() {
        assert_eq!(ev("x^2+1", 2.0), 5.0);
        assert_eq!(ev("2+3*x", 1.0), 5.0);
        assert_eq!(ev("exp(0)", 17.0), 1.0);
        assert_eq!(ev("abs(x)", -3.0), 3.0);
        assert_eq!(ev("x^0.5", 4.0), 2.0);
    }

    #[test]
    fn unclosed_paren_offset() {
        let err = parse("log(").unwrap_err();
        assert_eq!(err.offset, 4);
    }

    #[test]
    fn golden_table() {
        let e = std::f64::consts::E;
        let cases: [(&str, f64, f64); 20] = [
            ("1", 0.0, 1.0),
            ("x", 2.5, 2.5),
            ("-x", 2.5, -2.5),
            ("-x^2", 3.0, -9.0),
            ("2^-x", 1.0, 0.5),
            ("2^3^2", 0.0, 512.0),
            ("(2^3)^2", 0.0, 64.0),
            ("10-4-3", 0.0, 3.0),
            ("12/3/2", 0.0, 2.0),
            ("2*(x+1)", 4.0, 10.0),
            ("--x", 7.0, 7.0),
            ("1.5e2 + 2.5E-1", 0.0, 150.25),
            (".5*x", 4.0, 2.0),
            ("log(exp(x))", 1.25, 1.25),
            ("exp(1)", 0.0, e),
            ("sqrt(x)*sqrt(x)", 9.0, 9.0),
            ("pow(x, 3)", -2.0, -8.0),
            ("min(x, 1) + max(x, 1)", 0.25, 1.25),
            ("sin(x)^2 + cos(x)^2", 0.7, 1.0),
            ("abs(x - 3) / 2", 1.0, 1.0),
        ];
        for (s, x, want) in cases {
            let got = ev(s, x);
            assert!((got - want).abs() <= 1e-14 * want.abs().max(1.0), "{s}: {got} vs {want}");
        }
    }

    #[test]
    fn eval_errors_name_subexpression() {
        let ast = parse("1 + log(x)").unwrap();
        let err = ast.eval(-1.0).unwrap_err();
        assert_eq!(err.expr, "log(x)");
        assert!(parse("sqrt(x)").unwrap().eval(-4.0).is_err());
        let err = parse("1/(x-1)").unwrap().eval(1.0).unwrap_err();
        assert!(err.reason.contains("division"));
        assert!(parse("x^0.5").unwrap().eval(-1.0).is_err());
        assert!(parse("exp(x)").unwrap().eval(1000.0).is_err());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x +", "2 3", "foo(x)", "sin(x, 2)", "pow(x)", "1e", "x)", "(x", "y", "#"] {
            assert!(parse(bad).is_err(), "{bad:?} should not parse");
        }
        let err = parse("foo(x)").unwrap_err();
        assert_eq!(err.offset, 0);
        let err = parse("2 3").unwrap_err();
        assert_eq!(err.offset, 2);
    }
}
