use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use isoineq_core::functional::{FunctionalKind, ScalarFunction, ToleranceSpec};
use isoineq_core::harness::{run_suite, run_trial, SuiteConfig, DEFAULT_KINDS};
use isoineq_core::inequalities::{self as ineq, Checker, CheckerContext, InequalityReport, Order, Verdict};
use isoineq_core::operators::OperatorSpec;
use isoineq_core::Error;

use crate::args::{CheckArgs, Cli, Command, EvalArgs, Format, OpArgs, SuiteArgs, TolArgs};
use crate::output::{report_rows, write_csv, write_json, Document};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or an unparsable expression: exit 2.
    Usage(String),
    /// Domain or constraint error, or a failed write: exit 3.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Domain(format!("cannot write output: {e}"))
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn run(cli: &Cli) -> Result<u8> {
    let (doc, rows) = match &cli.command {
        Command::Eval(a) => (eval(a, cli.seed)?, None),
        Command::Check(a) => {
            let doc = check(a, cli.seed)?;
            let rows = report_rows(&doc.reports);
            (doc, Some(rows))
        }
        Command::Suite(a) => suite(a, cli.seed, cli.format == Format::Csv)?,
    };
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match cli.format {
        Format::Json => write_json(&doc, &mut out)?,
        Format::Csv => {
            let rows = rows.ok_or_else(|| usage("CSV output is available for check and suite"))?;
            write_csv(&rows, &mut out).map_err(|e| CliError::Domain(format!("cannot write CSV: {e}")))?;
        }
    }
    out.flush()?;
    Ok(exit_code(&doc))
}

/// 1 if anything is VIOLATED, else 4 for a failed hypothesis, else 3 for an
/// evaluation error, else 0.
fn exit_code(doc: &Document) -> u8 {
    if let Some(s) = &doc.suite {
        return u8::from(s.totals.violations > 0);
    }
    let has = |v| doc.reports.iter().any(|r| r.verdict == v);
    if has(Verdict::Violated) {
        1
    } else if has(Verdict::HypothesisFailed) {
        4
    } else if has(Verdict::EvalError) {
        3
    } else {
        0
    }
}

fn operator(op: &OpArgs) -> Result<OperatorSpec> {
    let name = op.op.as_deref().ok_or_else(|| usage("--op is required"))?;
    let kind = FunctionalKind::from_name(name).ok_or_else(|| usage(format!("unknown operator `{name}`")))?;
    Ok(OperatorSpec {
        kind: Some(kind),
        alpha: op.alpha,
        beta: op.beta,
        eta: op.eta,
        mu: op.mu,
        q: op.q,
        t: op.t,
        a: op.a,
        b: op.b,
        n: op.n,
        k: op.k,
        m_cap: op.m_cap,
        points: op.points.clone(),
        weights: op.weights.clone(),
    })
}

fn tolerance(t: &TolArgs, default: ToleranceSpec) -> Result<Option<ToleranceSpec>> {
    if t.tol_abs.is_none() && t.tol_rel.is_none() {
        return Ok(None);
    }
    Ok(Some(ToleranceSpec::new(t.tol_abs.unwrap_or(default.abs), t.tol_rel.unwrap_or(default.rel))?))
}

fn function(text: &str) -> Result<ScalarFunction> {
    Ok(ScalarFunction::parse(text)?)
}

fn eval(a: &EvalArgs, seed: u64) -> Result<Document> {
    let f = function(&a.f)?;
    let spec = operator(&a.op)?;
    let op = spec.build()?;
    let value = op.apply(&f)?;
    let mut doc = Document::new("eval", seed, Vec::new());
    doc.eval = Some(serde_json::json!({
        "operator": spec,
        "kind": op.kind(),
        "params": op.params(),
        "f": f.to_string(),
        "value": value,
        "nodes": op.len(),
        "mass": op.mass(),
    }));
    Ok(doc)
}

struct Inputs<'a> {
    args: &'a CheckArgs,
    constants: BTreeMap<String, f64>,
}

const CONSTANTS: [&str; 15] = ["m", "M", "n", "N", "k", "K", "M1", "M2", "M3", "H1", "H2", "r", "s", "theta1", "theta2"];

impl Inputs<'_> {
    fn func(&self, flag: &str, value: &Option<String>) -> Result<ScalarFunction> {
        let text = value.as_deref().ok_or_else(|| usage(format!("this checker needs --{flag}")))?;
        function(text)
    }

    fn num(&self, name: &str) -> Result<f64> {
        self.constants
            .get(name)
            .copied()
            .ok_or_else(|| usage(format!("this checker needs --set {name}=VALUE")))
    }

    fn order(&self) -> Result<Order> {
        Order::from_name(&self.args.order).ok_or_else(|| usage(format!("unknown order `{}`", self.args.order)))
    }
}

fn constants(set: &[String]) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for item in set {
        let (k, v) = item.split_once('=').ok_or_else(|| usage(format!("--set expects NAME=VALUE, got `{item}`")))?;
        let k = k.trim();
        if !CONSTANTS.contains(&k) {
            return Err(usage(format!("unknown constant `{k}` (known: {})", CONSTANTS.join(", "))));
        }
        let v: f64 = v.trim().parse().map_err(|_| usage(format!("--set {k} needs a number, got `{v}`")))?;
        out.insert(k.to_string(), v);
    }
    Ok(out)
}

fn check(a: &CheckArgs, seed: u64) -> Result<Document> {
    let checker = Checker::from_name(&a.checker).ok_or_else(|| usage(format!("unknown checker `{}`", a.checker)))?;
    let inp = Inputs { args: a, constants: constants(&a.set)? };
    let reports = if checker == Checker::HadamardExample {
        hadamard_example(&inp)?
    } else {
        let spec_a = operator(&a.op)?;
        let spec_b = match &a.b_op {
            Some(text) => OperatorSpec::parse_compact(text).map_err(|e| usage(e.to_string()))?,
            None => spec_a.clone(),
        };
        // every flag is parsed before anything is built
        let weights = (function(&a.weight_p)?, function(&a.weight_q)?);
        let r = a.weight_r.as_deref().map(function).transpose()?;
        let prepared = prepare(checker, &inp)?;
        let (fa, fb) = (spec_a.build()?, spec_b.build()?);
        let mut ctx = CheckerContext::new(&fa, &fb).with_weights(weights.0, weights.1);
        if let Some(r) = r {
            ctx = ctx.with_third_weight(r);
        }
        if let Some(tol) = tolerance(&a.tol, ctx.tolerance)? {
            ctx = ctx.with_tolerance(tol);
        }
        run_checker(checker, &ctx, &prepared)
    };
    Ok(Document::new("check", seed, reports))
}

/// Parsed functions and constants for one checker.
struct Prepared {
    fs: Vec<ScalarFunction>,
    cs: Vec<f64>,
    order: Order,
}

fn prepare(checker: Checker, inp: &Inputs) -> Result<Prepared> {
    let a = inp.args;
    let f = || inp.func("f", &a.f);
    let g = || inp.func("g", &a.g);
    let h = || inp.func("h", &a.h);
    let envelopes = || -> Result<Vec<ScalarFunction>> {
        Ok(vec![
            f()?,
            g()?,
            inp.func("phi1", &a.phi1)?,
            inp.func("phi2", &a.phi2)?,
            inp.func("psi1", &a.psi1)?,
            inp.func("psi2", &a.psi2)?,
        ])
    };
    let nums = |names: &[&str]| -> Result<Vec<f64>> { names.iter().map(|n| inp.num(n)).collect() };
    let (fs, cs) = match checker {
        Checker::ChebyshevTwo | Checker::ThreeWeights => (vec![f()?, g()?], vec![]),
        Checker::LipschitzPair => (
            vec![f()?, g()?, inp.func("h1", &a.h1)?, inp.func("h2", &a.h2)?],
            nums(&["M1", "M2"])?,
        ),
        Checker::MGLipschitz => (vec![f()?, g()?], nums(&["M"])?),
        Checker::HolderPair => (vec![f()?, g()?], nums(&["H1", "H2", "r", "s"])?),
        Checker::VariableBounds => (vec![f()?, inp.func("phi1", &a.phi1)?, inp.func("phi2", &a.phi2)?], vec![]),
        Checker::YoungBounds => (
            vec![f()?, inp.func("phi1", &a.phi1)?, inp.func("phi2", &a.phi2)?],
            nums(&["theta1", "theta2"])?,
        ),
        Checker::ConstantBounds | Checker::YoungSquare => (vec![f()?], nums(&["m", "M"])?),
        Checker::NearFunction => (vec![f()?, inp.func("phi1", &a.phi1)?], nums(&["M"])?),
        Checker::FourBounds => (envelopes()?, vec![]),
        Checker::YoungFour => (envelopes()?, nums(&["theta1", "theta2"])?),
        Checker::FourConstBounds => (vec![f()?, g()?], nums(&["m", "M", "n", "N"])?),
        Checker::TriplePositiveWeight => (vec![f()?, g()?, h()?], vec![]),
        Checker::TripleGruss => (vec![f()?, g()?, h()?], nums(&["m", "M", "n", "N", "k", "K"])?),
        Checker::TripleLipschitz => (
            vec![f()?, g()?, h()?, inp.func("h1", &a.h1)?],
            nums(&["M1", "M2", "M3"])?,
        ),
        Checker::HadamardExample => unreachable!("handled separately"),
    };
    Ok(Prepared { fs, cs, order: inp.order()? })
}

fn run_checker(checker: Checker, ctx: &CheckerContext, p: &Prepared) -> Vec<InequalityReport> {
    let (f, c) = (&p.fs, &p.cs);
    match checker {
        Checker::ChebyshevTwo => vec![ineq::check_chebyshev_two(ctx, &f[0], &f[1], p.order)],
        Checker::LipschitzPair => {
            vec![ineq::check_lipschitz_pair(ctx, &f[0], &f[1], c[0], &f[2], c[1], &f[3], p.order)]
        }
        Checker::MGLipschitz => vec![ineq::check_m_g_lipschitz(ctx, &f[0], &f[1], c[0])],
        Checker::HolderPair => vec![ineq::check_holder_pair(ctx, &f[0], &f[1], c[0], c[1], c[2], c[3])],
        Checker::VariableBounds => vec![ineq::check_variable_bounds(ctx, &f[0], &f[1], &f[2])],
        Checker::ConstantBounds => vec![ineq::check_constant_bounds(ctx, &f[0], c[0], c[1])],
        Checker::NearFunction => vec![ineq::check_near_function(ctx, &f[0], &f[1], c[0])],
        Checker::FourBounds => ineq::check_four_bounds(ctx, &f[0], &f[1], &f[2], &f[3], &f[4], &f[5]),
        Checker::FourConstBounds => ineq::check_four_const_bounds(ctx, &f[0], &f[1], c[0], c[1], c[2], c[3]),
        Checker::YoungBounds => vec![ineq::check_young_bounds(ctx, &f[0], &f[1], &f[2], c[0], c[1])],
        Checker::YoungSquare => vec![ineq::check_young_square(ctx, &f[0], c[0], c[1])],
        Checker::YoungFour => ineq::check_young_four(ctx, &f[0], &f[1], &f[2], &f[3], &f[4], &f[5], c[0], c[1]),
        Checker::TriplePositiveWeight => vec![ineq::check_triple_positive_weight(ctx, &f[0], &f[1], &f[2], p.order)],
        Checker::TripleGruss => {
            vec![ineq::check_triple_gruss(ctx, &f[0], &f[1], &f[2], (c[0], c[1]), (c[2], c[3]), (c[4], c[5]))]
        }
        Checker::TripleLipschitz => {
            vec![ineq::check_triple_lipschitz(ctx, [&f[0], &f[1], &f[2]], &f[3], [c[0], c[1], c[2]])]
        }
        Checker::ThreeWeights => vec![ineq::check_three_weights(ctx, &f[0], &f[1], p.order)],
        Checker::HadamardExample => unreachable!("handled separately"),
    }
}

fn hadamard_example(inp: &Inputs) -> Result<Vec<InequalityReport>> {
    let a = inp.args;
    let alpha = a.op.alpha.ok_or_else(|| usage("hadamard-example needs --alpha"))?;
    let beta = a.op.beta.ok_or_else(|| usage("hadamard-example needs --beta"))?;
    let t = a.op.t.ok_or_else(|| usage("hadamard-example needs --t"))?;
    let (f, g) = (inp.func("f", &a.f)?, inp.func("g", &a.g)?);
    let (m1, m2) = (inp.num("M1")?, inp.num("M2")?);
    let n = a.op.n.unwrap_or(isoineq_core::operators::DEFAULT_NODES);
    let tol = tolerance(&a.tol, ToleranceSpec::for_kind(FunctionalKind::Hadamard))?;
    Ok(vec![ineq::check_hadamard_example(alpha, beta, t, &f, &g, m1, m2, n, tol)?])
}

fn suite(a: &SuiteArgs, seed: u64, csv: bool) -> Result<(Document, Option<Vec<isoineq_core::harness::SuiteRow>>)> {
    let kinds = if a.kinds.is_empty() {
        DEFAULT_KINDS.to_vec()
    } else {
        a.kinds
            .iter()
            .map(|k| FunctionalKind::from_name(k).ok_or_else(|| usage(format!("unknown kind `{k}`"))))
            .collect::<Result<_>>()?
    };
    let checkers = if a.checkers.is_empty() {
        Checker::ALL.to_vec()
    } else {
        a.checkers
            .iter()
            .map(|c| Checker::from_name(c).ok_or_else(|| usage(format!("unknown checker `{c}`"))))
            .collect::<Result<_>>()?
    };
    let defaults = SuiteConfig::default();
    let loosest = kinds
        .iter()
        .map(|&k| ToleranceSpec::for_kind(k))
        .reduce(ToleranceSpec::max)
        .unwrap_or(ToleranceSpec::for_kind(FunctionalKind::Discrete));
    let config = SuiteConfig {
        trials: a.trials,
        seed,
        kinds,
        checkers,
        tolerance: tolerance(&a.tol, loosest)?,
        nodes: a.nodes.unwrap_or(defaults.nodes),
        hadamard_nodes: a.hadamard_nodes.unwrap_or(defaults.hadamard_nodes),
        q_terms: a.k.unwrap_or(defaults.q_terms),
        m_cap: a.m_cap.unwrap_or(defaults.m_cap),
        threads: a.threads,
        corrupt: a.corrupt,
        keep_rows: a.rows || csv,
        timing: a.timing,
    };
    config.validate().map_err(|e| usage(e.to_string()))?;
    let mut report = run_suite(&config)?;
    // rerun the worst instance of every violated cell so its reports are visible
    let reports = report
        .cells
        .iter()
        .filter(|c| c.violations > 0)
        .filter_map(|c| c.worst.as_ref())
        .flat_map(|spec| run_trial(spec).reports)
        .collect();
    let mut doc = Document::new("suite", seed, reports);
    doc.summary.violations = report.totals.violations;
    doc.summary.hypothesis_failures = report.totals.hypothesis_failures;
    doc.summary.min_slack = report.totals.min_slack;
    let rows = csv.then(|| std::mem::take(&mut report.rows));
    if !a.rows && !csv {
        report.rows.clear();
    }
    doc.suite = Some(report);
    Ok((doc, rows))
}
