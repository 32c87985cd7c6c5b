use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isoineq_core::expr::GRAMMAR;

const AFTER_HELP: &str = "Expression grammar for --f, --g, --h, weights and bound functions:\n\n";

#[derive(Debug, Parser)]
#[command(name = "isoineq", version, about = "Chebyshev-type inequalities for isotonic linear functionals")]
#[command(after_long_help = after_help())]
pub struct Cli {
    /// Seed echoed in the output; the suite draws all randomness from it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

fn after_help() -> String {
    format!("{AFTER_HELP}{GRAMMAR}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply one functional to f and print the value with node metadata.
    #[command(after_long_help = after_help(), allow_negative_numbers = true)]
    Eval(EvalArgs),
    /// Run one checker on fully specified inputs.
    #[command(after_long_help = after_help(), allow_negative_numbers = true)]
    Check(Box<CheckArgs>),
    /// Run the randomized suite over checkers and functional kinds.
    Suite(SuiteArgs),
}

/// Functional selection and parameters.
#[derive(Debug, Clone, Args)]
pub struct OpArgs {
    /// discrete, riemann, riemann-liouville, hadamard, hypergeometric, saigo,
    /// erdelyi-kober, q-saigo, q-riemann-liouville, jackson, time-scale-delta
    #[arg(long)]
    pub op: Option<String>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub eta: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub q: Option<f64>,
    /// Evaluation point (x for Hadamard).
    #[arg(long, alias = "x")]
    pub t: Option<f64>,
    /// Left end of a Riemann interval.
    #[arg(long)]
    pub a: Option<f64>,
    /// Right end of a Riemann interval.
    #[arg(long)]
    pub b: Option<f64>,
    /// Quadrature nodes.
    #[arg(long)]
    pub n: Option<usize>,
    /// q-series truncation.
    #[arg(long = "K", alias = "k")]
    pub k: Option<usize>,
    #[arg(long)]
    pub m_cap: Option<usize>,
    /// Comma-separated points (discrete and time-scale kinds).
    #[arg(long, value_delimiter = ',')]
    pub points: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct TolArgs {
    #[arg(long)]
    pub tol_abs: Option<f64>,
    #[arg(long)]
    pub tol_rel: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub op: OpArgs,
    #[arg(long)]
    pub f: String,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Checker id, e.g. chebyshev-two, holder-pair, young-four.
    #[arg(long)]
    pub checker: String,
    #[command(flatten)]
    pub op: OpArgs,
    /// Second functional in compact form, e.g. `riemann:a=0,b=2,n=32`.
    /// Defaults to the first one.
    #[arg(long = "B")]
    pub b_op: Option<String>,
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long)]
    pub g: Option<String>,
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long)]
    pub phi1: Option<String>,
    #[arg(long)]
    pub phi2: Option<String>,
    #[arg(long)]
    pub psi1: Option<String>,
    #[arg(long)]
    pub psi2: Option<String>,
    /// Reference function of the first Lipschitz condition.
    #[arg(long)]
    pub h1: Option<String>,
    /// Reference function of the second Lipschitz condition.
    #[arg(long)]
    pub h2: Option<String>,
    #[arg(long, default_value = "1")]
    pub weight_p: String,
    #[arg(long, default_value = "1")]
    pub weight_q: String,
    #[arg(long)]
    pub weight_r: Option<String>,
    /// synchronous or asynchronous.
    #[arg(long, default_value = "synchronous")]
    pub order: String,
    /// Numeric constants as name=value: m, M, n, N, k, K, M1, M2, M3, H1,
    /// H2, r, s, theta1, theta2.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    pub set: Vec<String>,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// Comma-separated functional kinds.
    #[arg(long, value_delimiter = ',')]
    pub kinds: Vec<String>,
    /// Comma-separated checker ids.
    #[arg(long, value_delimiter = ',')]
    pub checkers: Vec<String>,
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long)]
    pub hadamard_nodes: Option<usize>,
    #[arg(long = "K", alias = "k")]
    pub k: Option<usize>,
    #[arg(long)]
    pub m_cap: Option<usize>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Break one hypothesis per trial (negative control).
    #[arg(long)]
    pub corrupt: bool,
    /// Include one row per report in JSON output.
    #[arg(long)]
    pub rows: bool,
    /// Include wall time (makes output vary between runs).
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub tol: TolArgs,
}
