//! Randomized suite: certified instances for every checker across functional
//! kinds, with slack statistics and a greedy shrinker.

mod gen;
mod instance;

pub use gen::{
    gen_bounded, gen_envelope, gen_holder, gen_increasing, gen_lipschitz, gen_positive, gen_synchronous_pair,
    random_values, OrderedPair, KNOTS,
};
pub use instance::{corruption_count, trial_seed, InstanceSpec};

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functional::{pairwise_sum, FunctionalKind, Params, ToleranceSpec};
use crate::inequalities::{Checker, Direction, FunctionalMeta, InequalityReport, Instance, Verdict};
use crate::operators::{DEFAULT_M_CAP, DEFAULT_Q_TERMS};

/// Maximum number of node-count doublings before a violation is reported.
pub const MAX_DOUBLINGS: u32 = 2;

pub const DEFAULT_KINDS: [FunctionalKind; 8] = [
    FunctionalKind::Discrete,
    FunctionalKind::Riemann,
    FunctionalKind::RiemannLiouville,
    FunctionalKind::Hadamard,
    FunctionalKind::Saigo,
    FunctionalKind::Jackson,
    FunctionalKind::QSaigo,
    FunctionalKind::TimeScaleDelta,
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Trials per (checker, kind) cell.
    pub trials: u64,
    pub seed: u64,
    pub kinds: Vec<FunctionalKind>,
    pub checkers: Vec<Checker>,
    /// Replaces the per-kind default tolerance when set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<ToleranceSpec>,
    pub nodes: usize,
    pub hadamard_nodes: usize,
    pub q_terms: usize,
    pub m_cap: usize,
    /// Worker threads; 0 uses the rayon default. Not serialized, so reports
    /// are byte-identical across thread counts.
    #[serde(skip)]
    pub threads: usize,
    /// Break one hypothesis per trial (cycling through the checker's variants).
    pub corrupt: bool,
    /// Keep one row per report in the output.
    pub keep_rows: bool,
    /// Record wall time; off by default so reports stay byte-stable.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 1000,
            seed: 0,
            kinds: DEFAULT_KINDS.to_vec(),
            checkers: Checker::ALL.to_vec(),
            tolerance: None,
            nodes: 32,
            hadamard_nodes: 64,
            q_terms: DEFAULT_Q_TERMS,
            m_cap: DEFAULT_M_CAP,
            threads: 0,
            corrupt: false,
            keep_rows: false,
            timing: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::domain("trials must be at least 1"));
        }
        if self.kinds.is_empty() || self.checkers.is_empty() {
            return Err(Error::domain("suite needs at least one kind and one checker"));
        }
        if self.nodes < 2 || self.hadamard_nodes < 2 || self.q_terms < 2 || self.m_cap == 0 {
            return Err(Error::domain("node counts must be at least 2 and M_cap at least 1"));
        }
        Ok(())
    }

    /// The instance for one trial of a cell.
    pub fn instance(&self, checker: Checker, kind: FunctionalKind, trial: u64) -> InstanceSpec {
        InstanceSpec {
            trial,
            seed: trial_seed(self.seed, kind, checker, trial),
            checker,
            kind,
            nodes: self.nodes,
            hadamard_nodes: self.hadamard_nodes,
            q_terms: self.q_terms,
            m_cap: self.m_cap,
            amplitude: 1.0,
            interior: 1.0,
            corruption: self.corrupt.then_some(trial as usize),
            tolerance: self.tolerance,
        }
    }
}

/// Aggregates for one (checker, kind) cell. Counts are per report; a
/// multi-part checker contributes several reports per trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellStats {
    pub checker: Checker,
    pub kind: FunctionalKind,
    pub trials: u64,
    pub reports: u64,
    pub holds: u64,
    pub violations: u64,
    pub hypothesis_failures: u64,
    pub eval_errors: u64,
    /// Over HOLDS and VIOLATED reports only.
    pub min_slack: Option<f64>,
    pub mean_slack: Option<f64>,
    /// Instance with the smallest slack.
    pub worst: Option<InstanceSpec>,
    /// Trials that needed a resolution doubling.
    pub doublings: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub theorem: String,
    pub kind: FunctionalKind,
    pub trial: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteTotals {
    pub reports: u64,
    pub violations: u64,
    pub hypothesis_failures: u64,
    pub eval_errors: u64,
    pub min_slack: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub cells: Vec<CellStats>,
    pub totals: SuiteTotals,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rows: Vec<SuiteRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

/// Reports of one trial after any resolution doubling.
#[derive(Debug, Clone)]
pub struct TrialOutcome {
    pub spec: InstanceSpec,
    pub reports: Vec<InequalityReport>,
    pub doublings: u32,
}

fn uses_quadrature(spec: &InstanceSpec) -> bool {
    spec.checker == Checker::HadamardExample || spec.kind.is_quadrature()
}

fn error_report(spec: &InstanceSpec, e: &Error) -> InequalityReport {
    let meta = FunctionalMeta { kind: spec.kind, params: Params::default(), nodes: 0 };
    InequalityReport {
        theorem: spec.checker.name().to_string(),
        lhs: 0.0,
        rhs: 0.0,
        slack: 0.0,
        direction: Direction::Geq,
        tolerance: spec.tolerance.unwrap_or_else(|| ToleranceSpec::for_kind(spec.kind)),
        verdict: Verdict::EvalError,
        hypothesis_checks: Vec::new(),
        instance: Instance { a: meta.clone(), b: meta, functions: Default::default(), constants: Default::default() },
        error: Some(format!("instance construction failed: {e}")),
        notes: vec![format!("instance seed {}", spec.seed)],
    }
}

/// Run one instance, doubling quadrature resolution while it is violated.
pub fn run_trial(spec: &InstanceSpec) -> TrialOutcome {
    run_trial_with(spec, |s| match s.run() {
        Ok(r) => r,
        Err(e) => vec![error_report(s, &e)],
    })
}

fn run_trial_with(spec: &InstanceSpec, run: impl Fn(&InstanceSpec) -> Vec<InequalityReport>) -> TrialOutcome {
    let mut current = spec.clone();
    let mut doublings = 0;
    loop {
        let reports = run(&current);
        let violated = reports.iter().any(|r| r.verdict == Verdict::Violated);
        if violated && uses_quadrature(&current) && doublings < MAX_DOUBLINGS {
            current.nodes *= 2;
            current.hadamard_nodes *= 2;
            doublings += 1;
            continue;
        }
        return TrialOutcome { spec: current, reports, doublings };
    }
}

fn aggregate(checker: Checker, kind: FunctionalKind, outcomes: &[TrialOutcome]) -> CellStats {
    let mut stats = CellStats {
        checker,
        kind,
        trials: outcomes.len() as u64,
        reports: 0,
        holds: 0,
        violations: 0,
        hypothesis_failures: 0,
        eval_errors: 0,
        min_slack: None,
        mean_slack: None,
        worst: None,
        doublings: 0,
    };
    let mut slacks = Vec::new();
    for o in outcomes {
        stats.doublings += u64::from(o.doublings > 0);
        for r in &o.reports {
            stats.reports += 1;
            match r.verdict {
                Verdict::Holds => stats.holds += 1,
                Verdict::Violated => stats.violations += 1,
                Verdict::HypothesisFailed => stats.hypothesis_failures += 1,
                Verdict::EvalError => stats.eval_errors += 1,
            }
            if matches!(r.verdict, Verdict::Holds | Verdict::Violated) {
                slacks.push(r.slack);
                if stats.min_slack.is_none_or(|m| r.slack < m) {
                    stats.min_slack = Some(r.slack);
                    stats.worst = Some(o.spec.clone());
                }
            }
        }
    }
    if !slacks.is_empty() {
        stats.mean_slack = Some(pairwise_sum(&slacks) / slacks.len() as f64);
    }
    stats
}

/// Run every configured cell. Trials run in parallel; aggregation follows
/// (checker, kind, trial) order so the report does not depend on threads.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let start = Instant::now();
    let cells: Vec<(Checker, FunctionalKind)> = config
        .checkers
        .iter()
        .flat_map(|&c| config.kinds.iter().map(move |&k| (c, k)))
        .collect();
    let jobs: Vec<InstanceSpec> = cells
        .iter()
        .flat_map(|&(c, k)| (0..config.trials).map(move |t| config.instance(c, k, t)))
        .collect();

    let work = || jobs.par_iter().map(run_trial).collect::<Vec<_>>();
    let outcomes = if config.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::domain(format!("thread pool: {e}")))?
            .install(work)
    } else {
        work()
    };

    let per_cell = config.trials as usize;
    let mut report = SuiteReport {
        config: config.clone(),
        cells: Vec::with_capacity(cells.len()),
        totals: SuiteTotals::default(),
        rows: Vec::new(),
        wall_time_ms: None,
    };
    for (i, &(c, k)) in cells.iter().enumerate() {
        let chunk = &outcomes[i * per_cell..(i + 1) * per_cell];
        let stats = aggregate(c, k, chunk);
        let t = &mut report.totals;
        t.reports += stats.reports;
        t.violations += stats.violations;
        t.hypothesis_failures += stats.hypothesis_failures;
        t.eval_errors += stats.eval_errors;
        if let Some(m) = stats.min_slack {
            t.min_slack = Some(t.min_slack.map_or(m, |x: f64| x.min(m)));
        }
        if config.keep_rows {
            for o in chunk {
                for r in &o.reports {
                    report.rows.push(SuiteRow {
                        theorem: r.theorem.clone(),
                        kind: k,
                        trial: o.spec.trial,
                        lhs: r.lhs,
                        rhs: r.rhs,
                        slack: r.slack,
                        verdict: r.verdict,
                    });
                }
            }
        }
        report.cells.push(stats);
    }
    if config.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// True if any report of the instance (after doubling) is VIOLATED.
pub fn is_violated(spec: &InstanceSpec) -> bool {
    run_trial(spec).reports.iter().any(|r| r.verdict == Verdict::Violated)
}

/// Greedy shrink of a violating instance.
pub fn shrink(spec: &InstanceSpec) -> InstanceSpec {
    shrink_by(spec, is_violated)
}

/// Greedy shrink under an arbitrary failure predicate: halve the amplitude,
/// halve node counts, and pull parameters toward the middle of their boxes
/// for as long as the predicate keeps failing. A passing instance is
/// returned unchanged.
pub fn shrink_by(spec: &InstanceSpec, fails: impl Fn(&InstanceSpec) -> bool) -> InstanceSpec {
    if !fails(spec) {
        return spec.clone();
    }
    let mut best = spec.clone();
    for _ in 0..64 {
        let mut candidates = Vec::new();
        if best.amplitude > 1e-6 {
            candidates.push(InstanceSpec { amplitude: best.amplitude / 2.0, ..best.clone() });
        }
        if best.nodes > 4 {
            candidates.push(InstanceSpec { nodes: (best.nodes / 2).max(4), ..best.clone() });
        }
        if best.hadamard_nodes > 4 {
            candidates.push(InstanceSpec { hadamard_nodes: (best.hadamard_nodes / 2).max(4), ..best.clone() });
        }
        if best.interior > 1e-3 {
            candidates.push(InstanceSpec { interior: best.interior / 2.0, ..best.clone() });
        }
        match candidates.into_iter().find(|c| fails(c)) {
            Some(c) => best = c,
            None => break,
        }
    }
    best
}

#[cfg(test)]
mod tests;
