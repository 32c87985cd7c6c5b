use std::io::Write;

use isoineq_core::harness::{SuiteReport, SuiteRow};
use isoineq_core::inequalities::{InequalityReport, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub violations: u64,
    pub hypothesis_failures: u64,
    pub min_slack: Option<f64>,
}

impl Summary {
    pub fn of(reports: &[InequalityReport]) -> Self {
        let count = |v| reports.iter().filter(|r| r.verdict == v).count() as u64;
        let min_slack = reports
            .iter()
            .filter(|r| matches!(r.verdict, Verdict::Holds | Verdict::Violated))
            .map(|r| r.slack)
            .reduce(f64::min);
        Summary {
            violations: count(Verdict::Violated),
            hypothesis_failures: count(Verdict::HypothesisFailed),
            min_slack,
        }
    }
}

/// The single JSON document written per invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub tool_version: String,
    pub command: String,
    pub seed: u64,
    pub reports: Vec<InequalityReport>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<SuiteReport>,
}

impl Document {
    pub fn new(command: &str, seed: u64, reports: Vec<InequalityReport>) -> Self {
        let summary = Summary::of(&reports);
        Document {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            seed,
            reports,
            summary,
            eval: None,
            suite: None,
        }
    }
}

pub fn write_json(doc: &Document, out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)
}

/// theorem, kind, trial, lhs, rhs, slack, verdict
pub fn write_csv(rows: &[SuiteRow], out: &mut dyn Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["theorem", "kind", "trial", "lhs", "rhs", "slack", "verdict"])?;
    for r in rows {
        w.write_record([
            r.theorem.clone(),
            r.kind.to_string(),
            r.trial.to_string(),
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.slack.to_string(),
            r.verdict.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Rows for single reports (eval has none; check has one per report).
pub fn report_rows(reports: &[InequalityReport]) -> Vec<SuiteRow> {
    reports
        .iter()
        .map(|r| SuiteRow {
            theorem: r.theorem.clone(),
            kind: r.instance.a.kind,
            trial: 0,
            lhs: r.lhs,
            rhs: r.rhs,
            slack: r.slack,
            verdict: r.verdict,
        })
        .collect()
}
