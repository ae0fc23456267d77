//! Run reports for checks and the verification suite.

use std::fmt::Write as _;

use dqmat::{DualNumber, InequalityReport};
use serde::Serialize;

/// One named check: instance counts, violations, and the worst slack seen
/// (smallest under the dual total order).
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub instances: usize,
    pub violations: usize,
    pub worst_slack: (f64, f64),
    pub detail: String,
}

/// Accumulates instances and slacks into a [`CheckLine`].
#[derive(Debug, Clone)]
pub struct SlackTracker {
    name: String,
    instances: usize,
    violations: usize,
    worst: Option<DualNumber>,
    detail: String,
}

impl SlackTracker {
    pub fn new(name: &str) -> Self {
        SlackTracker {
            name: name.to_string(),
            instances: 0,
            violations: 0,
            worst: None,
            detail: String::new(),
        }
    }

    pub fn record(&mut self, rep: &InequalityReport) {
        self.instances += 1;
        if !rep.holds {
            self.violations += 1;
        }
        self.note_slack(rep.slack);
    }

    pub fn note_slack(&mut self, slack: DualNumber) {
        self.worst = Some(match self.worst {
            Some(w) if w.compare(slack).is_le() => w,
            _ => slack,
        });
    }

    /// A pass/fail observation without a slack value.
    pub fn assert_that(&mut self, ok: bool) {
        self.instances += 1;
        if !ok {
            self.violations += 1;
        }
    }

    pub fn set_detail(&mut self, detail: String) {
        self.detail = detail;
    }

    pub fn violations(&self) -> usize {
        self.violations
    }

    pub fn finish(self) -> CheckLine {
        let worst = self.worst.unwrap_or(DualNumber::ZERO);
        CheckLine {
            name: self.name,
            pass: self.violations == 0,
            instances: self.instances,
            violations: self.violations,
            worst_slack: (worst.st, worst.eps),
            detail: self.detail,
        }
    }
}

/// Deterministic report for one command invocation; only `wall_ms` varies
/// between identical runs.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub seed: u64,
    pub instances: usize,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
    pub wall_ms: u128,
}

impl RunReport {
    pub fn new(command: String, seed: u64, checks: Vec<CheckLine>, wall_ms: u128) -> Self {
        RunReport {
            command,
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            instances: checks.iter().map(|c| c.instances).sum(),
            pass: checks.iter().all(|c| c.pass),
            checks,
            wall_ms,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}  (v{})  seed={}", self.command, self.version, self.seed);
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(
                out,
                "{status}  {:<28} instances={:<7} violations={:<4} worst_slack=({}, {})",
                c.name, c.instances, c.violations, c.worst_slack.0, c.worst_slack.1
            );
            if c.detail.is_empty() {
                let _ = writeln!(out);
            } else {
                let _ = writeln!(out, "  [{}]", c.detail);
            }
        }
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "verify: {verdict} ({}/{} checks)",
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        );
        let _ = writeln!(out, "wall_ms: {}", self.wall_ms);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
