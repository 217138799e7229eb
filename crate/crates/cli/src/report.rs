use std::fs;
use std::path::Path;

use nilcoh::sample::Sampler;
use serde::{Deserialize, Serialize};

use crate::checks::{self, Check, Ctx, Inputs};
use crate::CliError;

pub const SCHEMA: u32 = 1;

/// Witness points kept per check so that even passing reports can be replayed.
const WITNESSES: usize = 2;

/// An evaluated input point with both sides of its identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    #[serde(flatten)]
    pub inputs: Inputs,
    pub lhs: String,
    pub rhs: String,
}

impl Point {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub module: String,
    pub samples: usize,
    pub failures: usize,
    pub passed: bool,
    pub witnesses: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Point>,
    /// Evaluation error, if the check could not run at all.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub q: usize,
    pub k: usize,
    pub seed: u64,
    pub samples: usize,
    pub max_word_len: usize,
    pub max_len: usize,
}

impl ReportConfig {
    fn ctx(&self) -> Ctx {
        Ctx {
            q: self.q,
            k: self.k,
            max_len: self.max_len,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub command: String,
    pub suite: String,
    pub config: ReportConfig,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

impl VerificationReport {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read report {}: {e}", path.display())))?;
        let report: VerificationReport = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("malformed report {}: {e}", path.display())))?;
        if report.schema != SCHEMA {
            return Err(CliError::Usage(format!(
                "report schema {} is not supported (expected {SCHEMA})",
                report.schema
            )));
        }
        Ok(report)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs every registered check of `suite` (or all suites) in registry order.
pub fn verify(suite: &str, config: ReportConfig) -> VerificationReport {
    let ctx = config.ctx();
    let checks: Vec<CheckReport> = checks::registry()
        .iter()
        .enumerate()
        .filter(|(_, c)| (suite == "all" || c.module == suite) && ctx.k >= c.min_k)
        .map(|(shard, c)| run_check(c, &ctx, &config, shard as u64))
        .collect();
    VerificationReport {
        schema: SCHEMA,
        command: "verify".into(),
        suite: suite.into(),
        passed: checks.iter().all(|c| c.passed),
        config,
        checks,
    }
}

fn run_check(check: &Check, ctx: &Ctx, config: &ReportConfig, shard: u64) -> CheckReport {
    let mut report = CheckReport {
        name: check.name.into(),
        module: check.module.into(),
        samples: 0,
        failures: 0,
        passed: true,
        witnesses: Vec::new(),
        counterexample: None,
        error: None,
    };
    let mut sampler = Sampler::shard(config.seed, shard, ctx.q, config.max_word_len);
    let inputs = match (check.generate)(ctx, &mut sampler, config.samples) {
        Ok(v) => v,
        Err(e) => {
            report.passed = false;
            report.error = Some(e);
            return report;
        }
    };
    for inputs in inputs {
        let (lhs, rhs) = match (check.evaluate)(ctx, &inputs) {
            Ok(sides) => sides,
            Err(e) => {
                report.passed = false;
                report.error = Some(format!("{e} (words {:?})", inputs.words));
                return report;
            }
        };
        let point = Point { inputs, lhs, rhs };
        report.samples += 1;
        if !point.holds() {
            report.failures += 1;
            report.passed = false;
            if report.counterexample.is_none() {
                report.counterexample = Some(point.clone());
            }
        }
        if report.witnesses.len() < WITNESSES {
            report.witnesses.push(point);
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayedPoint {
    pub check: String,
    pub role: &'static str,
    #[serde(flatten)]
    pub inputs: Inputs,
    pub recorded_lhs: String,
    pub recorded_rhs: String,
    pub lhs: String,
    pub rhs: String,
    /// Recomputed sides equal the recorded ones.
    pub reproduced: bool,
    /// The identity holds at this point.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub schema: u32,
    pub command: &'static str,
    pub suite: String,
    pub config: ReportConfig,
    pub points: Vec<ReplayedPoint>,
    /// Points whose recomputed sides differ from the report, and report-level
    /// inconsistencies such as a failed check without a counterexample.
    pub mismatches: Vec<String>,
    pub confirmed_failures: usize,
    pub passed: bool,
}

/// Re-executes every recorded witness and counterexample of `report`.
pub fn replay(report: &VerificationReport) -> Result<ReplayReport, CliError> {
    let ctx = report.config.ctx();
    let mut points = Vec::new();
    let mut mismatches = Vec::new();
    for c in &report.checks {
        let (_, check) = checks::find(&c.name)
            .ok_or_else(|| CliError::Usage(format!("malformed report: unknown check {:?}", c.name)))?;
        if check.module != c.module {
            mismatches.push(format!(
                "{}: module recorded as {:?}, expected {:?}",
                c.name, c.module, check.module
            ));
        }
        let failing_witness = c.witnesses.iter().any(|p| !p.holds());
        if c.passed && (c.counterexample.is_some() || failing_witness || c.failures > 0) {
            mismatches.push(format!("{}: marked passed but records a failing point", c.name));
        }
        if !c.passed && c.counterexample.is_none() && c.error.is_none() {
            mismatches.push(format!("{}: marked failed without a counterexample", c.name));
        }
        let recorded = c
            .witnesses
            .iter()
            .map(|p| ("witness", p))
            .chain(c.counterexample.iter().map(|p| ("counterexample", p)));
        for (role, p) in recorded {
            let (lhs, rhs) =
                (check.evaluate)(&ctx, &p.inputs).unwrap_or_else(|e| (format!("error: {e}"), String::new()));
            let reproduced = lhs == p.lhs && rhs == p.rhs;
            if !reproduced {
                mismatches.push(format!(
                    "{} {role} {:?}: recorded ({}, {}), recomputed ({lhs}, {rhs})",
                    c.name, p.inputs.words, p.lhs, p.rhs
                ));
            }
            points.push(ReplayedPoint {
                check: c.name.clone(),
                role,
                inputs: p.inputs.clone(),
                recorded_lhs: p.lhs.clone(),
                recorded_rhs: p.rhs.clone(),
                holds: lhs == rhs,
                lhs,
                rhs,
                reproduced,
            });
        }
    }
    if report.passed != report.checks.iter().all(|c| c.passed) {
        mismatches.push("report-level pass flag disagrees with its checks".into());
    }
    let confirmed_failures = points.iter().filter(|p| p.reproduced && !p.holds).count();
    Ok(ReplayReport {
        schema: SCHEMA,
        command: "replay",
        suite: report.suite.clone(),
        config: report.config.clone(),
        passed: mismatches.is_empty() && confirmed_failures == 0,
        points,
        mismatches,
        confirmed_failures,
    })
}

pub fn render_verify(report: &VerificationReport) -> String {
    let mut out = String::new();
    let c = &report.config;
    out.push_str(&format!(
        "verify {} (q={}, k={}, seed={}, samples={}, max-word-len={}, max-len={})\n",
        report.suite, c.q, c.k, c.seed, c.samples, c.max_word_len, c.max_len
    ));
    for check in &report.checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status} {}/{}: {} samples, {} failures\n",
            check.module, check.name, check.samples, check.failures
        ));
        if let Some(e) = &check.error {
            out.push_str(&format!("  error: {e}\n"));
        }
        if let Some(p) = &check.counterexample {
            out.push_str(&format!("  counterexample: {}\n", describe(p)));
        }
    }
    let failed = report.failed_checks().count();
    out.push_str(&format!(
        "{}: {} of {} checks passed\n",
        if report.passed { "PASS" } else { "FAIL" },
        report.checks.len() - failed,
        report.checks.len()
    ));
    out
}

fn describe(p: &Point) -> String {
    let mut parts: Vec<String> = p.inputs.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    if !p.inputs.words.is_empty() {
        let words: Vec<String> = p.inputs.words.iter().map(|w| format!("{w:?}")).collect();
        parts.push(format!("words=[{}]", words.join(", ")));
    }
    format!("{} | lhs {} | rhs {}", parts.join(" "), p.lhs, p.rhs)
}

pub fn render_replay(r: &ReplayReport) -> String {
    let mut out = String::new();
    for p in &r.points {
        let status = match (p.reproduced, p.holds) {
            (false, _) => "MISMATCH",
            (true, true) => "ok",
            (true, false) => "FAILS",
        };
        out.push_str(&format!(
            "{status} {} {}: lhs {} | rhs {}\n",
            p.check, p.role, p.lhs, p.rhs
        ));
    }
    for m in &r.mismatches {
        out.push_str(&format!("mismatch: {m}\n"));
    }
    out.push_str(&format!(
        "{}: {} points replayed, {} mismatches, {} confirmed failures\n",
        if r.passed { "PASS" } else { "FAIL" },
        r.points.len(),
        r.mismatches.len(),
        r.confirmed_failures
    ));
    out
}
