//! JSON reports for single expressions.
//!
//! Keys appear in declaration order and every number is an integer, so a
//! report is byte-identical across runs with the same expression, seed and
//! tool version. Timings are the one exception and are opt-in.

use std::time::Instant;

use serde::Serialize;

use crate::chartab::{character_table, SerializedTable};
use crate::dsl::GroupExpr;
use crate::error::{Error, Result};
use crate::group::DEFAULT_BOUND;
use crate::vanishing::{
    classify_with_profile, verify_single_size_characterization, verify_vanishing_invariants,
    CharacterizationReport, ClassificationSummary, InvariantCheck, VanishingProfile,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub bound: usize,
    pub seed: u64,
    pub emit_table: bool,
    pub timings: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            bound: DEFAULT_BOUND,
            seed: 0,
            emit_table: false,
            timings: false,
        }
    }
}

/// Wall-clock milliseconds per stage.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub build_ms: u64,
    pub table_ms: u64,
    pub classify_ms: u64,
    pub invariants_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub expr: String,
    pub order: u64,
    pub class_count: usize,
    pub cs: Vec<u64>,
    pub vcs: Vec<u64>,
    pub classification: ClassificationSummary,
    pub invariant_checks: Vec<InvariantCheck>,
    pub characterization: CharacterizationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character_table: Option<SerializedTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
    pub seed: u64,
    pub tool_version: &'static str,
}

impl AnalysisReport {
    /// Whether any invariant or either characterization direction failed.
    pub fn has_failures(&self) -> bool {
        self.invariant_checks.iter().any(InvariantCheck::failed) || !self.characterization.consistent()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub expr: String,
    pub order: u64,
    pub vcs: Vec<u64>,
    pub invariant_checks: Vec<InvariantCheck>,
    pub characterization: CharacterizationReport,
    pub seed: u64,
    pub tool_version: &'static str,
}

impl VerifyReport {
    pub fn has_failures(&self) -> bool {
        self.invariant_checks.iter().any(InvariantCheck::failed) || !self.characterization.consistent()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub expr: String,
    pub order: u64,
    pub class_count: usize,
    pub dixon_prime: u64,
    pub table: SerializedTable,
    pub tool_version: &'static str,
}

fn millis(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

/// Builds the group, computes its table and vanishing profile, classifies
/// it and runs the invariant suite.
pub fn analyze(expr: &GroupExpr, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut timings = Timings::default();
    let t = Instant::now();
    let g = expr.build(opts.bound)?;
    timings.build_ms = millis(t);

    let t = Instant::now();
    let table = character_table(&g)?;
    let profile = VanishingProfile::from_table(&table);
    timings.table_ms = millis(t);

    let t = Instant::now();
    let classification = classify_with_profile(&g, &profile, opts.seed);
    timings.classify_ms = millis(t);

    let t = Instant::now();
    let invariant_checks = verify_vanishing_invariants(&g, &profile, opts.seed);
    let characterization = verify_single_size_characterization(&g, &profile, opts.seed);
    timings.invariants_ms = millis(t);

    Ok(AnalysisReport {
        expr: expr.to_string(),
        order: g.order() as u64,
        class_count: table.len(),
        cs: profile.cs.clone(),
        vcs: profile.vcs.clone(),
        classification: classification.summary(),
        invariant_checks,
        characterization,
        character_table: opts.emit_table.then(|| table.serialize()),
        timings: opts.timings.then_some(timings),
        seed: opts.seed,
        tool_version: TOOL_VERSION,
    })
}

/// Invariant suite and characterization check only.
pub fn verify(expr: &GroupExpr, opts: &AnalyzeOptions) -> Result<VerifyReport> {
    let g = expr.build(opts.bound)?;
    let profile = VanishingProfile::from_table(&character_table(&g)?);
    Ok(VerifyReport {
        expr: expr.to_string(),
        order: g.order() as u64,
        vcs: profile.vcs.clone(),
        invariant_checks: verify_vanishing_invariants(&g, &profile, opts.seed),
        characterization: verify_single_size_characterization(&g, &profile, opts.seed),
        seed: opts.seed,
        tool_version: TOOL_VERSION,
    })
}

/// The character table alone.
pub fn chartab(expr: &GroupExpr, opts: &AnalyzeOptions) -> Result<TableReport> {
    let g = expr.build(opts.bound)?;
    let table = character_table(&g)?;
    Ok(TableReport {
        expr: expr.to_string(),
        order: g.order() as u64,
        class_count: table.len(),
        dixon_prime: table.dixon_prime,
        table: table.serialize(),
        tool_version: TOOL_VERSION,
    })
}

#[derive(Serialize)]
struct Diagnostic<'a> {
    kind: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    column: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<&'a [String]>,
}

#[derive(Serialize)]
struct ErrorEnvelope<'a> {
    error: Diagnostic<'a>,
    tool_version: &'static str,
}

/// Structured JSON form of an error.
pub fn error_json(e: &Error) -> String {
    let (line, column, expected) = match e {
        Error::Parse {
            line,
            column,
            expected,
        } => (Some(*line), Some(*column), Some(expected.as_slice())),
        _ => (None, None, None),
    };
    let env = ErrorEnvelope {
        error: Diagnostic {
            kind: e.kind(),
            message: e.to_string(),
            line,
            column,
            expected,
        },
        tool_version: TOOL_VERSION,
    };
    serde_json::to_string_pretty(&env).expect("diagnostics serialize")
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_group_expr;

    fn run(text: &str) -> AnalysisReport {
        analyze(&parse_group_expr(text).unwrap(), &AnalyzeOptions::default()).unwrap()
    }

    #[test]
    fn sl23_report() {
        let r = run("SL23");
        assert_eq!(r.vcs, vec![4, 6]);
        assert_eq!(r.classification.case.as_str(), "not_single_vcs");
        assert!(!r.has_failures());
    }

    #[test]
    fn cyclic_report_has_no_vanishing() {
        let r = run("C(12)");
        assert!(r.vcs.is_empty());
        assert_eq!(r.classification.case.as_str(), "not_single_vcs");
    }

    #[test]
    fn key_order_and_determinism() {
        let a = to_json(&run("sdp(3^3,ES(2,+),maxker)"));
        let b = to_json(&run("sdp(3^3, ES(2,+), maxker)"));
        assert_eq!(a, b);
        let keys: Vec<usize> = ["\"expr\"", "\"order\"", "\"class_count\"", "\"cs\"", "\"vcs\"", "\"classification\"", "\"seed\"", "\"tool_version\""]
            .iter()
            .map(|k| a.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(!a.contains("timings"));
        assert!(a.contains("\"vcs\": [\n    18\n  ]"));
        assert!(a.contains("sylow_over_complement"));
    }

    #[test]
    fn parse_errors_become_structured_json() {
        let e = parse_group_expr("C(").unwrap_err();
        let j: serde_json::Value = serde_json::from_str(&error_json(&e)).unwrap();
        assert_eq!(j["error"]["kind"], "ParseError");
        assert_eq!(j["error"]["column"], 3);
    }
}
