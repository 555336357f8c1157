//! Structured run reports.
//!
//! Every subcommand builds one `RunReport`. The JSON form serializes the
//! struct as-is; the text form renders from exactly the same fields, so the
//! JSON output is a faithful superset of the text output. Reports carry no
//! wall-clock time: fixed inputs and flags give byte-identical reports, and
//! human-readable timing belongs on stderr.

use crate::colouring::{Colouring, InferredColouring};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// The outcome of one command: named values, witnesses, and the chain of
/// bounds or checks that established them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunReport {
    /// Echo of the parsed command line.
    pub command: String,
    /// Named integer results, e.g. `psi`, `chi`, `order`.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, i64>,
    /// Named yes/no results, e.g. `equivalent`, `proper`, `complete`.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub answers: BTreeMap<String, bool>,
    /// Witness colouring: one `<vertex>:<colour>` entry per vertex, with
    /// inferred colours written `<vertex>:<magnitude><+|->`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// Certification chain: one line per bound or check, in the order the
    /// facts were established.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub chain: Vec<String>,
    /// Search nodes spent, when a search ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    /// Harness outcome, for `check` runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub harness: Option<HarnessReport>,
    /// Why the run stopped early, when it did.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stopped: Option<String>,
}

/// Outcome of the theorem-checking harness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub seed: u64,
    pub max_n: usize,
    pub trials: u64,
    pub suites: Vec<SuiteOutcome>,
}

/// One property suite: how many checks ran and the first violation, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub checks: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

/// A failed property with a minimized counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// The property that failed.
    pub property: String,
    /// Minimized counterexample, in graph file form.
    pub graph: String,
    /// What was observed against what was required.
    pub detail: String,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            ..RunReport::default()
        }
    }

    pub fn record(&mut self, name: &str, value: i64) {
        self.values.insert(name.to_string(), value);
    }

    pub fn answer(&mut self, name: &str, yes: bool) {
        self.answers.insert(name.to_string(), yes);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.chain.push(line.into());
    }

    pub fn set_witness_plain(&mut self, phi: &Colouring) {
        self.witness = Some(witness_entries_plain(phi));
    }

    pub fn set_witness_inferred(&mut self, gamma: &InferredColouring) {
        self.witness = Some(witness_entries_inferred(gamma));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The human-readable form. Every line is rendered from a serialized
    /// field, never from state outside the report.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (name, value) in &self.values {
            writeln!(out, "{name} = {value}").unwrap();
        }
        for (name, yes) in &self.answers {
            writeln!(out, "{name}: {}", if *yes { "yes" } else { "no" }).unwrap();
        }
        if let Some(witness) = &self.witness {
            writeln!(out, "witness: {}", witness.join(" ")).unwrap();
        }
        if !self.chain.is_empty() {
            writeln!(out, "chain:").unwrap();
            for line in &self.chain {
                writeln!(out, "  {line}").unwrap();
            }
        }
        if let Some(nodes) = self.nodes {
            writeln!(out, "nodes: {nodes}").unwrap();
        }
        if let Some(harness) = &self.harness {
            writeln!(
                out,
                "harness: seed {} max-n {} trials {}",
                harness.seed, harness.max_n, harness.trials
            )
            .unwrap();
            for suite in &harness.suites {
                match &suite.violation {
                    None => {
                        writeln!(out, "  suite {}: {} checks, ok", suite.name, suite.checks)
                            .unwrap();
                    }
                    Some(v) => {
                        writeln!(
                            out,
                            "  suite {}: {} checks, VIOLATED {}",
                            suite.name, suite.checks, v.property
                        )
                        .unwrap();
                        writeln!(out, "    {}", v.detail).unwrap();
                        for line in v.graph.lines() {
                            writeln!(out, "    | {line}").unwrap();
                        }
                    }
                }
            }
        }
        if let Some(stopped) = &self.stopped {
            writeln!(out, "stopped: {stopped}").unwrap();
        }
        out
    }
}

/// Witness entries for a plain colouring: `<vertex>:<colour>`.
pub fn witness_entries_plain(phi: &Colouring) -> Vec<String> {
    (0..phi.len()).map(|v| format!("{v}:{}", phi.get(v))).collect()
}

/// Witness entries for an inferred colouring: `<vertex>:<magnitude><+|->`.
pub fn witness_entries_inferred(gamma: &InferredColouring) -> Vec<String> {
    (0..gamma.len())
        .map(|v| {
            let (m, f) = gamma.get(v);
            format!("{v}:{m}{f}")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::Flag;

    fn sample() -> RunReport {
        let mut report = RunReport::new("psi fixtures/k5_negative.sg");
        report.record("psi", 2);
        report.record("order", 5);
        report.answer("complete", true);
        report.set_witness_inferred(
            &InferredColouring::new(
                2,
                vec![
                    (1, Flag::Plus),
                    (1, Flag::Minus),
                    (1, Flag::Minus),
                    (1, Flag::Minus),
                    (1, Flag::Minus),
                ],
            )
            .unwrap(),
        );
        report.note("upper bound 2: largest k with |E(K*_k)| <= 10 is 6, order caps at 5");
        report.note("lower bound 2: witness verified complete");
        report.nodes = Some(17);
        report
    }

    #[test]
    fn text_renders_only_serialized_fields() {
        let report = sample();
        let text = report.render_text();
        let json = report.to_json();
        assert!(text.contains("command: psi fixtures/k5_negative.sg"));
        assert!(text.contains("psi = 2"));
        assert!(text.contains("order = 5"));
        assert!(text.contains("complete: yes"));
        assert!(text.contains("0:1+ 1:1- 2:1- 3:1- 4:1-"));
        assert!(text.contains("lower bound 2: witness verified complete"));
        assert!(text.contains("nodes: 17"));
        for key in ["\"psi\": 2", "\"order\": 5", "\"complete\": true", "\"nodes\": 17"] {
            assert!(json.contains(key), "json lacks {key}");
        }
        assert!(json.contains("0:1+"));
    }

    #[test]
    fn json_is_deterministic_for_equal_reports() {
        assert_eq!(sample().to_json(), sample().to_json());
        assert_eq!(sample(), sample());
    }

    #[test]
    fn empty_sections_are_omitted_from_json() {
        let report = RunReport::new("chi g.sg");
        let json = report.to_json();
        for absent in ["witness", "chain", "nodes", "harness", "stopped", "values", "answers"] {
            assert!(!json.contains(absent), "json should omit {absent}");
        }
    }

    #[test]
    fn harness_section_renders_violations_with_graph_lines() {
        let mut report = RunReport::new("check --seed 7");
        report.harness = Some(HarnessReport {
            seed: 7,
            max_n: 4,
            trials: 10,
            suites: vec![
                SuiteOutcome { name: "switching".into(), checks: 10, violation: None },
                SuiteOutcome {
                    name: "bounds".into(),
                    checks: 3,
                    violation: Some(Violation {
                        property: "vertex removal drops psi by at most 2".into(),
                        graph: "sg 2\n0 1 -\n".into(),
                        detail: "psi 2 fell to 0 at vertex 1".into(),
                    }),
                },
            ],
        });
        let text = report.render_text();
        assert!(text.contains("suite switching: 10 checks, ok"));
        assert!(text.contains("VIOLATED vertex removal drops psi by at most 2"));
        assert!(text.contains("| sg 2"));
        assert!(report.to_json().contains("\"sg 2\\n0 1 -\\n\""));
    }
}
