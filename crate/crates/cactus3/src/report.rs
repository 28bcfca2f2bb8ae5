use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One verified identity at one size. Exact values are carried as strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    pub params: Value,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Reports of one verification run plus the first failure found, if any.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    pub reports: Vec<Report>,
    pub counterexample: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.reports.iter().all(|r| r.pass)
    }

    pub fn push(&mut self, report: Report) {
        self.reports.push(report);
    }

    /// Keeps only the first counterexample.
    pub fn fail(&mut self, what: impl FnOnce() -> String) {
        if self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }

    pub fn extend(&mut self, other: Outcome) {
        self.reports.extend(other.reports);
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("reports serialize") + "\n")
            .collect()
    }
}
