use serde::{Deserialize, Serialize};

use crate::degseq::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The constructed graph and the enumerated optimizer agree only to
    /// within the decision tolerance, and their canonical codes match.
    TieResolvedByIsomorphism,
    /// Experiments that record outcomes without asserting them.
    ReportOnly,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::TieResolvedByIsomorphism => "tie-resolved-by-isomorphism",
            Status::ReportOnly => "report-only",
        }
    }

    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tag: String,
    /// Number of vertices of the graphs examined.
    pub order: usize,
    /// Extra parameter of the suite, such as the pendant count.
    pub parameter: Option<usize>,
    pub sequences: Vec<DegreeSequence>,
    /// Isomorphism classes (or sequence pairs) examined.
    pub classes: usize,
    pub optimum: Option<f64>,
    pub optimizer_code: Option<String>,
    pub constructed_code: Option<String>,
    pub status: Status,
    pub elapsed_ms: f64,
    pub details: Vec<String>,
    /// Witnesses against a recorded (not asserted) property.
    pub counterexamples: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(tag: &str, order: usize, sequences: Vec<DegreeSequence>) -> Self {
        VerificationReport {
            tag: tag.to_string(),
            order,
            parameter: None,
            sequences,
            classes: 0,
            optimum: None,
            optimizer_code: None,
            constructed_code: None,
            status: Status::Fail,
            elapsed_ms: 0.0,
            details: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        !self.status.is_failure()
    }

    /// Sequences joined for display, e.g. `(2,1,1)` or `(2,2,1,1)<(3,1,1,1)`.
    pub fn sequence_label(&self) -> String {
        let parts: Vec<String> = self.sequences.iter().map(ToString::to_string).collect();
        let mut s = parts.join("<");
        if let Some(p) = self.parameter {
            if !s.is_empty() {
                s.push(' ');
            }
            s.push_str(&format!("n={} k={p}", self.order));
        }
        s
    }
}
