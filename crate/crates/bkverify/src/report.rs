//! Newline-delimited JSON records.
//!
//! Every line is one self-contained object tagged by `"record"`: a `config`
//! header first, then `graph` or `error` records in input order, then a
//! `summary`.

use std::collections::BTreeMap;

use bkverify_core::checks::Verdict;
use serde::{Serialize, Serializer};

fn verdict_str<S: Serializer>(v: &Verdict, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(v.as_str())
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    #[serde(serialize_with = "verdict_str")]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    /// χ equals the bound.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub tight: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    /// Position in the input stream, from 0.
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub omega: Option<usize>,
    pub clique: Option<Vec<usize>>,
    pub chi: Option<usize>,
    /// 1-based colors, vertex by vertex.
    pub coloring: Option<Vec<u32>>,
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated_pattern: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub checks: Vec<CheckResult>,
    #[serde(serialize_with = "verdict_str")]
    pub status: Verdict,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    pub index: usize,
    pub line: Option<usize>,
    pub input: String,
    pub message: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub undecided: usize,
}

impl VerdictCounts {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skipped => self.skipped += 1,
            Verdict::Undecided => self.undecided += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped + self.undecided
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub errors: usize,
    pub members: usize,
    /// Overall status per graph; each graph is counted exactly once.
    pub status: VerdictCounts,
    pub checks: BTreeMap<&'static str, VerdictCounts>,
    /// Passing checks whose bound equals χ.
    pub tight: BTreeMap<&'static str, usize>,
}

impl Summary {
    pub fn from_reports(reports: &[VerificationReport], errors: usize) -> Self {
        let mut s = Summary {
            graphs: reports.len(),
            errors,
            ..Summary::default()
        };
        for r in reports {
            s.members += r.member as usize;
            s.status.add(r.status);
            for c in &r.checks {
                s.checks.entry(c.name).or_default().add(c.verdict);
                if c.tight {
                    *s.tight.entry(c.name).or_default() += 1;
                }
            }
        }
        s
    }

    pub fn clean(&self, allow_undecided: bool) -> bool {
        self.errors == 0 && self.status.fail == 0 && (allow_undecided || self.status.undecided == 0)
    }
}

/// The run configuration, printed first so a run can be reproduced.
#[derive(Debug, Clone, Serialize)]
pub struct RunHeader {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub class: String,
    pub budget_secs: f64,
    pub workers: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub options: BTreeMap<&'static str, String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record<'a> {
    Config(&'a RunHeader),
    Graph(&'a VerificationReport),
    Error(&'a ErrorRecord),
    Summary(&'a Summary),
}

impl Record<'_> {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_tagged_single_lines() {
        let e = ErrorRecord {
            index: 0,
            line: Some(3),
            input: "B!".into(),
            message: "bad".into(),
        };
        let line = Record::Error(&e).to_line();
        assert!(!line.contains('\n'));
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(v["record"], "error");
        assert_eq!(v["line"], 3);
    }
}
