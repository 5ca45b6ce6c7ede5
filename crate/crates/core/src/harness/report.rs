//! Run reports in text and JSON form.

use std::fmt;

use serde::Serialize;

use super::suites::SuiteRecord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub config: String,
    pub construction: String,
    pub structure: String,
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub suites: Vec<SuiteRecord>,
}

impl RunReport {
    pub fn suite(&self, name: super::config::SuiteName) -> Option<&SuiteRecord> {
        self.suites.iter().find(|s| s.suite == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "config     {}", self.config)?;
        writeln!(f, "structure  {}", self.structure)?;
        writeln!(f, "seed {}, samples {}", self.seed, self.samples)?;
        for s in &self.suites {
            let status = if s.ok() { "pass" } else { "FAIL" };
            writeln!(f, "  {:<12} {:>6}/{:<6} {status}", s.suite.as_str(), s.passed, s.checks)?;
            if let Some(w) = &s.first_failure {
                writeln!(f, "      first failure: {w}")?;
            }
            for n in &s.notes {
                writeln!(f, "      {n}")?;
            }
        }
        write!(f, "{}", if self.passed { "all suites passed" } else { "some checks failed" })
    }
}
