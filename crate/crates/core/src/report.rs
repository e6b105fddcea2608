//! Machine-readable verification reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::check::CheckReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    /// the claim this record verifies, as a stable descriptive id
    pub anchor: String,
    pub seed: u64,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub payload: Value,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
    /// wall-clock time; not part of the reproducible record set
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<SuiteReport>,
    pub summary: Summary,
}

impl Summary {
    fn of<'a>(records: impl Iterator<Item = &'a CheckRecord>) -> Summary {
        let mut s = Summary::default();
        for r in records {
            s.total += 1;
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
            }
        }
        s
    }
}

impl SuiteReport {
    pub fn new(suite: &str, records: Vec<CheckRecord>, elapsed_ms: u128) -> Self {
        SuiteReport {
            suite: suite.into(),
            summary: Summary::of(records.iter()),
            records,
            elapsed_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64, samples: usize, suites: Vec<SuiteReport>) -> Self {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.into(),
            seed,
            samples,
            summary: Summary::of(suites.iter().flat_map(|s| s.records.iter())),
            suites,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.suites.iter().flat_map(|s| s.records.iter())
    }
}

/// Collects records for one suite.
pub struct Recorder {
    pub seed: u64,
    records: Vec<CheckRecord>,
}

impl Recorder {
    pub fn new(seed: u64) -> Self {
        Recorder {
            seed,
            records: Vec::new(),
        }
    }

    pub fn record(&mut self, check_id: &str, anchor: &str, parameters: &[(&str, String)], ok: bool, payload: Value) {
        self.records.push(CheckRecord {
            check_id: check_id.into(),
            anchor: anchor.into(),
            seed: self.seed,
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            status: Status::from_bool(ok),
            payload,
        });
    }

    /// Records a [`CheckReport`], with its failing items as payload.
    pub fn record_report(&mut self, check_id: &str, anchor: &str, parameters: &[(&str, String)], report: &CheckReport) {
        let failures: Vec<_> = report.failed_items().collect();
        let payload = if failures.is_empty() {
            Value::Null
        } else {
            serde_json::to_value(failures).unwrap_or(Value::Null)
        };
        self.record(check_id, anchor, parameters, report.passed(), payload);
    }

    /// Records an error as a failure.
    pub fn record_error(&mut self, check_id: &str, anchor: &str, parameters: &[(&str, String)], err: &dyn std::fmt::Display) {
        self.record(check_id, anchor, parameters, false, Value::String(err.to_string()));
    }

    pub fn finish(self) -> Vec<CheckRecord> {
        self.records
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summaries_count_statuses() {
        let mut r = Recorder::new(3);
        r.record("a", "x", &[], true, Value::Null);
        r.record("b", "x", &[("t", "1/2".into())], false, Value::Null);
        let suite = SuiteReport::new("s", r.finish(), 0);
        assert_eq!(suite.summary, Summary { total: 2, passed: 1, failed: 1 });
        let report = VerificationReport::new("s", 3, 1, vec![suite]);
        assert!(!report.passed());
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"status\":\"fail\""));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
