use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{show, tally, ClaimResult, Status, Value};

/// One report line. Field order is the serialized order.
#[derive(Debug, Serialize)]
pub struct ReportRow<'a> {
    pub claim_id: String,
    pub g_spec: &'a str,
    pub h_spec: &'a str,
    pub guard: bool,
    pub lhs: Option<serde_json::Value>,
    pub rhs: Option<serde_json::Value>,
    pub pass: Option<bool>,
    pub witness: Option<&'a str>,
    pub millis: u64,
    pub status: &'static str,
    pub note: Option<&'a str>,
}

impl ClaimResult {
    /// `millis` is zeroed unless `timings` is set, so that reports are
    /// reproducible byte for byte.
    pub fn row(&self, timings: bool) -> ReportRow<'_> {
        ReportRow {
            claim_id: self.claim.to_string(),
            g_spec: &self.g_spec,
            h_spec: &self.h_spec,
            guard: self.guard_satisfied,
            lhs: self.lhs.as_ref().map(json_value),
            rhs: self.rhs.as_ref().map(json_value),
            pass: self.pass(),
            witness: self.witness.as_deref(),
            millis: if timings { self.millis } else { 0 },
            status: self.status.as_str(),
            note: self.note.as_deref(),
        }
    }

    pub fn to_json_line(&self, timings: bool) -> String {
        serde_json::to_string(&self.row(timings)).expect("report rows serialize")
    }
}

/// Integers as numbers, fractions as `"p/q"` strings.
fn json_value(v: &Value) -> serde_json::Value {
    if v.is_integer() {
        serde_json::Value::from(*v.numer())
    } else {
        serde_json::Value::from(show(v))
    }
}

/// Status counts plus the failing and inconclusive instances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summary {
    pub counts: BTreeMap<Status, usize>,
    pub failures: Vec<String>,
    pub inconclusive: Vec<String>,
}

impl Summary {
    pub fn of(results: &[ClaimResult]) -> Self {
        let label = |r: &ClaimResult| format!("{} on ({}, {})", r.claim, r.g_spec, r.h_spec);
        Summary {
            counts: tally(results),
            failures: results
                .iter()
                .filter(|r| r.status == Status::Fail)
                .map(label)
                .collect(),
            inconclusive: results
                .iter()
                .filter(|r| r.status == Status::Inconclusive)
                .map(label)
                .collect(),
        }
    }

    pub fn count(&self, s: Status) -> usize {
        self.counts.get(&s).copied().unwrap_or(0)
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pass={} fail={} skipped={} inconclusive={}",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped),
            self.count(Status::Inconclusive)
        )?;
        for x in &self.failures {
            write!(f, "\nfail: {x}")?;
        }
        for x in &self.inconclusive {
            write!(f, "\ninconclusive: {x}")?;
        }
        Ok(())
    }
}
