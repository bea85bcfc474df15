//! Machine-readable verification reports. The JSON rendering is
//! deterministic for a fixed configuration: timings are kept out of the
//! report and emitted on a side channel instead.

use serde::{Deserialize, Serialize};

use crate::config::RunConfig;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reserved for recorded reference discrepancies (sign conventions,
    /// normalization scales, the π vs π/2 constant): the measured value is
    /// trusted and the mismatch is preserved, not failed.
    Flagged,
}

/// Direction of the residual comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cmp {
    /// Pass when `residual ≤ tolerance` (the default).
    AtMost,
    /// Pass when `residual ≥ tolerance` (rates, power checks).
    AtLeast,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    /// Stable id of the form `module.operation.property`.
    pub id: String,
    /// What identity is being measured, in plain math.
    pub anchor: String,
    pub status: Status,
    pub residual: f64,
    pub tolerance: f64,
    pub cmp: Cmp,
}

impl CheckRecord {
    pub fn at_most(id: &str, anchor: &str, residual: f64, tolerance: f64) -> Self {
        let status = if residual.is_finite() && residual <= tolerance {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            id: id.into(),
            anchor: anchor.into(),
            status,
            residual,
            tolerance,
            cmp: Cmp::AtMost,
        }
    }

    pub fn at_least(id: &str, anchor: &str, residual: f64, tolerance: f64) -> Self {
        let status = if residual.is_finite() && residual >= tolerance {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            id: id.into(),
            anchor: anchor.into(),
            status,
            residual,
            tolerance,
            cmp: Cmp::AtLeast,
        }
    }

    pub fn flagged(id: &str, anchor: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Flagged,
            residual,
            tolerance,
            cmp: Cmp::AtMost,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub flagged: usize,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: RunConfig,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(config: RunConfig, checks: Vec<CheckRecord>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Flagged => summary.flagged += 1,
            }
        }
        Self {
            config,
            checks,
            summary,
        }
    }

    pub fn all_green(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn parse_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Wall-clock timings per check id; the non-deterministic side channel.
#[derive(Clone, Debug, Default)]
pub struct Timings(pub Vec<(String, f64)>);

impl Timings {
    pub fn push(&mut self, id: &str, millis: f64) {
        self.0.push((id.into(), millis));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let cfg = RunConfig::default();
        let report = VerificationReport::new(
            cfg,
            vec![
                CheckRecord::at_most("m.op.p", "identity holds", 1e-12, 1e-10),
                CheckRecord::at_least("m.op.rate", "rate >= 2", 2.01, 1.9),
                CheckRecord::flagged("m.op.q", "known discrepancy", 0.5, 1e-10),
            ],
        );
        let text = report.render_json();
        let back = VerificationReport::parse_json(&text).unwrap();
        assert_eq!(report, back);
        assert_eq!(back.summary.passed, 2);
        assert_eq!(back.summary.flagged, 1);
        assert!(back.all_green());
    }

    #[test]
    fn failing_check_marks_report() {
        let r = CheckRecord::at_most("x.y.z", "too big", 1.0, 1e-3);
        assert_eq!(r.status, Status::Fail);
        let rep = VerificationReport::new(RunConfig::default(), vec![r]);
        assert!(!rep.all_green());
    }
}
