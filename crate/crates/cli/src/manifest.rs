//! Run manifests: what was asked, with which budget, and how every case ended.
//! Wall-clock timings live in a sidecar file so the manifest itself is
//! byte-identical across identical invocations.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;

use crate::instance::BudgetEcho;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped(budget)")]
    SkippedBudget,
    #[serde(rename = "rejected(range)")]
    RejectedRange,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped(budget)",
            Status::RejectedRange => "rejected(range)",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleEcho {
    /// `min`, `bound <b>` or `g-extra <h>`.
    pub query: String,
    /// `certified`, `found`, `none` or `budget`.
    pub outcome: String,
    pub value: Option<usize>,
    pub lower_bound: usize,
    pub subsets_checked: u64,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub predicted: Option<usize>,
    pub constructed: Option<usize>,
    pub verified: Option<bool>,
    pub oracle: Option<OracleEcho>,
    pub status: Status,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub cases: usize,
    pub pass: usize,
    pub fail: usize,
    #[serde(rename = "skipped(budget)")]
    pub skipped_budget: usize,
    #[serde(rename = "rejected(range)")]
    pub rejected_range: usize,
}

impl Totals {
    pub fn tally(results: &[CaseResult]) -> Self {
        let mut t = Totals {
            cases: results.len(),
            ..Totals::default()
        };
        for r in results {
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::SkippedBudget => t.skipped_budget += 1,
                Status::RejectedRange => t.rejected_range += 1,
            }
        }
        t
    }

    /// Every row passed or was skipped for budget.
    pub fn ok(&self) -> bool {
        self.fail == 0 && self.rejected_range == 0
    }
}

impl fmt::Display for Totals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} cases: {} pass, {} fail, {} skipped(budget), {} rejected(range)",
            self.cases, self.pass, self.fail, self.skipped_budget, self.rejected_range
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub grid: Vec<String>,
    pub budget: BudgetEcho,
    pub outputs: BTreeMap<String, PathBuf>,
    pub results: Vec<CaseResult>,
    pub totals: Totals,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub total_secs: f64,
    pub cases: Vec<(String, f64)>,
}

/// The arguments this process was started with, minus the program path.
pub fn command_echo() -> Vec<String> {
    std::env::args().skip(1).collect()
}

/// Writes the manifest and its `.timing.json` sidecar.
pub fn write(path: &Path, manifest: &RunManifest, timing: &Timing) -> Result<()> {
    let mut text = serde_json::to_string_pretty(manifest)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    let side = timing_path(path);
    let mut text = serde_json::to_string_pretty(timing)?;
    text.push('\n');
    std::fs::write(&side, text).with_context(|| format!("writing {}", side.display()))
}

pub fn timing_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".timing.json");
    PathBuf::from(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(status: Status) -> CaseResult {
        CaseResult {
            case: "x".into(),
            predicted: None,
            constructed: None,
            verified: None,
            oracle: None,
            status,
            note: None,
        }
    }

    #[test]
    fn tally_and_exit_rule() {
        let t = Totals::tally(&[case(Status::Pass), case(Status::SkippedBudget)]);
        assert_eq!((t.cases, t.pass, t.skipped_budget), (2, 1, 1));
        assert!(t.ok());
        assert!(!Totals::tally(&[case(Status::Pass), case(Status::RejectedRange)]).ok());
        assert!(!Totals::tally(&[case(Status::Fail)]).ok());
    }

    #[test]
    fn statuses_serialize_as_displayed() {
        for s in [Status::Pass, Status::Fail, Status::SkippedBudget, Status::RejectedRange] {
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{s}\""));
        }
    }

    #[test]
    fn sidecar_name() {
        assert_eq!(timing_path(Path::new("out/run.json")), PathBuf::from("out/run.json.timing.json"));
    }
}
