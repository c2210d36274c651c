//! Check results, reports, and their JSON / text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub suite: String,
    pub kind: CheckKind,
    pub status: Status,
    /// Exact checks report `0` on pass and leave this empty on failure.
    pub residual: Option<f64>,
    pub tol: Option<f64>,
    pub params: BTreeMap<String, String>,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    /// A deliberately perturbed identity: `pass` means the perturbation was detected.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub negative_control: bool,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, suite: &str, kind: CheckKind) -> Self {
        Self {
            name: name.into(),
            suite: suite.to_string(),
            kind,
            status: Status::Pass,
            residual: None,
            tol: None,
            params: BTreeMap::new(),
            ms: 0,
            detail: None,
            note: None,
            negative_control: false,
        }
    }

    pub fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigSnapshot {
    pub digits: u32,
    pub weights: [u32; 2],
    pub tol: f64,
    pub suites: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: ConfigSnapshot,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    #[serde(default)]
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn new(config: ConfigSnapshot, checks: Vec<CheckResult>, diagnostics: Vec<String>) -> Self {
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Error => summary.error += 1,
            }
        }
        Self { config, checks, summary, diagnostics }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.pass == self.summary.total
    }

    /// 0 all pass, 1 any failure, 2 any error.
    pub fn exit_code(&self) -> i32 {
        if self.summary.error > 0 {
            2
        } else if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn find(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with wall times zeroed, for byte comparison across runs.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.ms = 0;
        }
        r.to_json()
    }

    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        let _ = writeln!(out, "{:<10} {:<width$} {:<6} {:>10} {:>10} {:>8}", "suite", "name", "status", "residual", "tol", "ms");
        for c in &self.checks {
            let num = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.2e}"));
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            let _ = writeln!(
                out,
                "{:<10} {:<width$} {:<6} {:>10} {:>10} {:>8}",
                c.suite,
                c.name,
                status,
                num(c.residual),
                num(c.tol),
                c.ms
            );
            if c.status != Status::Pass {
                if let Some(d) = &c.detail {
                    let _ = writeln!(out, "    {d}");
                }
            }
        }
        for d in &self.diagnostics {
            let _ = writeln!(out, "note: {d}");
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} checks: {} pass, {} fail, {} error", s.total, s.pass, s.fail, s.error);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snap() -> ConfigSnapshot {
        ConfigSnapshot { digits: 50, weights: [5, 6], tol: 1e-30, suites: vec!["exact".into()] }
    }

    #[test]
    fn exit_codes_and_summary() {
        let ok = CheckResult::new("a", "exact", CheckKind::Exact);
        let mut bad = CheckResult::new("b", "exact", CheckKind::Exact);
        bad.status = Status::Fail;
        let mut err = CheckResult::new("c", "exact", CheckKind::Numeric);
        err.status = Status::Error;
        assert_eq!(Report::new(snap(), vec![ok.clone()], vec![]).exit_code(), 0);
        let r = Report::new(snap(), vec![ok.clone(), bad.clone()], vec![]);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.summary, Summary { total: 2, pass: 1, fail: 1, error: 0 });
        assert_eq!(Report::new(snap(), vec![ok, bad, err], vec![]).exit_code(), 2);
    }

    #[test]
    fn json_round_trip_and_canonical_form() {
        let mut a = CheckResult::new("a", "theorem", CheckKind::Numeric).param("l", 5);
        a.residual = Some(1e-40);
        a.tol = Some(1e-30);
        a.ms = 17;
        let r = Report::new(snap(), vec![a], vec!["x".into()]);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let mut r2 = r.clone();
        r2.checks[0].ms = 99;
        assert_ne!(r.to_json(), r2.to_json());
        assert_eq!(r.canonical_json(), r2.canonical_json());
        assert!(r.to_text().contains("1 checks: 1 pass"));
    }
}
