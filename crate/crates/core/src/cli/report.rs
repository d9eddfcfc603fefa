use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
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

/// One verified property with the data needed to re-check it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witness: BTreeMap<String, String>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, ok: bool) -> Self {
        CheckRecord {
            name: name.into(),
            status: Status::from_bool(ok),
            detail: String::new(),
            witness: BTreeMap::new(),
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckRecord { name: name.into(), status: Status::Skipped, detail: reason.into(), witness: BTreeMap::new() }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    pub fn witness(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.witness.insert(key.into(), value.to_string());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSettings {
    pub cap: usize,
    pub field: String,
}

/// The machine-readable result of one CLI command.
///
/// Check records are kept sorted by name. `timing_ms` is only filled when requested, so that
/// reports are otherwise byte-identical across runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub settings: ReportSettings,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub results: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>, input: impl Into<String>, settings: ReportSettings) -> Self {
        Report {
            command: command.into(),
            input: input.into(),
            settings,
            results: BTreeMap::new(),
            checks: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl ToString) {
        self.results.insert(key.into(), value.to_string());
    }

    pub fn push(&mut self, check: CheckRecord) {
        let pos = self.checks.partition_point(|c| c.name <= check.name);
        self.checks.insert(pos, check);
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ =
            writeln!(out, "{} {} (cap {}, field {})", self.command, self.input, self.settings.cap, self.settings.field);
        for (k, v) in &self.results {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(out, "[{tag}] {}", c.name);
            if !c.detail.is_empty() {
                let _ = write!(out, ": {}", c.detail);
            }
            out.push('\n');
            for (k, v) in &c.witness {
                let _ = writeln!(out, "    {k}: {v}");
            }
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time: {ms} ms");
        }
        out
    }
}
