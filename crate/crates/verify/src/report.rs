use std::collections::BTreeMap;
use std::time::Duration;

use polyperm_core::format::{parse_support, write_support};
use polyperm_core::SupportSet;
use serde::{Deserialize, Serialize};

use crate::config::ConfigEcho;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Confirmed,
    Refuted,
    BudgetExhausted,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Confirmed => 0,
            Status::Refuted => 1,
            Status::BudgetExhausted => 3,
        }
    }
}

/// A certificate that replay can re-check on its own: a labelled tuple of
/// supports whose meaning depends on `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: String,
    pub label: String,
    pub supports: Vec<String>,
}

impl Witness {
    pub fn new(kind: &str, label: impl Into<String>, supports: &[SupportSet]) -> Witness {
        Witness { kind: kind.into(), label: label.into(), supports: supports.iter().map(write_support).collect() }
    }

    pub fn parsed(&self) -> Result<Vec<SupportSet>> {
        Ok(self.supports.iter().map(|s| parse_support(s)).collect::<polyperm_core::Result<_>>()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub claim_id: String,
    pub status: Status,
    /// Canonical forms in `polysupp` text, sorted and duplicate-free.
    pub representatives: Vec<String>,
    pub counts: BTreeMap<String, u64>,
    pub search_stats: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    pub config_echo: ConfigEcho,
    /// Wall time; kept out of the file so reports are byte-stable.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl EnumerationReport {
    pub fn new(claim_id: &str, echo: ConfigEcho) -> EnumerationReport {
        EnumerationReport {
            claim_id: claim_id.into(),
            status: Status::Confirmed,
            representatives: Vec::new(),
            counts: BTreeMap::new(),
            search_stats: BTreeMap::new(),
            witnesses: Vec::new(),
            notes: Vec::new(),
            config_echo: echo,
            elapsed: Duration::ZERO,
        }
    }

    pub fn set_representatives(&mut self, mut reps: Vec<SupportSet>) {
        reps.sort();
        reps.dedup();
        self.representatives = reps.iter().map(write_support).collect();
    }

    pub fn representatives(&self) -> Result<Vec<SupportSet>> {
        Ok(self.representatives.iter().map(|s| parse_support(s)).collect::<polyperm_core::Result<_>>()?)
    }

    pub fn count(&mut self, key: &str, value: impl TryInto<u64>) {
        self.counts.insert(key.into(), value.try_into().unwrap_or(u64::MAX));
    }

    pub fn stat(&mut self, key: &str, value: impl TryInto<u64>) {
        self.search_stats.insert(key.into(), value.try_into().unwrap_or(u64::MAX));
    }

    /// Lowers the status to `Refuted` unless the budget already ran out.
    pub fn refute(&mut self, note: impl Into<String>) {
        if self.status == Status::Confirmed {
            self.status = Status::Refuted;
        }
        self.notes.push(note.into());
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<EnumerationReport> {
        Ok(serde_json::from_str(text)?)
    }
}
