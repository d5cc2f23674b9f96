//! Machine-readable scenario reports. Reports are deterministic for a
//! fixed config and seeds; wall-clock fields are kept separate so that
//! everything else can be compared byte for byte.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    Aborted,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct EngineStats {
    /// Groebner bases computed while running the scenario.
    pub bases: u64,
    /// Total S-pairs considered across those bases.
    pub pairs: u64,
    /// Largest reduced basis encountered.
    pub max_basis: usize,
}

impl EngineStats {
    pub fn absorb(&mut self, stats: &comvar::GbStats) {
        self.bases += 1;
        self.pairs += stats.pairs_considered;
        self.max_basis = self.max_basis.max(stats.basis_size);
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub status: Status,
    pub measured: Value,
    pub expected: Value,
    /// Where the expected value comes from: a paper claim, a trivial
    /// consequence, or a derived computation.
    pub provenance: String,
    /// Which engine and oracle operations produced the measurement.
    pub method: String,
    pub seeds: Vec<u64>,
    pub engine: EngineStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Wall-clock only; excluded from determinism comparisons.
    pub runtime_ms: u64,
}

impl Report {
    /// The report with volatile timing zeroed, for byte comparisons.
    pub fn stable_view(&self) -> Report {
        let mut copy = self.clone();
        copy.runtime_ms = 0;
        copy
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub generated_at_ms: u128,
    pub reports: Vec<Report>,
    pub summary: Summary,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
    pub aborted: usize,
}

impl Summary {
    pub fn of(reports: &[Report]) -> Summary {
        Summary {
            total: reports.len(),
            pass: reports.iter().filter(|r| r.status == Status::Pass).count(),
            fail: reports.iter().filter(|r| r.status == Status::Fail).count(),
            error: reports.iter().filter(|r| r.status == Status::Error).count(),
            aborted: reports
                .iter()
                .filter(|r| r.status == Status::Aborted)
                .count(),
        }
    }
}
