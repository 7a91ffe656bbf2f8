//! Per-check verification reports.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationRecord {
    /// 1-based line of the graph in the input stream.
    pub line: usize,
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListedGraph {
    pub line: usize,
    pub graph6: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub in_scope: usize,
    pub graphs_with_violations: usize,
    pub tallies: BTreeMap<String, u64>,
    /// Graphs a check singles out (bound attained, class count hit, ...), by line.
    pub listed: Vec<ListedGraph>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub statement: String,
    pub inputs_processed: usize,
    /// Sorted by input line.
    pub violations: Vec<ViolationRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, key: &str) -> u64 {
        self.summary.tallies.get(key).copied().unwrap_or(0)
    }

    /// One line: status, id and counts.
    pub fn headline(&self) -> String {
        format!(
            "{} {}: {} inputs, {} in scope, {} violations",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check_id,
            self.inputs_processed,
            self.summary.in_scope,
            self.violations.len()
        )
    }
}
