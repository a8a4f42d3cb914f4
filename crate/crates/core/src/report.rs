//! Claim-by-claim verdicts produced by the verification routines.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Claim {
    pub statement: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Wall-clock time of this step.
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct CheckReport {
    pub claims: Vec<Claim>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn claim(&self, statement: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.statement == statement)
    }

    pub fn push(&mut self, statement: impl Into<String>, passed: bool, detail: Option<String>, elapsed_ms: u64) {
        self.claims.push(Claim { statement: statement.into(), passed, detail, elapsed_ms });
    }

    /// Runs `check`, timing it, and records its boolean verdict.
    pub fn check(&mut self, statement: impl Into<String>, check: impl FnOnce() -> Result<bool>) -> Result<bool> {
        let start = Instant::now();
        let passed = check()?;
        self.push(statement, passed, None, start.elapsed().as_millis() as u64);
        Ok(passed)
    }

    /// Like [`check`](Self::check) with a detail string.
    pub fn check_detail(
        &mut self,
        statement: impl Into<String>,
        check: impl FnOnce() -> Result<(bool, String)>,
    ) -> Result<bool> {
        let start = Instant::now();
        let (passed, detail) = check()?;
        self.push(statement, passed, Some(detail), start.elapsed().as_millis() as u64);
        Ok(passed)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.claims.extend(other.claims);
    }
}
