//! Structured verification records tying a claim to a pass/fail status with
//! witness or counterexample data.

use serde::Serialize;

use crate::claims;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

/// Where the expected value of a check comes from: a stated result being
/// reproduced, a rule derived here and verified by independent oracle, or a
/// triviality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Stated,
    DerivedOracle,
    Trivial,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    /// Gallery item this entry belongs to.
    pub item: String,
    /// Sub-check identifier, unique within the item.
    pub check: String,
    /// Key into the claim registry ([`claims::CLAIMS`]).
    pub claim: &'static str,
    pub status: Status,
    pub provenance: Provenance,
    /// Witness or counterexample payload, canonically serialized.
    pub detail: String,
    /// Minimal reproduction command line; always present on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repro: Option<String>,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub item: String,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new(item: impl Into<String>) -> Self {
        VerificationReport {
            item: item.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        check: impl Into<String>,
        claim: &'static str,
        provenance: Provenance,
        status: Status,
        detail: impl Into<String>,
    ) {
        debug_assert!(claims::lookup(claim).is_some(), "unregistered claim id: {claim}");
        let check = check.into();
        let repro = match status {
            Status::Fail => Some(format!("skprimes verify-gallery --item {}", self.item)),
            _ => None,
        };
        self.entries.push(ReportEntry {
            item: self.item.clone(),
            check,
            claim,
            status,
            provenance,
            detail: detail.into(),
            repro,
            millis: 0,
        });
    }

    pub fn pass(
        &mut self,
        check: impl Into<String>,
        claim: &'static str,
        provenance: Provenance,
        ok: bool,
        detail: impl Into<String>,
    ) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(check, claim, provenance, status, detail);
    }

    pub fn status(&self) -> Status {
        if self.entries.iter().any(|e| e.status == Status::Fail) {
            Status::Fail
        } else if self.entries.iter().any(|e| e.status == Status::Unknown) {
            Status::Unknown
        } else {
            Status::Pass
        }
    }

    pub fn all_pass(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn failures(&self) -> Vec<&ReportEntry> {
        self.entries
            .iter()
            .filter(|e| e.status == Status::Fail)
            .collect()
    }
}
