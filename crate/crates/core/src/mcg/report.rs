use serde::Serialize;

use crate::automorphism::FreeEndomorphism;
use crate::error::Result;
use crate::freegroup::Word;

/// One disagreement: the label of what was compared and both reduced words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub generator: String,
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub name: String,
    pub holds: bool,
    pub mismatches: Vec<Mismatch>,
}

impl CaseReport {
    pub fn new(name: impl Into<String>, mismatches: Vec<Mismatch>) -> Self {
        CaseReport { name: name.into(), holds: mismatches.is_empty(), mismatches }
    }

    /// A yes/no check with no words to show.
    pub fn flag(name: impl Into<String>, holds: bool) -> Self {
        CaseReport { name: name.into(), holds, mismatches: Vec::new() }
    }

    /// Compares two endomorphisms generator by generator.
    pub fn compare(name: impl Into<String>, lhs: &FreeEndomorphism, rhs: &FreeEndomorphism) -> Result<Self> {
        let mismatches = lhs
            .mismatches(rhs)?
            .into_iter()
            .map(|(s, l, r)| Mismatch { generator: s.to_string(), lhs: l, rhs: r })
            .collect();
        Ok(CaseReport::new(name, mismatches))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub genus: u32,
    pub cases: Vec<CaseReport>,
}

impl VerificationReport {
    pub fn new(genus: u32) -> Self {
        VerificationReport { genus, cases: Vec::new() }
    }

    pub fn holds(&self) -> bool {
        self.cases.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseReport> {
        self.cases.iter().filter(|c| !c.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
