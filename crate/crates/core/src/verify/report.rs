use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TheoremId {
    /// Period recurrence along an edge.
    T1,
    /// Arithmetic progression of periods around a center.
    T2,
    /// Concatenation law along an edge.
    T3,
    /// Splittings around a center.
    T4,
    /// Common beginning of the split long words (never gating).
    Conjecture,
    /// Tracer against the rewriting recursion.
    Oracle,
}

impl TheoremId {
    pub const THEOREMS: [TheoremId; 4] = [TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1 => "1",
            TheoremId::T2 => "2",
            TheoremId::T3 => "3",
            TheoremId::T4 => "4",
            TheoremId::Conjecture => "conjecture",
            TheoremId::Oracle => "oracle",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "1" => TheoremId::T1,
            "2" => TheoremId::T2,
            "3" => TheoremId::T3,
            "4" => TheoremId::T4,
            "conjecture" => TheoremId::Conjecture,
            "oracle" => TheoremId::Oracle,
            _ => return Err(Error::Parse(s.into())),
        })
    }
}

/// One failed case with what is needed to reproduce it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Failure {
    /// The edge prefix or the center path.
    pub case: String,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub depth: usize,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(theorem: TheoremId, depth: usize) -> Self {
        VerificationReport { theorem, depth, cases: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, case: impl Into<String>, outcome: Result<(), String>) {
        self.cases += 1;
        if let Err(detail) = outcome {
            self.failures.push(Failure { case: case.into(), detail });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
