//! JSON shapes printed by the command line tool.

use penta_core::tracer::StripReport;
use penta_core::{ArcVertex, CyclicWord, OrbitPair, ProjPoint};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::suite::SuiteReport;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct FailureJson {
    pub case: String,
    pub detail: String,
}

/// One entry of a verification report; see `schema/verify-report.schema.json`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ReportJson {
    pub theorem: String,
    pub depth: usize,
    pub cases: usize,
    pub failures: Vec<FailureJson>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl From<&SuiteReport> for ReportJson {
    fn from(r: &SuiteReport) -> Self {
        ReportJson {
            theorem: r.report.theorem.to_string(),
            depth: r.report.depth,
            cases: r.report.cases,
            failures: r.report.failures.iter().map(|f| FailureJson { case: f.case.clone(), detail: f.detail.clone() }).collect(),
            elapsed_ms: r.elapsed_ms,
            data: r.data.clone(),
        }
    }
}

pub fn reports(rs: &[SuiteReport]) -> Vec<ReportJson> {
    rs.iter().map(ReportJson::from).collect()
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct WordJson {
    /// The representative produced by the computation.
    pub raw: String,
    /// The least rotation.
    pub canonical: String,
    pub letters: Vec<u8>,
}

impl From<&CyclicWord> for WordJson {
    fn from(w: &CyclicWord) -> Self {
        WordJson {
            raw: w.representative().to_string(),
            canonical: w.canonical().to_string(),
            letters: w.representative().letters().to_vec(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct DirectionJson {
    pub path: String,
    /// `a+b*phi` with reduced rationals, or `inf`.
    pub coordinate: String,
    pub approx: f64,
}

impl DirectionJson {
    pub fn new(v: &ArcVertex, x: &ProjPoint) -> Self {
        DirectionJson { path: v.to_string(), coordinate: x.to_string(), approx: x.to_f64() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PairJson {
    pub short: WordJson,
    pub long: WordJson,
    pub periods: [usize; 2],
    /// Equal periods, so short and long were ordered by least rotation.
    pub tie: bool,
}

impl From<&OrbitPair> for PairJson {
    fn from(o: &OrbitPair) -> Self {
        let (a, b) = o.periods();
        PairJson { short: (&o.short).into(), long: (&o.long).into(), periods: [a, b], tie: o.is_tie() }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct OracleJson {
    pub traced: PairJson,
    pub matches: bool,
    pub traces: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct OrbitsJson {
    pub direction: DirectionJson,
    pub orbits: PairJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct StripJson {
    pub word: WordJson,
    pub period: usize,
    pub side: usize,
    /// Start parameter along `side` of pentagon 0.
    pub t: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct StripsJson {
    pub direction: DirectionJson,
    pub short: StripJson,
    pub long: StripJson,
    pub traces: usize,
}

impl StripsJson {
    pub fn new(v: &ArcVertex, x: &ProjPoint, r: &StripReport) -> Self {
        let strip = |w: &CyclicWord, i: usize| StripJson {
            word: w.into(),
            period: w.len(),
            side: r.sample_points[i].side,
            t: r.sample_points[i].t.to_string(),
        };
        StripsJson {
            direction: DirectionJson::new(v, x),
            short: strip(&r.orbit_pair.short, 0),
            long: strip(&r.orbit_pair.long, 1),
            traces: r.traces,
        }
    }
}
