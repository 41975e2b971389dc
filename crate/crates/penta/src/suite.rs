//! Bulk verification over every edge or center up to a depth.
//!
//! Depth `G` covers the edges whose new pentagon has generation at most `G`
//! (so the three new vertices have index length at most `G`), the centers
//! with index length `1..=G`, and for the oracle the vertices with index
//! length at most `G` together with the far endpoint.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use penta_core::surface::build_surface;
use penta_core::tracer::{strips_for_direction, StripOptions};
use penta_core::tree::{edges, enumerate_vertices, Edge};
use penta_core::verify::{
    check_prefix_conjecture, verify_theorem1, verify_theorem2, verify_theorem3, verify_theorem4, ConcatPattern,
    EdgeContext, FanContext, Side, TheoremId, VerificationReport,
};
use penta_core::{orbits_for_vertex, ArcVertex, IndexPath, OrbitPair};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cache::OrbitCache;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub depth: usize,
    pub theorems: Vec<TheoremId>,
    /// Neighbors on each side of a center for the progression check.
    pub range: usize,
    /// Largest `n` in the splitting check.
    pub max_n: usize,
    /// Share of vertices also traced on the surface, in `[0, 1]`.
    pub oracle_fraction: f64,
    pub seed: u64,
    pub pattern: ConcatPattern,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            depth: 3,
            theorems: TheoremId::THEOREMS.to_vec(),
            range: 4,
            max_n: 3,
            oracle_fraction: 0.0,
            seed: 0,
            pattern: ConcatPattern::Statement,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub report: VerificationReport,
    pub elapsed_ms: u64,
    /// Per-theorem extras: orientations used, histograms, sample sizes.
    pub data: Option<Value>,
}

impl SuiteReport {
    /// The conjecture never fails a run.
    pub fn gating(&self) -> bool {
        self.report.theorem != TheoremId::Conjecture
    }
}

/// Centers with index length `1..=depth`, shortest first.
pub fn centers(depth: usize) -> Vec<IndexPath> {
    enumerate_vertices(depth)
        .into_iter()
        .filter_map(|(v, _)| v.path().filter(|p| !p.is_empty()).cloned())
        .collect()
}

fn fan_vertices(center: &IndexPath, count: usize) -> Vec<ArcVertex> {
    let mut out = Vec::new();
    let _ = FanContext::new(center, count, |v| {
        out.push(v.clone());
        penta_core::orbits::alpha_orbits()
    });
    out
}

type Store = HashMap<ArcVertex, OrbitPair>;

fn lookup(store: &Store) -> impl Fn(&ArcVertex) -> OrbitPair + '_ {
    move |v| store.get(v).cloned().unwrap_or_else(|| orbits_for_vertex(v))
}

fn prepare(cfg: &SuiteConfig, cache: &mut OrbitCache) -> Store {
    let mut wanted: Vec<ArcVertex> = enumerate_vertices(cfg.depth).into_iter().map(|(v, _)| v).collect();
    let fans = cfg.theorems.iter().any(|t| matches!(t, TheoremId::T2 | TheoremId::T4 | TheoremId::Conjecture));
    if fans {
        let count = (cfg.range + 1).max(cfg.max_n + 1);
        for c in centers(cfg.depth) {
            wanted.extend(fan_vertices(&c, count));
        }
    }
    let mut store = Store::new();
    let mut missing = Vec::new();
    for v in wanted {
        if store.contains_key(&v) {
            continue;
        }
        match cache.get(&v) {
            Some(o) => {
                store.insert(v, o);
            }
            None => missing.push(v),
        }
    }
    missing.sort_by_key(|v| v.to_string());
    missing.dedup();
    let computed: Vec<(ArcVertex, OrbitPair)> = missing.into_par_iter().map(|v| {
        let o = orbits_for_vertex(&v);
        (v, o)
    }).collect();
    for (v, o) in computed {
        cache.insert(&v, &o);
        store.insert(v, o);
    }
    store
}

fn timed(theorem: TheoremId, depth: usize, f: impl FnOnce(&mut VerificationReport) -> Option<Value>) -> SuiteReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(theorem, depth);
    let data = f(&mut report);
    SuiteReport { report, elapsed_ms: start.elapsed().as_millis() as u64, data }
}

fn edge_contexts(depth: usize, store: &Store) -> Vec<EdgeContext> {
    edges(depth).into_par_iter().map(|e: Edge| EdgeContext::new(e, lookup(store))).collect()
}

fn fan_contexts(depth: usize, count: usize, store: &Store) -> Vec<FanContext> {
    centers(depth)
        .into_par_iter()
        .map(|c| FanContext::new(&c, count, lookup(store)).expect("nonempty center within range"))
        .collect()
}

fn orientation_counts(sides: &[Vec<Side>]) -> Value {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for s in sides {
        let key = match s.as_slice() {
            [Side::Right] => "right",
            [Side::Left] => "left",
            [] => "none",
            _ => "both",
        };
        *counts.entry(key).or_default() += 1;
    }
    json!(counts)
}

fn run_one(theorem: TheoremId, cfg: &SuiteConfig, store: &Store) -> SuiteReport {
    let depth = cfg.depth;
    match theorem {
        TheoremId::T1 => timed(theorem, depth, |rep| {
            let results: Vec<_> = edge_contexts(depth, store).par_iter().map(|c| (c.label(), verify_theorem1(c))).collect();
            for (case, r) in results {
                rep.record(case, r);
            }
            None
        }),
        TheoremId::T3 => timed(theorem, depth, |rep| {
            let pattern = cfg.pattern;
            let results: Vec<_> =
                edge_contexts(depth, store).par_iter().map(|c| (c.label(), verify_theorem3(c, pattern).map(|_| ()))).collect();
            for (case, r) in results {
                rep.record(case, r);
            }
            Some(json!({ "pattern": pattern.name() }))
        }),
        TheoremId::T2 => timed(theorem, depth, |rep| {
            let range = cfg.range;
            let results: Vec<_> = fan_contexts(depth, range + 1, store)
                .par_iter()
                .map(|f| (f.center.to_string(), verify_theorem2(f, range)))
                .collect();
            let mut sides = Vec::new();
            for (case, r) in results {
                sides.push(r.clone().unwrap_or_default());
                rep.record(case, r.map(|_| ()));
            }
            Some(json!({ "range": range, "positive_side": orientation_counts(&sides) }))
        }),
        TheoremId::T4 => timed(theorem, depth, |rep| {
            let max_n = cfg.max_n;
            let results: Vec<_> = fan_contexts(depth, max_n + 1, store)
                .par_iter()
                .map(|f| (f.center.to_string(), verify_theorem4(f, max_n)))
                .collect();
            let mut sides = Vec::new();
            for (case, r) in results {
                sides.push(r.as_ref().map(|ws| ws.iter().map(|w| w.positive).collect()).unwrap_or_default());
                rep.record(case, r.map(|_| ()));
            }
            Some(json!({ "max_n": max_n, "positive_side": orientation_counts(&sides) }))
        }),
        TheoremId::Conjecture => timed(theorem, depth, |rep| {
            let max_n = cfg.max_n;
            let results: Vec<_> = fan_contexts(depth, max_n + 1, store)
                .par_iter()
                .map(|f| (f.center.to_string(), verify_theorem4(f, max_n).ok().and_then(|w| check_prefix_conjecture(&w))))
                .collect();
            let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
            let mut fans = serde_json::Map::new();
            let mut empty = Vec::new();
            for (case, r) in results {
                rep.cases += 1;
                match r {
                    Some((n, x, w)) => {
                        *histogram.entry(n).or_default() += 1;
                        if n == 0 {
                            empty.push(case.clone());
                        }
                        fans.insert(case, json!({ "prefix": n, "x": x.to_string(), "w": w.to_string() }));
                    }
                    None => empty.push(case),
                }
            }
            let histogram: BTreeMap<String, usize> = histogram.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
            Some(json!({ "histogram": histogram, "without_common_prefix": empty, "fans": fans }))
        }),
        TheoremId::Oracle => timed(theorem, depth, |rep| {
            let mut vertices: Vec<ArcVertex> = enumerate_vertices(depth).into_iter().map(|(v, _)| v).collect();
            let total = vertices.len();
            let take = ((cfg.oracle_fraction.clamp(0.0, 1.0) * total as f64).ceil() as usize).min(total);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            vertices.shuffle(&mut rng);
            vertices.truncate(take);
            vertices.sort_by_key(|v| (v.depth(), v.to_string()));
            let surface = build_surface();
            let results: Vec<_> = vertices
                .par_iter()
                .map(|v| {
                    let want = lookup(store)(v);
                    let got = strips_for_direction(&surface, &v.direction(), StripOptions::default());
                    let outcome = match got {
                        Ok(r) if r.orbit_pair == want => Ok(()),
                        Ok(r) => Err(format!("traced {} but rewriting gives {}", r.orbit_pair, want)),
                        Err(e) => Err(format!("tracer: {e}")),
                    };
                    (v.to_string(), outcome)
                })
                .collect();
            for (case, r) in results {
                rep.record(case, r);
            }
            Some(json!({ "sampled": take, "total": total, "seed": cfg.seed }))
        }),
    }
}

/// Runs every requested check; failures are collected, never fatal.
pub fn run_suite(cfg: &SuiteConfig, cache: &mut OrbitCache) -> Vec<SuiteReport> {
    let store = prepare(cfg, cache);
    cfg.theorems.iter().map(|&t| run_one(t, cfg, &store)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(theorems: &[TheoremId], depth: usize) -> Vec<SuiteReport> {
        let cfg = SuiteConfig { depth, theorems: theorems.to_vec(), oracle_fraction: 1.0, ..SuiteConfig::default() };
        run_suite(&cfg, &mut OrbitCache::in_memory())
    }

    #[test]
    fn depth_zero_is_trivial() {
        for r in run(&TheoremId::THEOREMS, 0) {
            assert_eq!(r.report.cases, 0);
            assert!(r.report.passed());
        }
    }

    #[test]
    fn depth_one() {
        let all = [TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::Conjecture, TheoremId::Oracle];
        let reports = run(&all, 1);
        for r in &reports {
            assert!(r.report.passed(), "{:?}", r.report);
        }
        let cases: Vec<usize> = reports.iter().map(|r| r.report.cases).collect();
        assert_eq!(cases, [1, 3, 1, 3, 3, 5]);
    }

    #[test]
    fn center_counts() {
        assert_eq!(centers(2).len(), 3 + 12);
    }
}
