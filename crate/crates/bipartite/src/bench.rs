//! Timing every applicable algorithm on one instance.

use std::fmt;
use std::time::Instant;

use bipartite_core::generic::generic_run;
use bipartite_core::{
    balls_bipartiteness, bfs_bipartiteness, decide_segments, GridFactory, IntersectionGraph, Mode, NeighborSearch,
    SegmentSweep, SweepOptions, Verdict,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gen;
use crate::instance::Instance;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GenSpecError {
    #[error("gen-spec must look like gen:segments:2000[:bipartite][:seed=7], got {0:?}")]
    Shape(String),
    #[error("unknown gen-spec kind {0:?}; expected segments or disks")]
    Kind(String),
    #[error("bad gen-spec field {0:?}")]
    Field(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenKind {
    Segments,
    Disks,
}

/// Parsed form of `gen:<kind>:<n>[:bipartite][:seed=S]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub bipartite: bool,
    pub seed: u64,
}

impl GenSpec {
    pub fn parse(s: &str) -> Result<Self, GenSpecError> {
        let mut parts = s.split(':');
        if parts.next() != Some("gen") {
            return Err(GenSpecError::Shape(s.to_string()));
        }
        let kind = match parts.next() {
            Some("segments") => GenKind::Segments,
            Some("disks") => GenKind::Disks,
            Some(other) => return Err(GenSpecError::Kind(other.to_string())),
            None => return Err(GenSpecError::Shape(s.to_string())),
        };
        let n = parts
            .next()
            .ok_or_else(|| GenSpecError::Shape(s.to_string()))?
            .parse()
            .map_err(|_| GenSpecError::Shape(s.to_string()))?;
        let mut spec = GenSpec { kind, n, bipartite: false, seed: 0 };
        for p in parts {
            match p.split_once('=') {
                None if p == "bipartite" => spec.bipartite = true,
                Some(("seed", v)) => spec.seed = v.parse().map_err(|_| GenSpecError::Field(p.to_string()))?,
                _ => return Err(GenSpecError::Field(p.to_string())),
            }
        }
        Ok(spec)
    }

    pub fn generate(&self) -> Instance {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        match (self.kind, self.bipartite) {
            (GenKind::Segments, false) => {
                Instance::Segments { mode: Mode::Closed, items: gen::default_segments(&mut rng, self.n) }
            }
            (GenKind::Segments, true) => {
                Instance::Segments { mode: Mode::Closed, items: gen::layered_segments(&mut rng, self.n) }
            }
            (GenKind::Disks, false) => Instance::Disks { items: gen::random_disks(&mut rng, self.n) },
            (GenKind::Disks, true) => Instance::Disks { items: gen::two_layer_disks(&mut rng, self.n) },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub algo: &'static str,
    pub millis: f64,
    /// `None` when the algorithm refused the input.
    pub bipartite: Option<bool>,
    pub events: Option<usize>,
    pub queries: Option<usize>,
    pub note: Option<String>,
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        let result = match self.bipartite {
            Some(true) => "bipartite",
            Some(false) => "odd_cycle",
            None => "-",
        };
        write!(
            f,
            "{:<14} {:>10.3} {:<10} {:>9} {:>9}",
            self.algo,
            self.millis,
            result,
            opt(self.events),
            opt(self.queries)
        )?;
        if let Some(n) = &self.note {
            write!(f, "  {n}")?;
        }
        Ok(())
    }
}

pub const HEADER: &str = "algo                   ms result        events   queries";

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

fn row(algo: &'static str, millis: f64, verdict: &Verdict) -> BenchRow {
    BenchRow { algo, millis, bipartite: Some(verdict.is_bipartite()), events: None, queries: None, note: None }
}

/// Runs each algorithm once, sequentially.
pub fn bench(instance: &Instance) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    match instance {
        Instance::Segments { mode, items } => {
            let mode = *mode;
            let (res, ms) = timed(|| SegmentSweep::new(items, mode, SweepOptions::default()).and_then(|s| s.run()));
            rows.push(match res {
                Ok(run) => BenchRow { events: Some(run.events_processed), ..row("sweep", ms, &run.verdict) },
                Err(e) => BenchRow {
                    algo: "sweep",
                    millis: ms,
                    bipartite: None,
                    events: None,
                    queries: None,
                    note: Some(e.to_string()),
                },
            });
            let (res, ms) = timed(|| decide_segments(items, mode));
            rows.push(match res {
                Ok(r) => BenchRow { note: Some(r.provenance.to_string()), ..row("auto", ms, &r.verdict) },
                Err(e) => BenchRow {
                    algo: "auto",
                    millis: ms,
                    bipartite: None,
                    events: None,
                    queries: None,
                    note: Some(e.to_string()),
                },
            });
            let (run, ms) = timed(|| generic_run(items, mode, &GridFactory));
            rows.push(BenchRow { queries: Some(run.queries.iter().sum()), ..row("generic-grid", ms, &run.verdict) });
            let (v, ms) = timed(|| bfs_bipartiteness(&IntersectionGraph::build(items, mode)));
            rows.push(row("oracle", ms, &v));
        }
        Instance::Disks { items } | Instance::Balls { items, .. } => {
            for (algo, search) in [("balls-naive", NeighborSearch::Naive), ("balls-grid", NeighborSearch::Grid)] {
                let (res, ms) = timed(|| balls_bipartiteness(items, search));
                rows.push(match res {
                    Ok(v) => row(algo, ms, &v),
                    Err(e) => BenchRow {
                        algo,
                        millis: ms,
                        bipartite: None,
                        events: None,
                        queries: None,
                        note: Some(e.to_string()),
                    },
                });
            }
            let (run, ms) = timed(|| generic_run(items, Mode::Closed, &GridFactory));
            rows.push(BenchRow { queries: Some(run.queries.iter().sum()), ..row("generic-grid", ms, &run.verdict) });
            let (v, ms) = timed(|| bfs_bipartiteness(&IntersectionGraph::build(items, Mode::Closed)));
            rows.push(row("oracle", ms, &v));
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_gen_specs() {
        assert_eq!(
            GenSpec::parse("gen:segments:2000:bipartite:seed=7").unwrap(),
            GenSpec { kind: GenKind::Segments, n: 2000, bipartite: true, seed: 7 }
        );
        assert_eq!(
            GenSpec::parse("gen:disks:10").unwrap(),
            GenSpec { kind: GenKind::Disks, n: 10, bipartite: false, seed: 0 }
        );
        assert!(matches!(GenSpec::parse("gen:lines:10"), Err(GenSpecError::Kind(_))));
        assert!(matches!(GenSpec::parse("gen:disks:ten"), Err(GenSpecError::Shape(_))));
        assert!(matches!(GenSpec::parse("gen:disks:10:seed=x"), Err(GenSpecError::Field(_))));
    }

    #[test]
    fn algorithms_agree() {
        for spec in ["gen:segments:300:seed=4", "gen:segments:120:bipartite:seed=4", "gen:disks:200:bipartite"] {
            let rows = bench(&GenSpec::parse(spec).unwrap().generate());
            let bits: Vec<bool> = rows.iter().filter_map(|r| r.bipartite).collect();
            assert!(bits.len() >= 3, "{spec}: {rows:?}");
            assert!(bits.windows(2).all(|w| w[0] == w[1]), "{spec}: {rows:?}");
        }
    }

    #[test]
    fn layered_sweep_reports_events() {
        let rows = bench(&GenSpec::parse("gen:segments:50:bipartite").unwrap().generate());
        let sweep = &rows[0];
        assert_eq!(sweep.algo, "sweep");
        let events = sweep.events.unwrap();
        assert!((100..=149).contains(&events), "{events}");
        assert!(rows[2].queries.unwrap() < 4 * 50);
    }
}
