//! End-to-end pipelines behind the subcommands.

use std::collections::BTreeMap;

use extremamatch_core::align::{alignment_graph, AlignError, Witness};
use extremamatch_core::labeled_graph::{LabeledDigraph, PathError};
use extremamatch_core::pattern::{build_pattern_graph_capped, PatternError, PatternGraph};
use extremamatch_core::simulate::TrajectoryRecord;
use extremamatch_core::switching::{
    build_search_graph, parse_network, sample_regular_parameter, Decomposition, EdgeRule, NetworkError, Parameter,
    RegulatoryNetwork, SampleRanges, SamplingError, SwitchingError,
};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::events::{events_to_poset, read_events, EventsError};
use crate::params::ParameterDocument;

pub use extremamatch_core::downset::DEFAULT_VERTEX_CAP;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Events(#[from] EventsError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("network: {0}")]
    Network(#[from] NetworkError),
    #[error(transparent)]
    Switching(#[from] SwitchingError),
    #[error("sample {sample}: {source}")]
    Sampling { sample: usize, source: SamplingError },
    #[error(transparent)]
    Align(#[from] AlignError),
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

pub fn pattern_from_events(events_csv: &str, variables: Option<&[String]>, cap: usize) -> Result<PatternGraph, PipelineError> {
    let events = read_events(events_csv.as_bytes())?;
    let poset = events_to_poset(events, variables)?;
    Ok(build_pattern_graph_capped(poset, cap)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathDoc {
    pub vertices: Vec<String>,
    /// Vertex and edge labels interleaved, starting and ending with a vertex label.
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub mode: String,
    pub pattern: PathDoc,
    pub search: PathDoc,
}

fn path_doc(g: &LabeledDigraph, path: &[usize]) -> Result<PathDoc, PathError> {
    let labels = g.path_labeling(path)?.iter().map(ToString::to_string).collect();
    Ok(PathDoc { vertices: path.iter().map(|&v| g.vertex(v).id.clone()).collect(), labels })
}

pub fn witness_doc(pattern: &LabeledDigraph, search: &LabeledDigraph, w: &Witness, cycle: bool) -> WitnessDoc {
    WitnessDoc {
        mode: if cycle { "cycle" } else { "path" }.into(),
        pattern: path_doc(pattern, &w.pattern_path).expect("witness paths follow edges"),
        search: path_doc(search, &w.search_path).expect("witness paths follow edges"),
    }
}

pub fn run_match(pattern: &LabeledDigraph, search: &LabeledDigraph, s: usize, t: usize, cycle: bool) -> Result<Option<Witness>, AlignError> {
    let ag = alignment_graph(pattern, search)?;
    Ok(if cycle { ag.cycle_matching(s, t) } else { ag.path_matching(s, t) })
}

#[derive(Debug, Clone)]
pub struct ValidateOptions {
    pub samples: usize,
    pub seed: u64,
    pub rule: EdgeRule,
    pub cycle: bool,
    pub ranges: SampleRanges,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleResult {
    pub sample: usize,
    pub seed: u64,
    pub matched: bool,
    pub alignment_vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<ParameterDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub inputs: BTreeMap<String, String>,
    pub edge_rule: String,
    pub seed: u64,
    pub samples: usize,
    pub cycle: bool,
    pub pattern_vertices: usize,
    pub search_vertices: usize,
    pub matches: usize,
    pub match_fraction: f64,
    pub results: Vec<SampleResult>,
}

/// Per-sample generator seeds, drawn up front so results do not depend on scheduling.
pub fn sample_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| master.next_u64()).collect()
}

pub fn sample_parameter(rn: &RegulatoryNetwork, seed: u64, ranges: &SampleRanges) -> Result<Parameter, SamplingError> {
    sample_regular_parameter(rn, &mut ChaCha8Rng::seed_from_u64(seed), ranges)
}

pub fn validate(network_text: &str, events_csv: &str, opts: &ValidateOptions) -> Result<RunReport, PipelineError> {
    let rn = parse_network(network_text)?;
    let pattern = pattern_from_events(events_csv, Some(rn.nodes()), DEFAULT_VERTEX_CAP)?;
    let seeds = sample_seeds(opts.seed, opts.samples);
    let results = seeds
        .par_iter()
        .enumerate()
        .map(|(sample, &seed)| -> Result<SampleResult, PipelineError> {
            let z = sample_parameter(&rn, seed, &opts.ranges).map_err(|source| PipelineError::Sampling { sample, source })?;
            let search = build_search_graph(&rn, &z, opts.rule)?;
            let ag = alignment_graph(pattern.graph(), search.graph())?;
            let found = if opts.cycle {
                ag.cycle_matching(pattern.root(), pattern.leaf())
            } else {
                ag.path_matching(pattern.root(), pattern.leaf())
            };
            Ok(SampleResult {
                sample,
                seed,
                matched: found.is_some(),
                alignment_vertices: ag.vertex_count(),
                parameter: found.as_ref().map(|_| ParameterDocument::from_parameter(&rn, &z)),
                witness: found.map(|w| witness_doc(pattern.graph(), search.graph(), &w, opts.cycle)),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let matches = results.iter().filter(|r| r.matched).count();
    let inputs = [("network".to_string(), sha256_hex(network_text.as_bytes())), ("events".to_string(), sha256_hex(events_csv.as_bytes()))]
        .into_iter()
        .collect();
    let search_vertices = (0..rn.size()).map(|n| rn.out_edges(n).len() + 1).product();
    Ok(RunReport {
        inputs,
        edge_rule: opts.rule.to_string(),
        seed: opts.seed,
        samples: opts.samples,
        cycle: opts.cycle,
        pattern_vertices: pattern.graph().vertex_count(),
        search_vertices,
        matches,
        match_fraction: if opts.samples == 0 { 0.0 } else { matches as f64 / opts.samples as f64 },
        results,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossingDoc {
    pub time: f64,
    pub edge: String,
    pub direction: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EventDoc {
    pub variable: String,
    pub kind: &'static str,
    pub crossing: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectoryDoc {
    pub domains: Vec<String>,
    pub crossings: Vec<CrossingDoc>,
    pub events: Vec<EventDoc>,
    pub stop: &'static str,
}

impl TrajectoryDoc {
    pub fn new(rn: &RegulatoryNetwork, dec: &Decomposition, rec: &TrajectoryRecord) -> Self {
        TrajectoryDoc {
            domains: rec.domains.iter().map(|&d| dec.domain_at(d).to_string()).collect(),
            crossings: rec
                .crossings
                .iter()
                .map(|c| CrossingDoc {
                    time: c.time,
                    edge: rn.edge_name(c.threshold_edge),
                    direction: if c.upward { "up" } else { "down" },
                })
                .collect(),
            events: rec
                .events
                .iter()
                .map(|e| EventDoc { variable: rn.nodes()[e.variable].clone(), kind: e.kind.as_str(), crossing: e.crossing })
                .collect(),
            stop: rec.stop.as_str(),
        }
    }
}
