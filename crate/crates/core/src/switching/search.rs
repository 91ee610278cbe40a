use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use super::domain::{Decomposition, Domain};
use super::dynamics::{check_regular, fixed_point, RegularityViolation};
use super::network::{RegulatoryNetwork, Sign};
use super::parameter::Parameter;
use crate::labeled_graph::{Label, LabeledDigraph, Symbol, VertexIx};
use crate::rational::Rational;

/// How fixed points on the two sides of a wall decide which crossings exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EdgeRule {
    /// Up-edge iff `max(P_n, P'_n) > θ`, down-edge iff `min(P_n, P'_n) < θ`.
    #[default]
    Existential,
    /// Up-edge iff `min(P_n, P'_n) > θ`, down-edge iff `max(P_n, P'_n) < θ`.
    Conjunctive,
}

impl EdgeRule {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeRule::Existential => "existential",
            EdgeRule::Conjunctive => "conjunctive",
        }
    }
}

impl fmt::Display for EdgeRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown edge rule `{0}` (expected existential or conjunctive)")]
pub struct UnknownEdgeRule(pub String);

impl FromStr for EdgeRule {
    type Err = UnknownEdgeRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "existential" => Ok(EdgeRule::Existential),
            "conjunctive" => Ok(EdgeRule::Conjunctive),
            other => Err(UnknownEdgeRule(other.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchingError {
    #[error("parameter is not regular: {}", join(.0))]
    Irregular(Vec<RegularityViolation>),
}

fn join(v: &[RegularityViolation]) -> String {
    let parts: Vec<String> = v.iter().map(|x| alloc::format!("{x}")).collect();
    parts.join("; ")
}

/// A crossing of the wall at `threshold_edge`'s threshold, between two domains given by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DomainEdge {
    pub from: usize,
    pub to: usize,
    pub threshold_edge: usize,
    pub upward: bool,
}

#[derive(Debug, Clone)]
pub struct DomainGraph {
    decomposition: Decomposition,
    fixed_points: Vec<Vec<Rational>>,
    edges: Vec<DomainEdge>,
    rule: EdgeRule,
}

impl DomainGraph {
    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    pub fn domain_count(&self) -> usize {
        self.fixed_points.len()
    }

    pub fn fixed_point(&self, domain: usize) -> &[Rational] {
        &self.fixed_points[domain]
    }

    pub fn edges(&self) -> &[DomainEdge] {
        &self.edges
    }

    pub fn rule(&self) -> EdgeRule {
        self.rule
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }
}

pub fn build_domain_graph(rn: &RegulatoryNetwork, z: &Parameter, rule: EdgeRule) -> Result<DomainGraph, SwitchingError> {
    check_regular(rn, z).map_err(SwitchingError::Irregular)?;
    let dec = Decomposition::new(rn, z);
    let fixed_points: Vec<Vec<Rational>> = dec.domains().map(|d| fixed_point(rn, z, &dec, &d)).collect();
    let mut edges = Vec::new();
    for (ix, d) in dec.domains().enumerate() {
        for n in 0..rn.size() {
            let Some(e) = dec.upper_edge(&d, n) else { continue };
            let mut above = d.0.clone();
            above[n] += 1;
            let jx = dec.index_of(&Domain(above));
            let theta = dec.threshold_value(e);
            let (p, q) = (&fixed_points[ix][n], &fixed_points[jx][n]);
            let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
            let (up, down) = match rule {
                EdgeRule::Existential => (hi > theta, lo < theta),
                EdgeRule::Conjunctive => (lo > theta, hi < theta),
            };
            if up {
                edges.push(DomainEdge { from: ix, to: jx, threshold_edge: e, upward: true });
            }
            if down {
                edges.push(DomainEdge { from: jx, to: ix, threshold_edge: e, upward: false });
            }
        }
    }
    edges.sort();
    Ok(DomainGraph { decomposition: dec, fixed_points, edges, rule })
}

#[derive(Debug, Clone)]
pub struct SearchGraph {
    graph: LabeledDigraph,
    domains: DomainGraph,
}

impl SearchGraph {
    pub fn graph(&self) -> &LabeledDigraph {
        &self.graph
    }

    pub fn domain_graph(&self) -> &DomainGraph {
        &self.domains
    }

    pub fn fixed_point(&self, v: VertexIx) -> &[Rational] {
        self.domains.fixed_point(v)
    }

    pub fn domain(&self, v: VertexIx) -> Domain {
        self.domains.decomposition.domain_at(v)
    }

    pub fn into_graph(self) -> LabeledDigraph {
        self.graph
    }
}

/// `I` when `P_n` sits above the domain's interval in coordinate `n`, `D` below, `*` inside.
pub fn vertex_label(dec: &Decomposition, d: &Domain, p: &[Rational]) -> Label {
    let mut label = Label::uniform(Symbol::Star, p.len());
    for (n, pn) in p.iter().enumerate() {
        if dec.upper_edge(d, n).is_some_and(|e| pn > dec.threshold_value(e)) {
            label.set(n, Symbol::I);
        } else if dec.lower_edge(d, n).is_some_and(|e| pn < dec.threshold_value(e)) {
            label.set(n, Symbol::D);
        }
    }
    label
}

/// Only the target of the crossed threshold can turn. Where its fixed point
/// rises across the wall a maximum is impossible, so only `m` is allowed.
pub fn edge_label(rn: &RegulatoryNetwork, edge: &DomainEdge) -> Label {
    let interaction = &rn.edges()[edge.threshold_edge];
    let mut label = Label::uniform(Symbol::Dash, rn.size());
    let rising = (interaction.sign == Sign::Activation) == edge.upward;
    label.set(interaction.target, if rising { Symbol::Min } else { Symbol::Max });
    label
}

pub fn build_search_graph(rn: &RegulatoryNetwork, z: &Parameter, rule: EdgeRule) -> Result<SearchGraph, SwitchingError> {
    let domains = build_domain_graph(rn, z, rule)?;
    let dec = &domains.decomposition;
    let mut b = LabeledDigraph::builder(rn.size());
    for (ix, d) in dec.domains().enumerate() {
        let label = vertex_label(dec, &d, &domains.fixed_points[ix]);
        b.add_vertex(alloc::format!("{d}"), label).expect("domain ids are distinct");
    }
    for e in &domains.edges {
        b.add_edge(e.from, e.to, edge_label(rn, e)).expect("wall crossings are distinct");
    }
    Ok(SearchGraph { graph: b.build(), domains })
}
