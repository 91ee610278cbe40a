//! Pattern graph of a poset of extrema: the down-set graph with a `-…-`
//! self-loop on every vertex, `I`/`D`/`*` vertex labels and `μ(p)` edge labels.

use alloc::string::String;

use thiserror::Error;

use crate::downset::{poset_to_downset_graph_capped, DownSetGraph, DownsetError, DEFAULT_VERTEX_CAP};
use crate::labeled_graph::{GraphError, Label, LabeledDigraph, Symbol, VertexIx};
use crate::poset::{ExtremumKind, PosetOfExtrema};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error(transparent)]
    Downset(#[from] DownsetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("variable `{variable}` is both increasing and decreasing at down set `{down_set}`")]
    Inconsistent { variable: String, down_set: String },
}

#[derive(Debug, Clone)]
pub struct PatternGraph {
    graph: LabeledDigraph,
    root: VertexIx,
    leaf: VertexIx,
    poset: PosetOfExtrema,
    downsets: DownSetGraph,
}

impl PatternGraph {
    pub fn graph(&self) -> &LabeledDigraph {
        &self.graph
    }

    pub fn root(&self) -> VertexIx {
        self.root
    }

    pub fn leaf(&self) -> VertexIx {
        self.leaf
    }

    pub fn poset(&self) -> &PosetOfExtrema {
        &self.poset
    }

    pub fn downsets(&self) -> &DownSetGraph {
        &self.downsets
    }

    pub fn into_graph(self) -> LabeledDigraph {
        self.graph
    }
}

pub fn build_pattern_graph(poset: PosetOfExtrema) -> Result<PatternGraph, PatternError> {
    build_pattern_graph_capped(poset, DEFAULT_VERTEX_CAP)
}

pub fn build_pattern_graph_capped(poset: PosetOfExtrema, cap: usize) -> Result<PatternGraph, PatternError> {
    let downsets = poset_to_downset_graph_capped(poset.order(), cap)?;
    let n = poset.dimension();
    let mut b = LabeledDigraph::builder(n);
    for (v, vertex) in downsets.vertices().iter().enumerate() {
        let mut label = Label::uniform(Symbol::Star, n);
        for var in 0..n {
            let chain = poset.chain(var);
            // Down sets cut each chain into a prefix and a suffix.
            let last = chain.iter().rev().find(|&&e| vertex.members.contains(e));
            let next = chain.iter().find(|&&e| !vertex.members.contains(e));
            let kind = |e: Option<&usize>| e.map(|&e| poset.kind_of(e));
            let increasing = kind(last) == Some(ExtremumKind::Min) || kind(next) == Some(ExtremumKind::Max);
            let decreasing = kind(last) == Some(ExtremumKind::Max) || kind(next) == Some(ExtremumKind::Min);
            let symbol = match (increasing, decreasing) {
                (true, true) => {
                    return Err(PatternError::Inconsistent {
                        variable: poset.variables()[var].clone(),
                        down_set: downsets.canonical_id(v),
                    })
                }
                (true, false) => Symbol::I,
                (false, true) => Symbol::D,
                (false, false) => Symbol::Star,
            };
            label.set(var, symbol);
        }
        b.add_vertex(downsets.canonical_id(v), label)?;
    }
    let dashes = Label::uniform(Symbol::Dash, n);
    for v in 0..downsets.vertex_count() {
        b.add_edge(v, v, dashes.clone())?;
    }
    for e in downsets.edges() {
        b.add_edge(e.from, e.to, poset.marking(e.added))?;
    }
    let root = downsets.root();
    let leaf = downsets.leaf();
    Ok(PatternGraph { graph: b.build(), root, leaf, poset, downsets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::tests::four_event_poset;
    use crate::poset::{build_poset, ExtremaEvent, TimeInterval};
    use crate::rational::ExtRational;
    use alloc::string::ToString;
    use alloc::vec;
    use alloc::vec::Vec;

    const FIGURE_IDS: [&str; 7] = ["", "0", "1", "0.1", "0.1.3", "0.1.2", "0.1.2.3"];

    fn label_of(p: &PatternGraph, id: &str) -> String {
        let g = p.graph();
        g.vertex(g.index_of(id).unwrap()).label.to_string()
    }

    fn edge_label(p: &PatternGraph, from: usize, to: usize) -> String {
        let g = p.graph();
        let f = g.index_of(FIGURE_IDS[from]).unwrap();
        let t = g.index_of(FIGURE_IDS[to]).unwrap();
        g.edge(g.edge_between(f, t).unwrap()).label.to_string()
    }

    #[test]
    fn four_event_pattern_matches_figure() {
        let p = build_pattern_graph(four_event_poset()).unwrap();
        let want = ["DD", "ID", "DI", "II", "ID", "DI", "DD"];
        for (k, id) in FIGURE_IDS.iter().enumerate() {
            assert_eq!(label_of(&p, id), want[k], "vertex {k}");
        }
        let edges = [
            (0, 1, "m-"),
            (0, 2, "-m"),
            (1, 3, "-m"),
            (2, 3, "m-"),
            (3, 4, "-M"),
            (3, 5, "M-"),
            (4, 6, "M-"),
            (5, 6, "-M"),
        ];
        for (f, t, lab) in edges {
            assert_eq!(edge_label(&p, f, t), lab, "edge {f}->{t}");
        }
        let g = p.graph();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 15);
        let loops: Vec<_> = g.edges().iter().filter(|e| e.from == e.to).collect();
        assert_eq!(loops.len(), 7);
        assert!(loops.iter().all(|e| e.label.to_string() == "--"));
        assert_eq!(g.vertex(p.root()).id, "");
        assert_eq!(g.vertex(p.leaf()).id, "0.1.2.3");
    }

    fn single(var: &str, kind: ExtremumKind, vars: &[&str]) -> PosetOfExtrema {
        let ev = ExtremaEvent {
            variable: var.into(),
            kind,
            interval: TimeInterval::new(ExtRational::from(0), ExtRational::from(1)).unwrap(),
        };
        build_poset(vec![ev], vars.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn single_minimum() {
        let p = build_pattern_graph(single("x1", ExtremumKind::Min, &["x1"])).unwrap();
        let g = p.graph();
        assert_eq!(g.vertex(p.root()).label.to_string(), "D");
        assert_eq!(g.vertex(p.leaf()).label.to_string(), "I");
        let e = g.edge_between(p.root(), p.leaf()).unwrap();
        assert_eq!(g.edge(e).label.to_string(), "m");
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn variable_without_events_is_star() {
        let p = build_pattern_graph(single("x1", ExtremumKind::Max, &["x1", "x2"])).unwrap();
        for v in p.graph().vertices() {
            assert_eq!(v.label.get(1), Symbol::Star);
        }
        assert_eq!(p.graph().vertex(p.root()).label.to_string(), "I*");
        assert_eq!(p.graph().vertex(p.leaf()).label.to_string(), "D*");
    }
}
