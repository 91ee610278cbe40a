//! Finite directed graphs whose vertices and edges carry fixed-length tuples
//! over the extrema alphabet `{I, D, *, -, m, M}`.
//!
//! Vertex labels draw from `{I, D, *}` and edge labels from `{-, m, M, *}`.
//! Both rules, and the shared tuple length, are enforced when a graph is
//! built. Loosely typed input (e.g. a JSON document) goes through
//! [`GraphParts`] and [`validate_graph`] first.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// Increasing.
    I,
    /// Decreasing.
    D,
    /// No information.
    Star,
    /// Transitioning, no extremum.
    Dash,
    /// Local minimum.
    Min,
    /// Local maximum.
    Max,
}

impl Symbol {
    pub const ALL: [Symbol; 6] = [
        Symbol::I,
        Symbol::D,
        Symbol::Star,
        Symbol::Dash,
        Symbol::Min,
        Symbol::Max,
    ];

    pub fn as_char(self) -> char {
        match self {
            Symbol::I => 'I',
            Symbol::D => 'D',
            Symbol::Star => '*',
            Symbol::Dash => '-',
            Symbol::Min => 'm',
            Symbol::Max => 'M',
        }
    }

    pub fn from_char(c: char) -> Option<Symbol> {
        Some(match c {
            'I' => Symbol::I,
            'D' => Symbol::D,
            '*' => Symbol::Star,
            '-' => Symbol::Dash,
            'm' => Symbol::Min,
            'M' => Symbol::Max,
            _ => return None,
        })
    }

    pub fn allowed_on_vertex(self) -> bool {
        matches!(self, Symbol::I | Symbol::D | Symbol::Star)
    }

    pub fn allowed_on_edge(self) -> bool {
        matches!(self, Symbol::Dash | Symbol::Min | Symbol::Max | Symbol::Star)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An N-tuple of symbols, written as a plain string such as `*D` or `m-`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Vec<Symbol>);

impl Label {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Label(symbols)
    }

    pub fn uniform(symbol: Symbol, dimension: usize) -> Self {
        Label(alloc::vec![symbol; dimension])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> Symbol {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, symbol: Symbol) {
        self.0[i] = symbol;
    }

    pub fn is_vertex_label(&self) -> bool {
        self.0.iter().all(|s| s.allowed_on_vertex())
    }

    pub fn is_edge_label(&self) -> bool {
        self.0.iter().all(|s| s.allowed_on_edge())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown extrema symbol `{0}`")]
pub struct UnknownSymbol(pub char);

impl FromStr for Label {
    type Err = UnknownSymbol;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| Symbol::from_char(c).ok_or(UnknownSymbol(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(Label)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

pub type VertexIx = usize;
pub type EdgeIx = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: VertexIx,
    pub to: VertexIx,
    pub label: Label,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("label `{label}` has length {found}, graph dimension is {expected}")]
    Dimension { label: String, found: usize, expected: usize },
    #[error("vertex label `{0}` uses an edge-only symbol")]
    VertexAlphabet(String),
    #[error("edge label `{0}` uses a vertex-only symbol")]
    EdgeAlphabet(String),
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex index {0}")]
    UnknownVertex(VertexIx),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("a path needs at least one vertex")]
    Empty,
    #[error("vertex index {0} is not in the graph")]
    UnknownVertex(VertexIx),
    #[error("no edge {0} -> {1}")]
    MissingEdge(VertexIx, VertexIx),
}

/// Immutable labeled digraph. Out-edges of every vertex are kept sorted by
/// target index so that traversals are reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    dimension: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    out: Vec<Vec<EdgeIx>>,
    by_id: BTreeMap<String, VertexIx>,
    by_pair: BTreeMap<(VertexIx, VertexIx), EdgeIx>,
}

impl LabeledDigraph {
    pub fn builder(dimension: usize) -> GraphBuilder {
        GraphBuilder {
            dimension,
            vertices: Vec::new(),
            edges: Vec::new(),
            by_id: BTreeMap::new(),
            by_pair: BTreeMap::new(),
        }
    }

    /// Build from loosely typed parts, reporting every problem at once.
    pub fn from_parts(parts: &GraphParts) -> Result<Self, Vec<Violation>> {
        let violations = validate_graph(parts);
        if !violations.is_empty() {
            return Err(violations);
        }
        let mut b = LabeledDigraph::builder(parts.dimension);
        let mut fail = |e: GraphError| alloc::vec![Violation::Graph(e)];
        for (id, label) in &parts.vertices {
            let label: Label = label.parse().expect("validated");
            b.add_vertex(id.clone(), label).map_err(&mut fail)?;
        }
        for (from, to, label) in &parts.edges {
            let label: Label = label.parse().expect("validated");
            let f = b.index_of(from).expect("validated");
            let t = b.index_of(to).expect("validated");
            b.add_edge(f, t, label).map_err(&mut fail)?;
        }
        Ok(b.build())
    }

    pub fn to_parts(&self) -> GraphParts {
        GraphParts {
            dimension: self.dimension,
            vertices: self
                .vertices
                .iter()
                .map(|v| (v.id.clone(), v.label.to_string()))
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    (
                        self.vertices[e.from].id.clone(),
                        self.vertices[e.to].id.clone(),
                        e.label.to_string(),
                    )
                })
                .collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, v: VertexIx) -> &Vertex {
        &self.vertices[v]
    }

    pub fn edge(&self, e: EdgeIx) -> &Edge {
        &self.edges[e]
    }

    pub fn index_of(&self, id: &str) -> Option<VertexIx> {
        self.by_id.get(id).copied()
    }

    pub fn edge_between(&self, from: VertexIx, to: VertexIx) -> Option<EdgeIx> {
        self.by_pair.get(&(from, to)).copied()
    }

    /// Out-edge indices of `v`, sorted by target.
    pub fn out_edges(&self, v: VertexIx) -> &[EdgeIx] {
        &self.out[v]
    }

    pub fn successors(&self, v: VertexIx) -> impl Iterator<Item = VertexIx> + '_ {
        self.out[v].iter().map(move |&e| self.edges[e].to)
    }

    /// `(ℓ(v1), ℓ(v1,v2), ℓ(v2), …, ℓ(vn))`, which has `2n - 1` entries.
    pub fn path_labeling(&self, path: &[VertexIx]) -> Result<Vec<Label>, PathError> {
        let first = *path.first().ok_or(PathError::Empty)?;
        let check = |v: VertexIx| {
            if v < self.vertices.len() {
                Ok(v)
            } else {
                Err(PathError::UnknownVertex(v))
            }
        };
        let mut out = Vec::with_capacity(2 * path.len() - 1);
        out.push(self.vertices[check(first)?].label.clone());
        for pair in path.windows(2) {
            let (a, b) = (check(pair[0])?, check(pair[1])?);
            let e = self.edge_between(a, b).ok_or(PathError::MissingEdge(a, b))?;
            out.push(self.edges[e].label.clone());
            out.push(self.vertices[b].label.clone());
        }
        Ok(out)
    }

    pub fn is_path(&self, path: &[VertexIx]) -> bool {
        !path.is_empty()
            && path.iter().all(|&v| v < self.vertices.len())
            && path.windows(2).all(|p| self.edge_between(p[0], p[1]).is_some())
    }
}

pub struct GraphBuilder {
    dimension: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    by_id: BTreeMap<String, VertexIx>,
    by_pair: BTreeMap<(VertexIx, VertexIx), EdgeIx>,
}

impl GraphBuilder {
    fn check_len(&self, label: &Label) -> Result<(), GraphError> {
        if self.dimension == 0 {
            return Err(GraphError::ZeroDimension);
        }
        if label.dimension() != self.dimension {
            return Err(GraphError::Dimension {
                label: label.to_string(),
                found: label.dimension(),
                expected: self.dimension,
            });
        }
        Ok(())
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, label: Label) -> Result<VertexIx, GraphError> {
        let id = id.into();
        self.check_len(&label)?;
        if !label.is_vertex_label() {
            return Err(GraphError::VertexAlphabet(label.to_string()));
        }
        if self.by_id.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        let ix = self.vertices.len();
        self.by_id.insert(id.clone(), ix);
        self.vertices.push(Vertex { id, label });
        Ok(ix)
    }

    pub fn add_edge(&mut self, from: VertexIx, to: VertexIx, label: Label) -> Result<EdgeIx, GraphError> {
        self.check_len(&label)?;
        for v in [from, to] {
            if v >= self.vertices.len() {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        if !label.is_edge_label() {
            return Err(GraphError::EdgeAlphabet(label.to_string()));
        }
        if self.by_pair.contains_key(&(from, to)) {
            return Err(GraphError::DuplicateEdge(
                self.vertices[from].id.clone(),
                self.vertices[to].id.clone(),
            ));
        }
        let ix = self.edges.len();
        self.by_pair.insert((from, to), ix);
        self.edges.push(Edge { from, to, label });
        Ok(ix)
    }

    pub fn index_of(&self, id: &str) -> Option<VertexIx> {
        self.by_id.get(id).copied()
    }

    pub fn build(self) -> LabeledDigraph {
        let mut out = alloc::vec![Vec::new(); self.vertices.len()];
        for (&(from, _), &e) in &self.by_pair {
            out[from].push(e);
        }
        LabeledDigraph {
            dimension: self.dimension,
            vertices: self.vertices,
            edges: self.edges,
            out,
            by_id: self.by_id,
            by_pair: self.by_pair,
        }
    }
}

/// Unchecked graph description: `(id, label)` vertices and
/// `(from_id, to_id, label)` edges, labels as symbol strings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphParts {
    pub dimension: usize,
    pub vertices: Vec<(String, String)>,
    pub edges: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("{0}")]
    Graph(GraphError),
    #[error("vertex `{id}`: {source}")]
    VertexSymbol { id: String, source: UnknownSymbol },
    #[error("edge {from} -> {to}: {source}")]
    EdgeSymbol { from: String, to: String, source: UnknownSymbol },
    #[error("edge {from} -> {to} references missing vertex `{missing}`")]
    Dangling { from: String, to: String, missing: String },
}

/// Report alphabet, dimension, duplicate and dangling-edge problems.
pub fn validate_graph(parts: &GraphParts) -> Vec<Violation> {
    let mut found = Vec::new();
    let n = parts.dimension;
    if n == 0 {
        found.push(Violation::Graph(GraphError::ZeroDimension));
    }
    let dim = |label: &Label, found: &mut Vec<Violation>| {
        if n > 0 && label.dimension() != n {
            found.push(Violation::Graph(GraphError::Dimension {
                label: label.to_string(),
                found: label.dimension(),
                expected: n,
            }));
        }
    };
    let mut ids = BTreeMap::new();
    for (id, text) in &parts.vertices {
        if ids.insert(id.as_str(), ()).is_some() {
            found.push(Violation::Graph(GraphError::DuplicateVertex(id.clone())));
        }
        match text.parse::<Label>() {
            Err(source) => found.push(Violation::VertexSymbol { id: id.clone(), source }),
            Ok(label) => {
                dim(&label, &mut found);
                if !label.is_vertex_label() {
                    found.push(Violation::Graph(GraphError::VertexAlphabet(label.to_string())));
                }
            }
        }
    }
    let mut pairs = BTreeMap::new();
    for (from, to, text) in &parts.edges {
        for end in [from, to] {
            if !ids.contains_key(end.as_str()) {
                found.push(Violation::Dangling {
                    from: from.clone(),
                    to: to.clone(),
                    missing: end.clone(),
                });
            }
        }
        if pairs.insert((from.as_str(), to.as_str()), ()).is_some() {
            found.push(Violation::Graph(GraphError::DuplicateEdge(from.clone(), to.clone())));
        }
        match text.parse::<Label>() {
            Err(source) => found.push(Violation::EdgeSymbol {
                from: from.clone(),
                to: to.clone(),
                source,
            }),
            Ok(label) => {
                dim(&label, &mut found);
                if !label.is_edge_label() {
                    found.push(Violation::Graph(GraphError::EdgeAlphabet(label.to_string())));
                }
            }
        }
    }
    found
}
