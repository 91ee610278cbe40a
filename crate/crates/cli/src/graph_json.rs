//! JSON documents for labeled graphs.
//!
//! ```json
//! {"dimension": 2, "variables": ["x1", "x2"],
//!  "vertices": [{"id": "0,1", "label": "*D"}],
//!  "edges": [{"from": "0,1", "to": "0,0", "label": "m-"}],
//!  "meta": {"fixed_points": {"0,1": ["1", "1"]}, "edge_rule": "existential"}}
//! ```

use std::collections::BTreeMap;

use extremamatch_core::labeled_graph::{GraphParts, LabeledDigraph, Violation};
use extremamatch_core::rational::format_rational;
use extremamatch_core::{PatternGraph, SearchGraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub from: String,
    pub to: String,
    pub label: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaf: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_points: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_rule: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub dimension: usize,
    pub variables: Vec<String>,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default)]
    pub meta: Meta,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{} variable names for dimension {}", .names, .dimension)]
    Variables { names: usize, dimension: usize },
    #[error("invalid graph:\n  {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("meta {field} names unknown vertex `{id}`")]
    UnknownMetaVertex { field: &'static str, id: String },
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n  ")
}

impl GraphDocument {
    pub fn from_graph(g: &LabeledDigraph, variables: &[String], meta: Meta) -> Self {
        let ix = |v: usize| g.vertex(v).id.clone();
        GraphDocument {
            dimension: g.dimension(),
            variables: variables.to_vec(),
            vertices: g.vertices().iter().map(|v| VertexDoc { id: v.id.clone(), label: v.label.to_string() }).collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDoc { from: ix(e.from), to: ix(e.to), label: e.label.to_string() })
                .collect(),
            meta,
        }
    }

    pub fn from_pattern(p: &PatternGraph) -> Self {
        let g = p.graph();
        let meta = Meta {
            root: Some(g.vertex(p.root()).id.clone()),
            leaf: Some(g.vertex(p.leaf()).id.clone()),
            ..Meta::default()
        };
        Self::from_graph(g, p.poset().variables(), meta)
    }

    pub fn from_search(s: &SearchGraph, variables: &[String]) -> Self {
        let g = s.graph();
        let points = (0..g.vertex_count())
            .map(|v| (g.vertex(v).id.clone(), s.fixed_point(v).iter().map(format_rational).collect()))
            .collect();
        let meta = Meta {
            fixed_points: Some(points),
            edge_rule: Some(s.domain_graph().rule().to_string()),
            ..Meta::default()
        };
        Self::from_graph(g, variables, meta)
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn parts(&self) -> GraphParts {
        GraphParts {
            dimension: self.dimension,
            vertices: self.vertices.iter().map(|v| (v.id.clone(), v.label.clone())).collect(),
            edges: self.edges.iter().map(|e| (e.from.clone(), e.to.clone(), e.label.clone())).collect(),
        }
    }

    /// Validated graph; metadata vertex ids must exist.
    pub fn graph(&self) -> Result<LabeledDigraph, DocumentError> {
        if self.variables.len() != self.dimension {
            return Err(DocumentError::Variables { names: self.variables.len(), dimension: self.dimension });
        }
        let g = LabeledDigraph::from_parts(&self.parts()).map_err(DocumentError::Invalid)?;
        for (field, id) in [("root", &self.meta.root), ("leaf", &self.meta.leaf)] {
            if let Some(id) = id {
                if g.index_of(id).is_none() {
                    return Err(DocumentError::UnknownMetaVertex { field, id: id.clone() });
                }
            }
        }
        Ok(g)
    }
}
