//! Parameter JSON: `{"gamma": {node: "dec"}, "edges": [{"source", "target", "l", "u", "theta"}]}`.

use std::collections::BTreeMap;

use extremamatch_core::rational::{format_rational, parse_rational};
use extremamatch_core::switching::{EdgeParameter, Parameter, ParameterError, RegulatoryNetwork};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub source: String,
    pub target: String,
    pub l: String,
    pub u: String,
    pub theta: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterDocument {
    pub gamma: BTreeMap<String, String>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Error)]
pub enum ParamError {
    #[error("invalid parameter JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("gamma is missing for node `{0}`")]
    MissingGamma(String),
    #[error("gamma given for unknown node `{0}`")]
    UnknownNode(String),
    #[error("no parameters for edge {0}")]
    MissingEdge(String),
    #[error("parameters given for {from} -> {target}, which is not a network edge")]
    UnknownEdge { from: String, target: String },
    #[error("edge {0} is listed twice")]
    DuplicateEdge(String),
    #[error("{field}: `{text}` is not an exact number")]
    Number { field: String, text: String },
    #[error(transparent)]
    Parameter(#[from] ParameterError),
}

fn number(field: String, text: &str) -> Result<extremamatch_core::rational::Rational, ParamError> {
    parse_rational(text).map_err(|_| ParamError::Number { field, text: text.to_string() })
}

impl ParameterDocument {
    pub fn parse(text: &str) -> Result<Self, ParamError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn from_parameter(rn: &RegulatoryNetwork, z: &Parameter) -> Self {
        let gamma = rn.nodes().iter().enumerate().map(|(n, name)| (name.clone(), format_rational(z.gamma(n)))).collect();
        let edges = rn
            .edges()
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                let p = z.edge(e);
                EdgeDoc {
                    source: rn.nodes()[edge.source].clone(),
                    target: rn.nodes()[edge.target].clone(),
                    l: format_rational(&p.low),
                    u: format_rational(&p.high),
                    theta: format_rational(&p.theta),
                }
            })
            .collect();
        ParameterDocument { gamma, edges }
    }

    pub fn to_parameter(&self, rn: &RegulatoryNetwork) -> Result<Parameter, ParamError> {
        if let Some(name) = self.gamma.keys().find(|k| rn.node_index(k).is_none()) {
            return Err(ParamError::UnknownNode(name.clone()));
        }
        let mut gamma = Vec::with_capacity(rn.size());
        for name in rn.nodes() {
            let text = self.gamma.get(name).ok_or_else(|| ParamError::MissingGamma(name.clone()))?;
            gamma.push(number(format!("gamma({name})"), text)?);
        }
        let mut edges: Vec<Option<EdgeParameter>> = vec![None; rn.edges().len()];
        for doc in &self.edges {
            let e = rn
                .node_index(&doc.source)
                .zip(rn.node_index(&doc.target))
                .and_then(|(s, t)| rn.edge_index(s, t))
                .ok_or_else(|| ParamError::UnknownEdge { from: doc.source.clone(), target: doc.target.clone() })?;
            let name = rn.edge_name(e);
            if edges[e].is_some() {
                return Err(ParamError::DuplicateEdge(name));
            }
            edges[e] = Some(EdgeParameter {
                low: number(format!("l({name})"), &doc.l)?,
                high: number(format!("u({name})"), &doc.u)?,
                theta: number(format!("theta({name})"), &doc.theta)?,
            });
        }
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(e, p)| p.ok_or_else(|| ParamError::MissingEdge(rn.edge_name(e))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Parameter::new(rn, gamma, edges)?)
    }
}
