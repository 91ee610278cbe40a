use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use super::network::RegulatoryNetwork;
use crate::rational::{format_rational, Rational};

/// `ℓ`, `u`, `Θ` of one interaction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeParameter {
    pub low: Rational,
    pub high: Rational,
    pub theta: Rational,
}

/// Decay rates per node plus `ℓ`, `u`, `Θ` per edge, all exact and positive,
/// indexed like the network's nodes and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameter {
    gamma: Vec<Rational>,
    edges: Vec<EdgeParameter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParameterError {
    #[error("expected {expected} values ({nodes} gamma + 3 x {edges} edge values), got {found}")]
    Dimension { expected: usize, found: usize, nodes: usize, edges: usize },
    #[error("{what} must be positive, got {value}")]
    NotPositive { what: String, value: String },
    #[error("edge {edge}: l = {low} exceeds u = {high}")]
    LowAboveHigh { edge: String, low: String, high: String },
}

impl Parameter {
    pub fn new(rn: &RegulatoryNetwork, gamma: Vec<Rational>, edges: Vec<EdgeParameter>) -> Result<Self, ParameterError> {
        let found = gamma.len() + 3 * edges.len();
        let expected = rn.size() + 3 * rn.edges().len();
        if gamma.len() != rn.size() || edges.len() != rn.edges().len() {
            return Err(ParameterError::Dimension {
                expected,
                found,
                nodes: rn.size(),
                edges: rn.edges().len(),
            });
        }
        let positive = |what: String, v: &Rational| {
            if *v > Rational::zero() {
                Ok(())
            } else {
                Err(ParameterError::NotPositive { what, value: format_rational(v) })
            }
        };
        for (n, g) in gamma.iter().enumerate() {
            positive(alloc::format!("gamma({})", rn.nodes()[n]), g)?;
        }
        for (e, p) in edges.iter().enumerate() {
            let name = rn.edge_name(e);
            positive(alloc::format!("l({name})"), &p.low)?;
            positive(alloc::format!("u({name})"), &p.high)?;
            positive(alloc::format!("theta({name})"), &p.theta)?;
            if p.low > p.high {
                return Err(ParameterError::LowAboveHigh {
                    edge: name,
                    low: format_rational(&p.low),
                    high: format_rational(&p.high),
                });
            }
        }
        Ok(Parameter { gamma, edges })
    }

    pub fn gamma(&self, node: usize) -> &Rational {
        &self.gamma[node]
    }

    pub fn edge(&self, e: usize) -> &EdgeParameter {
        &self.edges[e]
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gamma
    }

    pub fn edge_values(&self) -> &[EdgeParameter] {
        &self.edges
    }
}
