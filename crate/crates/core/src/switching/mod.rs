//! Switching-system models: regulatory networks, parameters, the rectangular
//! decomposition they induce, and the labeled search graph.

mod domain;
mod dynamics;
mod network;
mod parameter;
mod sample;
mod search;

pub use domain::{Decomposition, Domain};
pub use dynamics::{check_regular, fixed_point, interaction_value, lambda_of_domain, RegularityViolation};
pub use network::{parse_network, Interaction, Logic, NetworkError, RegulatoryNetwork, Sign};
pub use parameter::{EdgeParameter, Parameter, ParameterError};
pub use sample::{sample_regular_parameter, SampleRanges, SamplingError};
pub use search::{
    build_domain_graph, build_search_graph, edge_label, vertex_label, DomainEdge, DomainGraph, EdgeRule, SearchGraph,
    SwitchingError, UnknownEdgeRule,
};
