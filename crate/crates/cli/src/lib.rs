//! File formats and pipelines for `extremamatch`: interval tables of extrema
//! (CSV), network parameters and labeled graphs (JSON), Graphviz export, and
//! the run report of sampled validation.

pub mod dot;
pub mod events;
pub mod graph_json;
pub mod params;
pub mod pipeline;

pub use graph_json::GraphDocument;
pub use params::ParameterDocument;
pub use pipeline::{pattern_from_events, validate, RunReport, ValidateOptions};
