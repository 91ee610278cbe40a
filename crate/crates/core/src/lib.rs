//! Matching qualitative extrema sequences from time-series data against the
//! dynamics of switching-system regulatory network models.
//!
//! Data side: [`poset`] turns an interval table of extrema into a poset,
//! [`downset`] enumerates its down sets and [`pattern`] labels them.
//! Model side: [`switching`] builds the labeled search graph of a network at
//! a parameter, and [`simulate`] integrates the same model. [`align`] decides
//! whether the two graphs share a matching pair of paths.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod align;
pub mod downset;
pub mod element_set;
pub mod labeled_graph;
pub mod pattern;
pub mod poset;
pub mod rational;
pub mod simulate;
pub mod switching;

pub use align::{alignment_graph, cycle_match, match_paths, path_match, symbol_match, tuple_match, AlignError, AlignmentGraph, Witness};
pub use labeled_graph::{Label, LabeledDigraph, Symbol};
pub use pattern::{build_pattern_graph, PatternGraph};
pub use switching::{build_search_graph, EdgeRule, SearchGraph};
