//! Down-set graph of a finite poset.
//!
//! Vertices are the down sets, edges join `A -> A ∪ {p}` for `p` minimal in
//! the complement of `A`. Construction walks antichains of maximal elements
//! from the full set downwards with a stack and a visited set, so every
//! down set is expanded once. Root-to-leaf paths are in bijection with the
//! linear extensions of the poset.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::element_set::ElementSet;
use crate::poset::Poset;

pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DownsetError {
    #[error("down-set graph estimate {estimate} exceeds the vertex cap {cap}")]
    Capacity { estimate: u128, cap: usize },
    #[error("path is not a root-to-leaf path of the down-set graph")]
    NotRootLeafPath,
    #[error("root-to-leaf path count {0} does not fit in 64 bits")]
    BigCount(BigUint),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownSetVertex {
    /// Maximal elements of the down set.
    pub antichain: Vec<usize>,
    pub members: ElementSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DownSetEdge {
    pub from: usize,
    pub to: usize,
    /// The single element in `to` but not in `from`.
    pub added: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownSetGraph {
    vertices: Vec<DownSetVertex>,
    edges: Vec<DownSetEdge>,
    out: Vec<Vec<usize>>,
    by_id: BTreeMap<String, usize>,
}

/// `2^width · n`, the vertex bound for posets with chordal incomparability graph.
pub fn vertex_bound(p: &Poset) -> u128 {
    let d = p.width() as u32;
    let n = p.len().max(1) as u128;
    1u128.checked_shl(d).map_or(u128::MAX, |b| b.saturating_mul(n))
}

pub fn poset_to_downset_graph(p: &Poset) -> Result<DownSetGraph, DownsetError> {
    poset_to_downset_graph_capped(p, DEFAULT_VERTEX_CAP)
}

/// Fails up front when the `2^d · n` estimate exceeds `cap`, and also during
/// the walk should the actual count pass `cap`.
pub fn poset_to_downset_graph_capped(p: &Poset, cap: usize) -> Result<DownSetGraph, DownsetError> {
    let n = p.len();
    let estimate = vertex_bound(p);
    if estimate > cap as u128 {
        return Err(DownsetError::Capacity { estimate, cap });
    }
    let closure = |antichain: &ElementSet| {
        let mut members = antichain.clone();
        for v in antichain.iter() {
            members.union_with(p.predecessors(v));
        }
        members
    };

    let top = p.maximal_elements(&ElementSet::full(n));
    let mut stack = alloc::vec![top];
    // antichain -> down set, in discovery order
    let mut seen: BTreeMap<ElementSet, ElementSet> = BTreeMap::new();
    let mut raw_edges: Vec<(ElementSet, ElementSet, usize)> = Vec::new();
    while let Some(antichain) = stack.pop() {
        if seen.contains_key(&antichain) {
            continue;
        }
        let members = closure(&antichain);
        seen.insert(antichain.clone(), members);
        if seen.len() > cap {
            return Err(DownsetError::Capacity { estimate: seen.len() as u128, cap });
        }
        for v in antichain.iter() {
            let mut lowered = antichain.clone();
            lowered.union_with(p.predecessors(v));
            lowered.remove(v);
            let below = p.maximal_elements(&lowered);
            if !seen.contains_key(&below) {
                stack.push(below.clone());
            }
            raw_edges.push((below, antichain.clone(), v));
        }
    }

    // Canonical vertex order: by size, then by sorted member list.
    let mut vertices: Vec<DownSetVertex> = seen
        .into_iter()
        .map(|(antichain, members)| DownSetVertex { antichain: antichain.to_vec(), members })
        .collect();
    vertices.sort_by(|a, b| {
        a.members
            .count()
            .cmp(&b.members.count())
            .then_with(|| a.members.to_vec().cmp(&b.members.to_vec()))
    });
    let index: BTreeMap<Vec<usize>, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.antichain.clone(), i))
        .collect();
    let mut edges: Vec<DownSetEdge> = raw_edges
        .into_iter()
        .map(|(from, to, added)| DownSetEdge {
            from: index[&from.to_vec()],
            to: index[&to.to_vec()],
            added,
        })
        .collect();
    edges.sort();
    edges.dedup();
    let mut out = alloc::vec![Vec::new(); vertices.len()];
    for (i, e) in edges.iter().enumerate() {
        out[e.from].push(i);
    }
    let by_id = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.members.canonical_id(), i))
        .collect();
    Ok(DownSetGraph { vertices, edges, out, by_id })
}

impl DownSetGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[DownSetVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[DownSetEdge] {
        &self.edges
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &DownSetEdge> + '_ {
        self.out[v].iter().map(move |&e| &self.edges[e])
    }

    /// The empty down set.
    pub fn root(&self) -> usize {
        0
    }

    /// The full poset.
    pub fn leaf(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Members as a `.`-separated sorted index list.
    pub fn canonical_id(&self, v: usize) -> String {
        self.vertices[v].members.canonical_id()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    pub fn edge_between(&self, from: usize, to: usize) -> Option<&DownSetEdge> {
        self.out_edges(from).find(|e| e.to == to)
    }

    /// Number of root-to-leaf paths by DP over the size-sorted vertex order.
    pub fn count_root_leaf_paths(&self) -> BigUint {
        let mut ways = alloc::vec![BigUint::zero(); self.vertices.len()];
        ways[self.root()] = BigUint::from(1u8);
        // Vertices are sorted by size and edges add one element, so index
        // order is a topological order.
        for v in 0..self.vertices.len() {
            if ways[v].is_zero() {
                continue;
            }
            let here = ways[v].clone();
            for &e in &self.out[v] {
                ways[self.edges[e].to] += &here;
            }
        }
        ways.swap_remove(self.leaf())
    }

    pub fn count_root_leaf_paths_u64(&self) -> Result<u64, DownsetError> {
        let c = self.count_root_leaf_paths();
        c.to_u64().ok_or(DownsetError::BigCount(c))
    }

    /// Added elements along a root-to-leaf path.
    pub fn path_to_linear_extension(&self, path: &[usize]) -> Result<Vec<usize>, DownsetError> {
        if path.first() != Some(&self.root()) || path.last() != Some(&self.leaf()) {
            return Err(DownsetError::NotRootLeafPath);
        }
        path.windows(2)
            .map(|w| {
                self.edge_between(w[0], w[1])
                    .map(|e| e.added)
                    .ok_or(DownsetError::NotRootLeafPath)
            })
            .collect()
    }
}
