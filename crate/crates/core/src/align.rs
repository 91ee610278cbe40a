//! Extremal matching relation, alignment graphs and the path/cycle matching
//! decisions built on reachability in them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use thiserror::Error;

use crate::labeled_graph::{Label, LabeledDigraph, Symbol, VertexIx};

/// Whether pattern symbol `a` is matched by search symbol `b`. Directional.
pub fn symbol_match(a: Symbol, b: Symbol) -> bool {
    use Symbol::*;
    matches!(
        (a, b),
        (I, Star)
            | (I, I)
            | (D, Star)
            | (D, D)
            | (Star, Star)
            | (Dash, Dash)
            | (Dash, Min)
            | (Dash, Max)
            | (Dash, Star)
            | (Min, Min)
            | (Min, Star)
            | (Max, Max)
            | (Max, Star)
    )
}

pub fn tuple_match(a: &Label, b: &Label) -> bool {
    a.dimension() == b.dimension() && a.symbols().iter().zip(b.symbols()).all(|(&x, &y)| symbol_match(x, y))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlignError {
    #[error("pattern has dimension {pattern}, search graph has dimension {search}")]
    DimensionMismatch { pattern: usize, search: usize },
    #[error("vertex {vertex} does not exist in the {graph} graph")]
    UnknownVertex { graph: &'static str, vertex: usize },
}

/// Product of a pattern and a search graph restricted to matching labels.
#[derive(Debug, Clone)]
pub struct AlignmentGraph {
    search_len: usize,
    /// Alignment vertex of each `(v, v')`, row-major in `v`.
    index: Vec<u32>,
    pairs: Vec<(VertexIx, VertexIx)>,
    /// Successor lists in compressed form: those of `a` are `targets[offsets[a]..offsets[a + 1]]`.
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

/// Labels of up to this many components are packed into one word, six bits per
/// component: a pattern symbol as the set of search symbols matching it, a search
/// symbol as a single bit. Two labels match iff every component shares a bit.
const PACKED_MAX: usize = 10;

fn pack_pattern(l: &Label) -> u64 {
    l.symbols().iter().enumerate().fold(0, |word, (i, &a)| {
        let lane = Symbol::ALL.iter().enumerate().filter(|&(_, &b)| symbol_match(a, b)).fold(0u64, |m, (j, _)| m | 1 << j);
        word | lane << (6 * i)
    })
}

fn pack_search(l: &Label) -> u64 {
    l.symbols().iter().enumerate().fold(0, |word, (i, &b)| {
        let j = Symbol::ALL.iter().position(|&s| s == b).expect("symbol in alphabet");
        word | 1 << (6 * i + j)
    })
}

/// Distinct labels of a sequence, and the class of each item.
fn label_classes<'a>(labels: impl Iterator<Item = &'a Label>) -> (Vec<usize>, Vec<&'a Label>) {
    let mut ids: BTreeMap<&Label, usize> = BTreeMap::new();
    let mut reps = Vec::new();
    let classes = labels
        .map(|l| {
            *ids.entry(l).or_insert_with(|| {
                reps.push(l);
                reps.len() - 1
            })
        })
        .collect();
    (classes, reps)
}

/// Label tests between two label sequences, precomputed so that the product
/// loops only do table lookups.
enum Matcher {
    Packed { pattern: Vec<u64>, search: Vec<u64>, dim: u32 },
    Classes { pattern: Vec<usize>, search: Vec<usize>, width: usize, table: Vec<bool> },
}

impl Matcher {
    fn new<'a>(dim: usize, pattern: impl Iterator<Item = &'a Label>, search: impl Iterator<Item = &'a Label>) -> Self {
        if dim <= PACKED_MAX {
            return Matcher::Packed { pattern: pattern.map(pack_pattern).collect(), search: search.map(pack_search).collect(), dim: dim as u32 };
        }
        let (pattern, pr) = label_classes(pattern);
        let (search, sr) = label_classes(search);
        let table = pr.iter().flat_map(|x| sr.iter().map(|y| tuple_match(x, y))).collect();
        Matcher::Classes { pattern, search, width: sr.len(), table }
    }

    #[inline(always)]
    fn test(&self, i: usize, j: usize) -> bool {
        match self {
            Matcher::Packed { pattern, search, dim } => (pattern[i] & search[j]).count_ones() == *dim,
            Matcher::Classes { pattern, search, width, table } => table[pattern[i] * width + search[j]],
        }
    }
}

const ABSENT: u32 = u32::MAX;

fn product_edges(pattern: &LabeledDigraph, search: &LabeledDigraph, index: &[u32], m: usize) -> Vec<(u32, u32)> {
    let matcher = Matcher::new(pattern.dimension(), pattern.edges().iter().map(|e| &e.label), search.edges().iter().map(|e| &e.label));
    match &matcher {
        Matcher::Packed { pattern: pc, search: sc, dim } => {
            scan_edges(pattern, search, index, m, |i, j| (pc[i] & sc[j]).count_ones() == *dim)
        }
        Matcher::Classes { pattern: pc, search: sc, width, table } => {
            scan_edges(pattern, search, index, m, |i, j| table[pc[i] * width + sc[j]])
        }
    }
}

/// The inner loop is free of data-dependent branches: each candidate is written
/// to scratch and kept only by advancing the length.
#[inline(always)]
fn scan_edges<F: Fn(usize, usize) -> bool>(pattern: &LabeledDigraph, search: &LabeledDigraph, index: &[u32], m: usize, ok: F) -> Vec<(u32, u32)> {
    let ends: Vec<(usize, usize)> = search.edges().iter().map(|e| (e.from, e.to)).collect();
    let mut scratch = alloc::vec![(0u32, 0u32); ends.len()];
    let mut found = Vec::new();
    for (i, pe) in pattern.edges().iter().enumerate() {
        let from_row = &index[pe.from * m..][..m];
        let to_row = &index[pe.to * m..][..m];
        let mut len = 0;
        for (j, &(f, t)) in ends.iter().enumerate() {
            let (a, b) = (from_row[f], to_row[t]);
            scratch[len] = (a, b);
            len += ((a != ABSENT) & (b != ABSENT) & ok(i, j)) as usize;
        }
        found.extend_from_slice(&scratch[..len]);
    }
    found
}

pub fn alignment_graph(pattern: &LabeledDigraph, search: &LabeledDigraph) -> Result<AlignmentGraph, AlignError> {
    if pattern.dimension() != search.dimension() {
        return Err(AlignError::DimensionMismatch { pattern: pattern.dimension(), search: search.dimension() });
    }
    let m = search.vertex_count();
    let matcher = Matcher::new(pattern.dimension(), pattern.vertices().iter().map(|v| &v.label), search.vertices().iter().map(|v| &v.label));
    let mut index = alloc::vec![ABSENT; pattern.vertex_count() * m];
    let mut pairs = Vec::new();
    for v in 0..pattern.vertex_count() {
        for w in 0..m {
            if matcher.test(v, w) {
                index[v * m + w] = pairs.len() as u32;
                pairs.push((v, w));
            }
        }
    }
    let found = product_edges(pattern, search, &index, m);
    let mut offsets = alloc::vec![0; pairs.len() + 1];
    for &(a, _) in &found {
        offsets[a as usize + 1] += 1;
    }
    for a in 0..pairs.len() {
        offsets[a + 1] += offsets[a];
    }
    let mut fill = offsets.clone();
    let mut targets = alloc::vec![0; found.len()];
    for &(a, b) in &found {
        targets[fill[a as usize]] = b as usize;
        fill[a as usize] += 1;
    }
    for a in 0..pairs.len() {
        targets[offsets[a]..offsets[a + 1]].sort_unstable();
    }
    Ok(AlignmentGraph { search_len: m, index, pairs, offsets, targets })
}

impl AlignmentGraph {
    pub fn vertex_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    pub fn pair(&self, a: usize) -> (VertexIx, VertexIx) {
        self.pairs[a]
    }

    pub fn pairs(&self) -> &[(VertexIx, VertexIx)] {
        &self.pairs
    }

    pub fn successors(&self, a: usize) -> &[usize] {
        &self.targets[self.offsets[a]..self.offsets[a + 1]]
    }

    pub fn index_of(&self, v: VertexIx, w: VertexIx) -> Option<usize> {
        self.index.get(v * self.search_len + w).filter(|&&a| a != ABSENT).map(|&a| a as usize)
    }
}

/// Vertices reachable from a start vertex, with the DFS parent of each for path recovery.
#[derive(Debug, Clone)]
pub struct Reach {
    start: usize,
    parent: Vec<Option<usize>>,
    seen: Vec<bool>,
}

impl Reach {
    pub fn contains(&self, v: usize) -> bool {
        self.seen.get(v).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.seen.iter().enumerate().filter(|(_, &s)| s).map(|(v, _)| v)
    }

    /// Vertex sequence from the start to `v`.
    pub fn path_to(&self, v: usize) -> Option<Vec<usize>> {
        if !self.contains(v) {
            return None;
        }
        let mut path = alloc::vec![v];
        let mut cur = v;
        while cur != self.start {
            cur = self.parent[cur].expect("reached vertices have parents");
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

/// Depth-first reachability over any adjacency function on `0..n`.
pub fn reachable<'a, F>(n: usize, start: usize, successors: F) -> Result<Reach, AlignError>
where
    F: Fn(usize) -> &'a [usize],
{
    if start >= n {
        return Err(AlignError::UnknownVertex { graph: "alignment", vertex: start });
    }
    let mut seen = alloc::vec![false; n];
    let mut parent = alloc::vec![None; n];
    let mut stack = alloc::vec![(start, None)];
    while let Some((u, from)) = stack.pop() {
        if seen[u] {
            continue;
        }
        seen[u] = true;
        parent[u] = from;
        for &w in successors(u).iter().rev() {
            if !seen[w] {
                stack.push((w, Some(u)));
            }
        }
    }
    Ok(Reach { start, parent, seen })
}

/// A pair of matching paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub pattern_path: Vec<VertexIx>,
    pub search_path: Vec<VertexIx>,
}

fn check(graph: &'static str, g: &LabeledDigraph, v: VertexIx) -> Result<(), AlignError> {
    if v < g.vertex_count() {
        Ok(())
    } else {
        Err(AlignError::UnknownVertex { graph, vertex: v })
    }
}

fn witness(ag: &AlignmentGraph, path: Vec<usize>) -> Witness {
    let (pattern_path, search_path) = path.into_iter().map(|a| ag.pair(a)).unzip();
    Witness { pattern_path, search_path }
}

impl AlignmentGraph {
    fn reach_from(&self, v: VertexIx, w: VertexIx) -> Option<Reach> {
        let a = self.index_of(v, w)?;
        Some(reachable(self.vertex_count(), a, |u| self.successors(u)).expect("start is an alignment vertex"))
    }

    /// Matching paths from `(s, s')` to `(t, t')`, if any.
    pub fn matching(&self, s: (VertexIx, VertexIx), t: (VertexIx, VertexIx)) -> Option<Witness> {
        let reach = self.reach_from(s.0, s.1)?;
        let goal = self.index_of(t.0, t.1)?;
        reach.path_to(goal).map(|p| witness(self, p))
    }

    /// Some search path matching a pattern path from `s` to `t`; lowest start index wins.
    pub fn path_matching(&self, s: VertexIx, t: VertexIx) -> Option<Witness> {
        (0..self.search_len).find_map(|w| {
            let reach = self.reach_from(s, w)?;
            (0..self.search_len).find_map(|w2| reach.path_to(self.index_of(t, w2)?)).map(|p| witness(self, p))
        })
    }

    /// As `path_matching`, with the search path required to end where it started.
    pub fn cycle_matching(&self, s: VertexIx, t: VertexIx) -> Option<Witness> {
        (0..self.search_len).find_map(|w| {
            let reach = self.reach_from(s, w)?;
            reach.path_to(self.index_of(t, w)?).map(|p| witness(self, p))
        })
    }
}

pub fn match_paths(
    pattern: &LabeledDigraph,
    search: &LabeledDigraph,
    (s, t): (VertexIx, VertexIx),
    (s2, t2): (VertexIx, VertexIx),
) -> Result<Option<Witness>, AlignError> {
    for v in [s, t] {
        check("pattern", pattern, v)?;
    }
    for v in [s2, t2] {
        check("search", search, v)?;
    }
    Ok(alignment_graph(pattern, search)?.matching((s, s2), (t, t2)))
}

pub fn path_match(pattern: &LabeledDigraph, search: &LabeledDigraph, s: VertexIx, t: VertexIx) -> Result<Option<Witness>, AlignError> {
    check("pattern", pattern, s)?;
    check("pattern", pattern, t)?;
    Ok(alignment_graph(pattern, search)?.path_matching(s, t))
}

pub fn cycle_match(pattern: &LabeledDigraph, search: &LabeledDigraph, s: VertexIx, t: VertexIx) -> Result<Option<Witness>, AlignError> {
    check("pattern", pattern, s)?;
    check("pattern", pattern, t)?;
    Ok(alignment_graph(pattern, search)?.cycle_matching(s, t))
}
