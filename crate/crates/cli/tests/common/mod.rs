//! Random instances and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use extremamatch_core::align::tuple_match;
use extremamatch_core::downset::DownSetGraph;
use extremamatch_core::labeled_graph::{Label, LabeledDigraph, Symbol};
use extremamatch_core::poset::{order_from_intervals, IntervalOrder, Poset, TimeInterval};
use extremamatch_core::rational::ExtRational;
use extremamatch_core::switching::{parse_network, RegulatoryNetwork};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn interval(start: i64, end: i64) -> TimeInterval {
    TimeInterval::new(ExtRational::from(start), ExtRational::from(end)).unwrap()
}

pub fn poset_of_intervals(intervals: &[TimeInterval]) -> Poset {
    Poset::from_strict_order(intervals.len(), |a, b| order_from_intervals(&intervals[a], &intervals[b]) == IntervalOrder::Before)
        .unwrap()
}

/// Random intervals on a small integer grid, so touching and overlapping ends are common.
pub fn random_intervals<R: Rng>(rng: &mut R, n: usize) -> Vec<TimeInterval> {
    (0..n)
        .map(|_| {
            let a = rng.gen_range(0..12);
            let len = rng.gen_range(1..5);
            interval(a, a + len)
        })
        .collect()
}

/// Intervals laid out in `lanes` sequences of disjoint windows; width is at most `lanes`.
pub fn laned_intervals<R: Rng>(rng: &mut R, n: usize, lanes: usize) -> Vec<TimeInterval> {
    let mut clock = vec![0i64; lanes];
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let lane = if i < lanes { i } else { rng.gen_range(0..lanes) };
        let start = clock[lane] + rng.gen_range(0..3);
        let end = start + rng.gen_range(1..4);
        clock[lane] = end;
        out.push(interval(start, end));
    }
    out.shuffle(rng);
    out
}

/// Random strict order from forward pairs `i < j` of a shuffled labeling.
pub fn random_dag_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    Poset::from_pairs(n, pairs).unwrap()
}

pub fn all_root_leaf_paths(g: &DownSetGraph) -> Vec<Vec<usize>> {
    fn walk(g: &DownSetGraph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *path.last().unwrap();
        if v == g.leaf() {
            out.push(path.clone());
            return;
        }
        let next: Vec<usize> = g.out_edges(v).map(|e| e.to).collect();
        for w in next {
            path.push(w);
            walk(g, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(g, &mut vec![g.root()], &mut out);
    out
}

/// Network on up to three nodes; every node gets one or two in-edges and a random
/// product-of-sums logic.
pub fn random_network<R: Rng>(rng: &mut R) -> RegulatoryNetwork {
    let n = rng.gen_range(1..=3);
    let names = ["x", "y", "z"];
    let mut text = String::new();
    for target in 0..n {
        let k = rng.gen_range(1..=2.min(n.max(1)));
        let mut sources: Vec<usize> = (0..n).collect();
        sources.shuffle(rng);
        let terms: Vec<String> = sources[..k]
            .iter()
            .map(|&s| format!("{}{}", if rng.gen_bool(0.4) { "~" } else { "" }, names[s]))
            .collect();
        let logic = if terms.len() == 2 && rng.gen_bool(0.5) {
            format!("({} + {})", terms[0], terms[1])
        } else {
            terms.iter().map(|t| format!("({t})")).collect::<Vec<_>>().join("")
        };
        text.push_str(&format!("{} : {}\n", names[target], logic));
    }
    parse_network(&text).unwrap()
}

pub fn random_label<R: Rng>(rng: &mut R, alphabet: &[Symbol], dim: usize) -> Label {
    Label::new((0..dim).map(|_| *alphabet.choose(rng).unwrap()).collect())
}

pub const VERTEX_SYMBOLS: [Symbol; 3] = [Symbol::I, Symbol::D, Symbol::Star];
pub const EDGE_SYMBOLS: [Symbol; 4] = [Symbol::Dash, Symbol::Min, Symbol::Max, Symbol::Star];

pub fn random_graph<R: Rng>(rng: &mut R, vertices: usize, dim: usize, density: f64, self_loops: bool) -> LabeledDigraph {
    let mut b = LabeledDigraph::builder(dim);
    for v in 0..vertices {
        b.add_vertex(v.to_string(), random_label(rng, &VERTEX_SYMBOLS, dim)).unwrap();
    }
    for v in 0..vertices {
        for w in 0..vertices {
            if (v != w || self_loops) && rng.gen_bool(density) {
                b.add_edge(v, w, random_label(rng, &EDGE_SYMBOLS, dim)).unwrap();
            }
        }
    }
    b.build()
}

/// Every `(t, t')` that ends a pair of equal-length matching paths from `(s, s')`,
/// found by enumerating simple paths of the implicit product.
pub fn brute_force_ends(p: &LabeledDigraph, q: &LabeledDigraph, s: usize, s2: usize) -> BTreeSet<(usize, usize)> {
    fn extend(p: &LabeledDigraph, q: &LabeledDigraph, path: &mut Vec<(usize, usize)>, ends: &mut BTreeSet<(usize, usize)>) {
        let (v, w) = *path.last().unwrap();
        ends.insert((v, w));
        for &e in p.out_edges(v) {
            for &f in q.out_edges(w) {
                let (pe, qe) = (p.edge(e), q.edge(f));
                let next = (pe.to, qe.to);
                if path.contains(&next) || !tuple_match(&pe.label, &qe.label) {
                    continue;
                }
                if !tuple_match(&p.vertex(next.0).label, &q.vertex(next.1).label) {
                    continue;
                }
                path.push(next);
                extend(p, q, path, ends);
                path.pop();
            }
        }
    }
    let mut ends = BTreeSet::new();
    if tuple_match(&p.vertex(s).label, &q.vertex(s2).label) {
        extend(p, q, &mut vec![(s, s2)], &mut ends);
    }
    ends
}

/// Both projections are paths and their label sequences match position by position.
pub fn witness_is_valid(p: &LabeledDigraph, q: &LabeledDigraph, pp: &[usize], qp: &[usize]) -> bool {
    match (p.path_labeling(pp), q.path_labeling(qp)) {
        (Ok(a), Ok(b)) => a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| tuple_match(x, y)),
        _ => false,
    }
}
