//! Random instances shared by the property tests.
#![allow(dead_code)]

use extremamatch_core::labeled_graph::{Label, LabeledDigraph, Symbol};
use extremamatch_core::poset::{build_poset, ExtremaEvent, ExtremumKind, Poset, PosetOfExtrema, TimeInterval};
use extremamatch_core::rational::{ratio, ExtRational, Rational};
use extremamatch_core::switching::{parse_network, sample_regular_parameter, Decomposition, Parameter, RegulatoryNetwork, SampleRanges};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

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

/// Each variable gets a chain of disjoint windows with alternating kinds; windows of
/// different variables overlap freely.
pub fn random_extrema<R: Rng>(rng: &mut R, variables: usize, max_per_variable: usize) -> PosetOfExtrema {
    let names: Vec<String> = (0..variables).map(|i| format!("v{i}")).collect();
    let mut events = Vec::new();
    for name in &names {
        let count = rng.gen_range(1..=max_per_variable);
        let mut kind = if rng.gen_bool(0.5) { ExtremumKind::Min } else { ExtremumKind::Max };
        let mut clock = rng.gen_range(0..3i64);
        for _ in 0..count {
            let start = clock;
            let end = start + rng.gen_range(1..4);
            clock = end + rng.gen_range(0..3);
            events.push(ExtremaEvent {
                variable: name.clone(),
                kind,
                interval: TimeInterval::new(ExtRational::from(start), ExtRational::from(end)).unwrap(),
            });
            kind = match kind {
                ExtremumKind::Min => ExtremumKind::Max,
                ExtremumKind::Max => ExtremumKind::Min,
            };
        }
    }
    events.shuffle(rng);
    build_poset(events, names).unwrap()
}

/// Up to three nodes, one or two in-edges each, random signs and logic shape.
pub fn random_network<R: Rng>(rng: &mut R) -> RegulatoryNetwork {
    let n = rng.gen_range(1..=3);
    let names = ["x", "y", "z"];
    let mut text = String::new();
    for target in 0..n {
        let k = rng.gen_range(1..=2.min(n));
        let mut sources: Vec<usize> = (0..n).collect();
        sources.shuffle(rng);
        let terms: Vec<String> = sources[..k]
            .iter()
            .map(|&s| format!("{}{}", if rng.gen_bool(0.4) { "~" } else { "" }, names[s]))
            .collect();
        let logic = if terms.len() == 2 && rng.gen_bool(0.5) {
            format!("({} + {})", terms[0], terms[1])
        } else {
            terms.iter().map(|t| format!("({t})")).collect::<String>()
        };
        text.push_str(&format!("{} : {}\n", names[target], logic));
    }
    parse_network(&text).unwrap()
}

pub fn random_model<R: Rng>(rng: &mut R) -> (RegulatoryNetwork, Parameter) {
    let rn = random_network(rng);
    let z = sample_regular_parameter(&rn, rng, &SampleRanges::default()).unwrap();
    (rn, z)
}

/// A point strictly inside a random domain, at a random fraction of each interval.
pub fn random_interior_point<R: Rng>(rng: &mut R, dec: &Decomposition) -> Vec<Rational> {
    (0..dec.dimension())
        .map(|k| {
            let walls: Vec<Rational> = dec.thresholds(k).iter().map(|&e| dec.threshold_value(e).clone()).collect();
            let i = rng.gen_range(0..=walls.len());
            let lo = if i == 0 { ratio(0, 1) } else { walls[i - 1].clone() };
            let hi = if i == walls.len() { walls.last().map_or(ratio(1, 1), |w| w * ratio(2, 1)) } else { walls[i].clone() };
            let f = ratio(rng.gen_range(1..100), 100);
            &lo + (&hi - &lo) * f
        })
        .collect()
}

pub fn random_label<R: Rng>(rng: &mut R, alphabet: &[Symbol], dim: usize) -> Label {
    Label::new((0..dim).map(|_| *alphabet.choose(rng).unwrap()).collect())
}

pub const VERTEX_SYMBOLS: [Symbol; 3] = [Symbol::I, Symbol::D, Symbol::Star];
pub const EDGE_SYMBOLS: [Symbol; 4] = [Symbol::Dash, Symbol::Min, Symbol::Max, Symbol::Star];

pub fn random_graph<R: Rng>(rng: &mut R, vertices: usize, dim: usize, density: f64) -> LabeledDigraph {
    let mut b = LabeledDigraph::builder(dim);
    for v in 0..vertices {
        b.add_vertex(v.to_string(), random_label(rng, &VERTEX_SYMBOLS, dim)).unwrap();
    }
    for v in 0..vertices {
        for w in 0..vertices {
            if rng.gen_bool(density) {
                b.add_edge(v, w, random_label(rng, &EDGE_SYMBOLS, dim)).unwrap();
            }
        }
    }
    b.build()
}
