use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::network::RegulatoryNetwork;
use super::parameter::Parameter;
use crate::rational::Rational;

/// Per-coordinate interval index: `k` is the `k`-th open interval between the
/// sorted thresholds of that coordinate, `0` being `(0, θ_min)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domain(pub Vec<usize>);

impl Domain {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// Rectangular decomposition of `(0,∞)^N` induced by the edge thresholds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// Per node, out-edge indices sorted by threshold value (ties keep edge order).
    thresholds: Vec<Vec<usize>>,
    /// Position of each edge's threshold within its source's sorted list.
    rank: Vec<usize>,
    values: Vec<Rational>,
}

impl Decomposition {
    pub fn new(rn: &RegulatoryNetwork, z: &Parameter) -> Self {
        let mut thresholds = Vec::with_capacity(rn.size());
        let mut rank = alloc::vec![0; rn.edges().len()];
        for node in 0..rn.size() {
            let mut out: Vec<usize> = rn.out_edges(node).to_vec();
            out.sort_by(|&a, &b| z.edge(a).theta.cmp(&z.edge(b).theta));
            for (k, &e) in out.iter().enumerate() {
                rank[e] = k;
            }
            thresholds.push(out);
        }
        let values = z.edge_values().iter().map(|p| p.theta.clone()).collect();
        Decomposition { thresholds, rank, values }
    }

    pub fn dimension(&self) -> usize {
        self.thresholds.len()
    }

    /// Out-edges of `node` in ascending threshold order.
    pub fn thresholds(&self, node: usize) -> &[usize] {
        &self.thresholds[node]
    }

    pub fn threshold_value(&self, edge: usize) -> &Rational {
        &self.values[edge]
    }

    pub fn rank(&self, edge: usize) -> usize {
        self.rank[edge]
    }

    pub fn intervals(&self, node: usize) -> usize {
        self.thresholds[node].len() + 1
    }

    pub fn domain_count(&self) -> usize {
        (0..self.dimension()).map(|n| self.intervals(n)).product()
    }

    /// Mixed-radix index with coordinate 0 varying fastest.
    pub fn index_of(&self, d: &Domain) -> usize {
        let mut ix = 0;
        for n in (0..self.dimension()).rev() {
            ix = ix * self.intervals(n) + d.0[n];
        }
        ix
    }

    pub fn domain_at(&self, mut ix: usize) -> Domain {
        let mut coords = Vec::with_capacity(self.dimension());
        for n in 0..self.dimension() {
            coords.push(ix % self.intervals(n));
            ix /= self.intervals(n);
        }
        Domain(coords)
    }

    pub fn domains(&self) -> impl Iterator<Item = Domain> + '_ {
        (0..self.domain_count()).map(|i| self.domain_at(i))
    }

    /// Edge whose threshold bounds coordinate `node` of `d` from below.
    pub fn lower_edge(&self, d: &Domain, node: usize) -> Option<usize> {
        d.0[node].checked_sub(1).map(|k| self.thresholds[node][k])
    }

    /// Edge whose threshold bounds coordinate `node` of `d` from above.
    pub fn upper_edge(&self, d: &Domain, node: usize) -> Option<usize> {
        self.thresholds[node].get(d.0[node]).copied()
    }

    /// True when source coordinate of `edge` lies below that edge's threshold in `d`.
    pub fn below(&self, d: &Domain, source: usize, edge: usize) -> bool {
        d.0[source] <= self.rank[edge]
    }

    pub fn locate(&self, x: &[Rational]) -> Option<Domain> {
        let mut coords = Vec::with_capacity(self.dimension());
        for (n, xn) in x.iter().enumerate() {
            let mut k = 0;
            for &e in &self.thresholds[n] {
                match xn.cmp(&self.values[e]) {
                    core::cmp::Ordering::Greater => k += 1,
                    core::cmp::Ordering::Equal => return None,
                    core::cmp::Ordering::Less => break,
                }
            }
            coords.push(k);
        }
        Some(Domain(coords))
    }

    pub fn describe(&self, rn: &RegulatoryNetwork, d: &Domain) -> String {
        let mut parts = Vec::new();
        for n in 0..self.dimension() {
            let lo = self.lower_edge(d, n).map(|e| rn.edge_name(e));
            let hi = self.upper_edge(d, n).map(|e| rn.edge_name(e));
            parts.push(match (lo, hi) {
                (None, None) => alloc::format!("{} any", rn.nodes()[n]),
                (None, Some(h)) => alloc::format!("{} < theta({h})", rn.nodes()[n]),
                (Some(l), None) => alloc::format!("{} > theta({l})", rn.nodes()[n]),
                (Some(l), Some(h)) => alloc::format!("theta({l}) < {} < theta({h})", rn.nodes()[n]),
            });
        }
        parts.join(", ")
    }
}
