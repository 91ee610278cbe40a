use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::domain::{Decomposition, Domain};
use super::network::{RegulatoryNetwork, Sign};
use super::parameter::Parameter;
use crate::rational::{format_rational, Rational};

/// `W(e, ξ)`: the value an interaction contributes in domain `ξ`.
pub fn interaction_value<'a>(rn: &RegulatoryNetwork, z: &'a Parameter, dec: &Decomposition, d: &Domain, e: usize) -> &'a Rational {
    let edge = &rn.edges()[e];
    let p = z.edge(e);
    let below = dec.below(d, edge.source, e);
    match (edge.sign, below) {
        (Sign::Activation, true) | (Sign::Repression, false) => &p.low,
        (Sign::Activation, false) | (Sign::Repression, true) => &p.high,
    }
}

pub fn lambda_of_domain(rn: &RegulatoryNetwork, z: &Parameter, dec: &Decomposition, d: &Domain) -> Vec<Rational> {
    (0..rn.size())
        .map(|n| {
            let mut product = Rational::one();
            for group in rn.logic(n) {
                let mut sum = Rational::zero();
                for &e in group {
                    sum += interaction_value(rn, z, dec, d, e);
                }
                product *= sum;
            }
            product
        })
        .collect()
}

pub fn fixed_point(rn: &RegulatoryNetwork, z: &Parameter, dec: &Decomposition, d: &Domain) -> Vec<Rational> {
    lambda_of_domain(rn, z, dec, d)
        .into_iter()
        .enumerate()
        .map(|(n, lambda)| lambda / z.gamma(n))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularityViolation {
    /// `ℓ(e) < u(e)` fails.
    LowNotBelowHigh { edge: String, value: String },
    /// Two out-edges of one source share a threshold.
    SharedThreshold { first: String, second: String, value: String },
    /// `γ(n)·Θ = Λ_n(ξ)` for a threshold bounding `ξ` in coordinate `n`.
    FixedPointOnThreshold { node: String, edge: String, domain: String, value: String },
}

impl fmt::Display for RegularityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularityViolation::LowNotBelowHigh { edge, value } => {
                write!(f, "l equals u: l({edge}) = u({edge}) = {value}")
            }
            RegularityViolation::SharedThreshold { first, second, value } => {
                write!(f, "theta equals theta: theta({first}) = theta({second}) = {value}")
            }
            RegularityViolation::FixedPointOnThreshold { node, edge, domain, value } => {
                write!(f, "gamma*theta equals Lambda: gamma({node})*theta({edge}) = Lambda_{node}({domain}) = {value}")
            }
        }
    }
}

pub fn check_regular(rn: &RegulatoryNetwork, z: &Parameter) -> Result<(), Vec<RegularityViolation>> {
    let mut out = Vec::new();
    for (e, p) in z.edge_values().iter().enumerate() {
        if p.low >= p.high {
            out.push(RegularityViolation::LowNotBelowHigh { edge: rn.edge_name(e), value: format_rational(&p.low) });
        }
    }
    let dec = Decomposition::new(rn, z);
    for n in 0..rn.size() {
        for pair in dec.thresholds(n).windows(2) {
            if z.edge(pair[0]).theta == z.edge(pair[1]).theta {
                out.push(RegularityViolation::SharedThreshold {
                    first: rn.edge_name(pair[0]),
                    second: rn.edge_name(pair[1]),
                    value: format_rational(&z.edge(pair[0]).theta),
                });
            }
        }
    }
    for d in dec.domains() {
        let lambda = lambda_of_domain(rn, z, &dec, &d);
        for n in 0..rn.size() {
            for e in [dec.lower_edge(&d, n), dec.upper_edge(&d, n)].into_iter().flatten() {
                if z.gamma(n) * &z.edge(e).theta == lambda[n] {
                    out.push(RegularityViolation::FixedPointOnThreshold {
                        node: rn.nodes()[n].clone(),
                        edge: rn.edge_name(e),
                        domain: alloc::format!("{d}"),
                        value: format_rational(&lambda[n]),
                    });
                }
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}
