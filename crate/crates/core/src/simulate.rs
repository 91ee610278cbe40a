//! Piecewise-analytic integration of the switching ODE `ẋ = −Γx + Λ(ξ)`.
//!
//! The domain the state lives in is tracked combinatorially, so whether a
//! coordinate heads for a wall is decided exactly from the rational fixed
//! point. Positions and crossing times are `f64`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use thiserror::Error;

use crate::poset::{build_poset, ExtremaError, ExtremaEvent, ExtremumKind, PosetOfExtrema, TimeInterval};
use crate::rational::{to_f64, ExtRational, Rational};
use crate::switching::{check_regular, fixed_point, Decomposition, Domain, RegularityViolation, RegulatoryNetwork};
use crate::switching::Parameter;

/// Relative gap below which two crossing times count as simultaneous.
pub const CORNER_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimulationError {
    #[error("start point has {found} coordinates, network has {expected}")]
    Dimension { found: usize, expected: usize },
    #[error("start point must be positive and off every threshold (coordinate {node})")]
    DegenerateStart { node: String },
    #[error("parameter is not regular ({} violations)", .0.len())]
    Irregular(Vec<RegularityViolation>),
    #[error("corner hit at crossing {crossing}: {first} and {second} reach thresholds together")]
    CornerHit { crossing: usize, first: String, second: String },
    #[error("at crossing {crossing}, {node} lands numerically on its new fixed point")]
    Tie { crossing: usize, node: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    MaxCrossings,
    /// No coordinate heads for a wall; the state converges to the domain's fixed point.
    Converged,
    /// The fixed point across the wall points back at it (sliding dynamics, not followed).
    AttractingWall,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::MaxCrossings => "max-crossings",
            StopReason::Converged => "converged",
            StopReason::AttractingWall => "attracting-wall",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Crossing {
    /// Absolute time of the crossing.
    pub time: f64,
    pub threshold_edge: usize,
    pub upward: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryEvent {
    pub variable: usize,
    pub kind: ExtremumKind,
    /// Index into `crossings`.
    pub crossing: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryRecord {
    /// Visited domains as indices of the decomposition; one more than `crossings`.
    pub domains: Vec<usize>,
    /// State on entry to each visited domain.
    pub entries: Vec<Vec<f64>>,
    pub crossings: Vec<Crossing>,
    pub events: Vec<TrajectoryEvent>,
    pub stop: StopReason,
}

/// Closed-form flow of one coordinate inside a domain.
pub fn flow(x0: f64, p: f64, gamma: f64, t: f64) -> f64 {
    p + (x0 - p) * libm::exp(-gamma * t)
}

pub fn integrate(rn: &RegulatoryNetwork, z: &Parameter, x0: &[Rational], max_crossings: usize) -> Result<TrajectoryRecord, SimulationError> {
    let n = rn.size();
    if x0.len() != n {
        return Err(SimulationError::Dimension { found: x0.len(), expected: n });
    }
    check_regular(rn, z).map_err(SimulationError::Irregular)?;
    let dec = Decomposition::new(rn, z);
    let zero = Rational::from_integer(0.into());
    if let Some(k) = x0.iter().position(|v| *v <= zero) {
        return Err(SimulationError::DegenerateStart { node: rn.nodes()[k].clone() });
    }
    let mut domain = match dec.locate(x0) {
        Some(d) => d,
        None => {
            let k = (0..n)
                .find(|&k| dec.thresholds(k).iter().any(|&e| x0[k] == *dec.threshold_value(e)))
                .unwrap_or(0);
            return Err(SimulationError::DegenerateStart { node: rn.nodes()[k].clone() });
        }
    };
    let gamma: Vec<f64> = z.gammas().iter().map(to_f64).collect();
    let mut p = fixed_point(rn, z, &dec, &domain);
    // x = P + dev, with the sign of dev kept exactly: it is invariant inside a
    // domain and would be lost once dev underflows.
    let mut dev: Vec<f64> = (0..n).map(|k| to_f64(&(&x0[k] - &p[k]))).collect();
    let mut sign: Vec<Ordering> = (0..n).map(|k| x0[k].cmp(&p[k])).collect();
    let position = |p: &[Rational], dev: &[f64]| -> Vec<f64> { p.iter().zip(dev).map(|(pk, d)| to_f64(pk) + d).collect() };
    let mut rec = TrajectoryRecord {
        domains: alloc::vec![dec.index_of(&domain)],
        entries: alloc::vec![position(&p, &dev)],
        crossings: Vec::new(),
        events: Vec::new(),
        stop: StopReason::MaxCrossings,
    };
    let mut clock = 0.0;
    while rec.crossings.len() < max_crossings {
        // Earliest wall each coordinate reaches, if it reaches one at all.
        let mut hits: Vec<(f64, usize, usize, bool)> = Vec::new();
        for k in 0..n {
            let target = if let Some(e) = dec.upper_edge(&domain, k).filter(|&e| p[k] > *dec.threshold_value(e)) {
                Some((e, true))
            } else {
                dec.lower_edge(&domain, k).filter(|&e| p[k] < *dec.threshold_value(e)).map(|e| (e, false))
            };
            if let Some((e, up)) = target {
                let gap = to_f64(&(dec.threshold_value(e) - &p[k]));
                let t = libm::log(dev[k] / gap) / gamma[k];
                hits.push((t.max(0.0), k, e, up));
            }
        }
        let Some(&(t, k, e, up)) = hits.iter().min_by(|a, b| a.0.total_cmp(&b.0)) else {
            rec.stop = StopReason::Converged;
            return Ok(rec);
        };
        if let Some(&(_, other, _, _)) = hits.iter().find(|h| h.1 != k && (h.0 - t).abs() <= CORNER_TOLERANCE * t.max(1.0)) {
            return Err(SimulationError::CornerHit {
                crossing: rec.crossings.len(),
                first: rn.nodes()[k].clone(),
                second: rn.nodes()[other].clone(),
            });
        }
        let mut next = domain.clone();
        if up {
            next.0[k] += 1;
        } else {
            next.0[k] -= 1;
        }
        let q = fixed_point(rn, z, &dec, &next);
        let theta = dec.threshold_value(e);
        if (up && q[k] < *theta) || (!up && q[k] > *theta) {
            rec.stop = StopReason::AttractingWall;
            return Ok(rec);
        }
        clock += t;
        let crossing = rec.crossings.len();
        rec.crossings.push(Crossing { time: clock, threshold_edge: e, upward: up });
        for j in 0..n {
            if j == k {
                dev[j] = to_f64(&(theta - &q[j]));
                sign[j] = theta.cmp(&q[j]);
                continue;
            }
            let decayed = dev[j] * libm::exp(-gamma[j] * t);
            let shift = &p[j] - &q[j];
            let new_dev = decayed + to_f64(&shift);
            let new_sign = match (sign[j], shift.cmp(&Rational::from_integer(0.into()))) {
                (s, Ordering::Equal) => s,
                (Ordering::Equal, s) => s,
                (a, b) if a == b => a,
                _ => match new_dev.partial_cmp(&0.0) {
                    Some(Ordering::Equal) | None => {
                        return Err(SimulationError::Tie { crossing, node: rn.nodes()[j].clone() });
                    }
                    Some(s) => s,
                },
            };
            // Moving direction is the opposite of the sign of x - P.
            if sign[j] != Ordering::Equal && new_sign != sign[j] {
                let kind = if new_sign == Ordering::Less { ExtremumKind::Min } else { ExtremumKind::Max };
                rec.events.push(TrajectoryEvent { variable: j, kind, crossing });
            }
            dev[j] = new_dev;
            sign[j] = new_sign;
        }
        domain = next;
        p = q;
        rec.domains.push(dec.index_of(&domain));
        rec.entries.push(position(&p, &dev));
    }
    Ok(rec)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrajectoryPosetError {
    #[error("trajectory has no extremal events")]
    Empty,
    #[error("trajectory events break alternation ({0}); the integrator is inconsistent")]
    OracleIntegrity(ExtremaError),
}

/// Totally ordered poset of the trajectory's events, on consecutive unit intervals.
pub fn events_to_chain_poset(rn: &RegulatoryNetwork, rec: &TrajectoryRecord) -> Result<PosetOfExtrema, TrajectoryPosetError> {
    if rec.events.is_empty() {
        return Err(TrajectoryPosetError::Empty);
    }
    let events = rec
        .events
        .iter()
        .enumerate()
        .map(|(i, ev)| ExtremaEvent {
            variable: rn.nodes()[ev.variable].clone(),
            kind: ev.kind,
            interval: TimeInterval::new(ExtRational::from(i as i64), ExtRational::from(i as i64 + 1)).expect("unit interval"),
        })
        .collect();
    build_poset(events, rn.nodes().to_vec()).map_err(|e| match e {
        ExtremaError::Empty => TrajectoryPosetError::Empty,
        other => TrajectoryPosetError::OracleIntegrity(other),
    })
}

/// Domain the record was in after `crossing` crossings.
pub fn domain_after(dec: &Decomposition, rec: &TrajectoryRecord, crossing: usize) -> Domain {
    dec.domain_at(rec.domains[crossing])
}
