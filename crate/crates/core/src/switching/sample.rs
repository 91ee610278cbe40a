use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};
use rand::Rng;
use thiserror::Error;

use super::dynamics::check_regular;
use super::network::RegulatoryNetwork;
use super::parameter::{EdgeParameter, Parameter};
use crate::rational::{ratio, to_f64, Rational};

/// Closed ranges for each parameter family, sampled log-uniformly and rounded
/// to `decimals` places.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleRanges {
    pub gamma: (Rational, Rational),
    pub low: (Rational, Rational),
    pub high: (Rational, Rational),
    pub theta: (Rational, Rational),
    pub decimals: u32,
    pub attempts: usize,
}

impl Default for SampleRanges {
    fn default() -> Self {
        let range = (ratio(1, 10), ratio(10, 1));
        SampleRanges {
            gamma: range.clone(),
            low: range.clone(),
            high: range.clone(),
            theta: range,
            decimals: 3,
            attempts: 1000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SamplingError {
    #[error("sampling range bounds must satisfy 0 < lo <= hi")]
    BadRange,
    #[error("no regular parameter found in {0} attempts")]
    Exhausted(usize),
}

fn log_uniform<R: Rng + ?Sized>(rng: &mut R, range: &(Rational, Rational), scale: &BigInt) -> Rational {
    let (lo, hi) = range;
    if lo == hi {
        return lo.clone();
    }
    let (a, b) = (libm::log(to_f64(lo)), libm::log(to_f64(hi)));
    let x = libm::exp(a + rng.gen::<f64>() * (b - a));
    let scaled = libm::round(x * scale.to_f64().unwrap_or(f64::MAX));
    let num = BigInt::from(scaled.max(1.0) as u64);
    let value = Rational::new(num, scale.clone());
    value.clamp(lo.clone(), hi.clone())
}

/// Draws parameters until one is regular. Deterministic for a given generator state.
pub fn sample_regular_parameter<R: Rng + ?Sized>(rn: &RegulatoryNetwork, rng: &mut R, ranges: &SampleRanges) -> Result<Parameter, SamplingError> {
    let zero = Rational::from_integer(BigInt::from(0));
    for (lo, hi) in [&ranges.gamma, &ranges.low, &ranges.high, &ranges.theta] {
        if *lo <= zero || lo > hi {
            return Err(SamplingError::BadRange);
        }
    }
    let scale: BigInt = Pow::pow(BigInt::from(10), ranges.decimals);
    for _ in 0..ranges.attempts {
        let gamma: Vec<Rational> = (0..rn.size()).map(|_| log_uniform(rng, &ranges.gamma, &scale)).collect();
        let edges: Vec<EdgeParameter> = (0..rn.edges().len())
            .map(|_| {
                let mut low = log_uniform(rng, &ranges.low, &scale);
                let mut high = log_uniform(rng, &ranges.high, &scale);
                if low > high {
                    core::mem::swap(&mut low, &mut high);
                }
                let theta = log_uniform(rng, &ranges.theta, &scale);
                EdgeParameter { low, high, theta }
            })
            .collect();
        let Ok(z) = Parameter::new(rn, gamma, edges) else { continue };
        if check_regular(rn, &z).is_ok() {
            return Ok(z);
        }
    }
    Err(SamplingError::Exhausted(ranges.attempts))
}
