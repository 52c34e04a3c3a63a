//! Closed-form bounds, evaluated exactly.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::rational::{int, ratio, serde_fraction, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("{which}: parameters outside the formula's domain ({detail})")]
    Domain { which: BoundSource, detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    /// π ≤ (n+5)/8 + (q²−4q+9)/(8(n−1)) for 2-connected outerplanar graphs.
    ProximityTwoConnected,
    /// The q = 3 specialization for maximal outerplanar graphs.
    ProximityMaximalOuterplanar,
    /// ρ of a 2-connected outerplanar graph is at most ρ of its Hamiltonian cycle.
    Remoteness,
    /// rad ≤ ⌊n/4⌋ + 1 under the face-length condition.
    Radius,
    /// π ≤ (n+1)/4 (+ 1/(4(n−1)) for even n) for every connected graph.
    ClassicalProximity,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSource::ProximityTwoConnected => "prox2c",
            BoundSource::ProximityMaximalOuterplanar => "proxmop",
            BoundSource::Remoteness => "rho",
            BoundSource::Radius => "rad",
            BoundSource::ClassicalProximity => "classical-proximity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    #[serde(with = "serde_fraction")]
    pub value: Rational,
    pub source: BoundSource,
    pub n: usize,
    pub q: Option<usize>,
}

fn domain(which: BoundSource, detail: String) -> BoundError {
    BoundError::Domain { which, detail }
}

/// Upper bound on the proximity of a 2-connected outerplanar graph of order
/// `n` whose interior faces have length at most `q`.
pub fn prox_bound_2conn(n: usize, q: usize) -> Result<BoundValue, BoundError> {
    let which = BoundSource::ProximityTwoConnected;
    if n < 3 || q < 3 || q > n {
        return Err(domain(which, format!("need n >= 3 and 3 <= q <= n, got n={n}, q={q}")));
    }
    let (n_i, q_i) = (n as i64, q as i64);
    let value = ratio(n_i + 5, 8) + ratio(q_i * q_i - 4 * q_i + 9, 8 * (n_i - 1));
    Ok(BoundValue {
        value,
        source: which,
        n,
        q: Some(q),
    })
}

pub fn prox_bound_mop(n: usize) -> Result<BoundValue, BoundError> {
    let which = BoundSource::ProximityMaximalOuterplanar;
    if n < 3 {
        return Err(domain(which, format!("need n >= 3, got n={n}")));
    }
    let n_i = n as i64;
    Ok(BoundValue {
        value: ratio(n_i + 5, 8) + ratio(3, 4 * (n_i - 1)),
        source: which,
        n,
        q: Some(3),
    })
}

/// `(n+1)/4`, plus `1/(4(n−1))` when `n` is even. This is both the maximum
/// proximity over connected graphs of order `n` and the average distance of
/// a vertex of `C_n`.
pub fn classical_proximity_bound(n: usize) -> Rational {
    assert!(n >= 2, "classical proximity bound needs n >= 2");
    let n_i = n as i64;
    let base = ratio(n_i + 1, 4);
    if n % 2 == 0 {
        base + ratio(1, 4 * (n_i - 1))
    } else {
        base
    }
}

pub fn remoteness_bound(n: usize) -> Result<BoundValue, BoundError> {
    let which = BoundSource::Remoteness;
    if n < 3 {
        return Err(domain(which, format!("need n >= 3, got n={n}")));
    }
    Ok(BoundValue {
        value: classical_proximity_bound(n),
        source: which,
        n,
        q: None,
    })
}

/// `⌊n/4⌋ + 1`. Defined for every `n`; callers enforce `n >= 3` where it matters.
pub fn radius_bound(n: usize) -> u32 {
    (n / 4 + 1) as u32
}

pub fn radius_bound_value(n: usize) -> Result<BoundValue, BoundError> {
    if n < 3 {
        return Err(domain(BoundSource::Radius, format!("need n >= 3, got n={n}")));
    }
    Ok(BoundValue {
        value: int(radius_bound(n) as i64),
        source: BoundSource::Radius,
        n,
        q: None,
    })
}

/// Inclusive range of radii compatible with `2·rad − 2 ≤ diam ≤ 2·rad`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RadiusInterval {
    pub lo: u32,
    pub hi: u32,
}

impl RadiusInterval {
    pub fn contains(&self, rad: u32) -> bool {
        self.lo <= rad && rad <= self.hi
    }

    pub fn values(&self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

pub fn chordal_radius_interval(diam: u32) -> RadiusInterval {
    RadiusInterval {
        lo: diam.div_ceil(2),
        hi: (diam + 2) / 2,
    }
}

/// Proximity certificate numerator: `n² + 4n + k² − 4k + 4`. A vertex
/// `w` is certified when `8·σ(w) ≤` this value.
pub fn proximity_certificate_numerator(n: usize, k: usize) -> u64 {
    let (n, k) = (n as u64, k as u64);
    n * n + 4 * n + k * k + 4 - 4 * k
}
