//! Witness vertices with low transmission or low eccentricity.
//!
//! Both constructions start from a central face `F = v_0 … v_{k−1}` and the
//! segments `P_i` of the outer cycle between consecutive face vertices. The
//! resulting vertex is always certified with its true value in `G`,
//! recomputed by breadth-first search.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{proximity_certificate_numerator, radius_bound};
use crate::graph::{eccentricity, transmission, Graph, GraphError};
use crate::median::{
    all_cycle_weighted_transmissions, central_face, cycle_median, MedianError, WeightedCycle,
};
use crate::outerplanar::{max_face_length, recognize, Face, OuterplanarError, OuterplaneEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Outerplanar(#[from] OuterplanarError),
    #[error(transparent)]
    Median(#[from] MedianError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("maximum face length {q} exceeds (n+2)/4 for n={n}")]
    FaceTooLong { q: usize, n: usize },
}

/// `⌊(x+1)²/4⌋`.
pub fn f_cap(x: u64) -> u64 {
    (x + 1) * (x + 1) / 4
}

/// Face vertices in outer-cycle order with the sizes of the segments
/// between them. `p[i]` counts the vertices strictly between `v_i` and
/// `v_{i+1}` along the outer cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentDecomposition {
    pub n: usize,
    pub face: Face,
    pub face_vertices: Vec<usize>,
    pub p: Vec<usize>,
}

impl SegmentDecomposition {
    pub fn k(&self) -> usize {
        self.face_vertices.len()
    }

    /// The same face traversed the other way round, keeping `P_0` as the
    /// segment between the first two labels: `v'_i = v_{1−i}`, `p'_i = p_{−i}`.
    fn reversed(&self) -> Self {
        let k = self.k();
        Self {
            n: self.n,
            face: self.face.clone(),
            face_vertices: (0..k).map(|i| self.face_vertices[(k + 1 - i) % k]).collect(),
            p: (0..k).map(|i| self.p[(k - i) % k]).collect(),
        }
    }

    fn rotated(&self, start: usize) -> Self {
        let k = self.k();
        Self {
            n: self.n,
            face: self.face.clone(),
            face_vertices: (0..k).map(|i| self.face_vertices[(start + i) % k]).collect(),
            p: (0..k).map(|i| self.p[(start + i) % k]).collect(),
        }
    }
}

/// Decomposes the outer cycle around `face`, starting at the face vertex
/// with the smallest id and following the canonical cycle direction.
pub fn segment_decomposition(emb: &OuterplaneEmbedding, face: &Face) -> SegmentDecomposition {
    let n = emb.order();
    let b = &face.boundary;
    let k = b.len();
    let gaps: Vec<usize> = (0..k)
        .map(|i| {
            if i + 1 < k {
                b[i + 1] - b[i] - 1
            } else {
                n - 1 - b[k - 1] + b[0]
            }
        })
        .collect();
    let start = (0..k).min_by_key(|&i| emb.vertex_at(b[i])).unwrap();
    SegmentDecomposition {
        n,
        face: face.clone(),
        face_vertices: (0..k).map(|i| emb.vertex_at(b[(start + i) % k])).collect(),
        p: (0..k).map(|i| gaps[(start + i) % k]).collect(),
    }
}

/// Doubled boundary weights `2 + p_i + p_{i−1}`: each face vertex keeps its
/// own unit weight and half of each adjacent segment.
pub fn boundary_weights(sd: &SegmentDecomposition) -> WeightedCycle {
    let k = sd.k();
    let doubled = (0..k)
        .map(|i| 2 + sd.p[i] as u64 + sd.p[(i + k - 1) % k] as u64)
        .collect();
    WeightedCycle::new(doubled).expect("faces have length >= 3")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Proximity,
    Radius,
}

/// How the witness vertex was chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum CaseTag {
    /// Every segment is short: weighted-cycle median of the boundary.
    Case1 { median_position: usize },
    /// Some segment holds more than half the off-face vertices: its first
    /// face endpoint.
    Case2 { segment: usize },
    /// Eccentricity witness: `u = v_ℓ` if `ℓ ≤ j`, else `v_j`, after
    /// relabelling so that `p_0` is the longest segment.
    Radius {
        ell: u64,
        j: usize,
        chosen: RadiusChoice,
        reversed: bool,
        relabelled_face: Vec<usize>,
        relabelled_p: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RadiusChoice {
    VEll,
    VJ,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    pub vertex: usize,
    pub kind: WitnessKind,
    pub n: usize,
    /// `σ(w, G)` for proximity, `ecc(u, G)` for radius.
    pub exact_value: u64,
    /// Proximity: `n² + 4n + k² − 4k + 4`, compared against `8σ`.
    /// Radius: `8(⌊n/4⌋ + 1)`, compared against `8·ecc`.
    pub guaranteed_bound_times8: u64,
    pub case_tag: CaseTag,
    pub k: usize,
    pub q: usize,
    pub p: Vec<usize>,
    pub central_face: Vec<usize>,
}

impl WitnessCertificate {
    pub fn holds(&self) -> bool {
        8 * self.exact_value <= self.guaranteed_bound_times8
    }
}

fn embedding_of(g: &Graph) -> Result<OuterplaneEmbedding, WitnessError> {
    Ok(recognize(g)?)
}

pub fn proximity_witness(g: &Graph) -> Result<WitnessCertificate, WitnessError> {
    let emb = embedding_of(g)?;
    proximity_witness_with(g, &emb)
}

/// Proximity witness for a graph whose embedding is already known.
pub fn proximity_witness_with(
    g: &Graph,
    emb: &OuterplaneEmbedding,
) -> Result<WitnessCertificate, WitnessError> {
    let n = g.order();
    let q = max_face_length(emb);
    let cf = central_face(emb)?;
    let sd = segment_decomposition(emb, &cf.face);
    let k = sd.k();
    let half = (n - k) / 2;
    let (vertex, case_tag) = if sd.p.iter().all(|&p| p <= half) {
        let m = cycle_median(&boundary_weights(&sd))?;
        (
            sd.face_vertices[m.position],
            CaseTag::Case1 {
                median_position: m.position,
            },
        )
    } else {
        let longest = *sd.p.iter().max().unwrap();
        let segment = sd.p.iter().position(|&p| p == longest).unwrap();
        (sd.face_vertices[segment], CaseTag::Case2 { segment })
    };
    Ok(WitnessCertificate {
        vertex,
        kind: WitnessKind::Proximity,
        n,
        exact_value: transmission(g, vertex)?,
        guaranteed_bound_times8: proximity_certificate_numerator(n, k),
        case_tag,
        k,
        q,
        central_face: sd.face_vertices.clone(),
        p: sd.p,
    })
}

pub fn radius_witness(g: &Graph) -> Result<WitnessCertificate, WitnessError> {
    let emb = embedding_of(g)?;
    radius_witness_with(g, &emb)
}

/// Eccentricity witness; requires every face to have length at most `(n+2)/4`.
pub fn radius_witness_with(
    g: &Graph,
    emb: &OuterplaneEmbedding,
) -> Result<WitnessCertificate, WitnessError> {
    let n = g.order();
    let q = max_face_length(emb);
    if 4 * q > n + 2 {
        return Err(WitnessError::FaceTooLong { q, n });
    }
    let cf = central_face(emb)?;
    let canonical = segment_decomposition(emb, &cf.face);
    let k = canonical.k();

    let argmax_from = |p: &[usize], skip_zero: bool| {
        let lo = usize::from(skip_zero);
        let best = *p[lo..].iter().max().unwrap();
        (lo..p.len()).find(|&i| p[i] == best).unwrap()
    };
    let mut sd = canonical.rotated(argmax_from(&canonical.p, false));
    let mut j = argmax_from(&sd.p, true);
    let reversed = j > k / 2;
    if reversed {
        sd = sd.reversed();
        j = argmax_from(&sd.p, true);
    }
    debug_assert!(j <= k / 2);

    let quarter = (n as u64 + 4) / 4;
    let half_p0 = (sd.p[0] as u64 + 2) / 2;
    assert!(half_p0 <= quarter, "ell >= 1 violated: p_0 = {}, n = {n}", sd.p[0]);
    let ell = quarter - half_p0 + 1;
    let (vertex, chosen) = if ell <= j as u64 {
        (sd.face_vertices[ell as usize], RadiusChoice::VEll)
    } else {
        (sd.face_vertices[j], RadiusChoice::VJ)
    };
    Ok(WitnessCertificate {
        vertex,
        kind: WitnessKind::Radius,
        n,
        exact_value: eccentricity(g, vertex)? as u64,
        guaranteed_bound_times8: 8 * radius_bound(n) as u64,
        case_tag: CaseTag::Radius {
            ell,
            j,
            chosen,
            reversed,
            relabelled_face: sd.face_vertices.clone(),
            relabelled_p: sd.p.clone(),
        },
        k,
        q,
        central_face: canonical.face_vertices,
        p: canonical.p,
    })
}

/// Boundary positions that minimize the weighted transmission, for
/// cross-checking the Case-1 choice.
pub fn boundary_median_positions(sd: &SegmentDecomposition) -> Vec<usize> {
    let values = all_cycle_weighted_transmissions(&boundary_weights(sd));
    let best = *values.iter().min().unwrap();
    (0..values.len()).filter(|&i| values[i] == best).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::interior_faces;

    fn polygon_graph(n: usize, chords: &[(usize, usize)]) -> (Graph, OuterplaneEmbedding) {
        let emb = OuterplaneEmbedding::polygon(n, chords);
        (emb.to_graph().unwrap(), emb)
    }

    #[test]
    fn f_cap_values() {
        assert_eq!(f_cap(0), 0);
        assert_eq!(f_cap(3), 4);
        assert_eq!(f_cap(4), 6);
    }

    #[test]
    fn rearrangement_difference_closed_form() {
        for a in 1..=60u64 {
            for b in 1..=a {
                let diff = (f_cap(a + 1) + f_cap(b - 1)) as i64 - (f_cap(a) + f_cap(b)) as i64;
                assert_eq!(diff, (a + 1).div_ceil(2) as i64 - b.div_ceil(2) as i64);
                assert!(diff >= 0);
            }
        }
    }

    #[test]
    fn cycle_decomposition() {
        let (_, emb) = polygon_graph(8, &[]);
        let faces = interior_faces(&emb);
        let sd = segment_decomposition(&emb, &faces[0]);
        assert_eq!(sd.k(), 8);
        assert!(sd.p.iter().all(|&p| p == 0));
        assert!(boundary_weights(&sd).doubled_weights().iter().all(|&w| w == 2));
    }

    #[test]
    fn fan_hexagon_decomposition() {
        let (_, emb) = polygon_graph(6, &[(0, 2), (0, 3), (0, 4)]);
        let cf = central_face(&emb).unwrap();
        let sd = segment_decomposition(&emb, &cf.face);
        assert_eq!(sd.k(), 3);
        assert_eq!(sd.p.iter().sum::<usize>(), 3);
        assert_eq!(sd.face_vertices, vec![0, 2, 3]);
        assert_eq!(sd.p, vec![1, 0, 2]);
    }

    #[test]
    fn boundary_weights_formula() {
        let sd = SegmentDecomposition {
            n: 6,
            face: Face { boundary: vec![0, 4, 5] },
            face_vertices: vec![0, 4, 5],
            p: vec![3, 0, 0],
        };
        assert_eq!(boundary_weights(&sd).doubled_weights(), &[5, 5, 2]);
    }

    #[test]
    fn pentagon_witness() {
        let (g, _) = polygon_graph(5, &[]);
        let cert = proximity_witness(&g).unwrap();
        assert_eq!(cert.k, 5);
        assert_eq!(cert.p, vec![0; 5]);
        assert!(matches!(cert.case_tag, CaseTag::Case1 { .. }));
        assert_eq!(cert.exact_value, 6);
        assert_eq!(cert.guaranteed_bound_times8, 54);
        assert!(cert.holds());
    }

    #[test]
    fn long_segment_triggers_case2() {
        // triangle {0,1,2} closed by the chord 0–2 on a 10-cycle
        let (g, emb) = polygon_graph(10, &[(0, 2)]);
        let cert = proximity_witness_with(&g, &emb).unwrap();
        assert!(cert.holds());
        let brute: u64 = (0..10).map(|v| transmission(&g, v).unwrap()).min().unwrap();
        assert!(cert.exact_value >= brute);
    }

    #[test]
    fn radius_precondition() {
        let (g, _) = polygon_graph(6, &[]);
        assert_eq!(radius_witness(&g), Err(WitnessError::FaceTooLong { q: 6, n: 6 }));
    }

    #[test]
    fn reversal_keeps_p0_and_maps_j() {
        let sd = SegmentDecomposition {
            n: 20,
            face: Face { boundary: vec![] },
            face_vertices: vec![10, 11, 12, 13, 14, 15],
            p: vec![5, 0, 1, 0, 4, 2],
        };
        let r = sd.reversed();
        assert_eq!(r.face_vertices, vec![11, 10, 15, 14, 13, 12]);
        assert_eq!(r.p, vec![5, 2, 4, 0, 1, 0]);
        // P'_1 joins v'_1 = 10 and v'_2 = 15, which is P_5
        assert_eq!(r.p[1], sd.p[5]);
    }
}
