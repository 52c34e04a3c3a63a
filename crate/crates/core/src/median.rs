//! Weighted medians on trees and cycles, and central-face selection.
//!
//! Cycle weights are carried doubled so that the half-integer boundary
//! weights used by the proximity witness stay integral.

use serde::Serialize;
use thiserror::Error;

use crate::graph::GraphError;
use crate::outerplanar::{weak_dual, Face, OuterplaneEmbedding};
use crate::rational::{ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MedianError {
    #[error("total weight is zero")]
    ZeroTotalWeight,
    #[error("not a tree: {0}")]
    InvalidTree(String),
    #[error("cycle needs length >= 3, got {0}")]
    CycleTooShort(usize),
    #[error("position {position} out of range for a cycle of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("central face check failed: component of {size} vertices exceeds (n-2)/2 for n={n}")]
    CentralFaceCheck { size: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTree {
    adjacency: Vec<Vec<usize>>,
    weights: Vec<u64>,
}

impl WeightedTree {
    pub fn new(weights: Vec<u64>, edges: &[(usize, usize)]) -> Result<Self, MedianError> {
        let n = weights.len();
        if n == 0 {
            return Err(MedianError::InvalidTree("no nodes".into()));
        }
        if edges.len() != n - 1 {
            return Err(MedianError::InvalidTree(format!(
                "{} edges for {n} nodes",
                edges.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(MedianError::InvalidTree(format!("bad edge ({a}, {b})")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let tree = Self { adjacency, weights };
        if tree.preorder().len() != n {
            return Err(MedianError::InvalidTree("disconnected".into()));
        }
        Ok(tree)
    }

    pub fn node_count(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Preorder from node 0 with parents; visits only node 0's component.
    fn preorder(&self) -> Vec<(usize, usize)> {
        let mut seen = vec![false; self.node_count()];
        let mut out = Vec::with_capacity(self.node_count());
        let mut stack = vec![(0, usize::MAX)];
        seen[0] = true;
        while let Some((v, parent)) = stack.pop() {
            out.push((v, parent));
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, v));
                }
            }
        }
        out
    }

    /// Branch weight of every node: the heaviest component of `T − v`.
    pub fn branch_weights(&self) -> Vec<u64> {
        let n = self.node_count();
        let total = self.total_weight();
        let order = self.preorder();
        let mut subtree = self.weights.clone();
        let mut heaviest_child = vec![0u64; n];
        for &(v, parent) in order.iter().rev() {
            if parent != usize::MAX {
                subtree[parent] += subtree[v];
                heaviest_child[parent] = heaviest_child[parent].max(subtree[v]);
            }
        }
        (0..n)
            .map(|v| heaviest_child[v].max(total - subtree[v]))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeMedian {
    pub node: usize,
    pub branch_weight: u64,
}

/// Smallest-id node whose branch weight is at most half the total weight.
pub fn tree_median(t: &WeightedTree) -> Result<TreeMedian, MedianError> {
    let total = t.total_weight();
    if total == 0 {
        return Err(MedianError::ZeroTotalWeight);
    }
    let bw = t.branch_weights();
    let node = (0..t.node_count())
        .find(|&v| 2 * bw[v] <= total)
        .expect("every weighted tree has a median");
    Ok(TreeMedian {
        node,
        branch_weight: bw[node],
    })
}

/// Face selected as a weighted median of the weak dual, with the sizes of
/// the components left after deleting its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralFace {
    pub face_id: usize,
    pub face: Face,
    pub branch_weight: u64,
    pub component_sizes: Vec<usize>,
}

/// Interior face whose removal leaves components of at most `(n−2)/2`
/// vertices. The bound is re-checked on every call.
pub fn central_face(emb: &OuterplaneEmbedding) -> Result<CentralFace, MedianError> {
    let n = emb.order();
    let dual = weak_dual(emb);
    let tree = WeightedTree::new(dual.weights.clone(), &dual.edges)?;
    let median = tree_median(&tree)?;
    let face = dual.faces[median.node].clone();
    let g = emb.to_graph()?;
    let component_sizes = g.component_sizes_without(&face.vertices(emb));
    if let Some(&size) = component_sizes.iter().find(|&&s| 2 * s + 2 > n) {
        return Err(MedianError::CentralFaceCheck { size, n });
    }
    Ok(CentralFace {
        face_id: median.node,
        face,
        branch_weight: median.branch_weight,
        component_sizes,
    })
}

/// Cycle `v_0 … v_{k−1}` with doubled nonnegative vertex weights `2·c(v_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedCycle {
    doubled_weights: Vec<u64>,
}

impl WeightedCycle {
    pub fn new(doubled_weights: Vec<u64>) -> Result<Self, MedianError> {
        if doubled_weights.len() < 3 {
            return Err(MedianError::CycleTooShort(doubled_weights.len()));
        }
        Ok(Self { doubled_weights })
    }

    pub fn len(&self) -> usize {
        self.doubled_weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn doubled_weights(&self) -> &[u64] {
        &self.doubled_weights
    }

    /// `2N`.
    pub fn doubled_total(&self) -> u64 {
        self.doubled_weights.iter().sum()
    }

    pub fn distance(&self, i: usize, j: usize) -> u64 {
        let k = self.len();
        let d = i.abs_diff(j);
        d.min(k - d) as u64
    }
}

/// `2·σ_c(v_position)`, summed directly.
pub fn cycle_weighted_transmission(wc: &WeightedCycle, position: usize) -> Result<u64, MedianError> {
    if position >= wc.len() {
        return Err(MedianError::PositionOutOfRange {
            position,
            len: wc.len(),
        });
    }
    Ok(wc
        .doubled_weights
        .iter()
        .enumerate()
        .map(|(j, &w)| w * wc.distance(position, j))
        .sum())
}

/// `2·σ_c` at every position in O(k) with prefix sums over the cycle laid
/// out twice.
pub fn all_cycle_weighted_transmissions(wc: &WeightedCycle) -> Vec<u64> {
    let k = wc.len();
    let w = &wc.doubled_weights;
    // prefix[t] = Σ_{s<t} w[s mod k], index_prefix[t] = Σ_{s<t} s·w[s mod k]
    let mut prefix = vec![0u64; 2 * k + 1];
    let mut index_prefix = vec![0u64; 2 * k + 1];
    for t in 0..2 * k {
        prefix[t + 1] = prefix[t] + w[t % k];
        index_prefix[t + 1] = index_prefix[t] + t as u64 * w[t % k];
    }
    let forward = k / 2;
    let backward = (k - 1) / 2;
    (0..k)
        .map(|i| {
            // positions i+1 ..= i+forward at distance t − i
            let (lo, hi) = (i + 1, i + forward + 1);
            let fwd = (index_prefix[hi] - index_prefix[lo]) - i as u64 * (prefix[hi] - prefix[lo]);
            // positions i+k−backward ..= i+k−1 at distance i+k − t
            let (lo, hi) = (i + k - backward, i + k);
            let bwd = (i + k) as u64 * (prefix[hi] - prefix[lo]) - (index_prefix[hi] - index_prefix[lo]);
            fwd + bwd
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleMedian {
    pub position: usize,
    /// `2·σ_c` at the median.
    pub doubled_transmission: u64,
    /// Doubled form of the weighted-cycle median bound: `k·2N/4` for even
    /// `k`, `(k²−1)·2N/(4k)` for odd `k`.
    #[serde(with = "crate::rational::serde_fraction")]
    pub doubled_bound: Rational,
}

/// Doubled bound on the minimum weighted transmission of a weighted cycle.
pub fn cycle_median_bound_doubled(k: usize, doubled_total: u64) -> Rational {
    let (k, d) = (k as i64, doubled_total as i64);
    if k % 2 == 0 {
        ratio(k * d, 4)
    } else {
        ratio((k * k - 1) * d, 4 * k)
    }
}

/// Smallest-index position minimizing `σ_c`. Panics if the minimum exceeds
/// the weighted-cycle median bound, which would contradict a theorem.
pub fn cycle_median(wc: &WeightedCycle) -> Result<CycleMedian, MedianError> {
    if wc.doubled_total() == 0 {
        return Err(MedianError::ZeroTotalWeight);
    }
    let values = all_cycle_weighted_transmissions(wc);
    let (position, &doubled_transmission) = values
        .iter()
        .enumerate()
        .min_by_key(|&(i, v)| (*v, i))
        .unwrap();
    let doubled_bound = cycle_median_bound_doubled(wc.len(), wc.doubled_total());
    assert!(
        Rational::from_integer(doubled_transmission as i64) <= doubled_bound,
        "weighted cycle median bound violated: {doubled_transmission} > {doubled_bound} for {:?}",
        wc.doubled_weights
    );
    Ok(CycleMedian {
        position,
        doubled_transmission,
        doubled_bound,
    })
}

/// `8·σ_c(C)` for the weighted total distance `σ_c(C) = Σ_{pairs} c(x)c(y)d(x,y)`,
/// computed as `Σ_v 2c(v)·2σ_c(v)`.
pub fn cycle_total_weighted_distance_times8(wc: &WeightedCycle) -> u64 {
    all_cycle_weighted_transmissions(wc)
        .iter()
        .zip(&wc.doubled_weights)
        .map(|(s, w)| s * w)
        .sum()
}

/// `8·` the weighted-cycle total-distance bound: `kN²` (even `k`) or
/// `(k²−1)N²/k` (odd `k`), with `N` half the doubled total.
pub fn cycle_total_bound_times8(k: usize, doubled_total: u64) -> Rational {
    let (k, d) = (k as i64, doubled_total as i64);
    // N² = d²/4
    if k % 2 == 0 {
        ratio(k * d * d, 4)
    } else {
        ratio((k * k - 1) * d * d, 4 * k)
    }
}
