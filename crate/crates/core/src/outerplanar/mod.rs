//! Two-connected outerplanar graphs: the outerplane embedding (Hamiltonian
//! outer cycle plus non-crossing chords), recognition, interior faces and the
//! weighted weak dual.
//!
//! Positions index the outer cycle: `outer_order[p]` is the vertex at
//! position `p`, and chords are stored as position pairs `(i, j)` with
//! `i < j`. Embeddings are canonical: position 0 holds vertex 0 and position
//! 1 holds the smaller-id cycle neighbour of vertex 0.

mod faces;
mod recognize;
mod verify;

pub use faces::{interior_faces, max_face_length, weak_dual, Face, WeakDualTree};
pub use recognize::{find_cut_vertex, recognize};
pub use verify::{verify_embedding, EmbeddingReject};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OuterplanarError {
    #[error("graph has {n} vertices; recognition needs at least 3")]
    TooSmall { n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 2-connected (cut vertex {cut_vertex})")]
    NotBiconnected { cut_vertex: usize },
    #[error("graph is 2-connected but not outerplanar: {reason}")]
    NotOuterplanar { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OuterplaneEmbedding {
    outer_order: Vec<usize>,
    chords: Vec<(usize, usize)>,
}

impl OuterplaneEmbedding {
    /// Wraps raw parts without checking them; run [`verify_embedding`]
    /// before trusting the result.
    pub fn from_parts(outer_order: Vec<usize>, mut chords: Vec<(usize, usize)>) -> Self {
        for c in &mut chords {
            if c.0 > c.1 {
                *c = (c.1, c.0);
            }
        }
        chords.sort_unstable();
        Self { outer_order, chords }
    }

    /// Canonical embedding of `g` whose outer cycle is `cycle` (any rotation
    /// or direction). Every non-cycle edge becomes a chord; the result is
    /// verified against `g`.
    pub fn from_cycle(g: &Graph, cycle: &[usize]) -> Result<Self, EmbeddingReject> {
        let n = g.order();
        if cycle.len() != n || n < 3 {
            return Err(EmbeddingReject::OrderMismatch {
                graph: n,
                embedding: cycle.len(),
            });
        }
        let start = cycle
            .iter()
            .position(|&v| v == 0)
            .ok_or(EmbeddingReject::NotPermutation)?;
        let mut order: Vec<usize> = cycle[start..].iter().chain(&cycle[..start]).copied().collect();
        if order[n - 1] < order[1] {
            order[1..].reverse();
        }
        let mut position = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(EmbeddingReject::NotPermutation);
            }
            position[v] = p;
        }
        let chords = g
            .edges()
            .filter_map(|(u, v)| {
                let (a, b) = (position[u].min(position[v]), position[u].max(position[v]));
                let outer = b == a + 1 || (a == 0 && b == n - 1);
                (!outer).then_some((a, b))
            })
            .collect();
        let emb = Self::from_parts(order, chords);
        verify_embedding(g, &emb)?;
        Ok(emb)
    }

    /// Embedding of the polygon `0..n` with the given chords (a dissection).
    pub fn polygon(n: usize, chords: &[(usize, usize)]) -> Self {
        Self::from_parts((0..n).collect(), chords.to_vec())
    }

    pub fn order(&self) -> usize {
        self.outer_order.len()
    }

    pub fn outer_order(&self) -> &[usize] {
        &self.outer_order
    }

    /// Chords as sorted position pairs.
    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn vertex_at(&self, position: usize) -> usize {
        self.outer_order[position]
    }

    /// Inverse of `outer_order`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order()];
        for (p, &v) in self.outer_order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// Outer cycle edges plus chords, as a graph on the original vertex ids.
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let n = self.order();
        let edges: Vec<_> = (0..n)
            .map(|p| (self.outer_order[p], self.outer_order[(p + 1) % n]))
            .chain(
                self.chords
                    .iter()
                    .map(|&(i, j)| (self.outer_order[i], self.outer_order[j])),
            )
            .collect();
        Graph::new(n, &edges)
    }
}
