use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::OuterplaneEmbedding;
use crate::graph::Graph;

/// Why a claimed embedding is not a valid outerplane embedding of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum EmbeddingReject {
    #[error("embedding has {embedding} vertices, graph has {graph} (need equal and >= 3)")]
    OrderMismatch { graph: usize, embedding: usize },
    #[error("outer order is not a permutation of 0..n")]
    NotPermutation,
    #[error("invalid chord {0:?}")]
    InvalidChord(ChordPair),
    #[error("chord {0:?} listed twice")]
    DuplicateChord(ChordPair),
    #[error("embedding claims edge {u}-{v}, which the graph lacks")]
    ExtraEdge { u: usize, v: usize },
    #[error("graph edge {u}-{v} is neither an outer edge nor a chord")]
    MissingEdge { u: usize, v: usize },
    #[error("chords {first:?} and {second:?} cross")]
    Crossing { first: ChordPair, second: ChordPair },
}

#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChordPair(pub usize, pub usize);

impl fmt::Debug for ChordPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// Accepts iff `emb` is an outerplane embedding of `g`: the outer order is a
/// Hamiltonian cycle of `g`, the chords are exactly the remaining edges, and
/// no two chords interleave.
pub fn verify_embedding(g: &Graph, emb: &OuterplaneEmbedding) -> Result<(), EmbeddingReject> {
    let n = g.order();
    if emb.order() != n || n < 3 {
        return Err(EmbeddingReject::OrderMismatch {
            graph: n,
            embedding: emb.order(),
        });
    }
    let mut seen = vec![false; n];
    for &v in emb.outer_order() {
        if v >= n || seen[v] {
            return Err(EmbeddingReject::NotPermutation);
        }
        seen[v] = true;
    }

    for p in 0..n {
        let (u, v) = (emb.vertex_at(p), emb.vertex_at((p + 1) % n));
        if !g.has_edge(u, v) {
            return Err(EmbeddingReject::ExtraEdge { u, v });
        }
    }

    let chords = emb.chords();
    for (idx, &(i, j)) in chords.iter().enumerate() {
        let outer_side = j == i + 1 || (i == 0 && j == n - 1);
        if i >= j || j >= n || outer_side {
            return Err(EmbeddingReject::InvalidChord(ChordPair(i, j)));
        }
        if idx > 0 && chords[idx - 1] == (i, j) {
            return Err(EmbeddingReject::DuplicateChord(ChordPair(i, j)));
        }
        let (u, v) = (emb.vertex_at(i), emb.vertex_at(j));
        if !g.has_edge(u, v) {
            return Err(EmbeddingReject::ExtraEdge { u, v });
        }
    }

    if g.size() != n + chords.len() {
        let pos = emb.positions();
        let covered = |a: usize, b: usize| {
            let (a, b) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
            b == a + 1 || (a == 0 && b == n - 1) || chords.binary_search(&(a, b)).is_ok()
        };
        let (u, v) = g
            .edges()
            .find(|&(u, v)| !covered(u, v))
            .expect("edge count mismatch implies an uncovered edge");
        return Err(EmbeddingReject::MissingEdge { u, v });
    }

    check_non_crossing(n, chords)
}

/// Parenthesis-matching sweep over positions. Chords sharing an endpoint
/// never cross.
fn check_non_crossing(n: usize, chords: &[(usize, usize)]) -> Result<(), EmbeddingReject> {
    let mut opening: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(i, j) in chords {
        opening[i].push(j);
        closing[j].push(i);
    }
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for p in 0..n {
        // most recently opened first
        closing[p].sort_unstable_by(|a, b| b.cmp(a));
        for &i in &closing[p] {
            match stack.pop() {
                Some(top) if top == (i, p) => {}
                Some(top) => {
                    return Err(EmbeddingReject::Crossing {
                        first: ChordPair(i, p),
                        second: ChordPair(top.0, top.1),
                    })
                }
                None => unreachable!("chord closed before it was opened"),
            }
        }
        // farthest partner deepest in the stack
        opening[p].sort_unstable_by(|a, b| b.cmp(a));
        for &j in &opening[p] {
            stack.push((p, j));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_with(n: usize, extra: &[(usize, usize)]) -> Graph {
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend_from_slice(extra);
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn accepts_plain_cycle() {
        let g = cycle_with(4, &[]);
        let emb = OuterplaneEmbedding::polygon(4, &[]);
        assert_eq!(verify_embedding(&g, &emb), Ok(()));
    }

    #[test]
    fn rejects_interleaved_chords() {
        let g = cycle_with(6, &[(0, 2), (1, 3)]);
        let emb = OuterplaneEmbedding::polygon(6, &[(0, 2), (1, 3)]);
        assert_eq!(
            verify_embedding(&g, &emb),
            Err(EmbeddingReject::Crossing {
                first: ChordPair(0, 2),
                second: ChordPair(1, 3)
            })
        );
    }

    #[test]
    fn accepts_nested_and_shared_endpoints() {
        let chords = [(0, 2), (0, 4), (2, 4)];
        let g = cycle_with(6, &chords);
        assert_eq!(verify_embedding(&g, &OuterplaneEmbedding::polygon(6, &chords)), Ok(()));
        let chords = [(0, 3), (1, 3), (3, 5)];
        let g = cycle_with(6, &chords);
        assert_eq!(verify_embedding(&g, &OuterplaneEmbedding::polygon(6, &chords)), Ok(()));
    }

    #[test]
    fn rejects_missing_and_extra_edges() {
        let g = cycle_with(5, &[(0, 2)]);
        assert_eq!(
            verify_embedding(&g, &OuterplaneEmbedding::polygon(5, &[])),
            Err(EmbeddingReject::MissingEdge { u: 0, v: 2 })
        );
        assert_eq!(
            verify_embedding(&g, &OuterplaneEmbedding::polygon(5, &[(0, 2), (0, 3)])),
            Err(EmbeddingReject::ExtraEdge { u: 0, v: 3 })
        );
        let g = cycle_with(5, &[]);
        let emb = OuterplaneEmbedding::from_parts(vec![0, 2, 1, 3, 4], vec![]);
        assert_eq!(verify_embedding(&g, &emb), Err(EmbeddingReject::ExtraEdge { u: 0, v: 2 }));
    }

    #[test]
    fn rejects_malformed_parts() {
        let g = cycle_with(5, &[(0, 2)]);
        let emb = OuterplaneEmbedding::from_parts(vec![0, 1, 1, 3, 4], vec![(0, 2)]);
        assert_eq!(verify_embedding(&g, &emb), Err(EmbeddingReject::NotPermutation));
        let emb = OuterplaneEmbedding::from_parts(vec![0, 1, 2, 3, 4], vec![(0, 4)]);
        assert_eq!(
            verify_embedding(&g, &emb),
            Err(EmbeddingReject::InvalidChord(ChordPair(0, 4)))
        );
        let emb = OuterplaneEmbedding::from_parts(vec![0, 1, 2, 3, 4], vec![(0, 2), (2, 0)]);
        assert_eq!(
            verify_embedding(&g, &emb),
            Err(EmbeddingReject::DuplicateChord(ChordPair(0, 2)))
        );
        let emb = OuterplaneEmbedding::polygon(4, &[]);
        assert!(matches!(
            verify_embedding(&g, &emb),
            Err(EmbeddingReject::OrderMismatch { .. })
        ));
    }
}
