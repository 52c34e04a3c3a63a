use serde::Serialize;

use super::OuterplaneEmbedding;

/// Interior face, as the ascending list of outer-cycle positions on its
/// boundary. Ascending position order is also the cyclic boundary order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Face {
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Boundary as vertex ids, in boundary order.
    pub fn vertices(&self, emb: &OuterplaneEmbedding) -> Vec<usize> {
        self.boundary.iter().map(|&p| emb.vertex_at(p)).collect()
    }
}

/// Faces plus, for each chord, the two faces it separates (unsorted ids).
fn extract(emb: &OuterplaneEmbedding) -> (Vec<Face>, Vec<(usize, usize)>) {
    let n = emb.order();
    let mut partners: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(i, j) in emb.chords() {
        partners[i].push(j);
    }
    for list in &mut partners {
        list.sort_unstable();
    }

    let mut faces = Vec::with_capacity(emb.chords().len() + 1);
    let mut links = Vec::with_capacity(emb.chords().len());
    // (interval start, interval end, parent face across the chord)
    let mut pending: Vec<(usize, usize, Option<usize>)> = vec![(0, n - 1, None)];
    while let Some((i, j, parent)) = pending.pop() {
        let id = faces.len();
        if let Some(p) = parent {
            links.push((p, id));
        }
        let mut boundary = vec![i];
        let mut x = i;
        while x != j {
            // farthest chord partner inside the interval, never the interval's own chord
            let limit = if x == i { j - 1 } else { j };
            let next = partners[x]
                .iter()
                .rev()
                .find(|&&y| y <= limit)
                .copied()
                .unwrap_or(x + 1);
            if next > x + 1 {
                pending.push((x, next, Some(id)));
            }
            boundary.push(next);
            x = next;
        }
        faces.push(Face { boundary });
    }
    (faces, links)
}

/// Interior faces sorted by boundary (hence ascending smallest position).
pub fn interior_faces(emb: &OuterplaneEmbedding) -> Vec<Face> {
    let mut faces = extract(emb).0;
    faces.sort();
    faces
}

pub fn max_face_length(emb: &OuterplaneEmbedding) -> usize {
    interior_faces(emb).iter().map(Face::len).max().unwrap_or(0)
}

/// Weak dual: one node per interior face (in [`interior_faces`] order), an
/// edge per chord, node weight `ℓ − 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakDualTree {
    pub faces: Vec<Face>,
    /// Face-id pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub weights: Vec<u64>,
}

impl WeakDualTree {
    pub fn node_count(&self) -> usize {
        self.faces.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }
}

pub fn weak_dual(emb: &OuterplaneEmbedding) -> WeakDualTree {
    let (raw, links) = extract(emb);
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| raw[a].cmp(&raw[b]));
    let mut rank = vec![0; raw.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut edges: Vec<(usize, usize)> = links
        .into_iter()
        .map(|(a, b)| (rank[a].min(rank[b]), rank[a].max(rank[b])))
        .collect();
    edges.sort_unstable();
    let faces: Vec<Face> = order.into_iter().map(|old| raw[old].clone()).collect();
    let weights = faces.iter().map(|f| f.len() as u64 - 2).collect();
    WeakDualTree {
        faces,
        edges,
        weights,
    }
}
