use std::collections::HashSet;

use super::{OuterplanarError, OuterplaneEmbedding};
use crate::graph::Graph;

/// Finds a cut vertex with one iterative depth-first search (low-points).
/// Assumes `g` is connected.
pub fn find_cut_vertex(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut parent = vec![UNSEEN; n];
    let mut next_child = vec![0usize; n];
    let mut root_children = 0;
    let mut time = 0;

    disc[0] = 0;
    low[0] = 0;
    let mut stack = vec![0usize];
    while let Some(&u) = stack.last() {
        if let Some(&w) = g.neighbors(u).get(next_child[u]) {
            next_child[u] += 1;
            if disc[w] == UNSEEN {
                time += 1;
                disc[w] = time;
                low[w] = time;
                parent[w] = u;
                if u == 0 {
                    root_children += 1;
                }
                stack.push(w);
            } else if w != parent[u] {
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            let p = parent[u];
            if p != UNSEEN {
                low[p] = low[p].min(low[u]);
                if p != 0 && low[u] >= disc[p] {
                    return Some(p);
                }
            }
        }
    }
    (root_children > 1).then_some(0)
}

/// Recognizes a 2-connected outerplanar graph and returns its canonical
/// outerplane embedding.
///
/// Degree-2 vertices are peeled off one at a time; each removal of `v` with
/// neighbours `u, w` adds `uw` if absent (a virtual edge). Once a triangle is
/// left, the vertices are reinserted in reverse order, each between its two
/// recorded neighbours, which must be consecutive on the cycle built so far.
/// A second vertex wanting the same slot is the `K_{2,3}` obstruction. The
/// resulting cycle is then checked by [`super::verify_embedding`], so a
/// successful return is always a certified embedding.
pub fn recognize(g: &Graph) -> Result<OuterplaneEmbedding, OuterplanarError> {
    let n = g.order();
    if n < 3 {
        return Err(OuterplanarError::TooSmall { n });
    }
    if !g.is_connected() {
        return Err(OuterplanarError::Disconnected);
    }
    if let Some(cut_vertex) = find_cut_vertex(g) {
        return Err(OuterplanarError::NotBiconnected { cut_vertex });
    }
    let not_outerplanar = |reason: String| OuterplanarError::NotOuterplanar { reason };
    if g.size() > 2 * n - 3 {
        return Err(not_outerplanar(format!(
            "{} edges exceed the outerplanar maximum 2n-3 = {}",
            g.size(),
            2 * n - 3
        )));
    }

    let mut adj: Vec<HashSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut removed = vec![false; n];
    let mut alive = n;
    let mut queue: Vec<usize> = (0..n).rev().filter(|&v| adj[v].len() == 2).collect();
    let mut peeled: Vec<(usize, usize, usize)> = Vec::with_capacity(n);

    while alive > 3 {
        let Some(v) = queue.pop() else {
            return Err(not_outerplanar(
                "reduced graph has no vertex of degree 2".to_string(),
            ));
        };
        if removed[v] || adj[v].len() != 2 {
            continue;
        }
        let mut it = adj[v].iter().copied();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        let (u, w) = (a.min(b), a.max(b));
        removed[v] = true;
        alive -= 1;
        adj[u].remove(&v);
        adj[w].remove(&v);
        adj[v].clear();
        adj[u].insert(w);
        adj[w].insert(u);
        peeled.push((v, u, w));
        for x in [u, w] {
            match adj[x].len() {
                2 => queue.push(x),
                0 | 1 => {
                    return Err(not_outerplanar(format!(
                        "vertex {x} dropped below degree 2 during reduction"
                    )))
                }
                _ => {}
            }
        }
    }

    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let mut next = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    for i in 0..3 {
        let (x, y) = (rest[i], rest[(i + 1) % 3]);
        if !adj[x].contains(&y) {
            return Err(not_outerplanar("reduction did not end in a triangle".to_string()));
        }
        next[x] = y;
        prev[y] = x;
    }

    for &(v, u, w) in peeled.iter().rev() {
        let (from, to) = if next[u] == w {
            (u, w)
        } else if next[w] == u {
            (w, u)
        } else {
            return Err(not_outerplanar(format!(
                "vertex {v} cannot be placed between {u} and {w} on the outer cycle"
            )));
        };
        next[from] = v;
        prev[v] = from;
        next[v] = to;
        prev[to] = v;
    }

    let mut cycle = Vec::with_capacity(n);
    let mut v = 0;
    for _ in 0..n {
        cycle.push(v);
        v = next[v];
    }
    OuterplaneEmbedding::from_cycle(g, &cycle).map_err(|reject| not_outerplanar(reject.to_string()))
}
