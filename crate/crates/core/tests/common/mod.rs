//! Independent oracles and shared property checks. Nothing here calls the
//! enumeration, recognition or median code under test.
#![allow(dead_code)]

use std::collections::VecDeque;

use outerprox::graph::Graph;
use outerprox::median::{
    cycle_median, cycle_median_bound_doubled, tree_median, WeightedCycle, WeightedTree,
};
use outerprox::rational::Rational;
use outerprox::witness::f_cap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn cross(a: (usize, usize), b: (usize, usize)) -> bool {
    let ((i, j), (k, l)) = (a, b);
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

pub fn diagonals(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if !(i == 0 && j == n - 1) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Every pairwise non-crossing subset of diagonals, each sorted.
pub fn brute_force_dissections(n: usize) -> Vec<Vec<(usize, usize)>> {
    let diags = diagonals(n);
    let mut out = Vec::new();
    for mask in 0u64..1 << diags.len() {
        let set: Vec<(usize, usize)> = (0..diags.len())
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| diags[b])
            .collect();
        let ok = set
            .iter()
            .enumerate()
            .all(|(x, &a)| set[x + 1..].iter().all(|&b| !cross(a, b)));
        if ok {
            out.push(set);
        }
    }
    out
}

/// Number of dissections of the `n`-gon with all faces of length at most
/// `max_face`, by recursion on the face above a fixed edge: an edge spanning
/// `d` steps is closed by a face whose other sides split `d` into `m` parts,
/// `2 ≤ m ≤ max_face − 1`, each part dissected independently.
pub fn dissection_count(n: usize, max_face: usize) -> u128 {
    let d_max = n - 1;
    let parts_max = max_face - 1;
    let mut f = vec![0u128; d_max + 1];
    // comp[r][m]: compositions of r into exactly m parts, each part dissected
    let mut comp = vec![vec![0u128; parts_max + 1]; d_max + 1];
    comp[0][0] = 1;
    f[1] = 1;
    comp[1][1] = 1;
    for d in 2..=d_max {
        for m in 2..=parts_max {
            comp[d][m] = (1..d).map(|a| f[a] * comp[d - a][m - 1]).sum();
        }
        f[d] = comp[d][2..].iter().sum();
        comp[d][1] = f[d];
    }
    f[d_max]
}

pub fn catalan(k: usize) -> u128 {
    let mut c = vec![1u128];
    for m in 1..=k {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c[k]
}

pub fn polygon_graph(n: usize, chords: &[(usize, usize)]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend_from_slice(chords);
    Graph::new(n, &edges).unwrap()
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Backtracking isomorphism test.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let (ma, mb) = (adjacency_matrix(a), adjacency_matrix(b));
    fn extend(v: usize, map: &mut Vec<usize>, used: &mut Vec<bool>, ma: &[Vec<bool>], mb: &[Vec<bool>], a: &Graph, b: &Graph) -> bool {
        let n = ma.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| ma[v][u] == mb[w][map[u]]) {
                map.push(w);
                used[w] = true;
                if extend(v + 1, map, used, ma, mb, a, b) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    extend(0, &mut Vec::new(), &mut vec![false; n], &ma, &mb, a, b)
}

/// Number of isomorphism classes among `graphs`.
pub fn isomorphism_classes(graphs: &[Graph]) -> usize {
    let mut reps: Vec<&Graph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| isomorphic(r, g)) {
            reps.push(g);
        }
    }
    reps.len()
}

/// All Hamiltonian cycles as vertex sequences starting at 0, each listed
/// once (second vertex smaller than last).
pub fn hamiltonian_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    fn go(g: &Graph, path: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = g.order();
        let last = *path.last().unwrap();
        if path.len() == n {
            if g.has_edge(last, 0) && path[1] < path[n - 1] {
                out.push(path.clone());
            }
            return;
        }
        for &w in g.neighbors(last) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                go(g, path, used, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    if n >= 3 {
        go(g, &mut path, &mut used, &mut out);
    }
    out
}

fn connected_without(g: &Graph, removed: Option<usize>) -> bool {
    let n = g.order();
    let start = (0..n).find(|&v| Some(v) != removed);
    let Some(start) = start else { return true };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] && Some(w) != removed {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n - usize::from(removed.is_some())
}

/// 2-connected outerplanar by definition: at least three vertices,
/// connected with no cut vertex, and some Hamiltonian cycle whose remaining
/// edges are pairwise non-crossing chords.
pub fn is_two_connected_outerplanar(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 || !connected_without(g, None) || (0..n).any(|v| !connected_without(g, Some(v))) {
        return false;
    }
    hamiltonian_cycles(g).iter().any(|cycle| {
        let mut pos = vec![0; n];
        for (i, &v) in cycle.iter().enumerate() {
            pos[v] = i;
        }
        let chords: Vec<(usize, usize)> = g
            .edges()
            .map(|(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .filter(|&(i, j)| j != i + 1 && !(i == 0 && j == n - 1))
            .collect();
        chords
            .iter()
            .enumerate()
            .all(|(x, &a)| chords[x + 1..].iter().all(|&b| !cross(a, b)))
    })
}

/// Vertex relabelling `v ↦ perm[v]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.order(), &edges).unwrap()
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random dissection by recursively splitting intervals.
pub fn random_dissection(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let mut chords = Vec::new();
    let mut stack = vec![(0, n - 1)];
    while let Some((i, j)) = stack.pop() {
        let mut cur = i;
        let mut face_started = false;
        while cur < j {
            let last_allowed = if !face_started && cur == i { j - 1 } else { j };
            let next = rng.gen_range(cur + 1..=last_allowed);
            face_started = true;
            if next > cur + 1 {
                chords.push((cur, next));
                stack.push((cur, next));
            }
            cur = next;
        }
    }
    chords.sort_unstable();
    chords
}

/// `Σ_x w(x)·d(v, x)` for every `v` by BFS on an unweighted tree.
pub fn tree_weighted_sums(weights: &[u64], edges: &[(usize, usize)]) -> Vec<u64> {
    let n = weights.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    (0..n)
        .map(|s| {
            let mut dist = vec![u64::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == u64::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            (0..n).map(|x| weights[x] * dist[x]).sum()
        })
        .collect()
}

/// Doubled weighted transmissions on a cycle, summed pair by pair.
pub fn cycle_weighted_sums(doubled: &[u64]) -> Vec<u64> {
    let k = doubled.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let d = i.abs_diff(j);
                    doubled[j] * d.min(k - d) as u64
                })
                .sum()
        })
        .collect()
}

/// f(a+1) + f(b−1) ≥ f(a) + f(b) for all `1 ≤ b ≤ a ≤ limit`.
pub fn check_rearrangement(limit: u64) -> Result<u64, String> {
    let mut checked = 0;
    for a in 1..=limit {
        for b in 1..=a {
            if f_cap(a + 1) + f_cap(b - 1) < f_cap(a) + f_cap(b) {
                return Err(format!("rearrangement fails at a={a}, b={b}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Random weighted cycles: the median found is a true minimum and meets the
/// weighted-cycle bound.
pub fn check_cycle_medians(samples: usize, max_k: usize, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for _ in 0..samples {
        let k = r.gen_range(3..=max_k);
        let mut doubled: Vec<u64> = (0..k).map(|_| 2 * r.gen_range(0..=12u64)).collect();
        if doubled.iter().all(|&w| w == 0) {
            doubled[0] = 2;
        }
        let wc = WeightedCycle::new(doubled.clone()).map_err(|e| e.to_string())?;
        let med = cycle_median(&wc).map_err(|e| e.to_string())?;
        let naive = cycle_weighted_sums(&doubled);
        let min = *naive.iter().min().unwrap();
        if med.doubled_transmission != min || naive[med.position] != min {
            return Err(format!("median mismatch for {doubled:?}"));
        }
        let bound = cycle_median_bound_doubled(k, doubled.iter().sum());
        if Rational::from_integer(min as i64) > bound {
            return Err(format!("bound fails for {doubled:?}"));
        }
    }
    Ok(())
}

/// Random weighted trees: a node minimizes the weighted distance sum exactly
/// when no branch at it carries more than half the total weight.
pub fn check_tree_medians(samples: usize, max_nodes: usize, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for _ in 0..samples {
        let n = r.gen_range(1..=max_nodes);
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (r.gen_range(0..v), v)).collect();
        let mut weights: Vec<u64> = (0..n).map(|_| r.gen_range(0..=9)).collect();
        if weights.iter().all(|&w| w == 0) {
            weights[n - 1] = 1;
        }
        let perm = random_permutation(n, &mut r);
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let tree = WeightedTree::new(weights.clone(), &edges).map_err(|e| e.to_string())?;
        let total: u64 = weights.iter().sum();
        let sums = tree_weighted_sums(&weights, &edges);
        let min = *sums.iter().min().unwrap();
        let bw = tree.branch_weights();
        for v in 0..n {
            if (2 * bw[v] <= total) != (sums[v] == min) {
                return Err(format!("characterization fails at node {v}: weights {weights:?} edges {edges:?}"));
            }
        }
        let med = tree_median(&tree).map_err(|e| e.to_string())?;
        if sums[med.node] != min {
            return Err(format!("tree_median not minimal: weights {weights:?} edges {edges:?}"));
        }
    }
    Ok(())
}
