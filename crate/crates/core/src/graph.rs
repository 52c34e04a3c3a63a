//! Simple undirected graphs and their distance invariants.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::bounds;
use crate::rational::{int, ratio, serde_fraction, Rational};

/// Distance matrices are only materialized up to this order; larger graphs
/// stream one breadth-first search at a time.
pub const DEFAULT_MATRIX_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: vertex {to} unreachable from vertex {from}")]
    Disconnected { from: usize, to: usize },
    #[error("operation needs at least {needed} vertices, graph has {n}")]
    TooSmall { needed: usize, n: usize },
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse silently.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adjacency })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::with_capacity(self.order());
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].unwrap() + 1;
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(next);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distances from `source`, failing if some vertex is unreachable.
    pub fn distances_from(&self, source: usize) -> Result<Vec<u32>, GraphError> {
        self.bfs(source)
            .into_iter()
            .enumerate()
            .map(|(to, d)| d.ok_or(GraphError::Disconnected { from: source, to }))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Sizes of the components of `G - removed`, in order of smallest vertex.
    pub fn component_sizes_without(&self, removed: &[usize]) -> Vec<usize> {
        let mut blocked = vec![false; self.order()];
        for &v in removed {
            blocked[v] = true;
        }
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.order() {
            if blocked[start] {
                continue;
            }
            blocked[start] = true;
            stack.push(start);
            let mut size = 0;
            while let Some(u) = stack.pop() {
                size += 1;
                for &w in &self.adjacency[u] {
                    if !blocked[w] {
                        blocked[w] = true;
                        stack.push(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    pub fn is_path(&self) -> bool {
        let n = self.order();
        if n == 1 {
            return true;
        }
        self.is_connected()
            && self.size() == n - 1
            && self.adjacency.iter().all(|l| l.len() <= 2)
    }

    pub fn is_cycle(&self) -> bool {
        let n = self.order();
        n >= 3 && self.is_connected() && self.adjacency.iter().all(|l| l.len() == 2)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adjacency.iter().all(|l| l.len() == n - 1)
    }

    pub fn has_dominating_vertex(&self) -> bool {
        let n = self.order();
        self.adjacency.iter().any(|l| l.len() == n - 1)
    }
}

/// All-pairs hop distances, one breadth-first search per vertex.
pub fn all_distances(g: &Graph) -> Result<Vec<Vec<u32>>, GraphError> {
    (0..g.order()).map(|v| g.distances_from(v)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMetrics {
    pub transmission: u64,
    pub average_distance: Rational,
    pub eccentricity: u32,
}

pub fn vertex_metrics(g: &Graph, v: usize) -> Result<VertexMetrics, GraphError> {
    let n = g.order();
    if n < 2 {
        return Err(GraphError::TooSmall { needed: 2, n });
    }
    if v >= n {
        return Err(GraphError::VertexOutOfRange { vertex: v, n });
    }
    let dist = g.distances_from(v)?;
    Ok(metrics_from_row(&dist))
}

fn metrics_from_row(row: &[u32]) -> VertexMetrics {
    let transmission: u64 = row.iter().map(|&d| d as u64).sum();
    VertexMetrics {
        transmission,
        average_distance: ratio(transmission as i64, row.len() as i64 - 1),
        eccentricity: row.iter().copied().max().unwrap_or(0),
    }
}

/// Transmission of a single vertex.
pub fn transmission(g: &Graph, v: usize) -> Result<u64, GraphError> {
    Ok(g.distances_from(v)?.iter().map(|&d| d as u64).sum())
}

pub fn eccentricity(g: &Graph, v: usize) -> Result<u32, GraphError> {
    Ok(g.distances_from(v)?.into_iter().max().unwrap_or(0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricsReport {
    pub order: usize,
    pub transmission: Vec<u64>,
    pub eccentricity: Vec<u32>,
    #[serde(with = "serde_fraction")]
    pub proximity: Rational,
    #[serde(with = "serde_fraction")]
    pub remoteness: Rational,
    pub radius: u32,
    pub diameter: u32,
    /// Vertices attaining the proximity, ascending.
    pub medians: Vec<usize>,
    /// Vertices attaining the radius, ascending.
    pub centers: Vec<usize>,
}

impl MetricsReport {
    pub fn min_transmission(&self) -> u64 {
        self.transmission.iter().copied().min().unwrap()
    }

    pub fn max_transmission(&self) -> u64 {
        self.transmission.iter().copied().max().unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricsOptions {
    pub matrix_cap: usize,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        Self {
            matrix_cap: DEFAULT_MATRIX_CAP,
        }
    }
}

pub fn global_metrics(g: &Graph) -> Result<MetricsReport, GraphError> {
    global_metrics_with(g, MetricsOptions::default())
}

pub fn global_metrics_with(g: &Graph, opts: MetricsOptions) -> Result<MetricsReport, GraphError> {
    let n = g.order();
    if n < 2 {
        return Err(GraphError::TooSmall { needed: 2, n });
    }
    let mut transmission = Vec::with_capacity(n);
    let mut eccentricity = Vec::with_capacity(n);
    let mut push = |row: &[u32]| {
        let m = metrics_from_row(row);
        transmission.push(m.transmission);
        eccentricity.push(m.eccentricity);
    };
    if n <= opts.matrix_cap {
        for row in all_distances(g)? {
            push(&row);
        }
    } else {
        for v in 0..n {
            push(&g.distances_from(v)?);
        }
    }

    let min_t = *transmission.iter().min().unwrap();
    let max_t = *transmission.iter().max().unwrap();
    let radius = *eccentricity.iter().min().unwrap();
    let diameter = *eccentricity.iter().max().unwrap();
    let medians = (0..n).filter(|&v| transmission[v] == min_t).collect();
    let centers = (0..n).filter(|&v| eccentricity[v] == radius).collect();
    let denom = n as i64 - 1;
    Ok(MetricsReport {
        order: n,
        proximity: ratio(min_t as i64, denom),
        remoteness: ratio(max_t as i64, denom),
        transmission,
        eccentricity,
        radius,
        diameter,
        medians,
        centers,
    })
}

/// One side of a classical bound: whether it holds, whether it is tight, and
/// whether tightness agrees with the known extremal characterization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    #[serde(with = "serde_fraction")]
    pub value: Rational,
    #[serde(with = "serde_fraction")]
    pub bound: Rational,
    pub holds: bool,
    pub equality: bool,
    pub characterization_matches: bool,
}

impl BoundCheck {
    fn upper(value: Rational, bound: Rational, extremal: bool) -> Self {
        let equality = value == bound;
        Self {
            value,
            bound,
            holds: value <= bound,
            equality,
            characterization_matches: equality == extremal,
        }
    }

    fn lower(value: Rational, bound: Rational, extremal: bool) -> Self {
        let equality = value == bound;
        Self {
            value,
            bound,
            holds: value >= bound,
            equality,
            characterization_matches: equality == extremal,
        }
    }

    pub fn is_strict(&self) -> bool {
        self.holds && !self.equality
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalBoundsReport {
    /// π against the path/cycle maximum.
    pub proximity_upper: BoundCheck,
    /// π ≥ 1, tight exactly with a dominating vertex.
    pub proximity_lower: BoundCheck,
    /// ρ ≤ n/2, tight exactly for paths.
    pub remoteness_upper: BoundCheck,
    /// ρ ≥ 1, tight exactly for complete graphs.
    pub remoteness_lower: BoundCheck,
    /// rad ≤ n/2 (no equality characterization is claimed).
    pub radius_upper_holds: bool,
}

impl ClassicalBoundsReport {
    pub fn all_hold(&self) -> bool {
        [
            &self.proximity_upper,
            &self.proximity_lower,
            &self.remoteness_upper,
            &self.remoteness_lower,
        ]
        .iter()
        .all(|c| c.holds && c.characterization_matches)
            && self.radius_upper_holds
    }
}

pub fn check_classical_bounds(g: &Graph) -> Result<ClassicalBoundsReport, GraphError> {
    let m = global_metrics(g)?;
    let n = g.order() as i64;
    let is_path = g.is_path();
    Ok(ClassicalBoundsReport {
        proximity_upper: BoundCheck::upper(
            m.proximity,
            bounds::classical_proximity_bound(g.order()),
            is_path || g.is_cycle(),
        ),
        proximity_lower: BoundCheck::lower(m.proximity, int(1), g.has_dominating_vertex()),
        remoteness_upper: BoundCheck::upper(m.remoteness, ratio(n, 2), is_path),
        remoteness_lower: BoundCheck::lower(m.remoteness, int(1), g.is_complete()),
        radius_upper_holds: 2 * m.radius as i64 <= n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_triangle_and_k2() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!((0..3).all(|v| g.degree(v) == 2));
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.size(), 1);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(5, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn small_distances() {
        let d = all_distances(&path(3)).unwrap();
        assert_eq!(d[0][2], 2);
        let d = all_distances(&cycle(4)).unwrap();
        assert_eq!((d[0][1], d[0][2], d[0][3]), (1, 2, 1));
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            all_distances(&g),
            Err(GraphError::Disconnected { from: 0, to: 2 })
        ));
        assert!(global_metrics(&g).is_err());
    }

    #[test]
    fn vertex_metrics_examples() {
        let m = vertex_metrics(&path(5), 2).unwrap();
        assert_eq!((m.transmission, m.average_distance, m.eccentricity), (6, ratio(3, 2), 2));
        let m = vertex_metrics(&cycle(4), 1).unwrap();
        assert_eq!((m.transmission, m.average_distance, m.eccentricity), (4, ratio(4, 3), 2));
        assert!(vertex_metrics(&Graph::new(1, &[]).unwrap(), 0).is_err());
    }

    #[test]
    fn global_metrics_examples() {
        let m = global_metrics(&path(5)).unwrap();
        assert_eq!(m.proximity, ratio(3, 2));
        assert_eq!(m.remoteness, ratio(5, 2));
        assert_eq!((m.radius, m.diameter), (2, 4));
        assert_eq!(m.medians, vec![2]);
        assert_eq!(m.centers, vec![2]);

        let m = global_metrics(&cycle(3)).unwrap();
        assert_eq!((m.proximity, m.remoteness), (int(1), int(1)));
        assert_eq!((m.radius, m.diameter), (1, 1));
        assert_eq!(m.medians, vec![0, 1, 2]);
    }

    #[test]
    fn streaming_path_matches_matrix_path() {
        let g = cycle(9);
        let a = global_metrics(&g).unwrap();
        let b = global_metrics_with(&g, MetricsOptions { matrix_cap: 0 }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn classical_bounds_cycle_and_star() {
        let r = check_classical_bounds(&cycle(7)).unwrap();
        assert_eq!(r.proximity_upper.value, int(2));
        assert!(r.proximity_upper.equality);
        assert!(r.all_hold());

        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let r = check_classical_bounds(&star).unwrap();
        assert_eq!(r.proximity_lower.value, int(1));
        assert!(r.proximity_lower.equality);
        assert!(!r.proximity_upper.equality);
        assert!(r.all_hold());

        let r = check_classical_bounds(&path(6)).unwrap();
        assert!(r.remoteness_upper.equality);
        assert!(r.proximity_upper.equality);
        assert!(r.all_hold());
    }
}
