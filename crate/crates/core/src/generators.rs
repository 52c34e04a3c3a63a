//! Named graph families, each emitted with its outerplane embedding.
//!
//! Vertex ids follow the outer cycle wherever one exists, so the emitted
//! embeddings tend to be the identity order. Labels keep the construction's
//! names (`a_3`, `x^2`, ...).

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::outerplanar::OuterplaneEmbedding;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{family}: {detail}")]
    Domain { family: Family, detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Hnq,
    Hn3,
    Fan,
    Ladder,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Hnq => "hnq",
            Family::Hn3 => "hn3",
            Family::Fan => "fan",
            Family::Ladder => "ladder",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FamilyParameters {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_prime: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratedGraph {
    #[serde(skip)]
    pub graph: Graph,
    /// `None` only for paths, which are not 2-connected.
    pub embedding: Option<OuterplaneEmbedding>,
    pub family: Family,
    pub parameters: FamilyParameters,
    pub labels: Vec<String>,
}

/// Incrementally names vertices and records edges.
struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Self {
            labels: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self, label: String) -> usize {
        self.labels.push(label);
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    /// `cycle` lists the outer cycle; the embedding is derived and verified.
    fn finish(
        self,
        family: Family,
        parameters: FamilyParameters,
        cycle: Option<&[usize]>,
    ) -> GeneratedGraph {
        let graph = Graph::new(self.labels.len(), &self.edges).expect("generator edges are valid");
        let embedding = cycle.map(|c| {
            OuterplaneEmbedding::from_cycle(&graph, c)
                .unwrap_or_else(|e| panic!("{family} generator produced an invalid embedding: {e}"))
        });
        GeneratedGraph {
            graph,
            embedding,
            family,
            parameters,
            labels: self.labels,
        }
    }
}

fn domain(family: Family, detail: impl Into<String>) -> GeneratorError {
    GeneratorError::Domain {
        family,
        detail: detail.into(),
    }
}

pub fn gen_path(n: usize) -> Result<GeneratedGraph, GeneratorError> {
    if n < 2 {
        return Err(domain(Family::Path, format!("need n >= 2, got {n}")));
    }
    let mut b = Builder::new();
    for i in 0..n {
        b.vertex(format!("v_{i}"));
    }
    for i in 1..n {
        b.edge(i - 1, i);
    }
    Ok(b.finish(Family::Path, FamilyParameters { n, ..Default::default() }, None))
}

pub fn gen_cycle(n: usize) -> Result<GeneratedGraph, GeneratorError> {
    if n < 3 {
        return Err(domain(Family::Cycle, format!("need n >= 3, got {n}")));
    }
    let mut b = Builder::new();
    for i in 0..n {
        b.vertex(format!("v_{i}"));
    }
    for i in 0..n {
        b.edge(i, (i + 1) % n);
    }
    let cycle: Vec<usize> = (0..n).collect();
    Ok(b.finish(Family::Cycle, FamilyParameters { n, ..Default::default() }, Some(&cycle)))
}

/// Two rails joined by rungs, leaving one face of length `q` in the middle
/// and faces of length 4 elsewhere. Needs `q ≥ 4`, `n ≥ q`, `4 | n − q`.
///
/// Even `q`: rails `a_0 … a_{n/2−1}` and `b_0 … b_{n/2−1}`, rungs `a_i b_i`
/// for `i ≤ (n−q)/4` and `i ≥ (n+q)/4 − 1`.
/// Odd `q`: rails of `(n−1)/2` and `(n+1)/2` vertices, rungs `a_i b_i` for
/// `i ≤ (n−q)/4` and skew rungs `a_i b_{i+1}` for
/// `(n+q−2)/4 − 1 ≤ i ≤ (n−1)/2 − 1`.
pub fn gen_hnq(n: usize, q: usize) -> Result<GeneratedGraph, GeneratorError> {
    if q < 4 {
        return Err(domain(Family::Hnq, format!("need q >= 4, got {q}")));
    }
    if n < q {
        return Err(domain(Family::Hnq, format!("need n >= q, got n={n}, q={q}")));
    }
    if (n - q) % 4 != 0 {
        return Err(domain(
            Family::Hnq,
            format!("n - q must be a multiple of 4, got n={n}, q={q}"),
        ));
    }
    let (a_len, b_len) = if q % 2 == 0 { (n / 2, n / 2) } else { ((n - 1) / 2, (n + 1) / 2) };

    // ids follow the outer cycle a_0 … a_last, b_last … b_0
    let mut b = Builder::new();
    let a: Vec<usize> = (0..a_len).map(|i| b.vertex(format!("a_{i}"))).collect();
    let mut rail_b: Vec<usize> = (0..b_len)
        .rev()
        .map(|i| b.vertex(format!("b_{i}")))
        .collect();
    rail_b.reverse();
    for w in a.windows(2).chain(rail_b.windows(2)) {
        b.edge(w[0], w[1]);
    }
    let low = (n - q) / 4;
    for i in 0..=low {
        b.edge(a[i], rail_b[i]);
    }
    if q % 2 == 0 {
        for i in (n + q) / 4 - 1..a_len {
            b.edge(a[i], rail_b[i]);
        }
    } else {
        for i in (n + q - 2) / 4 - 1..a_len {
            b.edge(a[i], rail_b[i + 1]);
        }
    }
    let cycle: Vec<usize> = (0..n).collect();
    Ok(b.finish(
        Family::Hnq,
        FamilyParameters {
            n,
            q: Some(q),
            ..Default::default()
        },
        Some(&cycle),
    ))
}

/// Maximal outerplanar graph with large proximity: a hub `a_0`, two
/// triangulated strips (`a`/`b` rails and `c`/`d` rails) and a closing fan
/// on `x^1 … x^{k'}`, with `k = ⌊(n+2)/4⌋`, `k' = n − 4k + 4`. Needs `n ≥ 10`.
pub fn gen_hn3(n: usize) -> Result<GeneratedGraph, GeneratorError> {
    if n < 10 {
        return Err(domain(Family::Hn3, format!("need n >= 10, got {n}")));
    }
    let k = (n + 2) / 4;
    let kp = n + 4 - 4 * k;
    debug_assert!((2..=5).contains(&kp));

    // allocate ids along the outer cycle:
    // a_0, a_1 … a_{k−1}, x^1 … x^{k'}, b_{k−1} … b_1, c_1 … c_{k−1}, d_{k−2} … d_1
    let mut b = Builder::new();
    let a0 = b.vertex("a_0".to_string());
    let av: Vec<usize> = (1..k).map(|i| b.vertex(format!("a_{i}"))).collect();
    let xv: Vec<usize> = (1..=kp).map(|t| b.vertex(format!("x^{t}"))).collect();
    let mut bv: Vec<usize> = (1..k).rev().map(|i| b.vertex(format!("b_{i}"))).collect();
    bv.reverse();
    let cv: Vec<usize> = (1..k).map(|i| b.vertex(format!("c_{i}"))).collect();
    let mut dv: Vec<usize> = (1..k - 1).rev().map(|i| b.vertex(format!("d_{i}"))).collect();
    dv.reverse();
    // 1-based accessors
    let (a, bb, c, d) = (
        |i: usize| av[i - 1],
        |i: usize| bv[i - 1],
        |i: usize| cv[i - 1],
        |i: usize| dv[i - 1],
    );
    let x = |t: usize| xv[t - 1];

    let mut edges: Vec<(usize, usize)> = Vec::new();
    // the paths G_1 … G_{k−2} (a b c d), G_{k−1} (a b c), G_k (x^1 … x^{k'})
    for i in 1..=k - 2 {
        edges.extend([(a(i), bb(i)), (bb(i), c(i)), (c(i), d(i))]);
    }
    edges.extend([(a(k - 1), bb(k - 1)), (bb(k - 1), c(k - 1))]);
    for t in 1..kp {
        edges.push((x(t), x(t + 1)));
    }
    edges.extend([(a0, a(1)), (a0, bb(1)), (a0, c(1)), (a0, d(1))]);
    for i in 1..=k.saturating_sub(3) {
        edges.extend([
            (a(i), a(i + 1)),
            (bb(i), bb(i + 1)),
            (c(i), c(i + 1)),
            (d(i), d(i + 1)),
        ]);
    }
    for i in 1..=k - 2 {
        edges.push((a(i), bb(i + 1)));
    }
    for i in 1..=k.saturating_sub(3) {
        edges.push((d(i), c(i + 1)));
    }
    edges.extend([
        (a(k - 2), a(k - 1)),
        (bb(k - 2), bb(k - 1)),
        (c(k - 2), c(k - 1)),
        (d(k - 2), c(k - 1)),
    ]);
    edges.extend([(a(k - 1), x(1)), (a(k - 1), x(2))]);
    for t in 2..=kp {
        edges.push((bb(k - 1), x(t)));
    }
    let dropped: Vec<(usize, usize)> = (2..k).map(|i| (bb(i), c(i))).collect();
    for (u, v) in edges {
        if !dropped.contains(&(u, v)) {
            b.edge(u, v);
        }
    }

    let cycle: Vec<usize> = (0..n).collect();
    Ok(b.finish(
        Family::Hn3,
        FamilyParameters {
            n,
            q: Some(3),
            k: Some(k),
            k_prime: Some(kp),
        },
        Some(&cycle),
    ))
}

/// Triangulated zigzag strip on `a_0 … a_{⌊(n−1)/2⌋}` and
/// `b_1 … b_{⌈(n−1)/2⌉}` with `a_i b_j` for `j ∈ {i, i+1}`. Its vertex
/// `a_0` has the largest possible average distance.
pub fn gen_fan(n: usize) -> Result<GeneratedGraph, GeneratorError> {
    if n < 3 {
        return Err(domain(Family::Fan, format!("need n >= 3, got {n}")));
    }
    let a_last = (n - 1) / 2;
    let b_last = n / 2;
    let mut b = Builder::new();
    let a: Vec<usize> = (0..=a_last).map(|i| b.vertex(format!("a_{i}"))).collect();
    // b_j stored at index j; index 0 unused
    let mut rail_b = vec![usize::MAX; b_last + 1];
    for j in (1..=b_last).rev() {
        rail_b[j] = b.vertex(format!("b_{j}"));
    }
    for i in 1..=a_last {
        b.edge(a[i - 1], a[i]);
    }
    for j in 2..=b_last {
        b.edge(rail_b[j - 1], rail_b[j]);
    }
    for i in 0..=a_last {
        for j in [i, i + 1] {
            if (1..=b_last).contains(&j) {
                b.edge(a[i], rail_b[j]);
            }
        }
    }
    let cycle: Vec<usize> = (0..n).collect();
    Ok(b.finish(Family::Fan, FamilyParameters { n, ..Default::default() }, Some(&cycle)))
}

/// Ladder with `⌊n/2⌋` rungs; odd `n` adds an apex on the first rung.
pub fn gen_ladder(n: usize) -> Result<GeneratedGraph, GeneratorError> {
    if n < 4 {
        return Err(domain(Family::Ladder, format!("need n >= 4, got {n}")));
    }
    let m = n / 2;
    let mut b = Builder::new();
    let apex = (n % 2 == 1).then(|| b.vertex("z".to_string()));
    let a: Vec<usize> = (1..=m).map(|i| b.vertex(format!("a_{i}"))).collect();
    let mut rail_b: Vec<usize> = (1..=m).rev().map(|i| b.vertex(format!("b_{i}"))).collect();
    rail_b.reverse();
    for w in a.windows(2).chain(rail_b.windows(2)) {
        b.edge(w[0], w[1]);
    }
    for i in 0..m {
        b.edge(a[i], rail_b[i]);
    }
    if let Some(z) = apex {
        b.edge(z, a[0]);
        b.edge(z, rail_b[0]);
    }
    let cycle: Vec<usize> = (0..n).collect();
    Ok(b.finish(Family::Ladder, FamilyParameters { n, ..Default::default() }, Some(&cycle)))
}

/// Largest order `≤ n` accepted by [`gen_hnq`] for this `q`, if any.
pub fn nearest_hnq_order(n: usize, q: usize) -> Option<usize> {
    (n >= q).then(|| n - (n - q) % 4)
}
