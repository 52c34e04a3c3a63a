//! Plain-text formats.
//!
//! Edge list: a header `n m`, then `m` lines `u v` with 0-based ids.
//! Embedding: `n`, then the outer order, then one chord `i j` per line in
//! outer-cycle positions. In both, `#` starts a comment and blank lines are
//! skipped.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::outerplanar::OuterplaneEmbedding;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

/// Non-empty lines with comments stripped, tagged with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn numbers(line: usize, tokens: &[&str], expected: usize, what: &str) -> Result<Vec<usize>, ParseError> {
    if tokens.len() != expected {
        return Err(ParseError::Syntax {
            line,
            message: format!("expected {expected} integers for {what}, found {} tokens", tokens.len()),
        });
    }
    tokens
        .iter()
        .map(|t| {
            t.parse::<usize>().map_err(|_| ParseError::Syntax {
                line,
                message: format!("'{t}' is not a non-negative integer"),
            })
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::Truncated("missing 'n m' header".into()))?;
    let nm = numbers(header_line, &header, 2, "the 'n m' header")?;
    let (n, m) = (nm[0], nm[1]);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, tokens) in lines {
        if edges.len() == m {
            return Err(ParseError::Syntax {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let uv = numbers(line, &tokens, 2, "an edge")?;
        for &x in &uv {
            if x >= n {
                return Err(ParseError::Graph {
                    line,
                    source: GraphError::VertexOutOfRange { vertex: x, n },
                });
            }
        }
        if uv[0] == uv[1] {
            return Err(ParseError::Graph {
                line,
                source: GraphError::SelfLoop(uv[0]),
            });
        }
        edges.push((uv[0], uv[1]));
        last_line = line;
    }
    if edges.len() != m {
        return Err(ParseError::Truncated(format!(
            "declared {m} edges, found {} (last line {last_line})",
            edges.len()
        )));
    }
    Graph::new(n, &edges).map_err(|source| ParseError::Graph { line: header_line, source })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_embedding(text: &str) -> Result<OuterplaneEmbedding, ParseError> {
    let mut lines = content_lines(text);
    let (first, tokens) = lines
        .next()
        .ok_or_else(|| ParseError::Truncated("missing vertex count".into()))?;
    let n = numbers(first, &tokens, 1, "the vertex count")?[0];
    let (second, tokens) = lines
        .next()
        .ok_or_else(|| ParseError::Truncated("missing outer order".into()))?;
    let order = numbers(second, &tokens, n, "the outer order")?;
    let mut seen = vec![false; n];
    for &v in &order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(ParseError::Syntax {
                line: second,
                message: format!("outer order is not a permutation of 0..{n}"),
            });
        }
    }
    let mut chords = Vec::new();
    for (line, tokens) in lines {
        let ij = numbers(line, &tokens, 2, "a chord")?;
        if ij[0] >= n || ij[1] >= n {
            return Err(ParseError::Syntax {
                line,
                message: format!("chord position out of range 0..{n}"),
            });
        }
        chords.push((ij[0], ij[1]));
    }
    Ok(OuterplaneEmbedding::from_parts(order, chords))
}

pub fn write_embedding(emb: &OuterplaneEmbedding) -> String {
    let mut out = format!("{}\n", emb.order());
    let order: Vec<String> = emb.outer_order().iter().map(|v| v.to_string()).collect();
    out.push_str(&order.join(" "));
    out.push('\n');
    for &(i, j) in emb.chords() {
        writeln!(out, "{i} {j}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "# square with a chord\n4 5\n0 1\n1 2\n2 3\n3 0 # closing\n\n0 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!((g.order(), g.size()), (4, 5));
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        let err = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: 'x' is not a non-negative integer");
        let err = parse_edge_list("3 1\n0 5\n").unwrap_err();
        assert!(matches!(err, ParseError::Graph { line: 2, .. }));
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, ParseError::Truncated(_)));
        let err = parse_edge_list("3 1\n0 1\n1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }));
        assert!(parse_edge_list("").is_err());
        assert!(matches!(parse_edge_list("2 1\n1 1\n").unwrap_err(), ParseError::Graph { line: 2, .. }));
    }

    #[test]
    fn embedding_round_trip() {
        let emb = OuterplaneEmbedding::from_parts(vec![0, 2, 4, 1, 5, 3], vec![(2, 0), (2, 4)]);
        let text = write_embedding(&emb);
        assert_eq!(text, "6\n0 2 4 1 5 3\n0 2\n2 4\n");
        assert_eq!(parse_embedding(&text).unwrap(), emb);
        assert!(parse_embedding("3\n0 1 1\n").is_err());
        assert!(parse_embedding("3\n0 1 2\n0 7\n").is_err());
    }
}
