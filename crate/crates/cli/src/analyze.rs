use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use outerprox::bounds::{
    chordal_radius_interval, prox_bound_2conn, prox_bound_mop, radius_bound, remoteness_bound, BoundValue,
};
use outerprox::graph::{check_classical_bounds, global_metrics, Graph, MetricsReport};
use outerprox::io::{parse_edge_list, parse_embedding};
use outerprox::outerplanar::{interior_faces, recognize, verify_embedding, OuterplanarError, OuterplaneEmbedding};
use outerprox::rational::Rational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::{decimal, emit_json, fraction, print_csv, Format, SCHEMA};

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Outer error: unreadable input. Inner error: the graph has no valid
/// outerplane embedding, described as JSON.
pub fn embedding_for(g: &Graph, embedding: Option<&Path>) -> Result<Result<OuterplaneEmbedding, Value>> {
    if let Some(path) = embedding {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let emb = parse_embedding(&text).with_context(|| format!("parsing {}", path.display()))?;
        return Ok(match verify_embedding(g, &emb) {
            Ok(()) => Ok(emb),
            Err(reject) => Err(json!({ "status": "embedding_rejected", "detail": reject, "message": reject.to_string() })),
        });
    }
    Ok(recognize(g).map_err(|e| {
        let status = match e {
            OuterplanarError::TooSmall { .. } => "too_small",
            OuterplanarError::Disconnected => "disconnected",
            OuterplanarError::NotBiconnected { .. } => "not_biconnected",
            OuterplanarError::NotOuterplanar { .. } => "not_outerplanar",
        };
        json!({ "status": status, "message": e.to_string() })
    }))
}

#[derive(Serialize)]
struct BoundRow {
    name: String,
    /// Whether the bound's hypotheses hold for this graph.
    applicable: bool,
    value: String,
    display: String,
    actual: String,
    holds: bool,
    gap: String,
}

fn row(name: &str, applicable: bool, bound: Rational, actual: Rational) -> BoundRow {
    BoundRow {
        name: name.to_string(),
        applicable,
        value: fraction(&bound),
        display: decimal(&bound),
        actual: fraction(&actual),
        holds: actual <= bound,
        gap: fraction(&(bound - actual)),
    }
}

fn bound_rows(n: usize, q: usize, m: &MetricsReport) -> Vec<BoundRow> {
    let value = |b: Result<BoundValue, _>| b.ok().map(|b: BoundValue| b.value);
    let mut rows = Vec::new();
    if let Some(b) = value(prox_bound_2conn(n, q)) {
        rows.push(row("prox2c", true, b, m.proximity));
    }
    if let Some(b) = value(prox_bound_mop(n)) {
        rows.push(row("proxmop", q == 3, b, m.proximity));
    }
    if let Some(b) = value(remoteness_bound(n)) {
        rows.push(row("rho", true, b, m.remoteness));
    }
    let rad = Rational::from_integer(radius_bound(n) as i64);
    rows.push(row("rad", 4 * q <= n + 2, rad, Rational::from_integer(m.radius as i64)));
    rows
}

pub fn run(path: &Path, embedding: Option<&Path>, format: Format) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let n = g.order();
    let metrics = global_metrics(&g).ok();
    let classical = check_classical_bounds(&g).ok();
    let outer = embedding_for(&g, embedding)?;

    let mut out = json!({
        "schema": SCHEMA,
        "input": { "path": path.display().to_string(), "order": n, "size": g.size() },
        "connected": g.is_connected(),
        "metrics": metrics,
        "classical_bounds": classical,
    });
    if let Some(m) = &metrics {
        out["display"] = json!({ "proximity": decimal(&m.proximity), "remoteness": decimal(&m.remoteness) });
    }
    let mut q = None;
    match &outer {
        Ok(emb) => {
            let faces = interior_faces(emb);
            let face_len = faces.iter().map(|f| f.len()).max().unwrap_or(0);
            q = Some(face_len);
            out["outerplanar"] = json!({ "status": "ok" });
            out["embedding"] = json!(emb);
            out["faces"] = json!(faces.iter().map(|f| f.vertices(emb)).collect::<Vec<_>>());
            out["q"] = json!(face_len);
            if let Some(m) = &metrics {
                out["bounds"] = json!(bound_rows(n, face_len, m));
                if face_len == 3 {
                    let iv = chordal_radius_interval(m.diameter);
                    out["chordal"] = json!({ "radius_lo": iv.lo, "radius_hi": iv.hi, "holds": iv.contains(m.radius) });
                }
            }
        }
        Err(reason) => out["outerplanar"] = reason.clone(),
    }

    match format {
        Format::Csv => {
            let mut rows: Vec<[String; 2]> = vec![
                ["order".into(), n.to_string()],
                ["size".into(), g.size().to_string()],
                ["outerplanar".into(), outer.is_ok().to_string()],
            ];
            if let Some(m) = &metrics {
                rows.push(["proximity".into(), fraction(&m.proximity)]);
                rows.push(["remoteness".into(), fraction(&m.remoteness)]);
                rows.push(["radius".into(), m.radius.to_string()]);
                rows.push(["diameter".into(), m.diameter.to_string()]);
            }
            if let Some(q) = q {
                rows.push(["q".into(), q.to_string()]);
            }
            print_csv(&["field", "value"], rows)?;
        }
        _ => emit_json(&out)?,
    }
    Ok(if outer.is_ok() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}
