//! `outerprox` command-line front end.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 input is not a
//! 2-connected outerplanar graph (or violates a witness precondition),
//! 3 verification found violations.

mod analyze;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use outerprox::bounds::{
    chordal_radius_interval, prox_bound_2conn, prox_bound_mop, radius_bound_value, remoteness_bound,
};
use outerprox::enumerate::{
    enumerate_dissections, estimate_qn, verify_bounds_over, EnumerateOptions, VerifyOptions, DEFAULT_CAP,
    DEFAULT_RADIUS_CAP,
};
use outerprox::generators::{
    gen_cycle, gen_fan, gen_hn3, gen_hnq, gen_ladder, gen_path, nearest_hnq_order, GeneratedGraph,
};
use outerprox::global_metrics;
use outerprox::io::{write_edge_list, write_embedding};
use outerprox::witness::{proximity_witness_with, radius_witness_with, WitnessError};
use serde_json::json;

use crate::output::{decimal, emit_json, Format, SCHEMA};

#[derive(Parser)]
#[command(name = "outerprox", version, about = "Distance bounds for 2-connected outerplanar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Metrics, embedding, faces and bound checks for an edge-list file.
    Analyze {
        path: PathBuf,
        /// Use this embedding instead of recognizing one.
        #[arg(long)]
        embedding: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build a member of an extremal family.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: Option<usize>,
        /// For hnq, move n to the nearest admissible order.
        #[arg(long)]
        nearest: bool,
        #[arg(long, value_enum, default_value_t = Emit::Edges)]
        emit: Emit,
        /// Also write the embedding text to this file.
        #[arg(long)]
        embedding_out: Option<PathBuf>,
    },
    /// Construct and certify a proximity or radius witness vertex.
    Witness {
        #[arg(long, value_enum)]
        kind: WitnessArg,
        path: PathBuf,
        #[arg(long)]
        embedding: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate a closed-form bound.
    Bound {
        #[arg(long, value_enum)]
        which: BoundArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Diameter, for `chordal`.
        #[arg(long)]
        diam: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate polygon dissections.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_face: Option<usize>,
        /// Triangulations only.
        #[arg(long)]
        mops: bool,
        /// One dissection per dihedral class.
        #[arg(long)]
        canonical: bool,
        #[arg(long, value_enum, default_value_t = EnumerateOut::Counts)]
        out: EnumerateOut,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check every bound on all graphs of order n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS_CAP)]
        radius_cap: usize,
        #[arg(long)]
        max_face: Option<usize>,
        #[arg(long)]
        mops: bool,
        /// Check every labeled dissection instead of one per class.
        #[arg(long)]
        labeled: bool,
        #[arg(long, env = "OUTERPROX_WORKERS", default_value_t = 1)]
        workers: usize,
        /// Write the per-face-length extremal records here as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compute q_n exactly by exhaustion.
    Qn {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "OUTERPROX_WORKERS", default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Hnq,
    Hn3,
    Fan,
    Ladder,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Edges,
    Embedding,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessArg {
    Proximity,
    Radius,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    Prox2c,
    Proxmop,
    Rho,
    Rad,
    Chordal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateOut {
    Counts,
    Graphs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Analyze { path, embedding, format } => analyze::run(&path, embedding.as_deref(), format),
        Command::Generate { family, n, q, nearest, emit, embedding_out } => {
            generate(family, n, q, nearest, emit, embedding_out)
        }
        Command::Witness { kind, path, embedding, format } => witness(kind, &path, embedding.as_deref(), format),
        Command::Bound { which, n, q, diam, format } => bound(which, n, q, diam, format),
        Command::Enumerate { n, max_face, mops, canonical, out, cap, format } => {
            let opts = EnumerateOptions { max_face, triangulations_only: mops, up_to_symmetry: canonical, cap };
            enumerate(n, opts, out, format)
        }
        Command::Verify { n, radius_cap, max_face, mops, labeled, workers, csv, cap, format } => {
            let opts = VerifyOptions {
                enumerate: EnumerateOptions { max_face, triangulations_only: mops, up_to_symmetry: !labeled, cap },
                radius_cap,
                workers,
            };
            verify(n, opts, csv, format)
        }
        Command::Qn { n, workers, format } => qn(n, workers, format),
    }
}

fn generate(
    family: FamilyArg,
    n: usize,
    q: Option<usize>,
    nearest: bool,
    emit: Emit,
    embedding_out: Option<PathBuf>,
) -> Result<ExitCode> {
    let g: GeneratedGraph = match family {
        FamilyArg::Path => gen_path(n)?,
        FamilyArg::Cycle => gen_cycle(n)?,
        FamilyArg::Hn3 => gen_hn3(n)?,
        FamilyArg::Fan => gen_fan(n)?,
        FamilyArg::Ladder => gen_ladder(n)?,
        FamilyArg::Hnq => {
            let q = q.context("--q is required for hnq")?;
            let n = if nearest {
                nearest_hnq_order(n, q).with_context(|| format!("no admissible order near {n} for q={q}"))?
            } else {
                n
            };
            gen_hnq(n, q)?
        }
    };
    if let Some(path) = embedding_out {
        let emb = g.embedding.as_ref().context("this family has no outerplane embedding")?;
        std::fs::write(&path, write_embedding(emb)).with_context(|| format!("writing {}", path.display()))?;
    }
    match emit {
        Emit::Edges => print!("{}", write_edge_list(&g.graph)),
        Emit::Embedding => {
            let emb = g.embedding.as_ref().context("this family has no outerplane embedding")?;
            print!("{}", write_embedding(emb));
        }
        Emit::Json => {
            let metrics = global_metrics(&g.graph)?;
            emit_json(&json!({
                "schema": SCHEMA,
                "family": g.family,
                "parameters": g.parameters,
                "labels": g.labels,
                "edges": g.graph.edges().collect::<Vec<_>>(),
                "embedding": g.embedding,
                "metrics": metrics,
                "display": {
                    "proximity": decimal(&metrics.proximity),
                    "remoteness": decimal(&metrics.remoteness),
                },
            }))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn witness(kind: WitnessArg, path: &std::path::Path, embedding: Option<&std::path::Path>, format: Format) -> Result<ExitCode> {
    let g = analyze::read_graph(path)?;
    let emb = match analyze::embedding_for(&g, embedding)? {
        Ok(emb) => emb,
        Err(reason) => {
            emit_json(&json!({ "schema": SCHEMA, "error": reason }))?;
            return Ok(ExitCode::from(2));
        }
    };
    let cert = match kind {
        WitnessArg::Proximity => proximity_witness_with(&g, &emb),
        WitnessArg::Radius => radius_witness_with(&g, &emb),
    };
    let cert = match cert {
        Ok(c) => c,
        Err(e @ WitnessError::FaceTooLong { .. }) => {
            emit_json(&json!({ "schema": SCHEMA, "error": e.to_string() }))?;
            return Ok(ExitCode::from(2));
        }
        Err(e) => bail!(e),
    };
    let value = json!({
        "schema": SCHEMA,
        "certificate": cert,
        "eight_times_value": 8 * cert.exact_value,
        "holds": cert.holds(),
    });
    match format {
        Format::Csv => output::print_csv(
            &["vertex", "kind", "n", "value", "eight_times_value", "bound_times8", "holds"],
            [[
                cert.vertex.to_string(),
                serde_json::to_value(cert.kind)?.as_str().unwrap_or_default().to_string(),
                cert.n.to_string(),
                cert.exact_value.to_string(),
                (8 * cert.exact_value).to_string(),
                cert.guaranteed_bound_times8.to_string(),
                cert.holds().to_string(),
            ]],
        )?,
        _ => emit_json(&value)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn bound(which: BoundArg, n: Option<usize>, q: Option<usize>, diam: Option<u32>, format: Format) -> Result<ExitCode> {
    if let BoundArg::Chordal = which {
        let diam = diam.context("--diam is required for chordal")?;
        let iv = chordal_radius_interval(diam);
        match format {
            Format::Text => println!("{} {}", iv.lo, iv.hi),
            _ => emit_json(&json!({ "schema": SCHEMA, "diameter": diam, "radius_lo": iv.lo, "radius_hi": iv.hi }))?,
        }
        return Ok(ExitCode::SUCCESS);
    }
    let n = n.context("--n is required")?;
    let value = match which {
        BoundArg::Prox2c => prox_bound_2conn(n, q.context("--q is required for prox2c")?)?,
        BoundArg::Proxmop => prox_bound_mop(n)?,
        BoundArg::Rho => remoteness_bound(n)?,
        BoundArg::Rad => radius_bound_value(n)?,
        BoundArg::Chordal => unreachable!(),
    };
    match format {
        Format::Text => println!("{} {}", output::fraction(&value.value), decimal(&value.value)),
        Format::Csv => output::print_csv(
            &["bound", "n", "q", "value", "display"],
            [[
                value.source.to_string(),
                n.to_string(),
                value.q.map(|q| q.to_string()).unwrap_or_default(),
                output::fraction(&value.value),
                decimal(&value.value),
            ]],
        )?,
        Format::Json => emit_json(&json!({
            "schema": SCHEMA,
            "bound": value,
            "display": decimal(&value.value),
        }))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(n: usize, opts: EnumerateOptions, out: EnumerateOut, format: Format) -> Result<ExitCode> {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut lock = std::io::BufWriter::new(stdout.lock());
    let mut write_err = None;
    let counts = enumerate_dissections(n, &opts, |d| {
        if out == EnumerateOut::Graphs && write_err.is_none() {
            let line = match format {
                Format::Json => serde_json::to_string(d).expect("dissection serializes"),
                _ => output::chord_list(&d.chords),
            };
            if let Err(e) = writeln!(lock, "{line}") {
                write_err = Some(e);
            }
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    lock.flush()?;
    drop(lock);
    if out == EnumerateOut::Counts {
        match format {
            Format::Json => emit_json(&json!({
                "schema": SCHEMA,
                "n": n,
                "options": opts,
                "labeled": counts.labeled,
                "emitted": counts.emitted,
            }))?,
            _ => output::print_csv(
                &["n", "max_face", "mops", "canonical", "labeled", "emitted"],
                [[
                    n.to_string(),
                    opts.max_face.map(|q| q.to_string()).unwrap_or_default(),
                    opts.triangulations_only.to_string(),
                    opts.up_to_symmetry.to_string(),
                    counts.labeled.to_string(),
                    counts.emitted.to_string(),
                ]],
            )?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(n: usize, opts: VerifyOptions, csv: Option<PathBuf>, format: Format) -> Result<ExitCode> {
    let summary = verify_bounds_over(n, &opts)?;
    if let Some(path) = csv {
        let file = std::fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        output::write_extremal_csv(file, &summary)?;
    }
    match format {
        Format::Csv => output::write_extremal_csv(std::io::stdout().lock(), &summary)?,
        _ => emit_json(&json!({ "schema": SCHEMA, "summary": summary }))?,
    }
    Ok(if summary.is_clean() { ExitCode::SUCCESS } else { ExitCode::from(3) })
}

fn qn(n: usize, workers: usize, format: Format) -> Result<ExitCode> {
    let report = estimate_qn(n, workers)?;
    match format {
        Format::Csv => output::print_csv(
            &["n", "q_n", "radius_bound", "graphs", "theorem_threshold", "lower_ok", "upper_strict_ok", "literal_reading", "failing_chords"],
            [[
                n.to_string(),
                report.q_n.to_string(),
                report.radius_bound.to_string(),
                report.graphs_scanned.to_string(),
                report.theorem_threshold.to_string(),
                report.consistent_with_theorem_lower.to_string(),
                report.consistent_with_face_radius_upper.to_string(),
                report.literal_upper_reading_holds.to_string(),
                report.failing_witness.as_ref().map(|f| output::chord_list(&f.chords)).unwrap_or_default(),
            ]],
        )?,
        _ => emit_json(&json!({ "schema": SCHEMA, "report": report }))?,
    }
    Ok(ExitCode::SUCCESS)
}
