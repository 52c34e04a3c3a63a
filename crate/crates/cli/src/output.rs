use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use outerprox::enumerate::VerificationSummary;
use outerprox::rational::{decimal_string, fraction_string, Rational};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn fraction(r: &Rational) -> String {
    fraction_string(r)
}

/// Display-only rendering; machine fields always carry the fraction.
pub fn decimal(r: &Rational) -> String {
    decimal_string(r, 6)
}

pub fn emit_json<T: Serialize>(value: &T) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn chord_list(chords: &[(usize, usize)]) -> String {
    chords.iter().map(|(i, j)| format!("{i}-{j}")).collect::<Vec<_>>().join(" ")
}

pub fn print_csv<R, I>(headers: &[&str], rows: I) -> Result<()>
where
    R: IntoIterator<Item = String>,
    I: IntoIterator<Item = R>,
{
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    w.write_record(headers)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

/// One row per maximum face length with the extremal graphs found there.
pub fn write_extremal_csv<W: Write>(out: W, s: &VerificationSummary) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "n",
        "q",
        "graphs",
        "max_proximity",
        "max_proximity_display",
        "proximity_bound",
        "max_proximity_chords",
        "min_gap",
        "min_gap_display",
        "min_gap_chords",
        "max_radius",
        "diameter",
        "max_radius_chords",
    ])?;
    for (q, class) in &s.by_max_face {
        let (Some(p), Some(g), Some(r)) = (&class.max_proximity, &class.min_gap, &class.max_radius) else {
            continue;
        };
        w.write_record([
            s.n.to_string(),
            q.to_string(),
            class.graphs.to_string(),
            fraction(&p.proximity),
            decimal(&p.proximity),
            fraction(&p.bound),
            chord_list(&p.chords),
            fraction(&g.gap),
            decimal(&g.gap),
            chord_list(&g.chords),
            r.radius.to_string(),
            r.diameter.to_string(),
            chord_list(&r.chords),
        ])?;
    }
    w.flush()?;
    Ok(())
}
