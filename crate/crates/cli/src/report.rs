//! Output records and their text, CSV and JSON renderings.

use std::io::Write;

use monodromy_core::enumerate::{image_fingerprint, Orbit};
use monodromy_core::groups::GroupFingerprint;
use monodromy_core::{EnumerationResult, SolutionTuple, SurfaceInvariants};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::CliError;

/// One row of the count table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub fixed_count: u64,
    pub transpositions: u64,
    pub total: u64,
    pub orbit_count: Option<u64>,
    #[serde(rename = "K2")]
    pub k2: i64,
    pub chi: i64,
    pub c2: i64,
    /// Image-group labels separated by `;`, empty when not computed.
    pub image_names: String,
}

impl TableRow {
    pub fn new(result: &EnumerationResult, inv: &SurfaceInvariants) -> Self {
        let image_names = result
            .image_histogram
            .as_ref()
            .map(|h| h.keys().cloned().collect::<Vec<_>>().join(";"))
            .unwrap_or_default();
        Self {
            n: result.n,
            fixed_count: result.fixed_count,
            transpositions: result.transpositions,
            total: result.total_count,
            orbit_count: result.orbit_count,
            k2: inv.k2,
            chi: inv.chi,
            c2: inv.c2,
            image_names,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub n: usize,
    pub index: usize,
    pub sigma: String,
    pub a1: String,
    pub a2: String,
    pub b1: String,
    pub b2: String,
    pub fixed_size: u64,
    pub full_size: u64,
    pub image: String,
}

impl OrbitRow {
    pub fn new(index: usize, orbit: &Orbit) -> Self {
        let t = &orbit.representative;
        Self {
            n: t.degree(),
            index,
            sigma: t.sigma.to_string(),
            a1: t.a1.to_string(),
            a2: t.a2.to_string(),
            b1: t.b1.to_string(),
            b2: t.b2.to_string(),
            fixed_size: orbit.fixed_size,
            full_size: orbit.full_size,
            image: image_fingerprint(t).label(),
        }
    }
}

/// One line of `list` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionLine {
    pub n: usize,
    pub sigma: String,
    pub a1: String,
    pub a2: String,
    pub b1: String,
    pub b2: String,
    pub image: GroupFingerprint,
}

impl SolutionLine {
    pub fn new(t: &SolutionTuple) -> Self {
        Self {
            n: t.degree(),
            sigma: t.sigma.to_string(),
            a1: t.a1.to_string(),
            a2: t.a2.to_string(),
            b1: t.b1.to_string(),
            b2: t.b2.to_string(),
            image: image_fingerprint(t),
        }
    }
}

/// Flat form of a `list` line for CSV, which cannot nest the fingerprint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRow {
    pub n: usize,
    pub sigma: String,
    pub a1: String,
    pub a2: String,
    pub b1: String,
    pub b2: String,
    pub image: String,
    pub image_order: u64,
}

impl From<&SolutionLine> for SolutionRow {
    fn from(l: &SolutionLine) -> Self {
        Self {
            n: l.n,
            sigma: l.sigma.clone(),
            a1: l.a1.clone(),
            a2: l.a2.clone(),
            b1: l.b1.clone(),
            b2: l.b2.clone(),
            image: l.image.label(),
            image_order: l.image.order,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRow {
    pub n: usize,
    pub oracle_count: u64,
    pub pruned_count: u64,
    pub only_in_oracle: u64,
    pub only_in_pruned: u64,
    pub matched: bool,
}

impl OracleRow {
    pub fn line(&self) -> String {
        if self.matched {
            format!("MATCH: {} = {}", self.oracle_count, self.pruned_count)
        } else {
            format!(
                "MISMATCH: {} != {} ({} only in oracle, {} only in pruned search)",
                self.oracle_count, self.pruned_count, self.only_in_oracle, self.only_in_pruned
            )
        }
    }
}

pub fn write_csv<T: Serialize>(rows: &[T], w: &mut dyn Write) -> Result<(), CliError> {
    let mut out = csv::Writer::from_writer(w);
    for row in rows {
        out.serialize(row)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize + ?Sized>(value: &T, w: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

/// Writes `rows` as CSV or JSON; text layouts are per-command.
pub fn write_records<T: Serialize>(rows: &[T], format: Format, w: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Csv => write_csv(rows, w),
        Format::Json => write_json(rows, w),
        Format::Text => unreachable!("text output is laid out by the caller"),
    }
}

pub fn read_csv<T: DeserializeOwned>(input: &str) -> Result<Vec<T>, CliError> {
    let mut reader = csv::Reader::from_reader(input.as_bytes());
    Ok(reader.deserialize().collect::<Result<_, _>>()?)
}

pub fn read_json<T: DeserializeOwned>(input: &str) -> Result<T, CliError> {
    Ok(serde_json::from_str(input)?)
}

pub fn table_text(rows: &[TableRow], w: &mut dyn Write) -> Result<(), CliError> {
    writeln!(
        w,
        "{:>3} {:>12} {:>14} {:>12} {:>8} {:>4} {:>4} {:>4}  images",
        "n", "fixed_count", "transpositions", "total", "orbits", "K2", "chi", "c2"
    )?;
    for r in rows {
        let orbits = r.orbit_count.map_or_else(|| "-".to_string(), |c| c.to_string());
        let images = if r.image_names.is_empty() { "-" } else { &r.image_names };
        writeln!(
            w,
            "{:>3} {:>12} {:>14} {:>12} {:>8} {:>4} {:>4} {:>4}  {}",
            r.n, r.fixed_count, r.transpositions, r.total, orbits, r.k2, r.chi, r.c2, images
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    fn row(n: usize, fixed: u64, orbits: Option<u64>, images: &str) -> TableRow {
        let mut r = EnumerationResult::from_fixed_count(n, fixed, Duration::ZERO);
        r.orbit_count = orbits;
        let mut row = TableRow::new(&r, &monodromy_core::invariants_for(n).unwrap());
        row.image_names = images.into();
        row
    }

    #[test]
    fn csv_round_trip() {
        let rows = vec![row(2, 16, Some(16), "C2"), row(5, 0, None, "")];
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("n,fixed_count,transpositions,total,orbit_count,K2,chi,c2,image_names\n"));
        assert!(text.contains("\n5,0,10,0,,5,1,7,\n"));
        let back: Vec<TableRow> = read_csv(&text).unwrap();
        assert_eq!(back, rows);
        let mut again = Vec::new();
        write_csv(&back, &mut again).unwrap();
        assert_eq!(String::from_utf8(again).unwrap(), text);
    }

    #[test]
    fn json_round_trip() {
        let rows = vec![row(3, 80, Some(40), "S3")];
        let mut buf = Vec::new();
        write_json(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let back: Vec<TableRow> = read_json(&text).unwrap();
        let mut again = Vec::new();
        write_json(&back, &mut again).unwrap();
        assert_eq!(String::from_utf8(again).unwrap(), text);
    }

    #[test]
    fn oracle_lines() {
        let ok =
            OracleRow { n: 3, oracle_count: 80, pruned_count: 80, only_in_oracle: 0, only_in_pruned: 0, matched: true };
        assert_eq!(ok.line(), "MATCH: 80 = 80");
        let bad = OracleRow { pruned_count: 79, only_in_oracle: 1, matched: false, ..ok };
        assert!(bad.line().starts_with("MISMATCH: 80 != 79"));
    }
}
