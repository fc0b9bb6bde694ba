//! Run reports: a JSON header line followed by one JSON line per instance,
//! or a CSV projection of the records.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

/// Bumped whenever a record or header field changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub schema_version: u32,
    pub command: String,
    pub family: String,
    /// Inclusive `[lo, hi]`; absent for fixed graphs.
    pub n_range: Option<[usize; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Constructive {
    pub checked: u64,
    pub agreed: u64,
    pub fallback: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Record {
    pub family: String,
    pub n: Option<usize>,
    pub verdict: String,
    pub witness_edges: Option<Vec<String>>,
    pub matchings_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_extendable: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub every_pm_extends: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_two_factors_even: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_factors_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructive: Option<Constructive>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Only filled with `--timings`; otherwise timings go to stderr.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    family: &'a str,
    n: Option<usize>,
    verdict: &'a str,
    witness_edges: String,
    matchings_count: u64,
    holds: Option<bool>,
    elapsed_ms: Option<u64>,
}

pub fn write_report<W: Write + ?Sized>(out: &mut W, format: Format, header: &Header, records: &[Record]) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, header)?;
            out.write_all(b"\n")?;
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in records {
                w.serialize(CsvRow {
                    family: &r.family,
                    n: r.n,
                    verdict: &r.verdict,
                    witness_edges: r.witness_edges.as_deref().unwrap_or_default().join(" "),
                    matchings_count: r.matchings_count,
                    holds: r.holds,
                    elapsed_ms: r.elapsed_ms,
                })?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
