//! Structured check verdicts and their serialized forms.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::Result;

/// Verdict of one (check, prime) evaluation.
///
/// `pass` holds iff the difference valuation reaches the claimed modulus
/// exponent. `lhs`/`rhs` are canonical residues in `[0, p^exponent)` as
/// decimal strings (exact rationals for identity checks, where `prime`
/// carries the first failing `n`, or 0 on success). `diff_valuation` is
/// capped at the working precision.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub prime: u64,
    pub check: String,
    pub exponent: u32,
    pub lhs: String,
    pub rhs: String,
    pub diff_valuation: i64,
    pub pass: bool,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Jsonl,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "jsonl" | "json" => Ok(Self::Jsonl),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format `{other}` (expected jsonl or csv)")),
        }
    }
}

const CSV_HEADER: &str = "prime,check,exponent,lhs,rhs,diff_valuation,pass,elapsed_us";

/// RFC 4180 quoting: wrap fields containing commas, quotes or newlines.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Write reports to `out`, one record per report (CSV gets a header row
/// even when there are no records).
pub fn write_reports(
    reports: &[CheckReport],
    format: ReportFormat,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        ReportFormat::Jsonl => {
            for r in reports {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
        }
        ReportFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.prime,
                    csv_field(&r.check),
                    r.exponent,
                    csv_field(&r.lhs),
                    csv_field(&r.rhs),
                    r.diff_valuation,
                    r.pass,
                    r.elapsed_us
                )?;
            }
        }
    }
    Ok(())
}

/// Emit reports to a file, or stdout when `destination` is `None`.
pub fn emit_report(
    reports: &[CheckReport],
    format: ReportFormat,
    destination: Option<&Path>,
) -> Result<()> {
    match destination {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            write_reports(reports, format, &mut file)?;
            file.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_reports(reports, format, &mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}
