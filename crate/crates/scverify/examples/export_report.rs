//! Run a small mixed suite and export the verdicts as both JSONL and
//! CSV, the two formats the batch interface speaks.
//!
//!     cargo run --release --example export_report [out_dir]

use std::path::PathBuf;

use scverify::report::{emit_report, ReportFormat};
use scverify::suite::{parse_selectors, run_suite, SuiteConfig};

fn main() -> scverify::Result<()> {
    let out_dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&out_dir)?;

    let (checks, identities) = parse_selectors(&[
        "THM1".into(),
        "THM2".into(),
        "GAMMA".into(),
        "B7".into(),
        "C10".into(),
    ])?;
    let config = SuiteConfig {
        prime_lo: 5,
        prime_hi: 100,
        checks,
        identities,
        identity_hi: 50,
        ..Default::default()
    };
    let outcome = run_suite(&config)?;

    let jsonl = out_dir.join("report.jsonl");
    let csv = out_dir.join("report.csv");
    emit_report(&outcome.reports, ReportFormat::Jsonl, Some(&jsonl))?;
    emit_report(&outcome.reports, ReportFormat::Csv, Some(&csv))?;

    println!(
        "{} reports ({} passed, {} failed, {} skipped by budget) in {:.2}s",
        outcome.reports.len(),
        outcome.passed(),
        outcome.failed(),
        outcome.budget_skipped,
        outcome.elapsed.as_secs_f64()
    );
    println!("wrote {}", jsonl.display());
    println!("wrote {}", csv.display());

    let first = std::fs::read_to_string(&jsonl)?;
    println!("\nfirst records:");
    for line in first.lines().take(3) {
        println!("  {line}");
    }
    Ok(())
}
