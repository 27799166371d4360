//! Run the full lemma registry (the lettered congruences plus the
//! Wolstenholme and reflection oracles) over a prime range and print a
//! per-check summary with the tightest margin seen.
//!
//!     cargo run --release --example lemma_audit [max_prime]

use std::collections::BTreeMap;

use scverify::suite::{parse_selectors, run_suite, SuiteConfig};

fn main() -> scverify::Result<()> {
    let max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_prime must be an integer"))
        .unwrap_or(200);

    let (checks, _) = parse_selectors(&["LEMMAS".into()])?;
    let config = SuiteConfig {
        prime_lo: 5,
        prime_hi: max,
        checks,
        ..Default::default()
    };
    let outcome = run_suite(&config)?;

    // group by check: count primes, track the minimum margin over the
    // claimed exponent
    let mut by_check: BTreeMap<String, (u32, usize, i64, bool)> = BTreeMap::new();
    for r in &outcome.reports {
        let entry = by_check
            .entry(r.check.clone())
            .or_insert((r.exponent, 0, i64::MAX, true));
        entry.1 += 1;
        entry.2 = entry.2.min(r.diff_valuation - r.exponent as i64);
        entry.3 &= r.pass;
    }

    println!(
        "{:<14} {:>4} {:>8} {:>12} {:>8}",
        "check", "exp", "primes", "min margin", "status"
    );
    for (name, (exp, count, margin, pass)) in &by_check {
        println!(
            "{:<14} {:>4} {:>8} {:>12} {:>8}",
            name,
            exp,
            count,
            format!("+{margin}"),
            if *pass { "pass" } else { "FAIL" }
        );
    }
    println!(
        "\n{} reports over primes 5..{max} in {:.2}s; {} failed",
        outcome.reports.len(),
        outcome.elapsed.as_secs_f64(),
        outcome.failed()
    );
    if !outcome.all_pass() {
        std::process::exit(1);
    }
    Ok(())
}
