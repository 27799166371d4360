//! Scan the two mod-p^4 supercongruences over a prime range, reporting
//! the valuation of the difference and the sharpness of the correction
//! term at each prime.
//!
//!     cargo run --release --example theorem_scan [max_prime]

use scverify::checks::{check_theorem, theorem_sharpness, CheckId, CheckParams};
use scverify::primes::primes_in;

fn main() -> scverify::Result<()> {
    let max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_prime must be an integer"))
        .unwrap_or(200);
    let params = CheckParams::default();

    println!(
        "{:<6} {:<6} {:>9} {:>12} {:>14}",
        "check", "prime", "v(diff)", "v(LHS - p)", "correction"
    );
    let mut failures = 0;
    for p in primes_in(5, max) {
        let id = if p % 3 == 1 {
            CheckId::Thm1
        } else {
            CheckId::Thm2
        };
        let rep = check_theorem(id, p)?;
        let (v, nonzero) = theorem_sharpness(id, p, &params)?;
        if !rep.pass {
            failures += 1;
        }
        println!(
            "{:<6} {:<6} {:>9} {:>12} {:>14}",
            rep.check,
            p,
            rep.diff_valuation,
            v,
            if nonzero {
                "nonzero mod p"
            } else {
                "vanishes mod p"
            }
        );
    }
    if failures == 0 {
        println!("\nall primes up to {max} verified at exponent 4");
    } else {
        println!("\n{failures} FAILURES");
        std::process::exit(1);
    }
    Ok(())
}
