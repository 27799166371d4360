//! Two independent routes to B_{p-2}(1/3) mod p: the O(p^2) recurrence
//! table with polynomial evaluation, and the O(p) Lehmer congruence via
//! H_{floor(p/3)}^(2) and the Legendre symbol (-3/p).
//!
//!     cargo run --release --example bernoulli_routes [max_prime]

use std::time::Instant;

use scverify::bernoulli::{b13_lehmer, b13_recurrence, bernoulli_numbers_mod_p};
use scverify::primes::primes_in;

fn main() -> scverify::Result<()> {
    let max: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_prime must be an integer"))
        .unwrap_or(500);

    let table = bernoulli_numbers_mod_p(7)?;
    println!("Bernoulli numbers mod 7: {:?}", table.residues());
    println!("B_5(1/3) mod 7 = {}\n", table.poly_at(5, 1, 3)?);

    println!("{:<8} {:>14} {:>14}", "prime", "lehmer", "recurrence");
    let primes = primes_in(5, max);
    let mut t_lehmer = std::time::Duration::ZERO;
    let mut t_recur = std::time::Duration::ZERO;
    for &p in &primes {
        let s = Instant::now();
        let a = b13_lehmer(p)?;
        t_lehmer += s.elapsed();
        let s = Instant::now();
        let b = b13_recurrence(p)?;
        t_recur += s.elapsed();
        assert_eq!(a, b, "routes disagree at p = {p}");
        if p <= 60 || p == *primes.last().unwrap() {
            println!("{:<8} {:>14} {:>14}", p, a, b);
        }
    }
    println!(
        "\nroutes agree on all {} primes up to {max}  (Lehmer {:.1}ms total, recurrence {:.1}ms)",
        primes.len(),
        t_lehmer.as_secs_f64() * 1e3,
        t_recur.as_secs_f64() * 1e3
    );
    Ok(())
}
