//! Morita p-adic Gamma values at rational arguments, with the
//! reflection identity and the step relation as running cross-checks.
//!
//!     cargo run --release --example gamma_values

use num_bigint::BigUint;
use scverify::gamma::{gamma_p, gamma_reflection_check, representative, DEFAULT_BUDGET};

fn main() -> scverify::Result<()> {
    println!("values at thirds (the arguments the supercongruences use):");
    for (p, n) in [(7u64, 2u32), (7, 4), (13, 3), (11, 4)] {
        let m = representative(1, 3, p, n)?;
        let g = gamma_p(1, 3, p, n)?;
        println!("  Gamma_{p}(1/3) = {g:>10}  (mod {p}^{n}, product length {m})");
    }

    println!("\nreflection Gamma_p(x) Gamma_p(1-x) = (-1)^x0:");
    for p in [5u64, 7, 11, 13, 31] {
        for (a, b) in [(1i64, 3i64), (1, 2)] {
            let rep = gamma_reflection_check(a, b, p, 3, DEFAULT_BUDGET)?;
            println!(
                "  p = {p:>2}, x = {a}/{b}: Gamma(x) * Gamma(1-x) = {}   {}",
                rep.lhs,
                if rep.pass { "ok" } else { "MISMATCH" }
            );
        }
    }

    println!("\nstep relation Gamma_p(m+1) = -m Gamma_p(m) (p does not divide m):");
    let (p, n) = (7u64, 3u32);
    let pn = BigUint::from(p).pow(n);
    for m in 1i64..=8 {
        let g = gamma_p(m, 1, p, n)?;
        let g1 = gamma_p(m + 1, 1, p, n)?;
        let factor = if (m as u64).is_multiple_of(p) {
            1
        } else {
            m as u64
        };
        let expect = (&pn - (g.clone() * factor) % &pn) % &pn;
        println!(
            "  Gamma_7({}) = {:>4}, Gamma_7({}) = {:>4}   {}",
            m,
            g,
            m + 1,
            g1,
            if g1 == expect { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
