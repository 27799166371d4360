//! The (D.2)-type supercongruence and its mod-p^6 extension, verified at
//! the budgeted small primes: the full sum over k = 0..p-1 against
//! -p Gamma_p(1/3)^9, and against -(10/27) p^4 Gamma_p(1/3)^9 in the
//! other residue class.
//!
//!     cargo run --release --example van_hamme

use scverify::checks::{check_gamma_congruence, CheckId, CheckParams};

fn main() -> scverify::Result<()> {
    let params = CheckParams {
        precision: 8,
        gamma_budget: 2_000_000,
        recurrence_cap: 2000,
    };

    println!("Van Hamme (D.2), exponent 4, primes = 1 (mod 6):");
    for p in [7u64, 13, 19, 31] {
        let rep = check_gamma_congruence(CheckId::VanHammeD2, p, &params)?;
        println!(
            "  p = {:>2}: lhs = rhs = {:>12} (mod p^4)  v(diff) = {}  {}  [{} us]",
            p,
            rep.lhs,
            rep.diff_valuation,
            if rep.pass { "pass" } else { "FAIL" },
            rep.elapsed_us
        );
    }

    println!("\nmod-p^6 extension, both residue branches:");
    for p in [5u64, 7, 11, 13] {
        let rep = check_gamma_congruence(CheckId::LongRama, p, &params)?;
        let branch = if p % 6 == 1 {
            "-p Gamma^9"
        } else {
            "-(10/27) p^4 Gamma^9"
        };
        println!(
            "  p = {:>2} ({}): v(diff) = {}  {}  [{} us]",
            p,
            branch,
            rep.diff_valuation,
            if rep.pass { "pass" } else { "FAIL" },
            rep.elapsed_us
        );
    }
    Ok(())
}
