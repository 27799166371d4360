//! Certify the eight symbolic-summation identities by exact rational
//! evaluation of both sides over an n-range, then show the bridge that
//! turns two of them into the theorem truncations: at n = (p-1)/3 the
//! first weighted sum collapses to p exactly.
//!
//!     cargo run --release --example identity_certify [max_n]

use scverify::identities::{identity_eval, identity_verify, IdentityId, Side};
use scverify::rat::rat_to_string;

fn main() {
    let max_n: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be an integer"))
        .unwrap_or(60);

    println!("pointwise exact verification over n = 1..{max_n}:\n");
    let mut all_pass = true;
    for id in IdentityId::all() {
        let rep = identity_verify(id, 1, max_n, 8);
        all_pass &= rep.pass;
        if rep.pass {
            println!("  {:<4} PASS   ({} us)", rep.check, rep.elapsed_us);
        } else {
            println!(
                "  {:<4} FAIL at n = {}: lhs = {}, rhs = {}",
                rep.check, rep.prime, rep.lhs, rep.rhs
            );
        }
    }

    println!("\nsample values at n = 2:");
    for id in [IdentityId::B9, IdentityId::C10, IdentityId::C11] {
        let lhs = identity_eval(id, 2, Side::Lhs);
        println!("  {:<4} both sides = {}", id.name(), rat_to_string(&lhs));
    }

    println!("\nbridge to the supercongruence truncations:");
    for p in [7u64, 13, 19, 31] {
        let v = identity_eval(IdentityId::B7, (p - 1) / 3, Side::Lhs);
        println!("  B7 at n = (p-1)/3 with p = {p}: {}", rat_to_string(&v));
    }
    for p in [5u64, 11, 17, 23] {
        let v = identity_eval(IdentityId::B8, (p + 1) / 3, Side::Lhs);
        println!("  B8 at n = (p+1)/3 with p = {p}: {}", rat_to_string(&v));
    }

    if !all_pass {
        std::process::exit(1);
    }
}
