//! Tour of the truncated p-adic ring: construction from rationals,
//! valuation tracking, precision propagation and cancellation.
//!
//!     cargo run --example padic_arithmetic

use num_bigint::BigInt;
use scverify::padic::{legendre_symbol, mod_inverse_u64, PadicNum};
use scverify::rat::rat;

fn main() -> scverify::Result<()> {
    let (p, k) = (7u64, 4u32);
    println!("working in Q_{p} at precision {p}^{k}\n");

    let third = PadicNum::from_ratio(&BigInt::from(1), &BigInt::from(3), p, k)?;
    println!("1/3        = {third}");
    println!(
        "  unit is inverse of 3 mod {}: {}",
        2401,
        mod_inverse_u64(3, 2401)?
    );

    let x = PadicNum::from_ratio(&BigInt::from(14), &BigInt::from(3), p, k)?;
    println!("14/3       = {x}   (valuation {})", x.valuation().unwrap());

    let neg = PadicNum::from_ratio(&BigInt::from(1), &BigInt::from(49), p, k)?;
    println!("1/49       = {neg}   (negative valuation is legal)");

    let sum = third.add(&PadicNum::from_rat(&rat(2, 3), p, k)?)?;
    println!("1/3 + 2/3  = {sum}");

    let prod = third.mul(&PadicNum::from_integer(3, p, k)?)?;
    println!("(1/3) * 3  = {prod}");

    // additive cancellation collapses to the zero element at the
    // jointly supported precision
    let a = PadicNum::one(p, k)?;
    let b = PadicNum::from_integer(7i64.pow(k) - 1, p, k)?;
    let z = a.add(&b)?;
    println!(
        "1 + (p^4-1) = {z}   (zero at absolute precision {})",
        z.abs_precision()
    );

    // ultrametric: v(x+y) = min(v(x), v(y)) when the valuations differ
    let low = PadicNum::from_rat(&rat(7, 1), p, k)?;
    let high = PadicNum::from_rat(&rat(343, 1), p, k)?;
    let s = low.add(&high)?;
    println!(
        "\nv(7) = 1, v(343) = 3, v(7 + 343) = {}",
        s.valuation().unwrap()
    );

    println!("\nLegendre symbols (-3/p) track p mod 3:");
    for q in [5u64, 7, 11, 13, 31, 97] {
        println!(
            "  (-3/{q}) = {:>2}   (p mod 3 = {})",
            legendre_symbol(-3, q),
            q % 3
        );
    }
    Ok(())
}
