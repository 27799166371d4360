//! Exact rational arithmetic helpers.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator; it backs the identity certifier and every exact
//! oracle in the test suites.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Shorthand constructor from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Render a rational as `num/den` (or just `num` for integers).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Invariants of the canonical form.
pub fn is_canonical(r: &Rat) -> bool {
    r.denom().is_positive() && num_integer::gcd(r.numer().abs(), r.denom().clone()).is_one()
        || (r.numer().is_zero() && r.denom().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(6, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(600, 300) % BigInt::from(7u32), {
            // C(600,300) mod 7 by Lucas: 600 = (1,5,1,5)_7, 300 = (6,0,6)_7 -> 0
            BigInt::from(0)
        });
    }

    #[test]
    fn canonical_forms() {
        assert!(is_canonical(&rat(2, 4)));
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert!(is_canonical(&rat(0, 5)));
        assert_eq!(rat_to_string(&rat(-6, 4)), "-3/2");
        assert_eq!(rat_to_string(&rat_int(7)), "7");
    }
}
