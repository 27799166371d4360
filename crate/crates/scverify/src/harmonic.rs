//! Generalized harmonic sums H, S, T and their reflection lemmas.
//!
//! `H_n^(r)` sums `1/k^r`, `S_n^(r)` sums `1/(3k-1)^r` and `T_n^(r)` sums
//! `1/(3k-2)^r`, each over `k = 1..=n` with the empty sum equal to 0.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::padic::PadicNum;
use crate::rat::{rat_zero, Rat};
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicFamily {
    /// denominators k
    H,
    /// denominators 3k - 1
    S,
    /// denominators 3k - 2
    T,
}

impl HarmonicFamily {
    pub fn denominator(self, k: u64) -> u64 {
        debug_assert!(k >= 1);
        match self {
            Self::H => k,
            Self::S => 3 * k - 1,
            Self::T => 3 * k - 2,
        }
    }
}

/// Exact value of the family sum of order `r` at `n`.
pub fn value_exact(family: HarmonicFamily, n: u64, r: u32) -> Rat {
    let mut acc = rat_zero();
    for k in 1..=n {
        let d = BigInt::from(family.denominator(k)).pow(r);
        acc += Rat::new(BigInt::from(1), d);
    }
    acc
}

/// Prefix table `[0, x_1, ..., x_{n_max}]` of exact values; O(n_max) terms.
pub fn prefix_exact(family: HarmonicFamily, r: u32, n_max: u64) -> Vec<Rat> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(rat_zero());
    let mut acc = rat_zero();
    for k in 1..=n_max {
        let d = BigInt::from(family.denominator(k)).pow(r);
        acc += Rat::new(BigInt::from(1), d);
        out.push(acc.clone());
    }
    out
}

/// p-adic value of the family sum; every denominator in range must be a
/// unit mod p (a hit signals a caller bug, not a skippable term).
pub fn value_padic(
    family: HarmonicFamily,
    n: u64,
    r: u32,
    p: u64,
    precision: u32,
) -> Result<PadicNum> {
    Ok(prefix_padic(family, r, n, p, precision)?
        .pop()
        .expect("table has n+1 entries"))
}

/// Prefix table of p-adic values at the given precision.
pub fn prefix_padic(
    family: HarmonicFamily,
    r: u32,
    n_max: u64,
    p: u64,
    precision: u32,
) -> Result<Vec<PadicNum>> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let mut acc = PadicNum::zero(p, precision as i64)?;
    out.push(acc.clone());
    for k in 1..=n_max {
        let d = family.denominator(k);
        if d.is_multiple_of(p) {
            return Err(Error::DenominatorNotUnit {
                prime: p,
                denominator: BigInt::from(d),
                index: Some(k),
            });
        }
        let term = PadicNum::from_ratio(&BigInt::from(1), &BigInt::from(d).pow(r), p, precision)?;
        acc = acc.add(&term)?;
        out.push(acc.clone());
    }
    Ok(out)
}

fn require_at_least_five(p: u64) -> Result<()> {
    if p < 5 {
        return Err(Error::InapplicablePrime {
            prime: p,
            reason: "harmonic lemmas require p >= 5",
        });
    }
    Ok(())
}

/// Exact harmonic numerators over the common denominator L = lcm(1..n):
/// `H_k = h1[k]/L` and `H_k^(2) = h2[k]/L^2`. Keeping the denominator
/// fixed turns every prefix step into pure integer arithmetic.
struct IntegerHarmonics {
    lcm: BigInt,
    h1: Vec<BigInt>,
    h2: Vec<BigInt>,
}

fn integer_harmonics(n: u64) -> IntegerHarmonics {
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let mut lcm = BigInt::one();
    for k in 2..=n {
        lcm = lcm.lcm(&BigInt::from(k));
    }
    let mut h1 = Vec::with_capacity(n as usize + 1);
    let mut h2 = Vec::with_capacity(n as usize + 1);
    h1.push(BigInt::zero());
    h2.push(BigInt::zero());
    for k in 1..=n {
        let unit = &lcm / BigInt::from(k); // exact by construction
        h1.push(&h1[(k - 1) as usize] + &unit);
        h2.push(&h2[(k - 1) as usize] + &unit * &unit);
    }
    IntegerHarmonics { lcm, h1, h2 }
}

fn int_residue_string(x: &BigInt, modulus: &BigInt) -> String {
    use num_integer::Integer;
    x.mod_floor(modulus).to_string()
}

/// Verify, by exact rational arithmetic, that for every `1 <= k <= p-1`
/// `H_{p-1-k} - H_k = p*H_k^(2) (mod p^2)` and
/// `H_{p-1-k}^(2) + H_k^(2) = 0 (mod p)`.
///
/// This is the brute-force oracle for the modular B1/B2 registry rows.
/// The reported difference valuation is the minimum over all `k` of
/// `min(v_p of the first congruence, 1 + v_p of the second)`, so that
/// `pass <=> diff_valuation >= 2`.
pub fn reflection_check(p: u64) -> Result<CheckReport> {
    use crate::padic::{int_valuation, mod_inverse};
    require_at_least_five(p)?;
    let start = Instant::now();
    let tables = integer_harmonics(p - 1);
    let (h1, h2) = (&tables.h1, &tables.h2);
    // p does not divide L = lcm(1..p-1), so differences keep their
    // valuations when read off the integer numerators
    let pr = BigInt::from(p);
    let cap = 8i64;

    let mut min_val = i64::MAX;
    let mut at_k = 1u64;
    for k in 1..p {
        let i = k as usize;
        let j = (p - 1 - k) as usize;
        // (H_{p-1-k} - H_k - p H_k^(2)) * L^2 and (H_{p-1-k}^(2) + H_k^(2)) * L^2
        let d1 = (&h1[j] - &h1[i]) * &tables.lcm - &pr * &h2[i];
        let d2 = &h2[j] + &h2[i];
        let v1 = int_valuation(&d1, p).unwrap_or(cap);
        let v2 = int_valuation(&d2, p).unwrap_or(cap) + 1;
        let v = v1.min(v2).min(cap);
        if v < min_val {
            min_val = v;
            at_k = k;
        }
        if v < 2 {
            break;
        }
    }

    let sq = BigInt::from(p * p);
    let lcm_inv = BigInt::from(mod_inverse(&tables.lcm, &BigUint::from(p * p))?);
    let i = at_k as usize;
    let j = (p - 1 - at_k) as usize;
    let lhs = (&h1[j] - &h1[i]) * &lcm_inv;
    let rhs = &pr * &h2[i] * &lcm_inv * &lcm_inv;
    Ok(CheckReport {
        prime: p,
        check: "REFLECTION".into(),
        exponent: 2,
        lhs: int_residue_string(&lhs, &sq),
        rhs: int_residue_string(&rhs, &sq),
        diff_valuation: min_val,
        pass: min_val >= 2,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

/// Wolstenholme: `v_p(H_{p-1}) >= 2` and `v_p(H_{p-1}^(2)) >= 1`, by exact
/// rational arithmetic. Reported valuation is
/// `min(v_p(H_{p-1}), 1 + v_p(H_{p-1}^(2)))` so `pass <=> >= 2`.
pub fn wolstenholme_check(p: u64) -> Result<CheckReport> {
    use crate::padic::{int_valuation, mod_inverse};
    require_at_least_five(p)?;
    let start = Instant::now();
    let tables = integer_harmonics(p - 1);
    let cap = 8i64;
    let v1 = int_valuation(&tables.h1[(p - 1) as usize], p).unwrap_or(cap);
    let v2 = int_valuation(&tables.h2[(p - 1) as usize], p).unwrap_or(cap) + 1;
    let v = v1.min(v2).min(cap);
    let sq = BigInt::from(p * p);
    let lcm_inv = BigInt::from(mod_inverse(&tables.lcm, &BigUint::from(p * p))?);
    let lhs = &tables.h1[(p - 1) as usize] * &lcm_inv;
    Ok(CheckReport {
        prime: p,
        check: "WOLSTENHOLME".into(),
        exponent: 2,
        lhs: int_residue_string(&lhs, &sq),
        rhs: "0".into(),
        diff_valuation: v,
        pass: v >= 2,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn exact_values() {
        assert_eq!(value_exact(HarmonicFamily::H, 3, 1), rat(11, 6));
        assert_eq!(value_exact(HarmonicFamily::S, 2, 1), rat(7, 10));
        assert_eq!(value_exact(HarmonicFamily::T, 0, 2), rat_zero());
        assert_eq!(value_exact(HarmonicFamily::T, 2, 1), rat(5, 4));
    }

    #[test]
    fn prefix_agrees_with_direct() {
        for family in [HarmonicFamily::H, HarmonicFamily::S, HarmonicFamily::T] {
            for r in 1..=2 {
                let table = prefix_exact(family, r, 25);
                for n in 0..=25u64 {
                    assert_eq!(table[n as usize], value_exact(family, n, r));
                }
            }
        }
    }

    #[test]
    fn padic_matches_exact() {
        let p = 13;
        let table = prefix_padic(HarmonicFamily::S, 2, 4, p, 6).unwrap();
        for n in 0..=4u64 {
            let exact = value_exact(HarmonicFamily::S, n, 2);
            let expect = PadicNum::from_rat(&exact, p, 6).unwrap();
            assert_eq!(table[n as usize], expect, "n = {n}");
        }
    }

    #[test]
    fn padic_rejects_p_dividing_denominator() {
        // family S hits 3k-1 = 5 at k = 2
        let err = value_padic(HarmonicFamily::S, 3, 1, 5, 4).unwrap_err();
        assert!(matches!(
            err,
            Error::DenominatorNotUnit { index: Some(2), .. }
        ));
    }

    #[test]
    fn reflection_small_primes() {
        for p in [5u64, 7, 11, 13] {
            let rep = reflection_check(p).unwrap();
            assert!(rep.pass, "p = {p}: {rep:?}");
            assert!(rep.diff_valuation >= 2);
        }
        assert!(matches!(
            reflection_check(3),
            Err(Error::InapplicablePrime { .. })
        ));
    }

    #[test]
    fn wolstenholme_small_primes() {
        let rep = wolstenholme_check(5).unwrap();
        assert!(rep.pass);
        assert_eq!(value_exact(HarmonicFamily::H, 4, 1), rat(25, 12));
        let rep7 = wolstenholme_check(7).unwrap();
        assert!(rep7.pass);
        assert_eq!(value_exact(HarmonicFamily::H, 6, 1), rat(49, 20));
        assert!(matches!(
            wolstenholme_check(3),
            Err(Error::InapplicablePrime { .. })
        ));
    }
}
