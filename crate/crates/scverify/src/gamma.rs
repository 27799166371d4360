//! Morita's p-adic Gamma function at rational arguments, modulo p^N.
//!
//! For a positive integer m, `Gamma_p(m) = (-1)^m * prod_{0<k<m, p∤k} k`.
//! A rational argument `a/b` (b a unit) is evaluated at the smallest
//! positive integer representative `m = a/b mod p^N`; the Lipschitz bound
//! `|Gamma_p(x) - Gamma_p(y)|_p <= |x - y|_p` makes any representative in
//! that residue class equally valid, and the smallest minimizes the
//! product length. Products are capped by an explicit operation budget.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::padic::mod_inverse;
use crate::report::CheckReport;

/// Default cap on the product length (number of multiplications).
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A fully specified Gamma_p evaluation.
#[derive(Debug, Clone)]
pub struct GammaRequest {
    pub numerator: i64,
    pub denominator: i64,
    pub prime: u64,
    pub precision: u32,
    pub budget: u64,
}

impl GammaRequest {
    pub fn new(numerator: i64, denominator: i64, prime: u64, precision: u32) -> Self {
        Self {
            numerator,
            denominator,
            prime,
            precision,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

fn check_args(p: u64, n: u32, b: i64) -> Result<()> {
    if p < 5 || p.is_multiple_of(2) || p.is_multiple_of(3) {
        return Err(Error::InapplicablePrime {
            prime: p,
            reason: "Gamma_p evaluation here requires an odd prime p >= 5",
        });
    }
    assert!(n >= 1, "precision must be positive");
    if b.rem_euclid(p as i64) == 0 {
        return Err(Error::DenominatorNotUnit {
            prime: p,
            denominator: b.into(),
            index: None,
        });
    }
    Ok(())
}

/// The representative: smallest positive integer congruent to `a/b` mod p^N.
pub fn representative(a: i64, b: i64, p: u64, n: u32) -> Result<BigUint> {
    check_args(p, n, b)?;
    if a == 0 {
        // the argument 0 is a domain edge: the reflection partner of x = 1
        return Err(Error::DivisionByZero);
    }
    let pn = BigUint::from(p).pow(n);
    let b_inv = mod_inverse(&BigInt::from(b), &pn)?;
    let a_mod = BigInt::from(a)
        .mod_floor(&BigInt::from(pn.clone()))
        .to_biguint()
        .expect("nonnegative");
    let m = (a_mod * b_inv) % &pn;
    Ok(if m.is_zero() { pn } else { m })
}

/// `Gamma_p(a/b) mod p^N` with the default budget.
pub fn gamma_p(a: i64, b: i64, p: u64, n: u32) -> Result<BigUint> {
    gamma_p_request(&GammaRequest::new(a, b, p, n))
}

/// `Gamma_p(a/b) mod p^N`, erroring when the representative exceeds the budget.
pub fn gamma_p_request(req: &GammaRequest) -> Result<BigUint> {
    let (p, n) = (req.prime, req.precision);
    let m_big = representative(req.numerator, req.denominator, p, n)?;
    let m = m_big
        .to_u64()
        .filter(|&m| m <= req.budget)
        .ok_or_else(|| Error::BudgetExceeded {
            required: m_big.to_u64().unwrap_or(u64::MAX),
            budget: req.budget,
        })?;
    let pn = BigUint::from(p).pow(n);
    let mut prod = if let Some(pn_small) = pn.to_u64() {
        // fixed-width fast path: the modulus fits a machine word
        let mut acc: u64 = 1 % pn_small;
        for k in 1..m {
            if k % p != 0 {
                acc = ((acc as u128 * k as u128) % pn_small as u128) as u64;
            }
        }
        BigUint::from(acc)
    } else {
        let mut acc = BigUint::one();
        for k in 1..m {
            if k % p != 0 {
                acc = (acc * k) % &pn;
            }
        }
        acc
    };
    if m % 2 == 1 {
        // (-1)^m with m odd
        prod = (&pn - prod) % &pn;
    }
    Ok(prod)
}

/// Reflection oracle: `Gamma_p(x) * Gamma_p(1-x) = (-1)^{x0} (mod p^N)`,
/// with `x0` the representative of `x` in `{1, ..., p}`.
pub fn gamma_reflection_check(a: i64, b: i64, p: u64, n: u32, budget: u64) -> Result<CheckReport> {
    let start = Instant::now();
    let gx = gamma_p_request(&GammaRequest::new(a, b, p, n).with_budget(budget))?;
    let gy = gamma_p_request(&GammaRequest::new(b - a, b, p, n).with_budget(budget))?;
    let pn = BigUint::from(p).pow(n);
    let lhs = (&gx * &gy) % &pn;

    let x0 = representative(a, b, p, 1)?
        .to_u64()
        .expect("residue below p");
    let rhs = if x0 % 2 == 1 {
        (&pn - BigUint::one()) % &pn
    } else {
        BigUint::one()
    };

    let pass = lhs == rhs;
    let diff_valuation = if pass {
        n as i64
    } else {
        let diff = (&pn + &lhs - &rhs) % &pn;
        let mut v = 0i64;
        let mut cur = diff;
        let pb = BigUint::from(p);
        while (&cur % &pb).is_zero() && !cur.is_zero() {
            cur /= &pb;
            v += 1;
        }
        v
    };
    Ok(CheckReport {
        prime: p,
        check: format!("GAMMA_REFLECTION({a}/{b})"),
        exponent: n,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        diff_valuation,
        pass,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_point_is_minus_one() {
        for p in [5u64, 7, 11] {
            for n in [1u32, 2, 3] {
                let pn = BigUint::from(p).pow(n);
                assert_eq!(gamma_p(1, 1, p, n).unwrap(), &pn - 1u32);
            }
        }
    }

    #[test]
    fn hand_verified_values_mod_49() {
        assert_eq!(representative(1, 3, 7, 2).unwrap(), BigUint::from(33u32));
        assert_eq!(gamma_p(1, 3, 7, 2).unwrap(), BigUint::from(25u32));
        assert_eq!(representative(2, 3, 7, 2).unwrap(), BigUint::from(17u32));
        assert_eq!(gamma_p(2, 3, 7, 2).unwrap(), BigUint::from(47u32));
    }

    #[test]
    fn reflection_examples() {
        let rep = gamma_reflection_check(1, 3, 7, 2, DEFAULT_BUDGET).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.lhs, "48"); // 25 * 47 = -1 mod 49, x0 = 5
        for p in [5u64, 11, 13] {
            let rep = gamma_reflection_check(1, 2, p, 1, DEFAULT_BUDGET).unwrap();
            assert!(rep.pass, "p = {p}: {rep:?}");
        }
    }

    #[test]
    fn reflection_at_integer_endpoint_errors() {
        // 1 - 1/1 = 0 is out of Gamma_p's domain here
        assert!(matches!(
            gamma_reflection_check(1, 1, 7, 2, DEFAULT_BUDGET),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn step_relation() {
        // Gamma_p(m+1) = -m * Gamma_p(m) when p does not divide m, else -Gamma_p(m)
        let p = 7u64;
        let n = 3u32;
        let pn = BigUint::from(p).pow(n);
        for m in 1i64..30 {
            let g_m = gamma_p(m, 1, p, n).unwrap();
            let g_m1 = gamma_p(m + 1, 1, p, n).unwrap();
            let factor = if (m as u64).is_multiple_of(p) {
                BigUint::one()
            } else {
                BigUint::from(m as u64)
            };
            let expect = (&pn - (g_m * factor) % &pn) % &pn;
            assert_eq!(g_m1, expect, "m = {m}");
        }
    }

    #[test]
    fn precision_consistency() {
        for p in [5u64, 7, 11] {
            for n in [2u32, 3, 4] {
                let hi = gamma_p(1, 3, p, n).unwrap();
                let lo = gamma_p(1, 3, p, n - 1).unwrap();
                let pm = BigUint::from(p).pow(n - 1);
                assert_eq!(hi % pm, lo, "p = {p}, N = {n}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let req = GammaRequest::new(1, 3, 7, 4).with_budget(100);
        assert!(matches!(
            gamma_p_request(&req),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn denominator_must_be_unit() {
        assert!(matches!(
            gamma_p(1, 7, 7, 2),
            Err(Error::DenominatorNotUnit { .. })
        ));
    }
}
