//! Exact-rational certification of the symbolic-summation identities.
//!
//! Each identity holds for every positive integer n; certification is
//! pointwise exact evaluation of both sides over a configurable range.
//! The four hypergeometric identities reuse the hyperseries specs in
//! exact mode; the four binomial-harmonic identities are direct sums.

use std::time::Instant;

use num_bigint::BigInt;

use crate::harmonic::{prefix_exact, value_exact, HarmonicFamily};
use crate::hyperseries::{spec, truncated_sum_exact, SumId};
use crate::rat::{binomial, rat, rat_int, rat_to_string, rat_zero, Rat};
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    B7,
    B8,
    B9,
    B10,
    C10,
    C11,
    D1,
    D2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

impl IdentityId {
    pub fn name(self) -> &'static str {
        match self {
            Self::B7 => "B7",
            Self::B8 => "B8",
            Self::B9 => "B9",
            Self::B10 => "B10",
            Self::C10 => "C10",
            Self::C11 => "C11",
            Self::D1 => "D1",
            Self::D2 => "D2",
        }
    }

    pub fn all() -> [IdentityId; 8] {
        [
            Self::B7,
            Self::B8,
            Self::B9,
            Self::B10,
            Self::C10,
            Self::C11,
            Self::D1,
            Self::D2,
        ]
    }

    pub fn parse(s: &str) -> Option<IdentityId> {
        Self::all().into_iter().find(|id| id.name() == s)
    }
}

/// Exact value of the requested side at `n >= 1`.
pub fn identity_eval(id: IdentityId, n: u64, side: Side) -> Rat {
    assert!(n >= 1, "identities are stated for positive n");
    match (id, side) {
        (IdentityId::B7, Side::Lhs) => sum_lhs(SumId::B7Weighted, n),
        (IdentityId::B7, Side::Rhs) => rat_int(3 * n as i64 + 1),
        (IdentityId::B8, Side::Lhs) => sum_lhs(SumId::B8Weighted, n),
        (IdentityId::B8, Side::Rhs) => rat_int(3 * n as i64 - 1),
        (IdentityId::B9, Side::Lhs) => sum_lhs(SumId::B9Lhs, n),
        (IdentityId::B9, Side::Rhs) => b9_rhs(n),
        (IdentityId::B10, Side::Lhs) => sum_lhs(SumId::B10Lhs, n),
        (IdentityId::B10, Side::Rhs) => b10_rhs(n),
        (IdentityId::C10, Side::Lhs) => alternating_binomial_sum(3 * n, n, 0, 2 * n),
        (IdentityId::C10, Side::Rhs) => central(3 * n, n) * (h(n) - h(3 * n)),
        (IdentityId::C11, Side::Lhs) => alternating_binomial_sum(3 * n, 2 * n, 0, n),
        (IdentityId::C11, Side::Rhs) => central(3 * n, n) * (h(2 * n) - h(3 * n)),
        (IdentityId::D1, Side::Lhs) => alternating_binomial_sum(3 * n - 2, n, -1, 2 * n - 1),
        (IdentityId::D1, Side::Rhs) => central(3 * n - 2, n - 1) * (h(n - 1) - h(3 * n - 2)),
        (IdentityId::D2, Side::Lhs) => alternating_binomial_sum(3 * n - 2, 2 * n, -1, n - 1),
        (IdentityId::D2, Side::Rhs) => central(3 * n - 2, n - 1) * (h(2 * n - 1) - h(3 * n - 2)),
    }
}

fn sum_lhs(id: SumId, n: u64) -> Rat {
    truncated_sum_exact(spec(id), n).expect("free-parameter sums accept every n")
}

fn h(n: u64) -> Rat {
    value_exact(HarmonicFamily::H, n, 1)
}

fn central(top: u64, low: u64) -> Rat {
    Rat::from_integer(binomial(top, low))
}

/// `sum_{k=1}^{upper} (-1)^k / k * C(top, base + k + shift)`.
fn alternating_binomial_sum(top: u64, base: u64, shift: i64, upper: u64) -> Rat {
    let mut acc = rat_zero();
    for k in 1..=upper {
        let idx = (base + k) as i64 + shift;
        debug_assert!(idx >= 0);
        let c = binomial(top, idx as u64);
        let sign = if k % 2 == 1 { -1 } else { 1 };
        acc += Rat::new(BigInt::from(sign) * c, BigInt::from(k));
    }
    acc
}

fn b9_rhs(n: u64) -> Rat {
    let ni = n as i64;
    let h1 = prefix_exact(HarmonicFamily::H, 1, n);
    let t1 = prefix_exact(HarmonicFamily::T, 1, n);
    let hn = h1[n as usize].clone();
    let sn = value_exact(HarmonicFamily::S, n, 1);
    let sn2 = value_exact(HarmonicFamily::S, n, 2);

    let mut h_over = rat_zero(); // sum H_k / (3k-1)
    let mut t_over_k = rat_zero(); // sum T_k / k
    let mut t_over = rat_zero(); // sum T_k / (3k-1)
    for k in 1..=n {
        let ki = k as i64;
        h_over += &h1[k as usize] * rat(1, 3 * ki - 1);
        t_over_k += &t1[k as usize] * rat(1, ki);
        t_over += &t1[k as usize] * rat(1, 3 * ki - 1);
    }

    let lead = rat(3 * ni + 1, 3);
    let first = rat_int(-2) * &hn
        + rat_int(3) * &sn2
        + rat_int(6) * &sn
        + rat_int(2) * &hn * &sn
        + rat_int(-3) * &sn * &sn;
    let second = rat_int(2) * h_over + rat_int(2) * t_over_k + rat_int(-6) * t_over;
    -&lead * first + lead * second
}

fn b10_rhs(n: u64) -> Rat {
    let ni = n as i64;
    let h1 = prefix_exact(HarmonicFamily::H, 1, n);
    let s1 = prefix_exact(HarmonicFamily::S, 1, n);
    let hn = h1[n as usize].clone();
    let tn = value_exact(HarmonicFamily::T, n, 1);
    let tn2 = value_exact(HarmonicFamily::T, n, 2);
    let sn_minus = s1[(n - 1) as usize].clone();

    let mut h_over = rat_zero(); // sum_{k=1}^{n} H_k / (3k-2)
    for k in 1..=n {
        h_over += &h1[k as usize] * rat(1, 3 * k as i64 - 2);
    }
    let mut s_over_k = rat_zero(); // sum_{k=1}^{n-1} S_k / k
    let mut s_over = rat_zero(); // sum_{k=1}^{n-1} S_k / (3k-2)
    for k in 1..n {
        s_over_k += &s1[k as usize] * rat(1, k as i64);
        s_over += &s1[k as usize] * rat(1, 3 * k as i64 - 2);
    }

    let lead = rat(3 * ni - 1, 3);
    let pole = rat(
        (3 * ni - 1) * (9 * ni * ni - 8),
        ni * (3 * ni - 2) * (3 * ni - 2),
    );
    let first = -pole + &hn - rat_int(3) * &tn2 + rat_int(3) * &tn * &tn - rat_int(2) * &hn * &tn
        + rat(3 * (3 * ni - 4), 3 * ni - 2) * &tn;
    let second = rat(-2 * (3 * ni - 1), ni) * sn_minus
        + rat_int(2) * h_over
        + rat_int(2) * s_over_k
        + rat_int(-6) * s_over;
    &lead * first + lead * second
}

/// Assert exact equality of both sides for every n in `[lo, hi]`.
///
/// On failure the report carries the first counterexample: its `n` in the
/// `prime` field and both exact values as strings. On success the value
/// fields show the (small) first instance and `prime` is 0. `cap` stands
/// in for the infinite valuation of an identically-zero difference.
pub fn identity_verify(id: IdentityId, lo: u64, hi: u64, cap: i64) -> CheckReport {
    assert!(lo >= 1, "identities are stated for positive n");
    let start = Instant::now();
    let mut pass = true;
    let mut at_n = 0u64;
    let mut lhs = identity_eval(id, lo, Side::Lhs);
    let mut rhs = identity_eval(id, lo, Side::Rhs);
    if lhs != rhs {
        pass = false;
        at_n = lo;
    } else {
        for n in lo + 1..=hi {
            let l = identity_eval(id, n, Side::Lhs);
            let r = identity_eval(id, n, Side::Rhs);
            if l != r {
                pass = false;
                at_n = n;
                lhs = l;
                rhs = r;
                break;
            }
        }
    }
    CheckReport {
        prime: at_n,
        check: id.name().into(),
        exponent: 0,
        lhs: rat_to_string(&lhs),
        rhs: rat_to_string(&rhs),
        diff_valuation: if pass { cap } else { 0 },
        pass,
        elapsed_us: start.elapsed().as_micros() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_fixtures() {
        assert_eq!(identity_eval(IdentityId::B7, 1, Side::Rhs), rat_int(4));
        assert_eq!(identity_eval(IdentityId::B8, 1, Side::Rhs), rat_int(2));
        assert_eq!(identity_eval(IdentityId::B9, 1, Side::Lhs), rat(-8, 3));
        assert_eq!(identity_eval(IdentityId::B9, 1, Side::Rhs), rat(-8, 3));
        assert_eq!(identity_eval(IdentityId::B10, 1, Side::Lhs), rat(-8, 3));
        assert_eq!(identity_eval(IdentityId::B10, 1, Side::Rhs), rat(-8, 3));
    }

    #[test]
    fn binomial_identity_fixtures() {
        assert_eq!(identity_eval(IdentityId::C10, 2, Side::Lhs), rat(-57, 4));
        assert_eq!(identity_eval(IdentityId::C10, 2, Side::Rhs), rat(-57, 4));
        assert_eq!(identity_eval(IdentityId::C11, 2, Side::Lhs), rat(-11, 2));
        assert_eq!(identity_eval(IdentityId::C11, 2, Side::Rhs), rat(-11, 2));
        assert_eq!(identity_eval(IdentityId::D1, 1, Side::Lhs), rat_int(-1));
        assert_eq!(identity_eval(IdentityId::D1, 1, Side::Rhs), rat_int(-1));
        // D2 at n = 1: empty sum on both sides
        assert_eq!(identity_eval(IdentityId::D2, 1, Side::Lhs), rat_zero());
        assert_eq!(identity_eval(IdentityId::D2, 1, Side::Rhs), rat_zero());
    }

    #[test]
    fn verify_small_ranges() {
        for id in IdentityId::all() {
            let rep = identity_verify(id, 1, 12, 8);
            assert!(rep.pass, "{}: {rep:?}", id.name());
            assert_eq!(rep.diff_valuation, 8);
        }
    }

    #[test]
    fn bridge_to_theorem_truncations() {
        // B7 at n=(p-1)/3 and B8 at n=(p+1)/3 evaluate to p exactly
        for p in [7u64, 13, 19] {
            assert_eq!(
                identity_eval(IdentityId::B7, (p - 1) / 3, Side::Lhs),
                rat_int(p as i64)
            );
        }
        for p in [5u64, 11, 17] {
            assert_eq!(
                identity_eval(IdentityId::B8, (p + 1) / 3, Side::Lhs),
                rat_int(p as i64)
            );
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(IdentityId::parse("B9"), Some(IdentityId::B9));
        assert_eq!(IdentityId::parse("D2"), Some(IdentityId::D2));
        assert_eq!(IdentityId::parse("D2c"), None);
    }
}
