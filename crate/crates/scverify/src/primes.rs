//! Prime sieving and residue-class gating for suite orchestration.

use crate::error::{Error, Result};

/// Residue-class predicate gating a check's applicability.
///
/// Every class excludes 2 and 3: the verified statements all carry 1/3 or
/// 1/9 in their closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeClass {
    /// any prime p >= 5
    AnyOddGe5,
    /// p = 1 (mod 3)
    OneMod3,
    /// p = 2 (mod 3)
    TwoMod3,
    /// p = 1 (mod 6)
    OneMod6,
}

impl PrimeClass {
    pub fn contains(self, p: u64) -> bool {
        if p < 5 || p.is_multiple_of(2) || p.is_multiple_of(3) {
            return false;
        }
        match self {
            Self::AnyOddGe5 => true,
            Self::OneMod3 => p % 3 == 1,
            Self::TwoMod3 => p % 3 == 2,
            Self::OneMod6 => p % 6 == 1,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Self::AnyOddGe5 => "p >= 5",
            Self::OneMod3 => "p = 1 (mod 3)",
            Self::TwoMod3 => "p = 2 (mod 3)",
            Self::OneMod6 => "p = 1 (mod 6)",
        }
    }

    /// Error out unless `p` is admissible for this class.
    pub fn require(self, p: u64) -> Result<()> {
        if p < 5 || p.is_multiple_of(2) || p.is_multiple_of(3) {
            return Err(Error::InapplicablePrime {
                prime: p,
                reason: "checks require an odd prime p >= 5, p != 3",
            });
        }
        if !self.contains(p) {
            return Err(Error::WrongResidueClass {
                prime: p,
                required: self.description(),
            });
        }
        Ok(())
    }
}

/// Primes in `[lo, hi]` by a plain Eratosthenes sieve.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let n = hi as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    if n >= 1 {
        sieve[1] = false;
    }
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2)..=hi).filter(|&p| sieve[p as usize]).collect()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let sieved = primes_in(5, 500);
        let divided: Vec<u64> = (5..=500).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, divided);
    }

    #[test]
    fn five_to_fifty() {
        assert_eq!(
            primes_in(5, 50),
            vec![5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
    }

    #[test]
    fn empty_interval() {
        assert!(primes_in(90, 96).is_empty());
        assert!(primes_in(10, 5).is_empty());
    }

    #[test]
    fn class_gating() {
        assert!(PrimeClass::OneMod3.contains(7));
        assert!(!PrimeClass::OneMod3.contains(5));
        assert!(PrimeClass::TwoMod3.contains(5));
        assert!(PrimeClass::OneMod6.contains(13));
        assert!(!PrimeClass::OneMod6.contains(11));
        assert!(!PrimeClass::AnyOddGe5.contains(3));
        assert!(matches!(
            PrimeClass::AnyOddGe5.require(3),
            Err(Error::InapplicablePrime { .. })
        ));
        assert!(matches!(
            PrimeClass::OneMod3.require(5),
            Err(Error::WrongResidueClass { .. })
        ));
    }
}
