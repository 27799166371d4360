//! Truncated hypergeometric-type sums driven by declarative specs.
//!
//! Each [`SumSpec`] describes a sum `sum_k w(k) * T_k * I(k)` where `w` is
//! an affine weight, `T_k` a ratio of Pochhammer factors (bases affine in
//! a free integer parameter, denominators 1 or 3, index `k` or `2k`) and
//! `I(k)` an optional inner prefix weight. Terms accumulate by
//! multiplicative updates, so a sum to `k = N` costs O(N) ring operations.
//!
//! Sums evaluate both exactly over the rationals and in the truncated
//! p-adic ring; agreement of the two routes is a standing test oracle.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::PadicNum;
use crate::primes::PrimeClass;
use crate::rat::{rat_one, rat_zero, Rat};

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`, exactly.
pub fn pochhammer_exact(base: &Rat, k: u64) -> Rat {
    let mut acc = rat_one();
    let mut x = base.clone();
    for _ in 0..k {
        acc *= &x;
        x += Rat::one();
    }
    acc
}

/// Rising factorial of `num/den` in the truncated ring; factors hitting
/// zero collapse the product to the zero element.
pub fn pochhammer_padic(num: i64, den: i64, k: u64, p: u64, precision: u32) -> Result<PadicNum> {
    let mut acc = PadicNum::one(p, precision)?;
    for j in 0..k as i64 {
        let f = PadicNum::from_ratio(
            &BigInt::from(num + j * den),
            &BigInt::from(den),
            p,
            precision,
        )?;
        acc = acc.mul(&f)?;
    }
    Ok(acc)
}

/// The two inner weights appearing in the theorem sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerVariant {
    /// summand `1/(3j)^2 - 1/(3j-2)^2`
    A,
    /// summand `1/(3j)^2 - 1/(3j-4)^2`
    B,
}

impl InnerVariant {
    fn offset(self) -> i64 {
        match self {
            Self::A => 2,
            Self::B => 4,
        }
    }
}

/// Exact `sum_{j=1}^{k}` of the variant's summand.
pub fn inner_weight_exact(k: u64, variant: InnerVariant) -> Rat {
    let mut acc = rat_zero();
    for j in 1..=k as i64 {
        acc += inner_step_exact(j, variant);
    }
    acc
}

fn inner_step_exact(j: i64, variant: InnerVariant) -> Rat {
    let a = 3 * j;
    let b = 3 * j - variant.offset();
    Rat::new(BigInt::one(), BigInt::from(a * a)) - Rat::new(BigInt::one(), BigInt::from(b * b))
}

/// p-adic `sum_{j=1}^{k}`; every `3j` and `3j-2` (resp. `3j-4`) in range
/// must be coprime to p.
pub fn inner_weight_padic(
    k: u64,
    variant: InnerVariant,
    p: u64,
    precision: u32,
) -> Result<PadicNum> {
    let mut acc = PadicNum::zero(p, precision as i64)?;
    for j in 1..=k as i64 {
        acc = acc.add(&inner_step_padic(j, variant, p, precision)?)?;
    }
    Ok(acc)
}

/// Single summand `1/(3j)^2 - 1/(3j-c)^2` of the inner weight, for
/// prefix-incremental callers.
pub fn inner_weight_step_padic(
    j: u64,
    variant: InnerVariant,
    p: u64,
    precision: u32,
) -> Result<PadicNum> {
    inner_step_padic(j as i64, variant, p, precision)
}

fn inner_step_padic(j: i64, variant: InnerVariant, p: u64, precision: u32) -> Result<PadicNum> {
    let a = 3 * j;
    let b = 3 * j - variant.offset();
    for d in [a, b] {
        if d.rem_euclid(p as i64) == 0 {
            return Err(Error::DenominatorNotUnit {
                prime: p,
                denominator: d.into(),
                index: Some(j as u64),
            });
        }
    }
    let fa = PadicNum::from_ratio(&BigInt::one(), &BigInt::from(a * a), p, precision)?;
    let fb = PadicNum::from_ratio(&BigInt::one(), &BigInt::from(b * b), p, precision)?;
    fa.sub(&fb)
}

/// Whether a Pochhammer factor advances by one or two shifts per step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexVar {
    K,
    TwoK,
}

/// One factor `((n_coeff * n) + c_num/c_den)_{index}` raised to `power`.
#[derive(Debug, Clone, Copy)]
pub struct PochFactor {
    pub n_coeff: i64,
    pub c_num: i64,
    pub c_den: i64,
    pub index: IndexVar,
    pub power: u32,
}

const fn factor(n_coeff: i64, c_num: i64, c_den: i64, index: IndexVar, power: u32) -> PochFactor {
    PochFactor {
        n_coeff,
        c_num,
        c_den,
        index,
        power,
    }
}

/// Upper summation bound as a function of the prime or free parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperRule {
    /// `(p - 1) / 3`, requires `p = 1 (mod 3)`
    PrimeMinusOneThird,
    /// `(p + 1) / 3`, requires `p = 2 (mod 3)`
    PrimePlusOneThird,
    /// `p - 1`
    PrimeMinusOne,
    /// the free parameter itself
    FreeN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumId {
    Thm1Lhs,
    Thm2Lhs,
    VanHammeD2Lhs,
    B7Weighted,
    B8Weighted,
    B9Lhs,
    B10Lhs,
    C3InnerWeighted,
    D1InnerWeighted,
}

impl SumId {
    pub fn name(self) -> &'static str {
        match self {
            Self::Thm1Lhs => "THM1_LHS",
            Self::Thm2Lhs => "THM2_LHS",
            Self::VanHammeD2Lhs => "VANHAMME_D2_LHS",
            Self::B7Weighted => "B7_WEIGHTED",
            Self::B8Weighted => "B8_WEIGHTED",
            Self::B9Lhs => "B9_LHS",
            Self::B10Lhs => "B10_LHS",
            Self::C3InnerWeighted => "C3_INNER_WEIGHTED",
            Self::D1InnerWeighted => "D1_INNER_WEIGHTED",
        }
    }

    pub fn all() -> [SumId; 9] {
        [
            Self::Thm1Lhs,
            Self::Thm2Lhs,
            Self::VanHammeD2Lhs,
            Self::B7Weighted,
            Self::B8Weighted,
            Self::B9Lhs,
            Self::B10Lhs,
            Self::C3InnerWeighted,
            Self::D1InnerWeighted,
        ]
    }
}

/// Declarative description of one truncated sum.
#[derive(Debug, Clone)]
pub struct SumSpec {
    pub id: SumId,
    pub class: PrimeClass,
    pub weight_slope: i64,
    pub weight_offset: i64,
    pub numerator: Vec<PochFactor>,
    pub denominator: Vec<PochFactor>,
    pub inner: Option<InnerVariant>,
    pub upper: UpperRule,
}

impl SumSpec {
    /// Resolve the upper summation bound from the prime or free parameter.
    pub fn upper_bound(&self, p_or_n: u64) -> Result<u64> {
        match self.upper {
            UpperRule::PrimeMinusOneThird => {
                if p_or_n % 3 != 1 {
                    return Err(Error::WrongResidueClass {
                        prime: p_or_n,
                        required: "p = 1 (mod 3)",
                    });
                }
                Ok((p_or_n - 1) / 3)
            }
            UpperRule::PrimePlusOneThird => {
                if p_or_n % 3 != 2 {
                    return Err(Error::WrongResidueClass {
                        prime: p_or_n,
                        required: "p = 2 (mod 3)",
                    });
                }
                Ok((p_or_n + 1) / 3)
            }
            UpperRule::PrimeMinusOne => Ok(p_or_n.saturating_sub(1)),
            UpperRule::FreeN => Ok(p_or_n),
        }
    }

    fn weight(&self, k: u64) -> i64 {
        self.weight_slope * k as i64 + self.weight_offset
    }

    /// Multiplicative update `T_k / T_{k-1}` as an integer pair, with the
    /// free parameter fixed at `n`.
    fn step_ratio(&self, n: i64, k: u64) -> (BigInt, BigInt) {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for f in &self.numerator {
            accumulate_factor(f, n, k, &mut num, &mut den);
        }
        for f in &self.denominator {
            accumulate_factor(f, n, k, &mut den, &mut num);
        }
        (num, den)
    }
}

/// Multiply the new linear factors of `f` at step `k` into `into`, and the
/// denominator scale into `scale_into`.
fn accumulate_factor(f: &PochFactor, n: i64, k: u64, into: &mut BigInt, scale_into: &mut BigInt) {
    let shifts: &[i64] = match f.index {
        IndexVar::K => &[k as i64 - 1],
        IndexVar::TwoK => &[2 * (k as i64 - 1), 2 * (k as i64 - 1) + 1],
    };
    for &j in shifts {
        // base + j = (n_coeff*n*c_den + c_num + j*c_den) / c_den
        let a = f.n_coeff as i128 * n as i128 * f.c_den as i128
            + f.c_num as i128
            + j as i128 * f.c_den as i128;
        for _ in 0..f.power {
            *into *= BigInt::from(a);
            *scale_into *= BigInt::from(f.c_den);
        }
    }
}

fn registry() -> &'static [SumSpec] {
    static SPECS: OnceLock<Vec<SumSpec>> = OnceLock::new();
    SPECS.get_or_init(|| {
        use IndexVar::{TwoK, K};
        let thm1_num = vec![factor(0, 1, 3, K, 4), factor(0, 1, 1, TwoK, 1)];
        let thm1_den = vec![factor(0, 1, 1, K, 4), factor(0, 2, 3, TwoK, 1)];
        let thm2_num = vec![factor(0, -1, 3, K, 4), factor(0, 1, 1, TwoK, 1)];
        let thm2_den = vec![factor(0, 1, 1, K, 4), factor(0, -2, 3, TwoK, 1)];
        let b7_num = vec![
            factor(0, 1, 3, K, 2),
            factor(0, 1, 1, TwoK, 1),
            factor(-1, 0, 1, K, 1),
            factor(1, 2, 3, K, 1),
        ];
        let b7_den = vec![
            factor(0, 1, 1, K, 2),
            factor(0, 2, 3, TwoK, 1),
            factor(1, 4, 3, K, 1),
            factor(-1, 2, 3, K, 1),
        ];
        let b8_num = vec![
            factor(0, -1, 3, K, 2),
            factor(0, 1, 1, TwoK, 1),
            factor(-1, 0, 1, K, 1),
            factor(1, -2, 3, K, 1),
        ];
        let b8_den = vec![
            factor(0, 1, 1, K, 2),
            factor(0, -2, 3, TwoK, 1),
            factor(-1, 4, 3, K, 1),
            factor(1, 2, 3, K, 1),
        ];
        vec![
            SumSpec {
                id: SumId::Thm1Lhs,
                class: PrimeClass::OneMod3,
                weight_slope: 6,
                weight_offset: 1,
                numerator: thm1_num.clone(),
                denominator: thm1_den.clone(),
                inner: None,
                upper: UpperRule::PrimeMinusOneThird,
            },
            SumSpec {
                id: SumId::Thm2Lhs,
                class: PrimeClass::TwoMod3,
                weight_slope: 6,
                weight_offset: -1,
                numerator: thm2_num.clone(),
                denominator: thm2_den.clone(),
                inner: None,
                upper: UpperRule::PrimePlusOneThird,
            },
            SumSpec {
                id: SumId::VanHammeD2Lhs,
                class: PrimeClass::AnyOddGe5,
                weight_slope: 6,
                weight_offset: 1,
                numerator: vec![factor(0, 1, 3, K, 6)],
                denominator: vec![factor(0, 1, 1, K, 6)],
                inner: None,
                upper: UpperRule::PrimeMinusOne,
            },
            SumSpec {
                id: SumId::B7Weighted,
                class: PrimeClass::AnyOddGe5,
                weight_slope: 6,
                weight_offset: 1,
                numerator: b7_num.clone(),
                denominator: b7_den.clone(),
                inner: None,
                upper: UpperRule::FreeN,
            },
            SumSpec {
                id: SumId::B8Weighted,
                class: PrimeClass::AnyOddGe5,
                weight_slope: 6,
                weight_offset: -1,
                numerator: b8_num.clone(),
                denominator: b8_den.clone(),
                inner: None,
                upper: UpperRule::FreeN,
            },
            SumSpec {
                id: SumId::B9Lhs,
                class: PrimeClass::AnyOddGe5,
                weight_slope: 6,
                weight_offset: 1,
                numerator: b7_num,
                denominator: b7_den,
                inner: Some(InnerVariant::A),
                upper: UpperRule::FreeN,
            },
            SumSpec {
                id: SumId::B10Lhs,
                class: PrimeClass::AnyOddGe5,
                weight_slope: 6,
                weight_offset: -1,
                numerator: b8_num,
                denominator: b8_den,
                inner: Some(InnerVariant::B),
                upper: UpperRule::FreeN,
            },
            SumSpec {
                id: SumId::C3InnerWeighted,
                class: PrimeClass::OneMod3,
                weight_slope: 6,
                weight_offset: 1,
                numerator: thm1_num,
                denominator: thm1_den,
                inner: Some(InnerVariant::A),
                upper: UpperRule::PrimeMinusOneThird,
            },
            SumSpec {
                id: SumId::D1InnerWeighted,
                class: PrimeClass::TwoMod3,
                weight_slope: 6,
                weight_offset: -1,
                numerator: thm2_num,
                denominator: thm2_den,
                inner: Some(InnerVariant::B),
                upper: UpperRule::PrimePlusOneThird,
            },
        ]
    })
}

/// The registered spec for `id`.
pub fn spec(id: SumId) -> &'static SumSpec {
    registry()
        .iter()
        .find(|s| s.id == id)
        .expect("registry covers every SumId")
}

/// Exact partial sum up to an explicit upper index.
pub fn partial_sum_exact(spec: &SumSpec, n_param: u64, upper: u64) -> Rat {
    let n = n_param as i64;
    let mut term = rat_one();
    let mut inner_acc = rat_zero();
    let mut acc = rat_zero();
    for k in 0..=upper {
        if k > 0 {
            let (num, den) = spec.step_ratio(n, k);
            debug_assert!(!den.is_zero());
            if num.is_zero() {
                term = rat_zero();
            } else {
                term *= Rat::new(num, den);
            }
            if let Some(variant) = spec.inner {
                inner_acc += inner_step_exact(k as i64, variant);
            }
        }
        let mut contribution = Rat::from_integer(BigInt::from(spec.weight(k))) * &term;
        if spec.inner.is_some() {
            contribution *= &inner_acc;
        }
        acc += contribution;
    }
    acc
}

/// Exact sum with the upper bound resolved from the spec's rule.
pub fn truncated_sum_exact(spec: &SumSpec, p_or_n: u64) -> Result<Rat> {
    let upper = spec.upper_bound(p_or_n)?;
    Ok(partial_sum_exact(spec, p_or_n, upper))
}

/// p-adic sum with the upper bound resolved from the spec's rule.
///
/// The spec must be admissible for the ring prime's residue class, and
/// every denominator factor in range must be a unit; violations surface
/// as errors with the offending index.
pub fn truncated_sum_padic(
    spec: &SumSpec,
    p_or_n: u64,
    prime: u64,
    precision: u32,
) -> Result<PadicNum> {
    spec.class.require(prime)?;
    let upper = spec.upper_bound(p_or_n)?;
    if spec.upper != UpperRule::FreeN {
        debug_assert_eq!(p_or_n, prime, "prime-driven sums take p_or_n = p");
    }
    let n = p_or_n as i64;
    let mut term = PadicNum::one(prime, precision)?;
    let mut inner_acc = PadicNum::zero(prime, precision as i64)?;
    let mut acc = PadicNum::zero(prime, precision as i64)?;
    for k in 0..=upper {
        if k > 0 {
            let (num, den) = spec.step_ratio(n, k);
            if den.mod_floor_is_divisible(prime) {
                return Err(Error::DenominatorNotUnit {
                    prime,
                    denominator: den,
                    index: Some(k),
                });
            }
            let ratio = PadicNum::from_ratio(&num, &den, prime, precision)?;
            term = term.mul(&ratio)?;
            if let Some(variant) = spec.inner {
                inner_acc =
                    inner_acc.add(&inner_step_padic(k as i64, variant, prime, precision)?)?;
            }
        }
        let mut contribution =
            PadicNum::from_integer(spec.weight(k), prime, precision)?.mul(&term)?;
        if spec.inner.is_some() {
            contribution = contribution.mul(&inner_acc)?;
        }
        acc = acc.add(&contribution)?;
    }
    Ok(acc)
}

trait DivisibleBy {
    fn mod_floor_is_divisible(&self, p: u64) -> bool;
}

impl DivisibleBy for BigInt {
    fn mod_floor_is_divisible(&self, p: u64) -> bool {
        (self % BigInt::from(p)).is_zero()
    }
}
