//! The check registry: every congruence verified by this crate, keyed by
//! a stable identifier carrying its residue class and modulus exponent.
//!
//! A check evaluates both sides in the truncated p-adic ring and passes
//! iff the valuation of the difference reaches the claimed exponent.
//! Quantified checks sweep their full index range and report the
//! tightest margin (and the first failing index, should one exist).

use std::time::Instant;

use num_bigint::BigUint;

use crate::bernoulli::{b13_lehmer, b13_recurrence};
use crate::error::{Error, Result};
use crate::gamma::{self, GammaRequest};
use crate::harmonic::{self, HarmonicFamily};
use crate::hyperseries::{spec, truncated_sum_padic, SumId};
use crate::padic::PadicNum;
use crate::primes::PrimeClass;
use crate::report::CheckReport;

/// Tuning knobs shared by every check evaluation.
#[derive(Debug, Clone)]
pub struct CheckParams {
    /// Working precision K (significant p-adic digits).
    pub precision: u32,
    /// Cap on Gamma_p product lengths.
    pub gamma_budget: u64,
    /// Largest prime for which the O(p^2) Bernoulli recurrence route runs.
    pub recurrence_cap: u64,
}

impl Default for CheckParams {
    fn default() -> Self {
        Self {
            precision: 8,
            gamma_budget: gamma::DEFAULT_BUDGET,
            recurrence_cap: 2000,
        }
    }
}

/// The lettered congruences of the harmonic-sum and proof sections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[rustfmt::skip]
pub enum LemmaId {
    B1, B2, B3, B4, B5, B6, New1,
    C2, C3, C4, C5, C6, C7, C8, C9, C12, C13, C14, C15,
    D1c, D2c, D3c, D4c, D5c, D6c, D7c, D8c, D9c,
}

impl LemmaId {
    pub fn name(self) -> &'static str {
        match self {
            Self::B1 => "B1",
            Self::B2 => "B2",
            Self::B3 => "B3",
            Self::B4 => "B4",
            Self::B5 => "B5",
            Self::B6 => "B6",
            Self::New1 => "NEW1",
            Self::C2 => "C2",
            Self::C3 => "C3",
            Self::C4 => "C4",
            Self::C5 => "C5",
            Self::C6 => "C6",
            Self::C7 => "C7",
            Self::C8 => "C8",
            Self::C9 => "C9",
            Self::C12 => "C12",
            Self::C13 => "C13",
            Self::C14 => "C14",
            Self::C15 => "C15",
            Self::D1c => "D1c",
            Self::D2c => "D2c",
            Self::D3c => "D3c",
            Self::D4c => "D4c",
            Self::D5c => "D5c",
            Self::D6c => "D6c",
            Self::D7c => "D7c",
            Self::D8c => "D8c",
            Self::D9c => "D9c",
        }
    }

    #[rustfmt::skip]
    pub fn all() -> [LemmaId; 28] {
        [
            Self::B1, Self::B2, Self::B3, Self::B4, Self::B5, Self::B6, Self::New1,
            Self::C2, Self::C3, Self::C4, Self::C5, Self::C6, Self::C7, Self::C8,
            Self::C9, Self::C12, Self::C13, Self::C14, Self::C15,
            Self::D1c, Self::D2c, Self::D3c, Self::D4c, Self::D5c, Self::D6c,
            Self::D7c, Self::D8c, Self::D9c,
        ]
    }

    pub fn class(self) -> PrimeClass {
        use LemmaId::*;
        match self {
            B1 | B2 | New1 => PrimeClass::AnyOddGe5,
            B3 | B4 | C2 | C3 | C4 | C5 | C6 | C7 | C8 | C9 | C12 | C13 | C14 | C15 => {
                PrimeClass::OneMod3
            }
            B5 | B6 | D1c | D2c | D3c | D4c | D5c | D6c | D7c | D8c | D9c => PrimeClass::TwoMod3,
        }
    }

    /// Power of p the congruence is claimed modulo.
    pub fn exponent(self) -> u32 {
        use LemmaId::*;
        match self {
            C2 | C3 | D1c => 4,
            B1 | C4 | C9 | C12 | C13 | C15 | D2c | D6c | D8c | D9c => 2,
            _ => 1,
        }
    }

    /// Class membership plus per-lemma side conditions. The binomial
    /// expansions C12/C13 additionally require n = (p-1)/3 to be even,
    /// which holds for every odd prime p = 1 (mod 3); the gate stays in
    /// place so an inapplicable parameter is skipped rather than failed.
    pub fn applicable(self, p: u64) -> bool {
        if !self.class().contains(p) {
            return false;
        }
        match self {
            Self::C12 | Self::C13 => ((p - 1) / 3).is_multiple_of(2),
            _ => true,
        }
    }
}

/// Registry key for every theorem, lemma and oracle check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    /// truncated sum = p + (p^3/9) B_{p-2}(1/3) (mod p^4)
    Thm1,
    /// truncated sum = p - p^3((1/9) B_{p-2}(1/3) - 2) (mod p^4)
    Thm2,
    /// mod-p^3 view of Thm1's statement
    Conj1,
    /// mod-p^3 view of Thm2's statement
    Conj2,
    /// full sum = -p Gamma_p(1/3)^9 (mod p^4), p = 1 (mod 6)
    VanHammeD2,
    /// the mod-p^6 extension, both residue branches
    LongRama,
    Wolstenholme,
    Reflection,
    Lemma(LemmaId),
}

impl CheckId {
    pub fn name(self) -> &'static str {
        match self {
            Self::Thm1 => "THM1",
            Self::Thm2 => "THM2",
            Self::Conj1 => "CONJ1",
            Self::Conj2 => "CONJ2",
            Self::VanHammeD2 => "VANHAMME_D2",
            Self::LongRama => "LONG_RAMA",
            Self::Wolstenholme => "WOLSTENHOLME",
            Self::Reflection => "REFLECTION",
            Self::Lemma(l) => l.name(),
        }
    }

    pub fn all() -> Vec<CheckId> {
        let mut out = vec![
            Self::Thm1,
            Self::Thm2,
            Self::Conj1,
            Self::Conj2,
            Self::VanHammeD2,
            Self::LongRama,
            Self::Wolstenholme,
            Self::Reflection,
        ];
        out.extend(LemmaId::all().into_iter().map(Self::Lemma));
        out
    }

    pub fn parse(s: &str) -> Option<CheckId> {
        Self::all().into_iter().find(|c| c.name() == s)
    }

    pub fn class(self) -> PrimeClass {
        match self {
            Self::Thm1 | Self::Conj1 => PrimeClass::OneMod3,
            Self::Thm2 | Self::Conj2 => PrimeClass::TwoMod3,
            Self::VanHammeD2 => PrimeClass::OneMod6,
            Self::LongRama | Self::Wolstenholme | Self::Reflection => PrimeClass::AnyOddGe5,
            Self::Lemma(l) => l.class(),
        }
    }

    pub fn exponent(self) -> u32 {
        match self {
            Self::Thm1 | Self::Thm2 | Self::VanHammeD2 => 4,
            Self::Conj1 | Self::Conj2 => 3,
            Self::LongRama => 6,
            Self::Wolstenholme | Self::Reflection => 2,
            Self::Lemma(l) => l.exponent(),
        }
    }

    pub fn applicable(self, p: u64) -> bool {
        match self {
            Self::Lemma(l) => l.applicable(p),
            _ => self.class().contains(p),
        }
    }

    /// Gamma_p product length this check needs at `p`, if it needs one.
    pub fn gamma_cost(self, p: u64) -> Option<u64> {
        use num_traits::ToPrimitive;
        let n = match self {
            Self::VanHammeD2 => 3,
            Self::LongRama => {
                if p % 6 == 1 {
                    5
                } else {
                    2
                }
            }
            _ => return None,
        };
        gamma::representative(1, 3, p, n)
            .ok()
            .map(|m| m.to_u64().unwrap_or(u64::MAX))
    }
}

fn residue_str(x: &PadicNum, e: u32) -> String {
    x.integer_residue(e)
        .map(|r| r.to_string())
        .unwrap_or_else(|| "?".into())
}

fn single_report(
    name: &str,
    p: u64,
    e: u32,
    lhs: &PadicNum,
    rhs: &PadicNum,
    cap: i64,
    start: Instant,
) -> Result<CheckReport> {
    let dv = lhs.diff_valuation(rhs, cap)?;
    Ok(CheckReport {
        prime: p,
        check: name.into(),
        exponent: e,
        lhs: residue_str(lhs, e),
        rhs: residue_str(rhs, e),
        diff_valuation: dv,
        pass: dv >= e as i64,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

fn quantified_report(
    name: &str,
    p: u64,
    e: u32,
    sides: &[(u64, PadicNum, PadicNum)],
    cap: i64,
    start: Instant,
) -> Result<CheckReport> {
    assert!(!sides.is_empty());
    let mut min_dv = i64::MAX;
    let mut at = 0usize;
    let mut first_fail: Option<usize> = None;
    for (i, (_, lhs, rhs)) in sides.iter().enumerate() {
        let dv = lhs.diff_valuation(rhs, cap)?;
        if dv < min_dv {
            min_dv = dv;
            at = i;
        }
        if dv < e as i64 && first_fail.is_none() {
            first_fail = Some(i);
        }
    }
    let idx = first_fail.unwrap_or(at);
    let (_, lhs, rhs) = &sides[idx];
    Ok(CheckReport {
        prime: p,
        check: name.into(),
        exponent: e,
        lhs: residue_str(lhs, e),
        rhs: residue_str(rhs, e),
        diff_valuation: min_dv,
        pass: min_dv >= e as i64,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

/// Per-check evaluation context with small constructors.
struct Ctx {
    p: u64,
    prec: u32,
}

impl Ctx {
    fn int(&self, x: i64) -> Result<PadicNum> {
        PadicNum::from_integer(x, self.p, self.prec)
    }

    fn ratio(&self, num: i64, den: i64) -> Result<PadicNum> {
        PadicNum::from_ratio(&num.into(), &den.into(), self.p, self.prec)
    }

    fn zero(&self) -> Result<PadicNum> {
        PadicNum::zero(self.p, self.prec as i64)
    }

    fn table(&self, family: HarmonicFamily, r: u32, upto: u64) -> Result<Vec<PadicNum>> {
        harmonic::prefix_padic(family, r, upto, self.p, self.prec)
    }

    fn weighted_sum(&self, id: SumId) -> Result<PadicNum> {
        truncated_sum_padic(spec(id), self.p, self.p, self.prec)
    }

    /// Bernoulli residue B_{p-2}(1/3) mod p, injected at one digit.
    fn bern_lehmer(&self) -> Result<PadicNum> {
        let b = b13_lehmer(self.p)?;
        PadicNum::from_unit_residue(&BigUint::from(b), self.p, 1)
    }

    /// Same quantity through the independent recurrence route.
    fn bern_recurrence(&self) -> Result<PadicNum> {
        let b = b13_recurrence(self.p)?;
        PadicNum::from_unit_residue(&BigUint::from(b), self.p, 1)
    }

    /// `sum_{k=lo..=hi} table[idx(k)] / den(k)`.
    fn sum_quotients(
        &self,
        table: &[PadicNum],
        lo: u64,
        hi: u64,
        idx: impl Fn(u64) -> u64,
        den: impl Fn(u64) -> i64,
    ) -> Result<PadicNum> {
        let mut acc = self.zero()?;
        for k in lo..=hi {
            let term = table[idx(k) as usize].mul(&self.ratio(1, den(k))?)?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// Theorem checks at their native exponent 4.
pub fn check_theorem(id: CheckId, p: u64) -> Result<CheckReport> {
    check_theorem_at(id, p, 4, &CheckParams::default())
}

/// Theorem checks at a caller-chosen exponent.
///
/// The Bernoulli residue on the right-hand side is known only mod p and
/// multiplies p^3, so the statement is determined mod p^4 at best;
/// larger exponents are rejected.
pub fn check_theorem_at(
    id: CheckId,
    p: u64,
    exponent: u32,
    params: &CheckParams,
) -> Result<CheckReport> {
    if exponent > 4 {
        return Err(Error::ConfigInvalid(format!(
            "theorem right-hand sides are determined mod p^4 only (requested exponent {exponent})"
        )));
    }
    if params.precision < exponent + 2 {
        return Err(Error::ConfigInvalid(format!(
            "precision {} is too low for exponent {exponent}",
            params.precision
        )));
    }
    let start = Instant::now();
    id.class().require(p)?;
    let ctx = Ctx {
        p,
        prec: params.precision,
    };
    let cap = params.precision as i64;
    let (sum_id, rhs) = match id {
        CheckId::Thm1 => {
            // p + (p^3/9) B
            let corr = ctx.ratio(1, 9)?.mul(&ctx.bern_lehmer()?)?.scale_pow_p(3);
            (SumId::Thm1Lhs, ctx.int(p as i64)?.add(&corr)?)
        }
        CheckId::Thm2 => {
            // p - p^3 ((1/9) B - 2)
            let corr = ctx
                .ratio(1, 9)?
                .mul(&ctx.bern_lehmer()?)?
                .sub(&ctx.int(2)?)?
                .scale_pow_p(3);
            (SumId::Thm2Lhs, ctx.int(p as i64)?.sub(&corr)?)
        }
        _ => {
            return Err(Error::ConfigInvalid(format!(
                "{} is not a theorem check",
                id.name()
            )))
        }
    };
    let lhs = ctx.weighted_sum(sum_id)?;
    single_report(id.name(), p, exponent, &lhs, &rhs, cap, start)
}

/// `v_p(LHS - p)` capped at the working precision, together with whether
/// the theorem's mod-p correction term is nonzero (in which case the
/// valuation must be exactly 3, certifying the extension is sharp).
pub fn theorem_sharpness(id: CheckId, p: u64, params: &CheckParams) -> Result<(i64, bool)> {
    id.class().require(p)?;
    let ctx = Ctx {
        p,
        prec: params.precision,
    };
    let (sum_id, correction) = match id {
        CheckId::Thm1 => (SumId::Thm1Lhs, ctx.ratio(1, 9)?.mul(&ctx.bern_lehmer()?)?),
        CheckId::Thm2 => (
            SumId::Thm2Lhs,
            ctx.ratio(1, 9)?
                .mul(&ctx.bern_lehmer()?)?
                .sub(&ctx.int(2)?)?,
        ),
        _ => {
            return Err(Error::ConfigInvalid(format!(
                "{} has no sharpness statement",
                id.name()
            )))
        }
    };
    let lhs = ctx.weighted_sum(sum_id)?;
    let v = lhs.diff_valuation(&ctx.int(p as i64)?, params.precision as i64)?;
    Ok((v, !correction.is_zero()))
}

/// Conjecture views: the same truncated sums congruent to p mod p^3.
pub fn check_conjecture(id: CheckId, p: u64, params: &CheckParams) -> Result<CheckReport> {
    let start = Instant::now();
    id.class().require(p)?;
    let ctx = Ctx {
        p,
        prec: params.precision,
    };
    let sum_id = match id {
        CheckId::Conj1 => SumId::Thm1Lhs,
        CheckId::Conj2 => SumId::Thm2Lhs,
        _ => {
            return Err(Error::ConfigInvalid(format!(
                "{} is not a conjecture view",
                id.name()
            )))
        }
    };
    let lhs = ctx.weighted_sum(sum_id)?;
    let rhs = ctx.int(p as i64)?;
    single_report(id.name(), p, 3, &lhs, &rhs, params.precision as i64, start)
}

/// Van Hamme (D.2) and its mod-p^6 extension. The Gamma_p factor is
/// computed at the precision actually needed: the prefactor's power of p
/// makes up the rest of the claimed exponent.
pub fn check_gamma_congruence(id: CheckId, p: u64, params: &CheckParams) -> Result<CheckReport> {
    let start = Instant::now();
    id.class().require(p)?;
    let ctx = Ctx {
        p,
        prec: params.precision,
    };
    let lhs = truncated_sum_padic(spec(SumId::VanHammeD2Lhs), p, p, params.precision)?;
    let (e, rhs) = match id {
        CheckId::VanHammeD2 => {
            let g = gamma_value(p, 3, params.gamma_budget)?;
            // -p * Gamma^9
            (4u32, g.pow(9)?.scale_pow_p(1).neg())
        }
        CheckId::LongRama => {
            if p % 6 == 1 {
                let g = gamma_value(p, 5, params.gamma_budget)?;
                (6, g.pow(9)?.scale_pow_p(1).neg())
            } else {
                // -(10/27) p^4 Gamma^9
                let g = gamma_value(p, 2, params.gamma_budget)?;
                let lead = ctx.ratio(10, 27)?.neg().scale_pow_p(4);
                (6, lead.mul(&g.pow(9)?)?)
            }
        }
        _ => {
            return Err(Error::ConfigInvalid(format!(
                "{} is not a Gamma_p-based check",
                id.name()
            )))
        }
    };
    single_report(id.name(), p, e, &lhs, &rhs, params.precision as i64, start)
}

fn gamma_value(p: u64, n: u32, budget: u64) -> Result<PadicNum> {
    let g = gamma::gamma_p_request(&GammaRequest::new(1, 3, p, n).with_budget(budget))?;
    PadicNum::from_unit_residue(&g, p, n)
}

/// Evaluate one lettered congruence from the registry.
pub fn check_lemma(id: LemmaId, p: u64) -> Result<CheckReport> {
    check_lemma_with(id, p, &CheckParams::default())
}

pub fn check_lemma_with(id: LemmaId, p: u64, params: &CheckParams) -> Result<CheckReport> {
    use HarmonicFamily::{H, S, T};
    let start = Instant::now();
    id.class().require(p)?;
    if matches!(id, LemmaId::C12 | LemmaId::C13) && !id.applicable(p) {
        return Err(Error::InapplicablePrime {
            prime: p,
            reason: "binomial expansion requires an even n = (p-1)/3",
        });
    }
    if matches!(id, LemmaId::New1) && p > params.recurrence_cap {
        return Err(Error::BudgetExceeded {
            required: p,
            budget: params.recurrence_cap,
        });
    }
    let ctx = Ctx {
        p,
        prec: params.precision,
    };
    let cap = params.precision as i64;
    let e = id.exponent();
    let name = id.name();
    let pi = p as i64;

    match id {
        // reflection congruences, quantified over 1 <= k <= p-1
        LemmaId::B1 => {
            let h1 = ctx.table(H, 1, p - 1)?;
            let h2 = ctx.table(H, 2, p - 1)?;
            let mut sides = Vec::with_capacity((p - 1) as usize);
            for k in 1..p {
                let (i, j) = (k as usize, (p - 1 - k) as usize);
                let lhs = h1[j].sub(&h1[i])?;
                let rhs = h2[i].scale_pow_p(1);
                sides.push((k, lhs, rhs));
            }
            quantified_report(name, p, e, &sides, cap, start)
        }
        LemmaId::B2 => {
            let h2 = ctx.table(H, 2, p - 1)?;
            let mut sides = Vec::with_capacity((p - 1) as usize);
            for k in 1..p {
                let (i, j) = (k as usize, (p - 1 - k) as usize);
                sides.push((k, h2[j].add(&h2[i])?, ctx.zero()?));
            }
            quantified_report(name, p, e, &sides, cap, start)
        }
        // S_n = 0 and S_n^(2) = -(1/9) B (mod p), n = (p-1)/3
        LemmaId::B3 | LemmaId::B4 => {
            let n = (p - 1) / 3;
            if id == LemmaId::B3 {
                let lhs = harmonic::value_padic(S, n, 1, p, ctx.prec)?;
                single_report(name, p, e, &lhs, &ctx.zero()?, cap, start)
            } else {
                let s2 = harmonic::value_padic(S, n, 2, p, ctx.prec)?;
                let lhs = s2.add(&ctx.ratio(1, 9)?.mul(&ctx.bern_lehmer()?)?)?;
                single_report(name, p, e, &lhs, &ctx.zero()?, cap, start)
            }
        }
        // T_n = 0 and T_n^(2) = (1/9) B (mod p), n = (p+1)/3
        LemmaId::B5 | LemmaId::B6 => {
            let n = (p + 1) / 3;
            if id == LemmaId::B5 {
                let lhs = harmonic::value_padic(T, n, 1, p, ctx.prec)?;
                single_report(name, p, e, &lhs, &ctx.zero()?, cap, start)
            } else {
                let t2 = harmonic::value_padic(T, n, 2, p, ctx.prec)?;
                let lhs = t2.sub(&ctx.ratio(1, 9)?.mul(&ctx.bern_lehmer()?)?)?;
                single_report(name, p, e, &lhs, &ctx.zero()?, cap, start)
            }
        }
        // Lehmer: H_{floor(p/3)}^(2) = (1/2)(-3/p) B (mod p); the right
        // side uses the independent recurrence route for B
        LemmaId::New1 => {
            let lhs = harmonic::value_padic(H, p / 3, 2, p, ctx.prec)?;
            let leg = crate::padic::legendre_symbol(-3, p) as i64;
            let rhs = ctx.ratio(leg, 2)?.mul(&ctx.bern_recurrence()?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // shifted-Pochhammer product expansion, quantified over 0 <= k <= n
        LemmaId::C2 => {
            let n = (p - 1) / 3;
            let one = PadicNum::one(p, ctx.prec)?;
            let mut lhs = one.clone();
            let mut ratio_sq = one.clone();
            let mut inner = ctx.zero()?;
            let mut sides = Vec::with_capacity(n as usize + 1);
            sides.push((0, lhs.clone(), one.clone()));
            for k in 1..=n {
                let ki = k as i64;
                let a = (3 * ki - 2) * (3 * ki - 2) - pi * pi;
                let b = (3 * ki) * (3 * ki) - pi * pi;
                lhs = lhs.mul(&ctx.ratio(a, b)?)?;
                ratio_sq = ratio_sq.mul(&ctx.ratio((3 * ki - 2) * (3 * ki - 2), 9 * ki * ki)?)?;
                let step = crate::hyperseries::inner_weight_step_padic(
                    k,
                    crate::hyperseries::InnerVariant::A,
                    p,
                    ctx.prec,
                )?;
                inner = inner.add(&step)?;
                let rhs = ratio_sq.mul(&one.add(&inner.scale_pow_p(2))?)?;
                sides.push((k, lhs.clone(), rhs));
            }
            quantified_report(name, p, e, &sides, cap, start)
        }
        // theorem sum = p - p^2 * weighted sum (mod p^4)
        LemmaId::C3 | LemmaId::D1c => {
            let (main, weighted) = if id == LemmaId::C3 {
                (SumId::Thm1Lhs, SumId::C3InnerWeighted)
            } else {
                (SumId::Thm2Lhs, SumId::D1InnerWeighted)
            };
            let lhs = ctx.weighted_sum(main)?;
            let rhs = ctx
                .int(pi)?
                .sub(&ctx.weighted_sum(weighted)?.scale_pow_p(2))?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // weighted sum against the harmonic combination (mod p^2)
        LemmaId::C4 => {
            let n = (p - 1) / 3;
            let h1 = ctx.table(H, 1, n)?;
            let t1 = ctx.table(T, 1, n)?;
            let s2n = harmonic::value_padic(S, n, 2, p, ctx.prec)?;
            let sum_h = ctx.sum_quotients(&h1, 1, n, |k| k, |k| 3 * k as i64 - 1)?;
            let sum_tk = ctx.sum_quotients(&t1, 1, n, |k| k, |k| k as i64)?;
            let sum_t = ctx.sum_quotients(&t1, 1, n, |k| k, |k| 3 * k as i64 - 1)?;
            let mut bracket = sum_h.mul(&ctx.int(2)?)?;
            bracket = bracket.add(&sum_tk.mul(&ctx.int(2)?)?)?;
            bracket = bracket.sub(&sum_t.mul(&ctx.int(6)?)?)?;
            bracket = bracket.add(&h1[n as usize].mul(&ctx.int(2)?)?)?;
            bracket = bracket.sub(&s2n.mul(&ctx.int(3)?)?)?;
            let rhs = ctx.ratio(pi, 3)?.mul(&bracket)?;
            let lhs = ctx.weighted_sum(SumId::C3InnerWeighted)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // sum H_k/(3k-1) = H_n^2/3 - H_n - (1/3) sum H_{n+k}/k (mod p)
        LemmaId::C5 => {
            let n = (p - 1) / 3;
            let h1 = ctx.table(H, 1, 2 * n)?;
            let lhs = ctx.sum_quotients(&h1, 1, n, |k| k, |k| 3 * k as i64 - 1)?;
            let tail = ctx.sum_quotients(&h1, 1, n, |k| n + k, |k| k as i64)?;
            let hn = &h1[n as usize];
            let rhs = hn
                .mul(hn)?
                .mul(&ctx.ratio(1, 3)?)?
                .sub(hn)?
                .sub(&tail.mul(&ctx.ratio(1, 3)?)?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // T_k = (1/3)(H_{2n+k} - H_{2n}) (mod p), quantified over k
        LemmaId::C6 => {
            let n = (p - 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n)?;
            let t1 = ctx.table(T, 1, n)?;
            let third = ctx.ratio(1, 3)?;
            let mut sides = Vec::with_capacity(n as usize);
            for k in 1..=n {
                let rhs = h1[(2 * n + k) as usize]
                    .sub(&h1[(2 * n) as usize])?
                    .mul(&third)?;
                sides.push((k, t1[k as usize].clone(), rhs));
            }
            quantified_report(name, p, e, &sides, cap, start)
        }
        // sum T_k/k = (1/3) sum H_{2n+k}/k - H_n^2/3 (mod p)
        LemmaId::C7 => {
            let n = (p - 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n)?;
            let t1 = ctx.table(T, 1, n)?;
            let lhs = ctx.sum_quotients(&t1, 1, n, |k| k, |k| k as i64)?;
            let tail = ctx.sum_quotients(&h1, 1, n, |k| 2 * n + k, |k| k as i64)?;
            let hn = &h1[n as usize];
            let rhs = tail
                .mul(&ctx.ratio(1, 3)?)?
                .sub(&hn.mul(hn)?.mul(&ctx.ratio(1, 3)?)?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // sum T_k/(3k-1) = (1/9) sum_{k=n+1}^{2n} H_{n+k}/k (mod p)
        LemmaId::C8 => {
            let n = (p - 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n)?;
            let t1 = ctx.table(T, 1, n)?;
            let lhs = ctx.sum_quotients(&t1, 1, n, |k| k, |k| 3 * k as i64 - 1)?;
            let rhs = ctx
                .sum_quotients(&h1, n + 1, 2 * n, |k| n + k, |k| k as i64)?
                .mul(&ctx.ratio(1, 9)?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // weighted sum = (2p/9)(sum H_{2n+k}/k - sum H_{n+k}/k - (9/2) S_n^(2))
        LemmaId::C9 => {
            let n = (p - 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n)?;
            let s2n = harmonic::value_padic(S, n, 2, p, ctx.prec)?;
            let a = ctx.sum_quotients(&h1, 1, n, |k| 2 * n + k, |k| k as i64)?;
            let b = ctx.sum_quotients(&h1, 1, 2 * n, |k| n + k, |k| k as i64)?;
            let bracket = a.sub(&b)?.sub(&s2n.mul(&ctx.ratio(9, 2)?)?)?;
            let rhs = ctx.ratio(2 * pi, 9)?.mul(&bracket)?;
            let lhs = ctx.weighted_sum(SumId::C3InnerWeighted)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // binomial rows against (-1)^k (1 - p H) (mod p^2), quantified
        LemmaId::C12 | LemmaId::C13 => {
            let n = (p - 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n)?;
            let one = PadicNum::one(p, ctx.prec)?;
            let (base, upper) = if id == LemmaId::C12 {
                (n, 2 * n)
            } else {
                (2 * n, n)
            };
            // C(3n, base + k) built incrementally from C(3n, base)
            let mut binom = one.clone();
            for m in 0..base {
                binom = binom.mul(&ctx.ratio(3 * n as i64 - m as i64, m as i64 + 1)?)?;
            }
            let mut sides = Vec::with_capacity(upper as usize + 1);
            for k in 0..=upper {
                let m = base + k;
                let h = &h1[m as usize];
                let mut rhs = one.sub(&h.scale_pow_p(1))?;
                if k % 2 == 1 {
                    rhs = rhs.neg();
                }
                sides.push((k, binom.clone(), rhs));
                if k < upper {
                    binom = binom.mul(&ctx.ratio(3 * n as i64 - m as i64, m as i64 + 1)?)?;
                }
            }
            quantified_report(name, p, e, &sides, cap, start)
        }
        // sum H_{n+k}/k - sum H_{2n+k}/k = 2 H_n^(2) (mod p)
        LemmaId::C14 => {
            let n = (p - 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n)?;
            let h2n = harmonic::value_padic(H, n, 2, p, ctx.prec)?;
            let a = ctx.sum_quotients(&h1, 1, 2 * n, |k| n + k, |k| k as i64)?;
            let b = ctx.sum_quotients(&h1, 1, n, |k| 2 * n + k, |k| k as i64)?;
            let lhs = a.sub(&b)?;
            let rhs = h2n.mul(&ctx.int(2)?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // weighted sum = -(p/9) B (mod p^2)
        LemmaId::C15 => {
            let lhs = ctx.weighted_sum(SumId::C3InnerWeighted)?;
            let rhs = ctx.ratio(-pi, 9)?.mul(&ctx.bern_lehmer()?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // weighted sum against the section-4 harmonic combination (mod p^2)
        LemmaId::D2c => {
            let n = (p + 1) / 3;
            let h1 = ctx.table(H, 1, n)?;
            let s1 = ctx.table(S, 1, n - 1)?;
            let t2n = harmonic::value_padic(T, n, 2, p, ctx.prec)?;
            let sum_h = ctx.sum_quotients(&h1, 1, n, |k| k, |k| 3 * k as i64 - 2)?;
            let (sum_sk, sum_s) = if n >= 2 {
                (
                    ctx.sum_quotients(&s1, 1, n - 1, |k| k, |k| k as i64)?,
                    ctx.sum_quotients(&s1, 1, n - 1, |k| k, |k| 3 * k as i64 - 2)?,
                )
            } else {
                (ctx.zero()?, ctx.zero()?)
            };
            let mut bracket = h1[n as usize].clone();
            bracket = bracket.sub(&t2n.mul(&ctx.int(3)?)?)?;
            bracket = bracket.add(&sum_h.mul(&ctx.int(2)?)?)?;
            bracket = bracket.add(&sum_sk.mul(&ctx.int(2)?)?)?;
            bracket = bracket.sub(&sum_s.mul(&ctx.int(6)?)?)?;
            let rhs = ctx.ratio(pi, 3)?.mul(&bracket)?;
            let lhs = ctx.weighted_sum(SumId::D1InnerWeighted)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // sum H_k/(3k-2) = -(1/3) sum_{k=n}^{2n-1} H_{n+k-1}/k - H_n/2
        LemmaId::D3c => {
            let n = (p + 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n - 2)?;
            let lhs = ctx.sum_quotients(&h1, 1, n, |k| k, |k| 3 * k as i64 - 2)?;
            let tail = ctx.sum_quotients(&h1, n, 2 * n - 1, |k| n + k - 1, |k| k as i64)?;
            let rhs = tail
                .mul(&ctx.ratio(-1, 3)?)?
                .sub(&h1[n as usize].mul(&ctx.ratio(1, 2)?)?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // sum S_k/k = -(1/3) H_{n-1}^2 + (1/3) sum H_{2n+k-1}/k (mod p)
        LemmaId::D4c => {
            let n = (p + 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n - 2)?;
            let s1 = ctx.table(S, 1, n - 1)?;
            let lhs = if n >= 2 {
                ctx.sum_quotients(&s1, 1, n - 1, |k| k, |k| k as i64)?
            } else {
                ctx.zero()?
            };
            let tail = if n >= 2 {
                ctx.sum_quotients(&h1, 1, n - 1, |k| 2 * n + k - 1, |k| k as i64)?
            } else {
                ctx.zero()?
            };
            let hm = &h1[(n - 1) as usize];
            let rhs = tail
                .mul(&ctx.ratio(1, 3)?)?
                .sub(&hm.mul(hm)?.mul(&ctx.ratio(1, 3)?)?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // sum S_k/(3k-2) = (1/9) sum H_{n+k-1}/k - H_n H_{n-1}/9 + H_n/3
        LemmaId::D5c => {
            let n = (p + 1) / 3;
            let h1 = ctx.table(H, 1, 2 * n)?;
            let s1 = ctx.table(S, 1, n - 1)?;
            let lhs = if n >= 2 {
                ctx.sum_quotients(&s1, 1, n - 1, |k| k, |k| 3 * k as i64 - 2)?
            } else {
                ctx.zero()?
            };
            let tail = if n >= 2 {
                ctx.sum_quotients(&h1, 1, n - 1, |k| n + k - 1, |k| k as i64)?
            } else {
                ctx.zero()?
            };
            let hn = &h1[n as usize];
            let hm = &h1[(n - 1) as usize];
            let rhs = tail
                .mul(&ctx.ratio(1, 9)?)?
                .sub(&hn.mul(hm)?.mul(&ctx.ratio(1, 9)?)?)?
                .add(&hn.mul(&ctx.ratio(1, 3)?)?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // weighted sum = (2p/9)(...) (mod p^2)
        LemmaId::D6c => {
            let n = (p + 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n - 2)?;
            let t2n = harmonic::value_padic(T, n, 2, p, ctx.prec)?;
            let a = if n >= 2 {
                ctx.sum_quotients(&h1, 1, n - 1, |k| 2 * n + k - 1, |k| k as i64)?
            } else {
                ctx.zero()?
            };
            let b = ctx.sum_quotients(&h1, 1, 2 * n - 1, |k| n + k - 1, |k| k as i64)?;
            let hn = &h1[n as usize];
            let hm = &h1[(n - 1) as usize];
            let mut bracket = a.sub(&b)?;
            bracket = bracket.add(&hn.mul(hm)?)?;
            bracket = bracket.sub(&hn.mul(&ctx.int(3)?)?)?;
            bracket = bracket.sub(&hm.mul(hm)?)?;
            bracket = bracket.sub(&t2n.mul(&ctx.ratio(9, 2)?)?)?;
            let rhs = ctx.ratio(2 * pi, 9)?.mul(&bracket)?;
            let lhs = ctx.weighted_sum(SumId::D1InnerWeighted)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // sum H_{2n+k-1}/k - sum H_{n+k-1}/k = -2 H_{n-1}^(2) (mod p)
        LemmaId::D7c => {
            let n = (p + 1) / 3;
            let h1 = ctx.table(H, 1, 3 * n - 2)?;
            let h2m = harmonic::value_padic(H, n - 1, 2, p, ctx.prec)?;
            let a = if n >= 2 {
                ctx.sum_quotients(&h1, 1, n - 1, |k| 2 * n + k - 1, |k| k as i64)?
            } else {
                ctx.zero()?
            };
            let b = ctx.sum_quotients(&h1, 1, 2 * n - 1, |k| n + k - 1, |k| k as i64)?;
            let lhs = a.sub(&b)?;
            let rhs = h2m.mul(&ctx.int(-2)?)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // weighted sum = (p/3)(-3T^(2) - 4/3 H_{n-1}^(2) + 2/3 H_n H_{n-1}
        //                - 2H_n - 2/3 H_{n-1}^2) (mod p^2)
        LemmaId::D8c => {
            let n = (p + 1) / 3;
            let h1 = ctx.table(H, 1, n)?;
            let h2m = harmonic::value_padic(H, n - 1, 2, p, ctx.prec)?;
            let t2n = harmonic::value_padic(T, n, 2, p, ctx.prec)?;
            let hn = &h1[n as usize];
            let hm = &h1[(n - 1) as usize];
            let mut bracket = t2n.mul(&ctx.int(-3)?)?;
            bracket = bracket.sub(&h2m.mul(&ctx.ratio(4, 3)?)?)?;
            bracket = bracket.add(&hn.mul(hm)?.mul(&ctx.ratio(2, 3)?)?)?;
            bracket = bracket.sub(&hn.mul(&ctx.int(2)?)?)?;
            bracket = bracket.sub(&hm.mul(hm)?.mul(&ctx.ratio(2, 3)?)?)?;
            let rhs = ctx.ratio(pi, 3)?.mul(&bracket)?;
            let lhs = ctx.weighted_sum(SumId::D1InnerWeighted)?;
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
        // weighted sum = p((1/9) B - 2) (mod p^2)
        LemmaId::D9c => {
            let lhs = ctx.weighted_sum(SumId::D1InnerWeighted)?;
            let rhs = ctx
                .ratio(1, 9)?
                .mul(&ctx.bern_lehmer()?)?
                .sub(&ctx.int(2)?)?
                .scale_pow_p(1);
            single_report(name, p, e, &lhs, &rhs, cap, start)
        }
    }
}

/// Dispatch any registry check.
pub fn run_check(id: CheckId, p: u64, params: &CheckParams) -> Result<CheckReport> {
    match id {
        CheckId::Thm1 | CheckId::Thm2 => check_theorem_at(id, p, 4, params),
        CheckId::Conj1 | CheckId::Conj2 => check_conjecture(id, p, params),
        CheckId::VanHammeD2 | CheckId::LongRama => check_gamma_congruence(id, p, params),
        CheckId::Wolstenholme => {
            id.class().require(p)?;
            harmonic::wolstenholme_check(p)
        }
        CheckId::Reflection => {
            id.class().require(p)?;
            harmonic::reflection_check(p)
        }
        CheckId::Lemma(l) => check_lemma_with(l, p, params),
    }
}
