//! Acceptance suite: every criterion the artifact must meet, one test
//! per criterion, each printing a verdict line. Run with
//!
//!     cargo test --test acceptance -- --nocapture
//!
//! All tolerances are exact: a congruence mod p^e passes only when the
//! difference valuation reaches e, and identity checks demand equality
//! of arbitrary-precision rationals.

use num_bigint::BigUint;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use scverify::bernoulli::{b13_lehmer, b13_recurrence};
use scverify::checks::{
    check_gamma_congruence, check_theorem, theorem_sharpness, CheckId, CheckParams, LemmaId,
};
use scverify::gamma::{gamma_p, gamma_reflection_check, DEFAULT_BUDGET};
use scverify::harmonic;
use scverify::hyperseries::{
    pochhammer_exact, spec, truncated_sum_exact, truncated_sum_padic, SumId, UpperRule,
};
use scverify::identities::{identity_eval, IdentityId, Side};
use scverify::padic::{mod_inverse_u64, rat_valuation, PadicNum};
use scverify::primes::primes_in;
use scverify::rat::{rat, rat_int, Rat};
use scverify::suite::{parse_selectors, run_suite, SuiteConfig};

fn verdict(n: u32, desc: &str) {
    println!("criterion {n:02} ({desc}): PASS");
}

fn params() -> CheckParams {
    CheckParams {
        precision: 8,
        gamma_budget: 2_000_000,
        recurrence_cap: 2000,
    }
}

#[test]
fn acceptance_01_theorem_one_full_range() {
    let primes: Vec<u64> = primes_in(7, 1000)
        .into_iter()
        .filter(|p| p % 3 == 1)
        .collect();
    assert!(!primes.is_empty());
    for &p in &primes {
        let rep = check_theorem(CheckId::Thm1, p).unwrap();
        assert!(rep.pass, "THM1 failed at p = {p}: {rep:?}");
        assert!(rep.diff_valuation >= 4);
        assert_eq!(rep.lhs, rep.rhs, "residues differ mod p^4 at p = {p}");
    }
    verdict(
        1,
        &format!(
            "THM1 mod p^4 for all {} primes = 1 (3) in [7,1000]",
            primes.len()
        ),
    );
}

#[test]
fn acceptance_02_theorem_two_full_range() {
    let primes: Vec<u64> = primes_in(5, 1000)
        .into_iter()
        .filter(|p| p % 3 == 2)
        .collect();
    assert!(!primes.is_empty());
    for &p in &primes {
        let rep = check_theorem(CheckId::Thm2, p).unwrap();
        assert!(rep.pass, "THM2 failed at p = {p}: {rep:?}");
        assert!(rep.diff_valuation >= 4);
    }
    verdict(
        2,
        &format!(
            "THM2 mod p^4 for all {} primes = 2 (3) in [5,1000]",
            primes.len()
        ),
    );
}

#[test]
fn acceptance_03_hand_verified_fixtures() {
    // exact truncated sums, re-derived through the rational oracle
    let lhs7 = truncated_sum_exact(spec(SumId::Thm1Lhs), 7).unwrap();
    assert_eq!(lhs7, rat(364, 297));
    let lhs5 = truncated_sum_exact(spec(SumId::Thm2Lhs), 5).unwrap();
    assert_eq!(lhs5, rat(-305, 189));

    // difference valuation exactly 4 at p = 5, against the exact
    // Bernoulli value B_3(1/3) = 1/27
    let rhs5 = rat_int(5) - rat_int(125) * (rat(1, 9) * rat(1, 27) - rat_int(2));
    let diff = &lhs5 - &rhs5;
    assert_eq!(rat_valuation(&diff, 5), Some(4));

    // and the p-adic route agrees with both
    let rep7 = check_theorem(CheckId::Thm1, 7).unwrap();
    assert_eq!(rep7.lhs, "1036");
    let rep5 = check_theorem(CheckId::Thm2, 5).unwrap();
    assert_eq!(rep5.diff_valuation, 4);
    verdict(
        3,
        "fixtures: THM1(7) = 364/297, THM2(5) = -305/189, v_5(diff) = 4",
    );
}

#[test]
fn acceptance_04_sharpness_of_the_extension() {
    let p = params();
    let mut vanishing = Vec::new();
    for q in primes_in(7, 1000).into_iter().filter(|q| q % 3 == 1) {
        let (v, correction_nonzero) = theorem_sharpness(CheckId::Thm1, q, &p).unwrap();
        if correction_nonzero {
            assert_eq!(v, 3, "THM1 sharpness violated at p = {q}");
        } else {
            assert!(v >= 4, "THM1 degenerate branch at p = {q} has v = {v}");
            vanishing.push(q);
        }
    }
    for q in primes_in(5, 1000).into_iter().filter(|q| q % 3 == 2) {
        let (v, correction_nonzero) = theorem_sharpness(CheckId::Thm2, q, &p).unwrap();
        if correction_nonzero {
            assert_eq!(v, 3, "THM2 sharpness violated at p = {q}");
        } else {
            assert!(v >= 4, "THM2 degenerate branch at p = {q} has v = {v}");
            vanishing.push(q);
        }
    }
    // p = 5 is the known degenerate THM2 prime: correction = 0 mod 5
    let (v5, nz5) = theorem_sharpness(CheckId::Thm2, 5, &p).unwrap();
    assert!(!nz5);
    assert_eq!(v5, 4);
    verdict(
        4,
        &format!("v_p(LHS - p) = 3 exactly wherever the correction is nonzero (degenerate: {vanishing:?})"),
    );
}

#[test]
fn acceptance_05_conjecture_views_mod_p3() {
    let (checks, _) = parse_selectors(&["CONJ1".into(), "CONJ2".into()]).unwrap();
    let config = SuiteConfig {
        prime_lo: 5,
        prime_hi: 1000,
        checks,
        ..Default::default()
    };
    let outcome = run_suite(&config).unwrap();
    assert!(outcome.all_pass(), "{:?}", outcome.errors);
    assert!(outcome.reports.iter().all(|r| r.exponent == 3));
    let conj1 = outcome
        .reports
        .iter()
        .filter(|r| r.check == "CONJ1")
        .count();
    let conj2 = outcome
        .reports
        .iter()
        .filter(|r| r.check == "CONJ2")
        .count();
    assert!(conj1 > 0 && conj2 > 0);
    verdict(
        5,
        &format!("CONJ1/CONJ2 mod p^3 pass ({conj1} + {conj2} reports)"),
    );
}

#[test]
fn acceptance_06_full_lemma_registry_to_500() {
    let (checks, _) = parse_selectors(&["LEMMAS".into()]).unwrap();
    let config = SuiteConfig {
        prime_lo: 5,
        prime_hi: 500,
        checks,
        ..Default::default()
    };
    let outcome = run_suite(&config).unwrap();
    assert!(outcome.errors.is_empty(), "{:?}", outcome.errors);
    for rep in &outcome.reports {
        assert!(
            rep.pass,
            "{} failed at p = {}: {rep:?}",
            rep.check, rep.prime
        );
    }
    assert_eq!(outcome.budget_skipped, 0);
    // every lemma id plus the two harmonic oracles appear
    for id in LemmaId::all() {
        assert!(
            outcome.reports.iter().any(|r| r.check == id.name()),
            "no report for {}",
            id.name()
        );
    }
    for name in ["WOLSTENHOLME", "REFLECTION"] {
        assert!(outcome.reports.iter().any(|r| r.check == name));
    }
    verdict(
        6,
        &format!(
            "lemma registry (28 congruences + Wolstenholme + reflection) over p <= 500: {} reports",
            outcome.reports.len()
        ),
    );
}

#[test]
fn acceptance_07_identity_suite_to_200() {
    // frozen hand-verified fixtures first
    assert_eq!(identity_eval(IdentityId::B7, 1, Side::Rhs), rat_int(4));
    assert_eq!(identity_eval(IdentityId::B8, 1, Side::Rhs), rat_int(2));
    assert_eq!(identity_eval(IdentityId::B9, 1, Side::Lhs), rat(-8, 3));
    assert_eq!(identity_eval(IdentityId::B10, 1, Side::Lhs), rat(-8, 3));
    assert_eq!(identity_eval(IdentityId::C10, 2, Side::Lhs), rat(-57, 4));
    assert_eq!(identity_eval(IdentityId::C11, 2, Side::Lhs), rat(-11, 2));

    let config = SuiteConfig {
        checks: Vec::new(),
        identities: IdentityId::all().to_vec(),
        identity_lo: 1,
        identity_hi: 200,
        ..Default::default()
    };
    let outcome = run_suite(&config).unwrap();
    assert_eq!(outcome.reports.len(), 8);
    for rep in &outcome.reports {
        assert!(rep.pass, "identity {} failed: {rep:?}", rep.check);
    }
    verdict(7, "all eight identities hold exactly for n = 1..200");
}

#[test]
fn acceptance_08_bernoulli_route_equivalence() {
    let primes = primes_in(5, 500);
    for &p in &primes {
        assert_eq!(
            b13_lehmer(p).unwrap(),
            b13_recurrence(p).unwrap(),
            "Bernoulli routes disagree at p = {p}"
        );
    }
    verdict(
        8,
        &format!(
            "Lehmer route = recurrence route for all {} primes <= 500",
            primes.len()
        ),
    );
}

#[test]
fn acceptance_09_gamma_values_and_reflection() {
    assert_eq!(gamma_p(1, 3, 7, 2).unwrap(), BigUint::from(25u32));
    assert_eq!(gamma_p(2, 3, 7, 2).unwrap(), BigUint::from(47u32));
    let mut count = 0;
    for p in primes_in(5, 31) {
        for n in 1..=4u32 {
            for (a, b) in [(1i64, 3i64), (2, 3), (1, 2)] {
                let rep = gamma_reflection_check(a, b, p, n, DEFAULT_BUDGET).unwrap();
                assert!(
                    rep.pass,
                    "reflection {a}/{b} failed at p = {p}, N = {n}: {rep:?}"
                );
                count += 1;
            }
        }
    }
    verdict(
        9,
        &format!("Gamma_7 fixtures and {count} reflection checks at N <= 4"),
    );
}

#[test]
fn acceptance_10_van_hamme_and_long_ramakrishna() {
    let p = params();
    for q in [7u64, 13] {
        let rep = check_gamma_congruence(CheckId::VanHammeD2, q, &p).unwrap();
        assert!(rep.pass, "VANHAMME_D2 at p = {q}: {rep:?}");
        assert_eq!(rep.exponent, 4);
    }
    for q in [5u64, 11] {
        let rep = check_gamma_congruence(CheckId::LongRama, q, &p).unwrap();
        assert!(rep.pass, "LONG_RAMA at p = {q}: {rep:?}");
        assert_eq!(rep.exponent, 6);
    }
    // branch consistency at p = 1 (mod 6): the exponent-6 check agrees
    // with VANHAMME_D2 once reduced mod p^4
    for q in [7u64, 13] {
        let lr = check_gamma_congruence(CheckId::LongRama, q, &p).unwrap();
        assert!(lr.pass, "LONG_RAMA at p = {q}: {lr:?}");
        let vh = check_gamma_congruence(CheckId::VanHammeD2, q, &p).unwrap();
        let p4 = BigUint::from(q).pow(4);
        let lr_rhs: BigUint = lr.rhs.parse().unwrap();
        let vh_rhs: BigUint = vh.rhs.parse().unwrap();
        assert_eq!(lr_rhs % &p4, vh_rhs % &p4, "branch mismatch at p = {q}");
    }
    // supporting property sweeps: step relation and precision consistency
    for q in [5u64, 7, 11] {
        let pn = BigUint::from(q).pow(3);
        for m in 1i64..25 {
            let g = gamma_p(m, 1, q, 3).unwrap();
            let g1 = gamma_p(m + 1, 1, q, 3).unwrap();
            let f = if (m as u64).is_multiple_of(q) {
                BigUint::from(1u32)
            } else {
                BigUint::from(m as u64)
            };
            assert_eq!(g1, (&pn - (g * f) % &pn) % &pn);
        }
        for n in 2..=4u32 {
            let hi = gamma_p(1, 3, q, n).unwrap();
            let lo = gamma_p(1, 3, q, n - 1).unwrap();
            assert_eq!(hi % BigUint::from(q).pow(n - 1), lo);
        }
    }
    verdict(
        10,
        "Van Hamme (D.2) at {7,13} mod p^4; mod-p^6 branch at {5,11}; property sweeps",
    );
}

#[test]
fn acceptance_11_arithmetic_property_suite() {
    let mut rng = StdRng::seed_from_u64(0x5c_5eed);
    let primes = [5u64, 7, 11, 13, 97, 499];
    let k = 10u32;
    let mut cases = 0usize;

    // ultrametric inequality and valuation additivity
    for _ in 0..2500 {
        let p = primes[rng.random_range(0..primes.len())];
        let draw = |rng: &mut StdRng| loop {
            let num = rng.random_range(-1_000_000i64..=1_000_000);
            let den = rng.random_range(1i64..=1_000_000);
            if num != 0 && den % p as i64 != 0 {
                return rat(num, den);
            }
        };
        let (a, b) = (draw(&mut rng), draw(&mut rng));
        let x = PadicNum::from_rat(&a, p, k).unwrap();
        let y = PadicNum::from_rat(&b, p, k).unwrap();
        let (vx, vy) = (x.valuation().unwrap(), y.valuation().unwrap());

        let sum = x.add(&y).unwrap();
        let exact_sum = &a + &b;
        match rat_valuation(&exact_sum, p) {
            Some(v) => {
                assert!(v >= vx.min(vy), "ultrametric violated");
                if vx != vy {
                    assert_eq!(sum.valuation(), Some(vx.min(vy)));
                    assert_eq!(v, vx.min(vy));
                }
            }
            None => assert!(sum.is_zero() || sum.valuation().unwrap() >= vx.min(vy)),
        }

        let prod = x.mul(&y).unwrap();
        assert_eq!(
            prod.valuation(),
            Some(vx + vy),
            "valuation additivity violated"
        );
        cases += 2;
    }

    // rational round trip through the truncated ring
    for _ in 0..2500 {
        let p = primes[rng.random_range(0..primes.len())];
        let num = rng.random_range(1i64..=10_000_000);
        let den = loop {
            let d = rng.random_range(1i64..=10_000_000);
            if d % p as i64 != 0 {
                break d;
            }
        };
        let x = PadicNum::from_rat(&rat(num, den), p, k).unwrap();
        let got = x.integer_residue(k).unwrap();
        let expect = scverify::padic::rat_residue(&rat(num, den), p, k).unwrap();
        assert_eq!(got, expect, "round trip failed for {num}/{den} at p = {p}");
        cases += 1;
    }

    // modular inverses
    for _ in 0..2500 {
        let m = rng.random_range(2u64..=1_000_000);
        let a = loop {
            let a = rng.random_range(1u64..m);
            if num_integer::gcd(a, m) == 1 {
                break a;
            }
        };
        let inv = mod_inverse_u64(a, m).unwrap();
        assert_eq!((a as u128 * inv as u128) % m as u128, 1);
        cases += 1;
    }

    // Pochhammer recurrence
    for _ in 0..2500 {
        let num = rng.random_range(-30i64..=30);
        let den = if rng.random_bool(0.5) { 1 } else { 3 };
        let base = rat(num, den);
        let kk = rng.random_range(0u64..=10);
        let lhs = pochhammer_exact(&base, kk + 1);
        let rhs = pochhammer_exact(&base, kk) * (&base + rat_int(kk as i64));
        assert_eq!(lhs, rhs);
        cases += 1;
    }

    // exact-vs-padic oracle agreement for every registered sum at p <= 200;
    // the prime-driven specs run at p, the free-parameter specs at the
    // bridge parameter n = (p -+ 1)/3 where their denominators are units
    let mut sweeps = 0usize;
    for p in primes_in(5, 200) {
        for id in SumId::all() {
            let s = spec(id);
            if s.upper == UpperRule::FreeN || !s.class.contains(p) {
                continue;
            }
            let exact = truncated_sum_exact(s, p).unwrap();
            let padic = truncated_sum_padic(s, p, p, 8).unwrap();
            let expect = PadicNum::from_rat(&exact, p, 8).unwrap();
            assert_eq!(padic, expect, "{} disagrees at p = {p}", id.name());
            sweeps += 1;
        }
    }
    for p in primes_in(5, 200) {
        let (ids, n) = if p % 3 == 1 {
            ([SumId::B7Weighted, SumId::B9Lhs], (p - 1) / 3)
        } else {
            ([SumId::B8Weighted, SumId::B10Lhs], (p + 1) / 3)
        };
        for id in ids {
            let s = spec(id);
            let exact = truncated_sum_exact(s, n).unwrap();
            if matches!(id, SumId::B7Weighted | SumId::B8Weighted) {
                // the identity instance collapses to p exactly
                assert_eq!(exact, rat_int(p as i64));
            }
            let padic = truncated_sum_padic(s, n, p, 8).unwrap();
            assert_eq!(
                padic,
                PadicNum::from_rat(&exact, p, 8).unwrap(),
                "{} disagrees at bridge n = {n}, p = {p}",
                id.name()
            );
            sweeps += 1;
        }
    }
    assert!(!BigUint::from(sweeps).is_zero());
    assert!(
        cases + sweeps >= 10_000,
        "only {} cases ran",
        cases + sweeps
    );

    // harmonic prefix tables agree with direct summation everywhere
    for family in [
        harmonic::HarmonicFamily::H,
        harmonic::HarmonicFamily::S,
        harmonic::HarmonicFamily::T,
    ] {
        for r in 1..=2u32 {
            let table = harmonic::prefix_exact(family, r, 120);
            for n in 0..=120u64 {
                assert_eq!(table[n as usize], harmonic::value_exact(family, n, r));
            }
        }
    }

    verdict(
        11,
        &format!("{cases} randomized cases + {sweeps} oracle sweeps, zero tolerance"),
    );
}

/// The run-suite contract from the operation examples: primes 5..50 with
/// the two theorems give 13 reports (6 + 7) and all pass.
#[test]
fn suite_example_five_to_fifty() {
    let (checks, _) = parse_selectors(&["THM1".into(), "THM2".into()]).unwrap();
    let config = SuiteConfig {
        prime_lo: 5,
        prime_hi: 50,
        checks,
        ..Default::default()
    };
    let outcome = run_suite(&config).unwrap();
    assert_eq!(outcome.reports.len(), 13);
    assert!(outcome.all_pass());
}

/// Wolstenholme appears in the registry and holds below 500 (it is part
/// of criterion 6; this pins the two textbook instances).
#[test]
fn wolstenholme_textbook_values() {
    let h4: Rat = harmonic::value_exact(harmonic::HarmonicFamily::H, 4, 1);
    assert_eq!(h4, rat(25, 12));
    assert_eq!(rat_valuation(&h4, 5), Some(2));
    let h6 = harmonic::value_exact(harmonic::HarmonicFamily::H, 6, 1);
    assert_eq!(h6, rat(49, 20));
    assert_eq!(rat_valuation(&h6, 7), Some(2));
}
