//! Exact-arithmetic verification of supercongruences.
//!
//! This crate certifies, across ranges of primes and identity parameters,
//! a family of congruences between truncated hypergeometric-type sums and
//! p-adic closed forms (Bernoulli polynomial values, p-adic Gamma values),
//! together with the harmonic-sum lemmas and symbolic-summation identities
//! supporting them. Every check is exact: values live in arbitrary
//! precision rationals or in a truncated p-adic ring, and a congruence
//! mod p^e passes iff the valuation of the difference reaches e.
//!
//! The pieces:
//!
//! - [`padic`]: truncated p-adic numbers, modular inverses, Legendre symbols
//! - [`rat`]: exact rationals and binomial coefficients
//! - [`harmonic`]: the H/S/T harmonic sums and their reflection lemmas
//! - [`bernoulli`]: Bernoulli numbers mod p, two routes to `B_{p-2}(1/3)`
//! - [`hyperseries`]: declarative truncated sums with multiplicative updates
//! - [`gamma`]: Morita's p-adic Gamma by bounded products
//! - [`identities`]: exact certification of the eight summation identities
//! - [`checks`]: the registry of theorem, lemma and oracle checks
//! - [`suite`]: parallel orchestration over prime ranges
//! - [`report`]: JSONL/CSV verdict records
//!
//! Runnable examples live under `examples/`; the `scverify` binary wraps
//! the suite for batch use.

pub mod bernoulli;
pub mod checks;
pub mod error;
pub mod gamma;
pub mod harmonic;
pub mod hyperseries;
pub mod identities;
pub mod padic;
pub mod primes;
pub mod rat;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use padic::PadicNum;
pub use rat::Rat;
pub use report::{CheckReport, ReportFormat};
