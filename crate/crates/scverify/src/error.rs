//! Error types shared across the crate.

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// `gcd(value, modulus) > 1`, so no inverse exists.
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: BigInt, modulus: BigUint },

    /// Arithmetic between values living over different primes.
    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u64, right: u64 },

    /// Inversion of the zero element.
    #[error("division by zero in the p-adic ring")]
    DivisionByZero,

    /// A denominator hit a multiple of p where a p-adic unit was required.
    #[error("denominator {denominator} is not a unit modulo {prime}{}", fmt_index(.index))]
    DenominatorNotUnit {
        prime: u64,
        denominator: BigInt,
        index: Option<u64>,
    },

    /// The prime is outside the domain of the requested computation.
    #[error("prime {prime} is inapplicable: {reason}")]
    InapplicablePrime { prime: u64, reason: &'static str },

    /// The prime is valid but not in the residue class the check requires.
    #[error("prime {prime} is not in the residue class {required}")]
    WrongResidueClass { prime: u64, required: &'static str },

    /// A Gamma_p product would exceed the configured length budget.
    #[error("product length {required} exceeds budget {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    /// Suite configuration rejected before any check ran.
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

fn fmt_index(index: &Option<u64>) -> String {
    match index {
        Some(k) => format!(" (at summation index k = {k})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
