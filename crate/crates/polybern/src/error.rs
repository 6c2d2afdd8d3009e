//! Error type shared by the whole crate.

use thiserror::Error;

/// Domain and hypothesis violations.
///
/// Verifiers reject parameter sets outside their theorem's hypotheses with
/// one of these variants instead of reporting a spurious failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("crt moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(u64, u64),

    #[error("combined crt modulus exceeds the 2^64 cap")]
    CrtOverflow,

    #[error("p = {0} must be an odd prime")]
    NotOddPrime(u64),

    #[error("p = {0} must be a prime with p >= 7")]
    PrimeTooSmall(u64),

    #[error("upper index k must be at least 1 for type-C modular evaluation")]
    TypeCUpperIndexZero,

    #[error("lower index {n} is below the periodicity bound {bound} of modulus {modulus}")]
    BelowPeriodicityBound { n: String, bound: u32, modulus: u64 },

    #[error("indices {n} and {m} are not congruent modulo phi({modulus}) = {phi}")]
    PeriodMismatch { n: u64, m: u64, modulus: u64, phi: u64 },

    #[error("pair (k, n) = ({k}, {n}) must satisfy k = n = 0 or 1 modulo p - 1 = {pm1}, with k, n >= 1")]
    InadmissiblePair { k: u64, n: u64, pm1: u64 },

    #[error("index k = {k} must be at least 1")]
    ZeroIndex { k: u64 },

    #[error("{rows} x {cols} enumeration has {cells} cells, above the brute-force cap of {cap}")]
    EnumerationTooLarge { rows: u32, cols: u32, cells: u64, cap: u64 },
}
