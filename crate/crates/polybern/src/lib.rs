//! Exact-arithmetic poly-Bernoulli numbers of both types, a totient-based
//! modular fast path for negative upper indices, and executable verifiers
//! for the associated congruence and periodicity statements.
//!
//! The crate is organized around six concerns:
//!
//! - [`combinatorics`]: Stirling numbers of the second kind and binomial
//!   coefficients, each computable by two independent routes.
//! - [`polybernoulli`]: `B_n^(k)` and `C_n^(k)` for every integer `k` via the
//!   explicit Stirling-sum formulas, their mutual relations, and a truncated
//!   generating-series oracle.
//! - [`series`]: exact truncated power series over rationals backing the
//!   generating-series oracle.
//! - [`modular`]: evaluation of `B_n^(-k)` and `C_n^(-k)` modulo an arbitrary
//!   modulus, with the lower index reduced through Euler's totient so it may
//!   be an arbitrary-precision integer.
//! - [`congruence`]: verifiers producing structured pass/fail reports for the
//!   periodicity and residue statements.
//! - [`lonesum`]: brute-force lonesum matrix counting as an independent
//!   combinatorial oracle, plus its periodic congruences.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod combinatorics;
pub mod congruence;
pub mod error;
pub mod lonesum;
pub mod modular;
pub mod polybernoulli;
pub mod series;

pub use congruence::{CongruenceReport, TheoremId};
pub use error::Error;
pub use modular::{Modulus, Residue};
pub use polybernoulli::Kind;
pub use series::RationalSeries;
