//! Brute-force lonesum matrix counting as an independent oracle.
//!
//! A binary matrix is lonesum when it is the unique matrix with its pair of
//! row- and column-sum vectors. `L(k, n)` counts the lonesum `k x n`
//! matrices and equals `B_n^(-k)`; the counter here enumerates all `2^(kn)`
//! matrices and groups them by sum pair, deliberately using the raw
//! definition (no structural characterization) so it is an oracle with no
//! shared logic with the rest of the crate.

use std::collections::HashMap;

use num::bigint::{BigInt, BigUint};

use crate::congruence::{CongruenceReport, TheoremId};
use crate::error::Error;
use crate::modular::{self, Modulus, Residue};
use crate::polybernoulli::b_poly;

/// Enumerations above this many cells (2^cells matrices) are refused.
const ENUMERATION_CAP: u64 = 20;

/// A `rows x cols` matrix over `{0, 1}` with its sum vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: u32,
    cols: u32,
    entries: Vec<u8>,
    row_sums: Vec<u32>,
    col_sums: Vec<u32>,
}

impl BinaryMatrix {
    /// Build from the low `rows * cols` bits of `bits`, row-major.
    pub fn from_bits(rows: u32, cols: u32, bits: u64) -> Self {
        let cells = (rows * cols) as usize;
        let mut entries = vec![0u8; cells];
        let mut row_sums = vec![0u32; rows as usize];
        let mut col_sums = vec![0u32; cols as usize];
        for (cell, entry) in entries.iter_mut().enumerate() {
            *entry = ((bits >> cell) & 1) as u8;
            if *entry == 1 {
                row_sums[cell / cols as usize] += 1;
                col_sums[cell % cols as usize] += 1;
            }
        }
        BinaryMatrix {
            rows,
            cols,
            entries,
            row_sums,
            col_sums,
        }
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn entry(&self, row: u32, col: u32) -> u8 {
        self.entries[(row * self.cols + col) as usize]
    }

    pub fn row_sums(&self) -> &[u32] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[u32] {
        &self.col_sums
    }
}

/// Count lonesum `k x n` matrices by full enumeration: group all `2^(kn)`
/// matrices by `(row_sums, col_sums)` and count the singleton groups.
pub fn count_lonesum_bruteforce(k: u32, n: u32) -> Result<u64, Error> {
    let cells = k as u64 * n as u64;
    if cells > ENUMERATION_CAP {
        return Err(Error::EnumerationTooLarge {
            rows: k,
            cols: n,
            cells,
            cap: ENUMERATION_CAP,
        });
    }
    let mut groups: HashMap<(Vec<u32>, Vec<u32>), u32> = HashMap::new();
    for bits in 0..(1u64 << cells) {
        let matrix = BinaryMatrix::from_bits(k, n, bits);
        *groups
            .entry((matrix.row_sums, matrix.col_sums))
            .or_insert(0) += 1;
    }
    Ok(groups.values().filter(|&&size| size == 1).count() as u64)
}

/// `L(k, n)` exactly, through the closed form `B_n^(-k)`.
pub fn count_lonesum(k: u64, n: u64) -> BigInt {
    b_poly(-(k as i64), n).to_integer()
}

/// `L(k, n) mod M`, through the modular fast path; `n` may be huge.
pub fn count_lonesum_mod(k: u64, n: &BigUint, modulus: &Modulus) -> Residue {
    modular::b_neg_mod(k, n, modulus)
}

/// Check the periodic behaviour of `L(k, .) mod M` at lower index `n`:
///
/// - `L(k, n) = L(k, n + phi(M)) (mod M)`;
/// - `sum_{i=0}^{phi(M)-1} L(k, n+i) = 0 (mod M)` (orientation 0);
/// - `sum_{i=0}^{phi(M)-1} L(n+i, k) = 0 (mod M)` (orientation 1).
///
/// Requires `k >= 1` and `n >= max_exponent(M)`.
pub fn verify_lonesum_period(
    k: u64,
    n: u64,
    modulus: &Modulus,
) -> Result<Vec<CongruenceReport>, Error> {
    if k == 0 {
        return Err(Error::ZeroIndex { k });
    }
    if n < modulus.max_exponent() as u64 {
        return Err(Error::BelowPeriodicityBound {
            n: n.to_string(),
            bound: modulus.max_exponent(),
            modulus: modulus.value(),
        });
    }
    let m = modulus.value();
    let phi = modulus.totient();
    let shifted = n.checked_add(phi).expect("period window exceeds u64");

    let here = count_lonesum_mod(k, &BigUint::from(n), modulus).value;
    let there = count_lonesum_mod(k, &BigUint::from(shifted), modulus).value;
    let mut reports = vec![CongruenceReport {
        theorem: TheoremId::LonesumPeriod,
        parameters: [("k", k), ("n", n), ("m", shifted), ("mod", m)]
            .into_iter()
            .collect(),
        expected: format!("{there} (mod {m})"),
        observed: here,
        pass: here == there,
    }];

    let mut lower_sum = 0u64;
    let mut upper_sum = 0u64;
    for i in 0..phi {
        let at = n + i;
        lower_sum = (lower_sum + count_lonesum_mod(k, &BigUint::from(at), modulus).value) % m;
        upper_sum = (upper_sum + count_lonesum_mod(at, &BigUint::from(k), modulus).value) % m;
    }
    for (orientation, observed) in [(0, lower_sum), (1, upper_sum)] {
        reports.push(CongruenceReport {
            theorem: TheoremId::LonesumPeriodSum,
            parameters: [("k", k), ("n", n), ("mod", m), ("orientation", orientation)]
                .into_iter()
                .collect(),
            expected: format!("0 (mod {m})"),
            observed,
            pass: observed == 0,
        });
    }
    Ok(reports)
}
