//! Stirling numbers of the second kind and binomial coefficients in exact
//! arbitrary-precision arithmetic.
//!
//! Stirling numbers are served from a process-wide memoized triangle built
//! with the standard recurrence; [`stirling2_explicit`] recomputes them
//! through the alternating binomial sum as an independent cross-check route.

use std::sync::{LazyLock, RwLock};

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Zero};

/// Triangular table of Stirling numbers of the second kind.
///
/// Row `n` holds `{n over m}` for `0 <= m <= n`, built with
/// `{n over m} = m * {n-1 over m} + {n-1 over m-1}`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    /// Build the triangle for all `0 <= m <= n <= max_n`.
    pub fn new(max_n: usize) -> Self {
        let mut table = StirlingTable {
            rows: vec![vec![BigInt::one()]],
        };
        table.grow_to(max_n);
        table
    }

    /// Largest row currently present.
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `{n over m}`, zero when `m > n`. Row `n` must already exist.
    pub fn get(&self, n: usize, m: usize) -> BigInt {
        if m > n {
            BigInt::zero()
        } else {
            self.rows[n][m].clone()
        }
    }

    /// Extend the triangle so that row `n` exists.
    pub fn grow_to(&mut self, n: usize) {
        while self.max_n() < n {
            let prev = self.rows.last().unwrap();
            let row_index = self.rows.len();
            let mut row = Vec::with_capacity(row_index + 1);
            row.push(BigInt::zero());
            for m in 1..=row_index {
                let mut value = prev[m - 1].clone();
                if m < row_index {
                    value += BigInt::from(m) * &prev[m];
                }
                row.push(value);
            }
            self.rows.push(row);
        }
    }
}

// Verification sweeps re-query the same triangle heavily, so the table is
// shared per process: concurrent reads, exclusive growth.
static TABLE: LazyLock<RwLock<StirlingTable>> =
    LazyLock::new(|| RwLock::new(StirlingTable::new(64)));

/// Stirling number of the second kind `{n over m}` from the memoized
/// recurrence triangle. Returns 0 when `m > n`.
pub fn stirling2(n: u64, m: u64) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    let (n, m) = (n as usize, m as usize);
    {
        let table = TABLE.read().unwrap();
        if n <= table.max_n() {
            return table.get(n, m);
        }
    }
    let mut table = TABLE.write().unwrap();
    table.grow_to(n);
    table.get(n, m)
}

/// `{n over m}` by the explicit alternating sum
/// `(-1)^m / m! * sum_{l=0}^{m} (-1)^l C(m,l) l^n`, with the convention
/// `0^0 = 1`.
///
/// The division by `m!` is exact; a remainder would mean broken integer
/// arithmetic, so it panics rather than returning a wrong value.
pub fn stirling2_explicit(n: u64, m: u64) -> BigInt {
    let mut sum = BigInt::zero();
    for l in 0..=m {
        let power = if l == 0 && n == 0 {
            BigInt::one()
        } else {
            pow_u64(l, n)
        };
        let term = binomial(m, l) * power;
        if l % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if m % 2 == 1 {
        sum = -sum;
    }
    let (quotient, remainder) = sum.div_rem(&factorial(m));
    assert!(
        remainder.is_zero(),
        "alternating sum for stirling2({n}, {m}) is not divisible by {m}!"
    );
    quotient
}

/// Binomial coefficient `C(n, m)`; zero when `m > n`.
pub fn binomial(n: u64, m: u64) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 1..=m {
        // C(n-m+i, i) = C(n-m+i-1, i-1) * (n-m+i) / i, exact at each step.
        acc = acc * BigInt::from(n - m + i) / BigInt::from(i);
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

fn pow_u64(base: u64, exp: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut base = BigInt::from(base);
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: count partitions of an n-set into exactly m
    /// nonempty blocks by enumerating restricted growth strings.
    fn stirling_bruteforce(n: u64, m: u64) -> BigInt {
        fn extend(labels: &mut Vec<u64>, n: usize, blocks: u64, m: u64, count: &mut u64) {
            if labels.len() == n {
                if blocks == m {
                    *count += 1;
                }
                return;
            }
            for label in 0..=blocks.min(m.saturating_sub(1)) {
                labels.push(label);
                let next_blocks = blocks.max(label + 1);
                extend(labels, n, next_blocks, m, count);
                labels.pop();
            }
        }
        if n == 0 {
            return if m == 0 { BigInt::one() } else { BigInt::zero() };
        }
        let mut count = 0;
        extend(&mut Vec::new(), n as usize, 0, m, &mut count);
        BigInt::from(count)
    }

    #[test]
    fn stirling_small_values() {
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(5, 2), BigInt::from(15));
        assert_eq!(stirling2(2, 5), BigInt::from(0));
    }

    #[test]
    fn stirling_matches_partition_enumeration() {
        for n in 0..=7 {
            for m in 0..=n + 1 {
                assert_eq!(
                    stirling2(n, m),
                    stirling_bruteforce(n, m),
                    "partition count mismatch at ({n}, {m})"
                );
            }
        }
    }

    #[test]
    fn explicit_formula_small_values() {
        assert_eq!(stirling2_explicit(0, 0), BigInt::from(1));
        assert_eq!(stirling2_explicit(3, 2), BigInt::from(3));
        assert_eq!(stirling2_explicit(4, 2), BigInt::from(7));
    }

    #[test]
    fn explicit_formula_agrees_with_recurrence() {
        for n in 0..=20 {
            for m in 0..=n {
                assert_eq!(
                    stirling2(n, m),
                    stirling2_explicit(n, m),
                    "route mismatch at ({n}, {m})"
                );
            }
        }
    }

    #[test]
    fn explicit_formula_is_zero_above_diagonal() {
        for n in 0..=6 {
            for m in n + 1..=8 {
                assert_eq!(stirling2_explicit(n, m), BigInt::zero());
            }
        }
    }

    #[test]
    fn table_boundary_entries() {
        let table = StirlingTable::new(12);
        assert_eq!(table.get(0, 0), BigInt::one());
        for n in 1..=12 {
            assert_eq!(table.get(n, 0), BigInt::zero());
            assert_eq!(table.get(n, 1), BigInt::one());
            assert_eq!(table.get(n, n), BigInt::one());
        }
    }

    #[test]
    fn table_entries_nonnegative() {
        let table = StirlingTable::new(20);
        for n in 0..=20 {
            for m in 0..=n {
                assert!(table.get(n, m) >= BigInt::zero());
            }
        }
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(9, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn binomial_pascal_identity() {
        for n in 1..=30u64 {
            for m in 1..=n {
                assert_eq!(binomial(n, m), binomial(n - 1, m - 1) + binomial(n - 1, m));
            }
        }
    }

    #[test]
    fn bell_numbers_satisfy_binomial_recurrence() {
        // Row sums of the Stirling triangle are the Bell numbers; the Bell
        // recurrence B(n+1) = sum_m C(n,m) B(m) ties both routes together.
        let bell = |n: u64| -> BigInt { (0..=n).map(|m| stirling2(n, m)).sum() };
        for n in 0..=15u64 {
            let lhs = bell(n + 1);
            let rhs: BigInt = (0..=n).map(|m| binomial(n, m) * bell(m)).sum();
            assert_eq!(lhs, rhs, "Bell recurrence fails at n = {n}");
        }
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(1), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
