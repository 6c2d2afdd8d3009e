//! Exact poly-Bernoulli numbers of both types for every integer upper index.
//!
//! The canonical values come from the explicit Stirling-sum formulas
//!
//! ```text
//! B_n^(k) = (-1)^n sum_{m=0}^{n} (-1)^m m! {n over m}   / (m+1)^k
//! C_n^(k) = (-1)^n sum_{m=0}^{n} (-1)^m m! {n+1 over m+1} / (m+1)^k
//! ```
//!
//! evaluated in exact rational arithmetic. The binomial relations between the
//! two families and the truncated generating-series expansion are provided as
//! independent routes to the same values; any discrepancy is a bug, never a
//! tolerance question.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Pow, Zero};

use crate::combinatorics::{binomial, stirling2};
use crate::series::RationalSeries;

/// Which of the two poly-Bernoulli families an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    B,
    C,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::B => write!(f, "B"),
            Kind::C => write!(f, "C"),
        }
    }
}

/// `num / base^k`, exact for either sign of `k`.
fn over_power(num: BigInt, base: u64, k: i64) -> BigRational {
    let base = BigInt::from(base);
    if k >= 0 {
        BigRational::new(num, base.pow(k as u64))
    } else {
        BigRational::from_integer(num * base.pow(k.unsigned_abs()))
    }
}

fn stirling_sum(k: i64, n: u64, shifted: bool) -> BigRational {
    let mut acc = BigRational::zero();
    let mut m_factorial = BigInt::one();
    for m in 0..=n {
        if m > 0 {
            m_factorial *= BigInt::from(m);
        }
        let s = if shifted {
            stirling2(n + 1, m + 1)
        } else {
            stirling2(n, m)
        };
        if s.is_zero() {
            continue;
        }
        let mut numerator = &m_factorial * s;
        if m % 2 == 1 {
            numerator = -numerator;
        }
        acc += over_power(numerator, m + 1, k);
    }
    if n % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// `B_n^(k)` by the explicit formula. Integral (denominator 1) for `k <= 0`.
pub fn b_poly(k: i64, n: u64) -> BigRational {
    stirling_sum(k, n, false)
}

/// `C_n^(k)` by the explicit formula.
pub fn c_poly(k: i64, n: u64) -> BigRational {
    stirling_sum(k, n, true)
}

/// `B_n^(k)` reconstructed from the type-C family:
/// `sum_{m=0}^{n} C(n,m) C_m^(k)`. Must equal [`b_poly`].
pub fn b_from_c(k: i64, n: u64) -> BigRational {
    (0..=n)
        .map(|m| BigRational::from_integer(binomial(n, m)) * c_poly(k, m))
        .sum()
}

/// `C_n^(k)` reconstructed from the type-B family:
/// `sum_{m=0}^{n} (-1)^(n-m) C(n,m) B_m^(k)`. Must equal [`c_poly`].
pub fn c_from_b(k: i64, n: u64) -> BigRational {
    (0..=n)
        .map(|m| {
            let term = BigRational::from_integer(binomial(n, m)) * b_poly(k, m);
            if (n - m) % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// Check `B_n^(k) = C_n^(k) + C_{n-1}^(k-1)` at one point. Requires `n >= 1`.
pub fn b_shift_identity(k: i64, n: u64) -> bool {
    assert!(n >= 1, "the shift identity needs n >= 1");
    b_poly(k, n) == c_poly(k, n) + c_poly(k - 1, n - 1)
}

/// `sum_{l=0}^{n} (-1)^l B_{n-l}^(-l)`; zero for every `n >= 1`.
pub fn alternating_sum(n: u64) -> BigRational {
    let mut acc = BigRational::zero();
    for l in 0..=n {
        let term = b_poly(-(l as i64), n - l);
        if l % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// First `order + 1` coefficients `a_n = n! * [t^n]` of the generating
/// series of the requested family, computed by exact truncated power-series
/// arithmetic. `a_n` equals [`b_poly`]`(k, n)` resp. [`c_poly`]`(k, n)`.
pub fn series_coefficients(k: i64, kind: Kind, order: usize) -> Vec<BigRational> {
    // z = 1 - e^(-t) has valuation 1, so Li_k(z)/z = sum_{j>=1} z^(j-1)/j^k
    // needs exactly the terms with j - 1 <= order.
    let z = RationalSeries::one_minus_exp_neg(order);
    let mut acc = RationalSeries::zero(order);
    let mut z_power = RationalSeries::one(order);
    for j in 1..=(order as u64 + 1) {
        let scale = over_power(BigInt::one(), j, k);
        acc.add_scaled(&z_power, &scale);
        if j <= order as u64 {
            z_power = z_power.mul(&z);
        }
    }
    let series = match kind {
        Kind::B => acc,
        Kind::C => {
            // Multiply by (1 - e^(-t)) / (e^t - 1); both factors carry a
            // single factor t, cancelled before the unit-leading division.
            let numerator = RationalSeries::one_minus_exp_neg(order + 1).shift_down();
            let denominator = RationalSeries::exp_minus_one(order + 1).shift_down();
            acc.mul(&numerator.div_unit(&denominator))
        }
    };
    series.to_exponential_coeffs()
}

/// Exhaustively check the duality `B_n^(-k) = B_k^(-n)` (kind B) or
/// `C_n^(-k-1) = C_k^(-n-1)` (kind C) on the full `(k, n)` grid.
pub fn check_duality(kind: Kind, kmax: u64, nmax: u64) -> bool {
    for k in 0..=kmax {
        for n in 0..=nmax {
            let ok = match kind {
                Kind::B => b_poly(-(k as i64), n) == b_poly(-(n as i64), k),
                Kind::C => c_poly(-(k as i64) - 1, n) == c_poly(-(n as i64) - 1, k),
            };
            if !ok {
                return false;
            }
        }
    }
    true
}
