//! Truncated formal power series with exact rational coefficients.
//!
//! Just enough series arithmetic to expand the generating functions of both
//! poly-Bernoulli families: truncated products, division by a unit-leading
//! series, and the exponential building blocks.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::combinatorics::factorial;

/// A power series truncated at a fixed order, stored as ordinary
/// coefficients: `coeffs[i]` is the coefficient of `t^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<BigRational>,
}

impl RationalSeries {
    /// The zero series truncated at `order` (holding `order + 1` coefficients).
    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    /// The constant series 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        let mut s = RationalSeries::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the t^0 coefficient");
        RationalSeries { coeffs }
    }

    /// Truncation degree; the series holds coefficients of `t^0 ..= t^order`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `1 - e^(-t)` truncated at `order`.
    pub fn one_minus_exp_neg(order: usize) -> Self {
        let mut s = RationalSeries::zero(order);
        for i in 1..=order {
            let sign = if i % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            s.coeffs[i] = BigRational::new(sign, factorial(i as u64));
        }
        s
    }

    /// `e^t - 1` truncated at `order`.
    pub fn exp_minus_one(order: usize) -> Self {
        let mut s = RationalSeries::zero(order);
        for i in 1..=order {
            s.coeffs[i] = BigRational::new(BigInt::one(), factorial(i as u64));
        }
        s
    }

    /// Product truncated at the shorter operand's order.
    pub fn mul(&self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order().min(rhs.order());
        let mut out = RationalSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let product = &self.coeffs[i] * &rhs.coeffs[j];
                out.coeffs[i + j] += product;
            }
        }
        out
    }

    /// `self += rhs * scale`, truncated at `self`'s order.
    pub fn add_scaled(&mut self, rhs: &RationalSeries, scale: &BigRational) {
        let order = self.order().min(rhs.order());
        for i in 0..=order {
            if !rhs.coeffs[i].is_zero() {
                self.coeffs[i] += &rhs.coeffs[i] * scale;
            }
        }
    }

    /// Divide by `t`, dropping the vanishing constant term.
    ///
    /// Panics if the constant term is nonzero; the callers only cancel a
    /// factor `t` that is known to be present.
    pub fn shift_down(&self) -> RationalSeries {
        assert!(
            self.coeffs[0].is_zero(),
            "cannot cancel a factor t from a series with nonzero constant term"
        );
        assert!(self.order() >= 1, "series too short to shift");
        RationalSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Long division by a unit-leading series (nonzero constant term).
    ///
    /// Panics if the divisor's constant term vanishes after the required
    /// factor cancellation; that would be an internal inconsistency.
    pub fn div_unit(&self, divisor: &RationalSeries) -> RationalSeries {
        let lead = divisor.coeff(0);
        assert!(
            !lead.is_zero(),
            "series division requires a unit leading coefficient"
        );
        let order = self.order().min(divisor.order());
        let mut quotient = RationalSeries::zero(order);
        for i in 0..=order {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                if !divisor.coeffs[j].is_zero() && !quotient.coeffs[i - j].is_zero() {
                    acc -= &divisor.coeffs[j] * &quotient.coeffs[i - j];
                }
            }
            quotient.coeffs[i] = acc / lead;
        }
        quotient
    }

    /// Rescale coefficient `i` by `i!`, turning ordinary coefficients into
    /// the exponential normalization `a_i = i! * [t^i]`.
    pub fn to_exponential_coeffs(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from_integer(factorial(i as u64)))
            .collect()
    }
}
