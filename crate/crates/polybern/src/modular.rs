//! Modular evaluation of `B_n^(-k)` and `C_n^(-k)` for arbitrarily large `n`.
//!
//! Both families satisfy, for `k >= 0` resp. `k >= 1`,
//!
//! ```text
//! B_n^(-k) = (-1)^k     sum_{l=0}^{k}   (-1)^l l! {k over l}   (l+1)^n
//! C_n^(-k) = (-1)^(k-1) sum_{l=0}^{k-1} (-1)^l l! {k over l+1} (l+1)^(n+1)
//! ```
//!
//! which turn the lower index into a pure exponent. Modulo a prime power
//! `p^e` with `n >= e`, the terms with `p | l+1` vanish and the remaining
//! bases are units, so the exponent only matters modulo `phi(p^e)`. Composite
//! moduli are handled per prime power and recombined by the Chinese remainder
//! theorem. Small `n` are evaluated directly so the full domain is covered.

use num::bigint::BigUint;
use num::traits::ToPrimitive;

use crate::error::Error;

/// Lower indices up to this bound are evaluated without totient reduction.
const DIRECT_LIMIT: u64 = 10_000;

/// A value together with the modulus it lives under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// A modulus `>= 2` with its factorization and totient precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus {
    value: u64,
    factors: Vec<(u64, u32)>,
    totient: u64,
    max_exponent: u32,
}

impl Modulus {
    pub fn new(value: u64) -> Result<Self, Error> {
        if value < 2 {
            return Err(Error::InvalidModulus(value));
        }
        let factors = factorize(value);
        let totient = factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product();
        let max_exponent = factors.iter().map(|&(_, e)| e).max().unwrap();
        Ok(Modulus {
            value,
            factors,
            totient,
            max_exponent,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(p, e)` pairs with `p` ascending; the product of `p^e` is the value.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn totient(&self) -> u64 {
        self.totient
    }

    /// Largest `e` over the prime-power divisors `p^e`; totient reduction of
    /// the lower index is valid only from this bound upwards.
    pub fn max_exponent(&self) -> u32 {
        self.max_exponent
    }
}

/// Prime factorization by trial division, `(prime, exponent)` ascending.
fn factorize(mut value: u64) -> Vec<(u64, u32)> {
    assert!(value >= 2);
    let mut factors = Vec::new();
    let mut push = |p: u64, value: &mut u64| {
        let mut e = 0;
        while (*value).is_multiple_of(p) {
            *value /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut value);
    let mut p: u64 = 3;
    while p.saturating_mul(p) <= value {
        push(p, &mut value);
        p += 2;
    }
    if value > 1 {
        factors.push((value, 1));
    }
    factors
}

fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

fn pow_mod_u64(base: u64, mut exponent: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut base = base % modulus;
    let mut result = 1;
    while exponent > 0 {
        if exponent & 1 == 1 {
            result = mul_mod(result, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exponent >>= 1;
    }
    result
}

/// `base^exponent mod modulus` with an arbitrary-precision exponent.
pub fn pow_mod(base: u64, exponent: &BigUint, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut base = base % modulus;
    let mut result = 1;
    for digit in exponent.iter_u64_digits() {
        let mut digit = digit;
        for _ in 0..64 {
            if digit & 1 == 1 {
                result = mul_mod(result, base, modulus);
            }
            base = mul_mod(base, base, modulus);
            digit >>= 1;
        }
    }
    result
}

/// `(gcd, x, y)` with `a*x + b*y = gcd`.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Combine `(residue, modulus)` pairs with pairwise coprime moduli into the
/// unique residue modulo their product.
pub fn crt_combine(parts: &[(u64, u64)]) -> Result<Residue, Error> {
    let mut value: u64 = 0;
    let mut modulus: u64 = 1;
    for &(r, m) in parts {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        let (g, inv, _) = extended_gcd(modulus as i128, m as i128);
        if g != 1 {
            return Err(Error::NonCoprimeModuli(modulus, m));
        }
        let combined = modulus.checked_mul(m).ok_or(Error::CrtOverflow)?;
        // value + modulus * ((r - value) * inv mod m), all mod combined
        let diff = (r % m + m - value % m) % m;
        let step = mul_mod(diff, inv.rem_euclid(m as i128) as u64, m);
        value += modulus * step;
        modulus = combined;
    }
    Ok(Residue { value, modulus })
}

/// Deterministic Miller-Rabin, valid for the full u64 range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let trailing = (n - 1).trailing_zeros();
    let odd = (n - 1) >> trailing;
    'witness: for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, odd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..trailing {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Row `{k over 0..=k}` of the Stirling triangle, reduced mod `modulus`.
fn stirling_row_mod(k: u64, modulus: u64) -> Vec<u64> {
    let mut row = vec![1 % modulus];
    for _ in 1..=k {
        let mut next = vec![0; row.len() + 1];
        for (l, &v) in row.iter().enumerate() {
            next[l] = (next[l] + mul_mod(l as u64 % modulus, v, modulus)) % modulus;
            next[l + 1] = (next[l + 1] + v) % modulus;
        }
        row = next;
    }
    row
}

/// The two dualized sums share shape; this selects the per-term pieces.
#[derive(Clone, Copy)]
enum Family {
    /// `{k over l}`, exponent `n`, outer sign `(-1)^k`.
    B,
    /// `{k over l+1}`, exponent `n+1`, outer sign `(-1)^(k-1)`, `l < k`.
    C,
}

/// Signed dualized sum mod `modulus`, with the power of `l+1` supplied by
/// the caller (so both the direct and the totient-reduced paths share it).
fn dual_sum_mod(
    k: u64,
    family: Family,
    modulus: u64,
    mut power: impl FnMut(u64) -> Option<u64>,
) -> u64 {
    let row = stirling_row_mod(k, modulus);
    let last = match family {
        Family::B => k,
        Family::C => k - 1,
    };
    let mut acc: u64 = 0;
    let mut l_factorial = 1 % modulus;
    for l in 0..=last {
        if l > 0 {
            l_factorial = mul_mod(l_factorial, l % modulus, modulus);
        }
        let stirling = match family {
            Family::B => row[l as usize],
            Family::C => row[l as usize + 1],
        };
        let base_power = match power(l + 1) {
            Some(value) => value,
            None => continue,
        };
        let term = mul_mod(mul_mod(l_factorial, stirling, modulus), base_power, modulus);
        acc = if l % 2 == 0 {
            (acc + term) % modulus
        } else {
            (acc + modulus - term) % modulus
        };
    }
    let outer_negates = match family {
        Family::B => !k.is_multiple_of(2),
        Family::C => k.is_multiple_of(2),
    };
    if outer_negates {
        (modulus - acc) % modulus
    } else {
        acc
    }
}

/// Direct evaluation: every term, full-width exponent.
fn dual_sum_direct(k: u64, family: Family, exponent: &BigUint, modulus: u64) -> u64 {
    dual_sum_mod(k, family, modulus, |base| {
        Some(pow_mod(base, exponent, modulus))
    })
}

/// Totient-reduced evaluation of one prime-power component `p^e`: terms with
/// `p | l+1` vanish (the exponent is at least `e`), the rest are units whose
/// exponent only matters mod `phi(p^e)`.
fn dual_sum_reduced(k: u64, family: Family, exponent: &BigUint, p: u64, e: u32) -> u64 {
    let pe = p.pow(e);
    let phi = p.pow(e - 1) * (p - 1);
    let reduced = (exponent % phi).to_u64().unwrap();
    dual_sum_mod(k, family, pe, |base| {
        if base % p == 0 {
            None
        } else {
            Some(pow_mod_u64(base, reduced, pe))
        }
    })
}

fn below_bound(n: &BigUint, modulus: &Modulus) -> Error {
    Error::BelowPeriodicityBound {
        n: n.to_string(),
        bound: modulus.max_exponent(),
        modulus: modulus.value(),
    }
}

/// Fast path for `B_n^(-k) mod M`, requiring `n >= max_exponent(M)` so that
/// every prime-power component may drop its non-unit terms.
fn b_neg_mod_reduced(k: u64, n: &BigUint, modulus: &Modulus) -> Result<u64, Error> {
    if *n < BigUint::from(modulus.max_exponent()) {
        return Err(below_bound(n, modulus));
    }
    let parts: Vec<(u64, u64)> = modulus
        .factors()
        .iter()
        .map(|&(p, e)| (dual_sum_reduced(k, Family::B, n, p, e), p.pow(e)))
        .collect();
    Ok(crt_combine(&parts)
        .expect("prime-power components are coprime and multiply to the modulus")
        .value)
}

/// `C_n^(-k) mod M` via the fast path; needs `n + 1 >= max_exponent(M)`,
/// for which `n >= max_exponent(M)` is required as a uniform bound.
fn c_neg_mod_reduced(k: u64, n: &BigUint, modulus: &Modulus) -> Result<u64, Error> {
    if *n < BigUint::from(modulus.max_exponent()) {
        return Err(below_bound(n, modulus));
    }
    let exponent = n + 1u32;
    let parts: Vec<(u64, u64)> = modulus
        .factors()
        .iter()
        .map(|&(p, e)| (dual_sum_reduced(k, Family::C, &exponent, p, e), p.pow(e)))
        .collect();
    Ok(crt_combine(&parts)
        .expect("prime-power components are coprime and multiply to the modulus")
        .value)
}

/// `B_n^(-k) mod M` for `k >= 0` and arbitrary `n >= 0`.
///
/// Lower indices up to 10^4 are computed directly; larger ones go through
/// the totient-reduced path, whose validity bound they always clear.
pub fn b_neg_mod(k: u64, n: &BigUint, modulus: &Modulus) -> Residue {
    let value = if *n <= BigUint::from(DIRECT_LIMIT) {
        dual_sum_direct(k, Family::B, n, modulus.value())
    } else {
        b_neg_mod_reduced(k, n, modulus)
            .expect("n above the direct limit clears every prime-power exponent")
    };
    Residue {
        value,
        modulus: modulus.value(),
    }
}

/// `C_n^(-k) mod M` for `k >= 1` and arbitrary `n >= 0`.
pub fn c_neg_mod(k: u64, n: &BigUint, modulus: &Modulus) -> Result<Residue, Error> {
    if k == 0 {
        return Err(Error::TypeCUpperIndexZero);
    }
    let value = if *n <= BigUint::from(DIRECT_LIMIT) {
        let exponent = n + 1u32;
        dual_sum_direct(k, Family::C, &exponent, modulus.value())
    } else {
        c_neg_mod_reduced(k, n, modulus)?
    };
    Ok(Residue {
        value,
        modulus: modulus.value(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn modulus(m: u64) -> Modulus {
        Modulus::new(m).unwrap()
    }

    #[test]
    fn modulus_rejects_zero_and_one() {
        assert_eq!(Modulus::new(0), Err(Error::InvalidModulus(0)));
        assert_eq!(Modulus::new(1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn modulus_factorization_and_totient() {
        let m = modulus(360);
        assert_eq!(m.factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(m.totient(), 96);
        assert_eq!(m.max_exponent(), 3);

        let p = modulus(97);
        assert_eq!(p.factors(), &[(97, 1)]);
        assert_eq!(p.totient(), 96);
        assert_eq!(p.max_exponent(), 1);
    }

    #[test]
    fn pow_mod_small_cases() {
        assert_eq!(pow_mod(2, &BigUint::from(10u32), 1000), 24);
        assert_eq!(pow_mod(3, &BigUint::from(0u32), 7), 1);
        assert_eq!(pow_mod(10, &BigUint::from(5u32), 1), 0);
    }

    #[test]
    fn pow_mod_huge_exponent() {
        let huge = BigUint::from(10u32).pow(18);
        assert_eq!(pow_mod(2, &huge, 5), 1);
        // 10^18 = 4 mod 6, and 2^4 = 16 = 2 mod 7.
        assert_eq!(pow_mod(2, &huge, 7), 2);
    }

    #[test]
    fn crt_small_examples() {
        let r = crt_combine(&[(3, 5), (4, 7)]).unwrap();
        assert_eq!(r, Residue { value: 18, modulus: 35 });
        assert_eq!(crt_combine(&[(1, 2), (2, 3)]).unwrap().value, 5);
        assert_eq!(crt_combine(&[(0, 4), (0, 9)]).unwrap().value, 0);
    }

    #[test]
    fn crt_rejects_common_factor() {
        assert_eq!(
            crt_combine(&[(1, 6), (2, 9)]),
            Err(Error::NonCoprimeModuli(6, 9))
        );
    }

    #[test]
    fn crt_rejects_overflow() {
        let big = 1u64 << 33;
        assert_eq!(
            crt_combine(&[(0, big), (1, big - 1)]),
            Err(Error::CrtOverflow)
        );
    }

    #[test]
    fn primality_small_and_carmichael() {
        let primes = [2u64, 3, 5, 7, 11, 97, 101, 7919];
        for p in primes {
            assert!(is_prime(p), "{p}");
        }
        let composites = [0u64, 1, 4, 9, 91, 561, 41041, 25326001];
        for c in composites {
            assert!(!is_prime(c), "{c}");
        }
    }

    #[test]
    fn stirling_row_matches_table() {
        let row = stirling_row_mod(5, 1_000_000);
        assert_eq!(row, vec![0, 1, 15, 25, 10, 1]);
    }

    #[test]
    fn stirling_row_matches_exact_reduction() {
        use crate::combinatorics::stirling2;
        use num::bigint::BigInt;
        use num::traits::ToPrimitive;
        for m in [2u64, 7, 12, 97, 1_000_000_007] {
            for k in 0..=25u64 {
                let row = stirling_row_mod(k, m);
                for l in 0..=k {
                    let exact = stirling2(k, l) % BigInt::from(m);
                    assert_eq!(
                        row[l as usize],
                        exact.to_u64().unwrap(),
                        "k={k} l={l} mod {m}"
                    );
                }
            }
        }
    }

    fn b_value(k: u64, n: u64, m: u64) -> u64 {
        b_neg_mod(k, &BigUint::from(n), &modulus(m)).value
    }

    fn c_value(k: u64, n: u64, m: u64) -> Result<u64, Error> {
        c_neg_mod(k, &BigUint::from(n), &modulus(m)).map(|r| r.value)
    }

    #[test]
    fn b_neg_mod_small_values() {
        // B_5^(-2) = 454, B_4^(-4) = 6902, B_4^(-3) = 1066.
        assert_eq!(b_value(2, 5, 5), 454 % 5);
        assert_eq!(b_value(4, 4, 7), 6902 % 7);
        assert_eq!(b_value(3, 4, 100), 66);
        assert_eq!(b_value(0, 9, 12), 1);
    }

    #[test]
    fn c_neg_mod_small_values() {
        // C_2^(-1) = 1, C_1^(-2) = 3, C_0^(-3) = 1, C_4^(-2) = 31.
        assert_eq!(c_value(1, 2, 3), Ok(1));
        assert_eq!(c_value(2, 1, 7), Ok(3));
        assert_eq!(c_value(3, 0, 5), Ok(1));
        assert_eq!(c_value(2, 4, 45), Ok(31));
    }

    #[test]
    fn c_neg_mod_rejects_k_zero() {
        assert_eq!(
            c_neg_mod(0, &BigUint::from(3u32), &modulus(5)),
            Err(Error::TypeCUpperIndexZero)
        );
    }

    #[test]
    fn reduced_path_rejects_tiny_lower_index() {
        let m = modulus(8);
        let err = b_neg_mod_reduced(3, &BigUint::from(1u32), &m).unwrap_err();
        assert_eq!(
            err,
            Error::BelowPeriodicityBound {
                n: "1".into(),
                bound: 3,
                modulus: 8,
            }
        );
    }

    #[test]
    fn reduced_agrees_with_direct_above_bound() {
        for m in [4u64, 5, 12, 45, 100, 360] {
            let m = modulus(m);
            for k in 0..=6u64 {
                for n in 3u32..=40 {
                    let n = BigUint::from(n);
                    let direct = dual_sum_direct(k, Family::B, &n, m.value());
                    let reduced = b_neg_mod_reduced(k, &n, &m).unwrap();
                    assert_eq!(direct, reduced, "B k={k} n={n} mod {}", m.value());
                    if k >= 1 {
                        let shifted = &n + 1u32;
                        let direct_c = dual_sum_direct(k, Family::C, &shifted, m.value());
                        let reduced_c = c_neg_mod_reduced(k, &n, &m).unwrap();
                        assert_eq!(direct_c, reduced_c, "C k={k} n={n} mod {}", m.value());
                    }
                }
            }
        }
    }

    #[test]
    fn huge_lower_index_powers_of_two() {
        // B_n^(-1) = 2^n; n = 10^18 is divisible by 4 = phi(5), so the
        // residue mod 5 is 2^0 = 1.
        let n = BigUint::from(10u32).pow(18);
        assert_eq!(b_neg_mod(1, &n, &modulus(5)).value, 1);
    }
}
