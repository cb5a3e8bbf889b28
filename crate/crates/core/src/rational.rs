//! Exact rationals and the binary-length size measure.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Binary length of a non-negative integer, with `|0| = 1`.
pub fn int_size(n: &BigUint) -> u64 {
    if n.is_zero() {
        1
    } else {
        n.bits()
    }
}

/// Size of a rational in lowest terms: `|numerator| + |denominator|`.
///
/// Zero is taken as `0/1`, so its size is 2. Negative values are measured by
/// their absolute value (they only occur as linear-system coefficients).
pub fn size_rat(r: &Rational) -> u64 {
    let num = r.numer().abs().to_biguint().expect("abs is non-negative");
    let den = r.denom().to_biguint().expect("denominator is positive");
    int_size(&num) + int_size(&den)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n/d` with an explicit denominator, as used in model and LP dumps.
pub fn fmt_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short form: `n` for integers, `n/d` otherwise.
pub fn fmt_short(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        fmt_ratio(r)
    }
}

/// Parses `digits` or `digits/digits` (optionally signed numerator).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() || d.is_negative() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Decides `size <= 2 * (r*l + r*log2(r) + 1)` exactly.
///
/// With `excess = size - 2*(r*l + 1)`, the inequality is `excess <= 2 r log2 r`,
/// i.e. `2^excess <= r^(2r)`.
pub fn within_size_bound(size: u64, r: u64, l: u64) -> bool {
    let base = 2 * (r * l + 1);
    if size <= base {
        return true;
    }
    if r <= 1 {
        return false;
    }
    let excess = size - base;
    let lhs = BigUint::from(1u8) << excess;
    let rhs = BigUint::from(r).pow((2 * r) as u32);
    lhs <= rhs
}

/// The bound itself as a float, for diagnostics only.
pub fn size_bound_f64(r: u64, l: u64) -> f64 {
    let r = r as f64;
    let log = if r > 0.0 { r.log2() } else { 0.0 };
    2.0 * (r * l as f64 + r * log + 1.0)
}
