//! Exact rational scalars: parsing, formatting, and perfect-power tests.

use crate::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// The scalar field. All arithmetic in this crate is exact.
pub type Rational = BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer rational.
pub fn rat_i64(value: i64) -> Rational {
    Rational::from(BigInt::from(value))
}

/// Parse a rational literal: optional leading `-`, digits, optional `/digits`.
///
/// Grammar is deliberately strict — `"1/0"`, `"1/-2"`, `"+3"`, `" 3"`, `"1.5"`
/// and an empty numerator or denominator are all rejected. The result is in
/// lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::BadLiteral(text.to_string());
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = parse_signed_integer(numer_text).ok_or_else(bad)?;
    let denom = match denom_text {
        None => BigInt::from(1),
        Some(d) => {
            // Denominator must be a bare positive integer: no sign, no zero.
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let value: BigInt = d.parse().map_err(|_| bad())?;
            if value.is_zero() {
                return Err(bad());
            }
            value
        }
    };
    Ok(Rational::new(numer, denom))
}

fn parse_signed_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Render a rational as `n` or `n/d` (always lowest terms, `d > 0`).
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Exact n-th root when `value` is a perfect n-th power of a rational.
///
/// For even `n`, negative inputs have no root; the nonnegative root is
/// returned. For odd `n`, the sign is preserved.
pub fn rational_nth_root(value: &Rational, n: u32) -> Option<Rational> {
    assert!(n >= 1);
    if value.is_zero() {
        return Some(Rational::zero());
    }
    if n % 2 == 0 && value.is_negative() {
        return None;
    }
    let root = |x: &BigInt| -> Option<BigInt> {
        let negate = x.is_negative();
        let magnitude = x.abs();
        let candidate = magnitude.nth_root(n);
        if candidate.clone().pow(n) == magnitude {
            Some(if negate { -candidate } else { candidate })
        } else {
            None
        }
    };
    let numer = root(value.numer())?;
    let denom = root(value.denom())?;
    Some(Rational::new(numer, denom))
}

/// Exact square root of a perfect-square rational.
pub fn rational_sqrt(value: &Rational) -> Option<Rational> {
    rational_nth_root(value, 2)
}
