//! Exact arithmetic in ℚ and in multiquadratic fields ℚ(√d₁,…,√d_k).
//!
//! A [`RadicalField`] is fixed by a list of square-free radicands that are
//! independent modulo squares. Its ℚ-basis is indexed by the square-free
//! integer each basis vector is the root of: index `1` is the rational unit,
//! index `6` is √6, and so on. A [`FieldElement`] stores one rational
//! coordinate per basis vector, so zero testing and equality are exact and
//! the sign of a nonzero element is found by interval refinement.

mod element;
mod field;

pub use element::{arith, ArithOp, FieldElement, Sign};
pub use field::RadicalField;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let trimmed = text.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical `"p/q"` rendering (the denominator is always written).
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub(crate) fn rational_to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
