//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type RatNum = BigRational;

pub fn rat(n: i64) -> RatNum {
    RatNum::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> RatNum {
    RatNum::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `a`, `-a` or `a/b`.
pub fn parse_rat(s: &str) -> Option<RatNum> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(RatNum::new(n, d))
}

/// `a` or `a/b`, the inverse of [`parse_rat`].
pub fn format_rat(r: &RatNum) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &RatNum) -> bool {
    r.denom().is_one()
}
