//! Exact rational numbers and small helpers for them.
//!
//! Backed by `num_rational::BigRational`, which keeps every value reduced
//! with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number: reduced, positive denominator, arbitrary precision.
pub type Rational = BigRational;

/// `n` as a rational.
pub fn int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` as a reduced rational. Panics on `d == 0`.
pub fn ratio<T: Into<BigInt>, U: Into<BigInt>>(n: T, d: U) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Floor of a rational as a big integer.
pub fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Renders as `num/den`, or just `num` when the value is an integer.
pub fn display(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num`, `num/den`, or `-num/den`.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.trim().parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// True when `r` is a nonnegative integer multiple of `1/k` for k in `{1,2,3}`.
pub fn denominator_in_123(r: &Rational) -> bool {
    !r.is_negative() && (r.denom().is_one() || *r.denom() == BigInt::from(2) || *r.denom() == BigInt::from(3))
}
