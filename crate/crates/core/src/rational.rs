//! Arbitrary-precision rational scalars and the few float conversions the
//! crate permits.

use crate::error::Error;
use num::bigint::BigInt;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders canonically: "p" for integers, "p/q" otherwise, sign on the
/// numerator.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "p", "-p" or "p/q" with an arbitrary-precision integer p and a
/// nonzero integer q.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational: {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator: {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Nearest-f64 conversion; `BigRational::to_f64` handles magnitudes beyond
/// the f64 range by saturating to infinity, which is acceptable for display.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// √r as a float with relative error well under 2⁻⁵⁰: the root is taken on
/// integers after scaling by 2¹²⁸, so the integer square root alone carries
/// ~64 correct bits before the final f64 rounding.
pub fn sqrt_rational(r: &Rational) -> f64 {
    assert!(!r.is_negative(), "sqrt of negative rational");
    if r.is_zero() {
        return 0.0;
    }
    let scaled: BigInt = (r.numer() * r.denom()).abs() << 128u32;
    let root = scaled.sqrt();
    rational_to_f64(&Rational::new(root, r.denom().abs() << 64u32))
}
