//! Harmonic numbers and the exact-sum mass/gap estimates on distinct-natural
//! vectors, together with their log-form display approximations.

use crate::error::Error;
use crate::rational::{rat_int, Rational};
use crate::vector::{NaturalVector, Scale};
use num::BigInt;

/// Euler–Mascheroni constant, 16 significant digits.
pub const EULER_MASCHERONI: f64 = 0.5772156649015329;

/// Exact harmonic number H_x = Σ_{n ≤ x} 1/n.
pub fn harmonic_number(x: u64) -> Result<Rational, Error> {
    if x == 0 {
        return Err(Error::NonPositiveInput);
    }
    let mut sum = Rational::from_integer(BigInt::from(0));
    for n in 1..=x {
        sum += Rational::new(BigInt::from(1), BigInt::from(n));
    }
    Ok(sum)
}

/// The log-form approximation ln x + γ of H_x.
pub fn harmonic_approx(x: u64) -> Result<f64, Error> {
    if x == 0 {
        return Err(Error::NonPositiveInput);
    }
    Ok((x as f64).ln() + EULER_MASCHERONI)
}

/// Exact-sum upper bound m·Σ_{k=0}^{n−1} 1/(Inf + k) ≥ mass(v, m).
/// Only valid on pairwise-distinct coordinates.
pub fn mass_upper_bound(v: &NaturalVector, s: &Scale) -> Result<Rational, Error> {
    v.require_distinct()?;
    let inf = v.inf();
    let sum: Rational = (0..v.dim() as u64)
        .map(|k| Rational::new(BigInt::from(1), BigInt::from(inf + k)))
        .sum();
    Ok(s.value() * sum)
}

/// Exact-sum lower bound m·Σ_{k=0}^{n−1} 1/(sup − k) ≤ mass(v, m).
/// Distinctness forces sup ≥ dim, so every denominator is ≥ 1.
pub fn mass_lower_bound(v: &NaturalVector, s: &Scale) -> Result<Rational, Error> {
    v.require_distinct()?;
    let sup = v.sup();
    let sum: Rational = (0..v.dim() as u64)
        .map(|k| Rational::new(BigInt::from(1), BigInt::from(sup - k)))
        .sum();
    Ok(s.value() * sum)
}

/// The paper-facing log forms (lower, upper) =
/// (m·log(1 − (n−1)/sup)⁻¹, m·log(1 + (n−1)/Inf)).
///
/// These are display approximations of the exact sums above, off by at most
/// m/(sup−n+1) and m/Inf respectively; they are reported, never asserted.
pub fn mass_bounds_log_form(v: &NaturalVector, s: &Scale) -> Result<(f64, f64), Error> {
    v.require_distinct()?;
    let m = crate::rational::rational_to_f64(s.value());
    let n = v.dim() as f64;
    let inf = v.inf() as f64;
    let sup = v.sup() as f64;
    let lower = m * (1.0 - (n - 1.0) / sup).recip().ln();
    let upper = m * (1.0 + (n - 1.0) / inf).ln();
    Ok((lower, upper))
}

/// Exact-sum upper bound on gap²:
/// n·sup(x_j)² + m²·mass_upper_bound(squares, 1) − 2mn ≥ gap²(v, m).
pub fn gap_sq_upper_bound(v: &NaturalVector, s: &Scale) -> Result<Rational, Error> {
    v.require_distinct()?;
    let unit = Scale::from_integer(1)?;
    let n = rat_int(v.dim() as i64);
    let sup = rat_int(v.sup() as i64);
    let m = s.value();
    Ok(&n * &sup * &sup + m * m * mass_upper_bound(&v.squares(), &unit)? - rat_int(2) * m * &n)
}

/// Exact-sum lower bound on gap²:
/// n·Inf(x_j)² + m²·mass_lower_bound(squares, 1) − 2mn ≤ gap²(v, m).
/// May be negative.
pub fn gap_sq_lower_bound(v: &NaturalVector, s: &Scale) -> Result<Rational, Error> {
    v.require_distinct()?;
    let unit = Scale::from_integer(1)?;
    let n = rat_int(v.dim() as i64);
    let inf = rat_int(v.inf() as i64);
    let m = s.value();
    Ok(&n * &inf * &inf + m * m * mass_lower_bound(&v.squares(), &unit)? - rat_int(2) * m * &n)
}
