//! The compression operator x_i ↦ m/x_i, its mass, and its gap, all in exact
//! rational arithmetic. The only float here is the final square root in
//! [`gap`].

use crate::error::Error;
use crate::rational::{sqrt_rational, Rational};
use crate::vector::{RationalVector, Scale};
use num::Zero;

/// Applies the scale-m compression coordinate-wise: (m/x_1, …, m/x_n).
pub fn compress(v: &RationalVector, s: &Scale) -> Result<RationalVector, Error> {
    v.require_compression_domain()?;
    let m = s.value();
    let coords = v.coords().iter().map(|x| m / x).collect();
    RationalVector::new(coords)
}

/// Mass of the compressed vector: Σ m/x_i.
pub fn mass(v: &RationalVector, s: &Scale) -> Result<Rational, Error> {
    v.require_compression_domain()?;
    let m = s.value();
    Ok(v.coords().iter().map(|x| m / x).sum())
}

/// Squared gap: Σ (x_i − m/x_i)². Exact and nonnegative.
pub fn gap_squared(v: &RationalVector, s: &Scale) -> Result<Rational, Error> {
    v.require_compression_domain()?;
    let m = s.value();
    Ok(v.coords()
        .iter()
        .map(|x| {
            let d = x - m / x;
            &d * &d
        })
        .sum())
}

/// Euclidean gap ‖x − V_m(x)‖ as a float with relative error below 2⁻⁵⁰.
/// All exact comparisons in this crate go through [`gap_squared`] instead.
pub fn gap(v: &RationalVector, s: &Scale) -> Result<f64, Error> {
    Ok(sqrt_rational(&gap_squared(v, s)?))
}

/// The gap² identity route: Σ x_i² + m²·Σ 1/x_i² − 2mn. Must agree with
/// [`gap_squared`] exactly on every input.
pub fn gap_squared_via_identity(v: &RationalVector, s: &Scale) -> Result<Rational, Error> {
    v.require_compression_domain()?;
    let m = s.value();
    let sum_sq: Rational = v.coords().iter().map(|x| x * x).sum();
    let sum_inv_sq: Rational = v
        .coords()
        .iter()
        .map(|x| {
            let sq = x * x;
            sq.recip()
        })
        .sum();
    let n = Rational::from_integer(v.dim().into());
    let two = Rational::from_integer(2.into());
    Ok(sum_sq + m * m * sum_inv_sq - two * m * n)
}

/// True exactly when gap² vanishes, i.e. every coordinate satisfies x_i² = m.
pub fn is_gap_fixed_point(v: &RationalVector, s: &Scale) -> Result<bool, Error> {
    Ok(gap_squared(v, s)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn scale(m: i64) -> Scale {
        Scale::from_integer(m).unwrap()
    }

    #[test]
    fn compress_examples() {
        let v = RationalVector::from_integers(&[1, 2, 4]);
        let out = compress(&v, &scale(2)).unwrap();
        assert_eq!(out.coords(), &[rat_int(2), rat_int(1), rat(1, 2)]);

        let ones = RationalVector::from_integers(&[1, 1]);
        assert_eq!(compress(&ones, &scale(1)).unwrap(), ones);
    }

    #[test]
    fn compress_is_an_involution() {
        let v = RationalVector::from_integers(&[2, 5, 7]);
        let m = scale(3);
        let back = compress(&compress(&v, &m).unwrap(), &m).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn compress_rejects_bad_domain() {
        let v = RationalVector::new(vec![rat_int(3), rat_int(0)]).unwrap();
        assert_eq!(
            compress(&v, &scale(1)),
            Err(Error::ZeroCoordinate { index: 1 })
        );
        let v = RationalVector::from_integers(&[5]);
        assert_eq!(
            compress(&v, &scale(1)),
            Err(Error::DimensionTooSmall { dim: 1 })
        );
    }

    #[test]
    fn mass_examples() {
        assert_eq!(
            mass(&RationalVector::from_integers(&[1, 2, 3]), &scale(1)).unwrap(),
            rat(11, 6)
        );
        assert_eq!(
            mass(&RationalVector::from_integers(&[1, 2, 4]), &scale(2)).unwrap(),
            rat(7, 2)
        );
        assert_eq!(
            mass(&RationalVector::from_integers(&[2, 4]), &scale(1)).unwrap(),
            rat(3, 4)
        );
    }

    #[test]
    fn gap_squared_examples() {
        assert_eq!(
            gap_squared(&RationalVector::from_integers(&[2, 2, 2]), &scale(1)).unwrap(),
            rat(27, 4)
        );
        assert_eq!(
            gap_squared(&RationalVector::from_integers(&[1, 1]), &scale(1)).unwrap(),
            rat_int(0)
        );
        assert_eq!(
            gap_squared(&RationalVector::from_integers(&[1, 2, 3]), &scale(1)).unwrap(),
            rat(337, 36)
        );
    }

    #[test]
    fn gap_examples() {
        let g = gap(&RationalVector::from_integers(&[2, 2, 2]), &scale(1)).unwrap();
        assert!((g - (27.0f64 / 4.0).sqrt()).abs() < 1e-12);
        assert_eq!(
            gap(&RationalVector::from_integers(&[1, 1]), &scale(1)).unwrap(),
            0.0
        );
        let g = gap(&RationalVector::from_integers(&[1, 1, 3]), &scale(1)).unwrap();
        assert!((g - 8.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn identity_examples() {
        let m1 = scale(1);
        assert_eq!(
            gap_squared_via_identity(&RationalVector::from_integers(&[1, 2, 3]), &m1).unwrap(),
            rat(337, 36)
        );
        assert_eq!(
            gap_squared_via_identity(&RationalVector::from_integers(&[1, 1]), &m1).unwrap(),
            rat_int(0)
        );
        assert_eq!(
            gap_squared_via_identity(&RationalVector::from_integers(&[1, 2, 4]), &scale(2))
                .unwrap(),
            rat(57, 4)
        );
    }

    #[test]
    fn gap_vanishes_only_at_sqrt_m() {
        let m4 = scale(4);
        let v = RationalVector::from_integers(&[2, -2, 2]);
        assert!(is_gap_fixed_point(&v, &m4).unwrap());
        let w = RationalVector::from_integers(&[2, 3]);
        assert!(!is_gap_fixed_point(&w, &m4).unwrap());
    }

    #[test]
    fn negative_coordinates_are_in_domain() {
        let v = RationalVector::from_integers(&[-1, 2]);
        let out = compress(&v, &scale(2)).unwrap();
        assert_eq!(out.coords(), &[rat_int(-2), rat_int(1)]);
        assert_eq!(
            gap_squared(&v, &scale(1)).unwrap(),
            gap_squared_via_identity(&v, &scale(1)).unwrap()
        );
    }
}
