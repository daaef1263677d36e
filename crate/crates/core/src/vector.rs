//! Domain vectors: exact rational vectors for the compression operator and
//! positive-integer vectors for the estimate lemmas.

use crate::error::Error;
use crate::rational::{format_rational, rat_int, Rational};
use num::{BigInt, Zero};

/// A k-tuple of exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector {
    coords: Vec<Rational>,
}

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self, Error> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(RationalVector { coords })
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalVector {
            coords: coords.iter().map(|&c| rat_int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn norm_squared(&self) -> Rational {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn translate(&self, offset: &RationalVector) -> Result<Self, Error> {
        if offset.dim() != self.dim() {
            return Err(Error::MixedDimensions {
                expected: self.dim(),
                found: offset.dim(),
            });
        }
        Ok(RationalVector {
            coords: self
                .coords
                .iter()
                .zip(offset.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Checks the domain of the compression operator: dim ≥ 2 and every
    /// coordinate nonzero.
    pub(crate) fn require_compression_domain(&self) -> Result<(), Error> {
        if self.dim() < 2 {
            return Err(Error::DimensionTooSmall { dim: self.dim() });
        }
        for (index, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                return Err(Error::ZeroCoordinate { index });
            }
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        self.coords
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The compression scale m ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scale(Rational);

impl Scale {
    pub fn new(m: Rational) -> Result<Self, Error> {
        if m < rat_int(1) {
            return Err(Error::ScaleTooSmall(format_rational(&m)));
        }
        Ok(Scale(m))
    }

    pub fn from_integer(m: i64) -> Result<Self, Error> {
        Scale::new(rat_int(m))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

/// A tuple of positive integers, the domain of the mass and gap estimates.
/// `distinct` records whether the coordinates are pairwise distinct; the
/// estimate bounds refuse to compute without it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalVector {
    coords: Vec<u64>,
    distinct: bool,
}

impl NaturalVector {
    pub fn new(coords: Vec<u64>) -> Result<Self, Error> {
        if coords.len() < 2 {
            return Err(Error::DimensionTooSmall { dim: coords.len() });
        }
        if coords.iter().any(|&c| c == 0) {
            return Err(Error::NonPositiveInput);
        }
        let mut sorted = coords.clone();
        sorted.sort_unstable();
        let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
        Ok(NaturalVector { coords, distinct })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_distinct(&self) -> bool {
        self.distinct
    }

    pub fn require_distinct(&self) -> Result<(), Error> {
        if self.distinct {
            Ok(())
        } else {
            Err(Error::NonDistinctCoordinates)
        }
    }

    pub fn inf(&self) -> u64 {
        *self.coords.iter().min().expect("dim >= 2")
    }

    pub fn sup(&self) -> u64 {
        *self.coords.iter().max().expect("dim >= 2")
    }

    /// Coordinate-wise squares. Squaring preserves distinctness on naturals.
    pub fn squares(&self) -> NaturalVector {
        NaturalVector {
            coords: self.coords.iter().map(|&c| c * c).collect(),
            distinct: self.distinct,
        }
    }

    pub fn to_rational_vector(&self) -> RationalVector {
        RationalVector {
            coords: self
                .coords
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rational_vector_rejects_empty() {
        assert_eq!(RationalVector::new(vec![]), Err(Error::EmptyInput));
    }

    #[test]
    fn compression_domain_checks() {
        let v = RationalVector::new(vec![rat_int(1)]).unwrap();
        assert_eq!(
            v.require_compression_domain(),
            Err(Error::DimensionTooSmall { dim: 1 })
        );
        let v = RationalVector::new(vec![rat_int(1), rat_int(0)]).unwrap();
        assert_eq!(
            v.require_compression_domain(),
            Err(Error::ZeroCoordinate { index: 1 })
        );
        let v = RationalVector::from_integers(&[3, -2]);
        assert!(v.require_compression_domain().is_ok());
    }

    #[test]
    fn scale_must_be_at_least_one() {
        assert!(Scale::new(rat(1, 2)).is_err());
        assert!(Scale::from_integer(0).is_err());
        assert!(Scale::new(rat(3, 2)).is_ok());
        assert!(Scale::from_integer(1).is_ok());
    }

    #[test]
    fn natural_vector_distinctness() {
        let v = NaturalVector::new(vec![1, 2, 5]).unwrap();
        assert!(v.is_distinct());
        assert_eq!(v.inf(), 1);
        assert_eq!(v.sup(), 5);
        let w = NaturalVector::new(vec![2, 2]).unwrap();
        assert!(!w.is_distinct());
        assert_eq!(w.require_distinct(), Err(Error::NonDistinctCoordinates));
    }

    #[test]
    fn natural_vector_rejects_zero_and_dim_one() {
        assert_eq!(
            NaturalVector::new(vec![1, 0]),
            Err(Error::NonPositiveInput)
        );
        assert_eq!(
            NaturalVector::new(vec![7]),
            Err(Error::DimensionTooSmall { dim: 1 })
        );
    }

    #[test]
    fn squares_preserve_distinctness() {
        let v = NaturalVector::new(vec![2, 3, 5]).unwrap();
        let sq = v.squares();
        assert_eq!(sq.coords(), &[4, 9, 25]);
        assert!(sq.is_distinct());
    }

    #[test]
    fn norm_squared() {
        let v = RationalVector::from_integers(&[1, 1, 3]);
        assert_eq!(v.norm_squared(), rat_int(11));
    }
}
