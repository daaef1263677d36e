//! Deterministic point-set generators. All randomness comes from ChaCha8
//! seeded with a caller-supplied u64, so identical parameters always yield
//! identical sets.

use crate::census::PointSet;
use crate::error::Error;
use crate::rational::{rat_int, Rational};
use crate::vector::RationalVector;
use num::{BigInt, Signed, ToPrimitive};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Hard cap on the number of points any generator will produce.
pub const POINT_BUDGET: u128 = 1 << 20;

/// The side^k integer lattice {0, …, side−1}^k.
pub fn generate_grid(side: u32, k: u32) -> Result<PointSet, Error> {
    if side < 1 || k < 1 {
        return Err(Error::InvalidParameter("side and k must be >= 1".into()));
    }
    let total = (side as u128).pow(k);
    if total > POINT_BUDGET {
        return Err(Error::BudgetExceeded {
            requested: total,
            budget: POINT_BUDGET,
        });
    }
    let mut points = Vec::with_capacity(total as usize);
    let mut coords = vec![0u32; k as usize];
    loop {
        points.push(RationalVector::from_integers(
            &coords.iter().map(|&c| c as i64).collect::<Vec<_>>(),
        ));
        // odometer increment
        let mut pos = k as usize;
        loop {
            if pos == 0 {
                return PointSet::new(points, format!("grid{side}x{k}d"));
            }
            pos -= 1;
            coords[pos] += 1;
            if coords[pos] < side {
                break;
            }
            coords[pos] = 0;
        }
    }
}

/// n integer points drawn uniformly from [0, coord_bound]^k by ChaCha8.
pub fn generate_random(n: u64, k: u32, coord_bound: u64, seed: u64) -> Result<PointSet, Error> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidParameter("n and k must be >= 1".into()));
    }
    if n as u128 > POINT_BUDGET {
        return Err(Error::BudgetExceeded {
            requested: n as u128,
            budget: POINT_BUDGET,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| {
            RationalVector::from_integers(
                &(0..k)
                    .map(|_| rng.gen_range(0..=coord_bound) as i64)
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    PointSet::new(points, format!("random{n}"))
}

/// An origin-concentrated set: n/2 positive-lattice points taken nearest the
/// origin first (ties broken lexicographically) plus n/2 seeded random
/// rational points, everything within norm `radius`.
pub fn generate_concentrated(
    n: u64,
    k: u32,
    radius: &Rational,
    seed: u64,
) -> Result<PointSet, Error> {
    if k < 1 {
        return Err(Error::InvalidParameter("k must be >= 1".into()));
    }
    if n % 2 != 0 || n == 0 {
        return Err(Error::OddCount);
    }
    if n as u128 > POINT_BUDGET {
        return Err(Error::BudgetExceeded {
            requested: n as u128,
            budget: POINT_BUDGET,
        });
    }
    if !radius.is_positive() {
        return Err(Error::InvalidParameter("radius must be positive".into()));
    }
    let radius_sq = radius * radius;
    let max_coord = radius
        .floor()
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("radius out of range".into()))?;
    let lattice_space = (max_coord as u128).checked_pow(k).unwrap_or(u128::MAX);
    if lattice_space > POINT_BUDGET {
        return Err(Error::BudgetExceeded {
            requested: lattice_space,
            budget: POINT_BUDGET,
        });
    }

    // positive lattice points with norm <= radius, nearest first
    let mut lattice: Vec<(Rational, Vec<u64>)> = Vec::new();
    if max_coord >= 1 {
        let mut coords = vec![1u64; k as usize];
        'outer: loop {
            let norm_sq: Rational = coords.iter().map(|&c| rat_int((c * c) as i64)).sum();
            if norm_sq <= radius_sq {
                lattice.push((norm_sq, coords.clone()));
            }
            let mut pos = k as usize;
            loop {
                if pos == 0 {
                    break 'outer;
                }
                pos -= 1;
                coords[pos] += 1;
                if coords[pos] <= max_coord {
                    break;
                }
                coords[pos] = 1;
            }
        }
    }
    lattice.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let half = (n / 2) as usize;
    if lattice.len() < half {
        return Err(Error::RadiusTooSmall {
            needed: half,
            available: lattice.len(),
        });
    }

    let mut points: Vec<RationalVector> = lattice[..half]
        .iter()
        .map(|(_, c)| {
            RationalVector::from_integers(&c.iter().map(|&x| x as i64).collect::<Vec<_>>())
        })
        .collect();

    // random rational half: coordinates p/4096 with rejection on the norm cap
    const DENOM: i64 = 4096;
    let bound = (radius * rat_int(DENOM))
        .floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::InvalidParameter("radius out of range".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while points.len() < n as usize {
        let candidate: Vec<Rational> = (0..k)
            .map(|_| {
                Rational::new(
                    BigInt::from(rng.gen_range(-bound..=bound)),
                    BigInt::from(DENOM),
                )
            })
            .collect();
        let norm_sq: Rational = candidate.iter().map(|c| c * c).sum();
        if norm_sq <= radius_sq {
            points.push(RationalVector::new(candidate)?);
        }
    }
    PointSet::new(points, format!("concentrated{n}"))
}
