//! Exact distance censuses over finite rational point sets.
//!
//! Distances are compared through exact squared distances only; a floating
//! square root never participates in an equality or distinctness decision.

use crate::error::Error;
use crate::rational::Rational;
use crate::vector::RationalVector;
use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

/// A finite list of k-dimensional exact-rational points. Duplicate points
/// are permitted; [`PointSet::has_duplicates`] flags them for validation
/// output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<RationalVector>,
    dim: usize,
    label: String,
}

impl PointSet {
    pub fn new(points: Vec<RationalVector>, label: impl Into<String>) -> Result<Self, Error> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = points[0].dim();
        for p in &points {
            if p.dim() != dim {
                return Err(Error::MixedDimensions {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        Ok(PointSet {
            points,
            dim,
            label: label.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[RationalVector] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn has_duplicates(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.points.iter().any(|p| !seen.insert(p.clone()))
    }

    pub fn translate(&self, offset: &RationalVector) -> Result<PointSet, Error> {
        let points = self
            .points
            .iter()
            .map(|p| p.translate(offset))
            .collect::<Result<Vec<_>, _>>()?;
        PointSet::new(points, self.label.clone())
    }
}

/// Counts for one point set: total unordered pairs, distinct nonzero
/// pairwise distances, and pairs at distance exactly 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusResult {
    pub n_points: u64,
    pub pair_count: u64,
    #[serde(rename = "distinct")]
    pub distinct_count: u64,
    #[serde(rename = "unit_pairs")]
    pub unit_pair_count: u64,
}

fn squared_distance(a: &RationalVector, b: &RationalVector) -> Rational {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| {
            let d = x - y;
            &d * &d
        })
        .sum()
}

/// All n(n−1)/2 exact squared distances over unordered pairs, as a multiset.
pub fn pairwise_squared_distances(ps: &PointSet) -> Result<Vec<Rational>, Error> {
    if ps.len() < 2 {
        return Err(Error::EmptyOrSingleton);
    }
    let pts = ps.points();
    let mut out = Vec::with_capacity(ps.len() * (ps.len() - 1) / 2);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            out.push(squared_distance(&pts[i], &pts[j]));
        }
    }
    Ok(out)
}

struct PairScan {
    distinct: BTreeSet<Rational>,
    unit_pairs: u64,
}

fn scan_rows(pts: &[RationalVector], rows: impl Iterator<Item = usize>) -> PairScan {
    let one = Rational::one();
    let mut distinct = BTreeSet::new();
    let mut unit_pairs = 0u64;
    for i in rows {
        for j in (i + 1)..pts.len() {
            let d = squared_distance(&pts[i], &pts[j]);
            if d == one {
                unit_pairs += 1;
            }
            if !d.is_zero() {
                distinct.insert(d);
            }
        }
    }
    PairScan {
        distinct,
        unit_pairs,
    }
}

/// Scans the unordered-pair space, optionally split across worker threads.
/// The merge is a set union plus a counter sum, so the result is identical
/// for every worker count.
fn pair_scan(ps: &PointSet, workers: usize) -> PairScan {
    let pts = ps.points();
    let workers = workers.max(1).min(pts.len().max(1));
    if workers == 1 {
        return scan_rows(pts, 0..pts.len());
    }
    let parts = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| scope.spawn(move || scan_rows(pts, (w..pts.len()).step_by(workers))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap())
            .collect::<Vec<_>>()
    });
    let mut merged = PairScan {
        distinct: BTreeSet::new(),
        unit_pairs: 0,
    };
    for part in parts {
        merged.unit_pairs += part.unit_pairs;
        merged.distinct.extend(part.distinct);
    }
    merged
}

/// Number of distinct nonzero pairwise distances, decided by exact equality
/// of squared distances. Zero distances (duplicate points) are excluded.
pub fn distinct_distance_count(ps: &PointSet) -> Result<u64, Error> {
    if ps.len() < 2 {
        return Err(Error::EmptyOrSingleton);
    }
    Ok(pair_scan(ps, 1).distinct.len() as u64)
}

/// Number of unordered pairs at squared distance exactly 1.
pub fn unit_pair_count(ps: &PointSet) -> Result<u64, Error> {
    Ok(pair_scan(ps, 1).unit_pairs)
}

/// Full census in one pass over the pair space, split across `workers`
/// threads. The payload is independent of the worker count.
pub fn census(ps: &PointSet, workers: usize) -> Result<CensusResult, Error> {
    let n = ps.len() as u64;
    let scan = pair_scan(ps, workers);
    Ok(CensusResult {
        n_points: n,
        pair_count: n * (n - 1) / 2,
        distinct_count: scan.distinct.len() as u64,
        unit_pair_count: scan.unit_pairs,
    })
}

/// Number of distinct exact squared distances over cross pairs (one point
/// from each set). Zero distances from coincident cross pairs are counted.
pub fn bipartite_distinct_distance_count(a: &PointSet, b: &PointSet) -> Result<u64, Error> {
    if a.dim() != b.dim() {
        return Err(Error::MixedDimensions {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let mut seen = BTreeSet::new();
    for p in a.points() {
        for q in b.points() {
            seen.insert(squared_distance(p, q));
        }
    }
    Ok(seen.len() as u64)
}

/// Unit-pair count via spatial bucketing: points go into axis-aligned cells
/// of side 1 and only neighboring cells are compared. Agrees with
/// [`unit_pair_count`] on every input.
pub fn accelerated_unit_pair_count(ps: &PointSet) -> Result<u64, Error> {
    let one = Rational::one();
    let k = ps.dim();
    let mut cells: HashMap<Vec<BigInt>, Vec<usize>> = HashMap::new();
    for (idx, p) in ps.points().iter().enumerate() {
        let key: Vec<BigInt> = p.coords().iter().map(|c| c.floor().to_integer()).collect();
        cells.entry(key).or_default().push(idx);
    }
    let offsets = neighbor_offsets(k);
    let pts = ps.points();
    let mut count = 0u64;
    for (key, members) in &cells {
        // same cell: each unordered pair once
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if squared_distance(&pts[i], &pts[j]) == one {
                    count += 1;
                }
            }
        }
        // neighboring cells: only in one direction, so each pair is seen once
        for off in &offsets {
            let nkey: Vec<BigInt> = key.iter().zip(off).map(|(c, d)| c + d).collect();
            if nkey <= *key {
                continue;
            }
            if let Some(others) = cells.get(&nkey) {
                for &i in members {
                    for &j in others {
                        if squared_distance(&pts[i], &pts[j]) == one {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(count)
}

fn neighbor_offsets(k: usize) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                [-1, 0, 1].iter().map(move |&d| {
                    let mut v = prefix.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&d| d != 0));
    out
}

impl CensusResult {
    /// Cross-check against an independently computed multiset of squared
    /// distances. Used by tests and the verify suite.
    pub fn consistent_with(&self, squared: &[Rational]) -> bool {
        let one = Rational::one();
        let unit = squared.iter().filter(|d| **d == one).count() as u64;
        let distinct = squared
            .iter()
            .filter(|d| !d.is_zero())
            .collect::<BTreeSet<_>>()
            .len() as u64;
        self.pair_count == squared.len() as u64
            && self.unit_pair_count == unit
            && self.distinct_count == distinct
    }
}
