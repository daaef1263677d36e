//! Lower-bound formulas, exhaustive inequality sweeps, and the search for
//! counterexamples to the gap/norm transference claim.

use crate::census::{census, PointSet};
use crate::compression::{gap_squared, gap_squared_via_identity, mass};
use crate::error::Error;
use crate::estimates::{gap_sq_lower_bound, gap_sq_upper_bound, mass_lower_bound, mass_upper_bound};
use crate::rational::{format_rational, Rational};
use crate::report::{sig12, BoundReport, ReportParams, ReportRow};
use crate::vector::{NaturalVector, RationalVector, Scale};
use num::BigInt;
use serde::{Deserialize, Serialize};

/// Parameters of the bound formulas. `epsilon` stands in for the o(1)
/// exponent slack, `constant` for the dimension-dependent implied constant;
/// neither is derived here.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    pub n: u64,
    pub k: u32,
    pub epsilon: f64,
    pub constant: f64,
}

impl BoundParams {
    pub fn new(n: u64, k: u32, epsilon: f64, constant: f64) -> Result<Self, Error> {
        if n < 2 || k < 2 {
            return Err(Error::InvalidParameter("need n >= 2 and k >= 2".into()));
        }
        if !(epsilon >= 0.0) {
            return Err(Error::InvalidParameter("epsilon must be >= 0".into()));
        }
        if !(constant > 0.0) {
            return Err(Error::InvalidParameter("constant must be > 0".into()));
        }
        Ok(BoundParams {
            n,
            k,
            epsilon,
            constant,
        })
    }
}

/// Unit-distance lower-bound formula c·(√k/2)·n^(1−ε). The exponent is
/// written 1−ε so that larger ε only weakens the bound.
pub fn unit_distance_bound(p: &BoundParams) -> f64 {
    p.constant * (p.k as f64).sqrt() / 2.0 * (p.n as f64).powf(1.0 - p.epsilon)
}

/// Distinct-distance lower-bound formula c·(√k/2)·n^(2/k−ε).
pub fn distinct_distance_bound(p: &BoundParams) -> f64 {
    p.constant * (p.k as f64).sqrt() / 2.0 * (p.n as f64).powf(2.0 / p.k as f64 - p.epsilon)
}

/// The three closing corollary settings: n points living in dimension n,
/// 2n, or n².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CorollaryVariant {
    DimN,
    Dim2N,
    DimNSquared,
}

impl std::str::FromStr for CorollaryVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "dim_n" => Ok(CorollaryVariant::DimN),
            "dim_2n" => Ok(CorollaryVariant::Dim2N),
            "dim_n_squared" => Ok(CorollaryVariant::DimNSquared),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

pub fn corollary_bound(n: u64, variant: CorollaryVariant, epsilon: f64) -> Result<f64, Error> {
    if n < 2 {
        return Err(Error::InvalidParameter("need n >= 2".into()));
    }
    let nf = n as f64;
    Ok(match variant {
        CorollaryVariant::DimN => nf.powf(2.0 / nf + 0.5 - epsilon) / 2.0,
        CorollaryVariant::Dim2N => 2.0f64.sqrt() / 2.0 * nf.powf(1.0 / nf + 0.5 - epsilon),
        CorollaryVariant::DimNSquared => nf.powf(2.0 / (nf * nf) + 1.0 - epsilon) / 2.0,
    })
}

/// One failed relation, with both sides rendered as exact rationals so it
/// can be re-verified independently from the witness vectors alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: String,
    pub witness_x: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness_y: Vec<u64>,
    pub scale: u64,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub claim_id: String,
    pub domain_description: String,
    pub checked_count: u64,
    pub violations: Vec<Violation>,
}

impl ClaimVerdict {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }
}

/// Default cap on retained violations per verdict.
pub const VIOLATION_CAP: usize = 100;

const TRANSFERENCE_VECTOR_BUDGET: u128 = 4096;
const SWEEP_VECTOR_BUDGET: u128 = 1 << 20;

fn natural_rational(coords: &[u64]) -> RationalVector {
    RationalVector::new(
        coords
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect(),
    )
    .expect("nonempty")
}

fn enumerate_tuples(coord_limit: u64, dim: u32, require_distinct: bool) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut coords = vec![1u64; dim as usize];
    loop {
        let ok = !require_distinct || {
            let mut sorted = coords.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        };
        if ok {
            out.push(coords.clone());
        }
        let mut pos = dim as usize;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            coords[pos] += 1;
            if coords[pos] <= coord_limit {
                break;
            }
            coords[pos] = 1;
        }
    }
}

/// Searches all ordered pairs of natural vectors with coordinates in
/// [1, coord_limit] for failures of the transference claim: ‖x‖ < ‖y‖
/// should hold exactly when gap²(x, 1) < gap²(y, 1). Both directions are
/// checked; everything is compared exactly.
pub fn transference_search(
    coord_limit: u64,
    dim: u32,
    require_distinct: bool,
    cap: usize,
) -> Result<ClaimVerdict, Error> {
    if coord_limit < 1 || dim < 2 {
        return Err(Error::InvalidParameter(
            "need coord_limit >= 1 and dim >= 2".into(),
        ));
    }
    let space = (coord_limit as u128).checked_pow(dim).unwrap_or(u128::MAX);
    if space > TRANSFERENCE_VECTOR_BUDGET {
        return Err(Error::BudgetExceeded {
            requested: space,
            budget: TRANSFERENCE_VECTOR_BUDGET,
        });
    }
    let unit = Scale::from_integer(1)?;
    let tuples = enumerate_tuples(coord_limit, dim, require_distinct);
    let vectors: Vec<(Vec<u64>, u128, Rational)> = tuples
        .into_iter()
        .map(|coords| {
            let norm_sq: u128 = coords.iter().map(|&c| (c as u128) * (c as u128)).sum();
            let gap_sq = gap_squared(&natural_rational(&coords), &unit)?;
            Ok((coords, norm_sq, gap_sq))
        })
        .collect::<Result<_, Error>>()?;

    let mut violations = Vec::new();
    let mut checked = 0u64;
    for (x, nx, gx) in &vectors {
        for (y, ny, gy) in &vectors {
            checked += 1;
            if violations.len() >= cap {
                continue;
            }
            if nx < ny && gx >= gy {
                violations.push(Violation {
                    kind: "norm_lt_but_gap_ge".into(),
                    witness_x: x.clone(),
                    witness_y: y.clone(),
                    scale: 1,
                    lhs: format_rational(gx),
                    relation: "expected <".into(),
                    rhs: format_rational(gy),
                });
            } else if gx < gy && nx >= ny {
                violations.push(Violation {
                    kind: "gap_lt_but_norm_ge".into(),
                    witness_x: x.clone(),
                    witness_y: y.clone(),
                    scale: 1,
                    lhs: nx.to_string(),
                    relation: "expected <".into(),
                    rhs: ny.to_string(),
                });
            }
        }
    }
    Ok(ClaimVerdict {
        claim_id: "transference".into(),
        domain_description: format!(
            "ordered pairs of vectors in [1,{coord_limit}]^{dim}, distinct={require_distinct}"
        ),
        checked_count: checked,
        violations,
    })
}

fn for_each_combination(coord_limit: u64, dim: u32, f: &mut impl FnMut(&[u64])) {
    // strictly increasing tuples; the bounds are permutation-invariant
    fn recurse(start: u64, limit: u64, left: u32, acc: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if left == 0 {
            f(acc);
            return;
        }
        for c in start..=limit.saturating_sub(left as u64 - 1) {
            acc.push(c);
            recurse(c + 1, limit, left - 1, acc, f);
            acc.pop();
        }
    }
    recurse(1, coord_limit, dim, &mut Vec::new(), f);
}

/// Verifies the exact mass and gap² sandwiches plus the gap² identity over
/// every distinct-coordinate natural vector with coordinates ≤ coord_limit
/// and dimension 2..=dim_max, for each scale. All comparisons are exact;
/// any violation is returned with both sides rendered.
pub fn inequality_sweep(
    coord_limit: u64,
    dim_max: u32,
    scales: &[u64],
) -> Result<ClaimVerdict, Error> {
    if coord_limit < 2 || dim_max < 2 || scales.is_empty() {
        return Err(Error::InvalidParameter(
            "need coord_limit >= 2, dim_max >= 2 and at least one scale".into(),
        ));
    }
    if scales.iter().any(|&m| m == 0) {
        return Err(Error::InvalidParameter("scales must be >= 1".into()));
    }
    let mut combos = 0u128;
    for dim in 2..=dim_max.min(coord_limit as u32) {
        combos += binomial(coord_limit, dim as u64);
    }
    if combos > SWEEP_VECTOR_BUDGET {
        return Err(Error::BudgetExceeded {
            requested: combos,
            budget: SWEEP_VECTOR_BUDGET,
        });
    }

    let mut checked = 0u64;
    let mut violations: Vec<Violation> = Vec::new();
    let mut sweep_error: Option<Error> = None;
    for dim in 2..=dim_max.min(coord_limit as u32) {
        for_each_combination(coord_limit, dim, &mut |coords| {
            if sweep_error.is_some() {
                return;
            }
            if let Err(e) = check_vector(coords, scales, &mut checked, &mut violations) {
                sweep_error = Some(e);
            }
        });
    }
    if let Some(e) = sweep_error {
        return Err(e);
    }
    Ok(ClaimVerdict {
        claim_id: "inequalities".into(),
        domain_description: format!(
            "distinct-coordinate natural vectors, coords <= {coord_limit}, dim 2..={dim_max}, scales {scales:?}"
        ),
        checked_count: checked,
        violations,
    })
}

fn check_vector(
    coords: &[u64],
    scales: &[u64],
    checked: &mut u64,
    violations: &mut Vec<Violation>,
) -> Result<(), Error> {
    let nat = NaturalVector::new(coords.to_vec())?;
    let rv = nat.to_rational_vector();
    fn push(
        violations: &mut Vec<Violation>,
        coords: &[u64],
        kind: &str,
        relation: &str,
        m: u64,
        lhs: &Rational,
        rhs: &Rational,
    ) {
        if violations.len() < VIOLATION_CAP {
            violations.push(Violation {
                kind: kind.into(),
                witness_x: coords.to_vec(),
                witness_y: Vec::new(),
                scale: m,
                lhs: format_rational(lhs),
                relation: relation.into(),
                rhs: format_rational(rhs),
            });
        }
    }
    for &m in scales {
        let s = Scale::from_integer(m as i64)?;
        *checked += 1;
        let mass_v = mass(&rv, &s)?;
        let mass_lo = mass_lower_bound(&nat, &s)?;
        let mass_hi = mass_upper_bound(&nat, &s)?;
        if mass_lo > mass_v {
            push(violations, coords, "mass_lower", "expected <=", m, &mass_lo, &mass_v);
        }
        if mass_v > mass_hi {
            push(violations, coords, "mass_upper", "expected <=", m, &mass_v, &mass_hi);
        }
        let gap_sq = gap_squared(&rv, &s)?;
        let gap_lo = gap_sq_lower_bound(&nat, &s)?;
        let gap_hi = gap_sq_upper_bound(&nat, &s)?;
        if gap_lo > gap_sq {
            push(violations, coords, "gap_sq_lower", "expected <=", m, &gap_lo, &gap_sq);
        }
        if gap_sq > gap_hi {
            push(violations, coords, "gap_sq_upper", "expected <=", m, &gap_sq, &gap_hi);
        }
        let via_identity = gap_squared_via_identity(&rv, &s)?;
        if gap_sq != via_identity {
            push(violations, coords, "gap_identity", "expected ==", m, &gap_sq, &via_identity);
        }
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Runs censuses over a sweep of point sets and compares them against the
/// bound formulas. The trend flag records whether the distinct-distance
/// ratio measured/bound is non-decreasing along increasing n.
pub fn bound_report(
    sets: &[PointSet],
    epsilon: f64,
    constant: f64,
    workers: usize,
) -> Result<BoundReport, Error> {
    if sets.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut rows = Vec::with_capacity(sets.len());
    for ps in sets {
        let c = census(ps, workers)?;
        let params = BoundParams::new(c.n_points, ps.dim() as u32, epsilon, constant)?;
        let bound_distinct = distinct_distance_bound(&params);
        let bound_unit = unit_distance_bound(&params);
        rows.push(ReportRow {
            config_label: ps.label().to_string(),
            n: c.n_points,
            k: ps.dim() as u32,
            measured_distinct: c.distinct_count,
            measured_unit_pairs: c.unit_pair_count,
            bound_distinct: sig12(bound_distinct),
            bound_unit: sig12(bound_unit),
            ratio_distinct: sig12(c.distinct_count as f64 / bound_distinct),
            ratio_unit: sig12(c.unit_pair_count as f64 / bound_unit),
        });
    }
    let mut by_n: Vec<&ReportRow> = rows.iter().collect();
    by_n.sort_by_key(|r| r.n);
    let trend_ok = by_n.windows(2).all(|w| w[0].ratio_distinct <= w[1].ratio_distinct);
    Ok(BoundReport {
        experiment: "bound_report".into(),
        params: ReportParams {
            epsilon: sig12(epsilon),
            constant: sig12(constant),
            workers: workers as u32,
        },
        rows,
        trend_ok,
    })
}
