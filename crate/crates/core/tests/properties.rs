use distlab::census::{
    accelerated_unit_pair_count, census, distinct_distance_count, unit_pair_count, PointSet,
};
use distlab::compression::{compress, gap, gap_squared, gap_squared_via_identity};
use distlab::io::{pointset_from_csv, pointset_to_csv};
use distlab::rational::{rat, Rational};
use distlab::vector::{RationalVector, Scale};
use proptest::prelude::*;

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (
        (-1000i64..1000).prop_filter("nonzero", |n| *n != 0),
        1i64..50,
    )
        .prop_map(|(n, d)| rat(n, d))
}

fn rational_vector(max_dim: usize) -> impl Strategy<Value = RationalVector> {
    prop::collection::vec(nonzero_rational(), 2..=max_dim)
        .prop_map(|coords| RationalVector::new(coords).unwrap())
}

fn scale() -> impl Strategy<Value = Scale> {
    (1i64..20, 1i64..5).prop_map(|(a, b)| {
        // m = 1 + a/b >= 1
        Scale::new(rat(b + a, b)).unwrap()
    })
}

fn int_point_set(dim: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(prop::collection::vec(-8i64..8, dim), 2..30)
        .prop_map(|pts| {
            PointSet::new(
                pts.iter()
                    .map(|p| RationalVector::from_integers(p))
                    .collect(),
                "prop",
            )
            .unwrap()
        })
}

proptest! {
    #[test]
    fn compress_is_an_involution(v in rational_vector(6), m in scale()) {
        let back = compress(&compress(&v, &m).unwrap(), &m).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn gap_identity_holds_exactly(v in rational_vector(6), m in scale()) {
        prop_assert_eq!(
            gap_squared(&v, &m).unwrap(),
            gap_squared_via_identity(&v, &m).unwrap()
        );
    }

    #[test]
    fn gap_squared_is_nonnegative(v in rational_vector(6), m in scale()) {
        prop_assert!(gap_squared(&v, &m).unwrap() >= rat(0, 1));
    }

    #[test]
    fn float_gap_agrees_with_exact_square(v in rational_vector(4), m in scale()) {
        let g = gap(&v, &m).unwrap();
        let exact = distlab::rational::rational_to_f64(&gap_squared(&v, &m).unwrap());
        let err = (g * g - exact).abs();
        prop_assert!(err <= 1e-10 * exact.max(1.0));
    }

    #[test]
    fn distinct_count_bounded_by_pair_count(ps in int_point_set(2)) {
        let c = census(&ps, 1).unwrap();
        prop_assert!(c.distinct_count <= c.pair_count);
        prop_assert!(c.unit_pair_count <= c.pair_count);
    }

    #[test]
    fn census_invariant_under_translation(ps in int_point_set(2), dx in -50i64..50, dy in -50i64..50, d in 1i64..9) {
        let offset = RationalVector::new(vec![rat(dx, d), rat(dy, d)]).unwrap();
        let shifted = ps.translate(&offset).unwrap();
        prop_assert_eq!(
            distinct_distance_count(&ps).unwrap(),
            distinct_distance_count(&shifted).unwrap()
        );
        prop_assert_eq!(unit_pair_count(&ps).unwrap(), unit_pair_count(&shifted).unwrap());
    }

    #[test]
    fn census_invariant_under_coordinate_permutation(ps in int_point_set(3)) {
        let swapped = PointSet::new(
            ps.points()
                .iter()
                .map(|p| {
                    let c = p.coords();
                    RationalVector::new(vec![c[2].clone(), c[0].clone(), c[1].clone()]).unwrap()
                })
                .collect(),
            "perm",
        )
        .unwrap();
        prop_assert_eq!(
            distinct_distance_count(&ps).unwrap(),
            distinct_distance_count(&swapped).unwrap()
        );
        prop_assert_eq!(
            unit_pair_count(&ps).unwrap(),
            unit_pair_count(&swapped).unwrap()
        );
    }

    #[test]
    fn bucketed_unit_count_matches_brute_force(ps in int_point_set(2)) {
        prop_assert_eq!(
            accelerated_unit_pair_count(&ps).unwrap(),
            unit_pair_count(&ps).unwrap()
        );
    }

    #[test]
    fn pointset_csv_round_trips(ps in int_point_set(3)) {
        prop_assert_eq!(pointset_from_csv(&pointset_to_csv(&ps)).unwrap(), ps);
    }
}

// injectivity, sampled: distinct inputs never collide under a fixed scale
#[test]
fn compress_injective_on_enumerated_pairs() {
    let m = Scale::from_integer(2).unwrap();
    let mut images = Vec::new();
    for a in 1..=5i64 {
        for b in 1..=5i64 {
            let v = RationalVector::from_integers(&[a, b]);
            images.push((v.clone(), compress(&v, &m).unwrap()));
        }
    }
    for (i, (vi, ci)) in images.iter().enumerate() {
        for (vj, cj) in &images[i + 1..] {
            assert_ne!(vi, vj);
            assert_ne!(ci, cj, "collision for {vi:?} and {vj:?}");
        }
    }
}
