use std::collections::BTreeSet;

use num_rational::Ratio;
use proptest::prelude::*;
use untangle_core::geometry::{
    build_arrangement, hull_vertices, orient, point_in_hull, segments_relation, visibility_classes,
    visibility_permutation, CircularOrder, Point as GPoint, SegmentRelation,
};
use untangle_core::{Point, PointSet, Segment};

fn pt() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..20, -20i64..20)
}

fn distinct_points(min: usize, max: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::btree_set(pt(), min..=max).prop_map(|s| s.into_iter().collect())
}

fn p((x, y): (i64, i64)) -> Point {
    Point::from_ints(x, y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn orientation_is_alternating(a in pt(), b in pt(), c in pt()) {
        let (a, b, c) = (p(a), p(b), p(c));
        prop_assert_eq!(orient(&a, &b, &c), -orient(&b, &a, &c));
        prop_assert_eq!(orient(&a, &b, &c), orient(&b, &c, &a));
    }

    #[test]
    fn orientation_agrees_across_scalars(a in pt(), b in pt(), c in pt()) {
        let small = |(x, y): (i64, i64)| GPoint::new(Ratio::<i64>::from_integer(x), Ratio::from_integer(y));
        prop_assert_eq!(orient(&p(a), &p(b), &p(c)), orient(&small(a), &small(b), &small(c)));
    }

    #[test]
    fn segment_relation_is_symmetric(v in distinct_points(4, 4)) {
        let s = Segment::new(p(v[0]), p(v[1]));
        let t = Segment::new(p(v[2]), p(v[3]));
        prop_assert_eq!(segments_relation(&s, &t), segments_relation(&t, &s));
        let r = Segment::new(p(v[1]), p(v[0]));
        prop_assert_eq!(segments_relation(&s, &t), segments_relation(&r, &t));
        // distinct endpoints never touch at a shared endpoint
        prop_assert_ne!(segments_relation(&s, &t), SegmentRelation::SharedEndpointOnly);
    }

    #[test]
    fn hull_contains_every_point(v in distinct_points(1, 12)) {
        let pts: Vec<Point> = v.into_iter().map(p).collect();
        let h = hull_vertices(&pts);
        for q in &pts {
            prop_assert!(point_in_hull(&h, q));
        }
    }

    #[test]
    fn visibility_order_is_a_permutation(v in distinct_points(2, 9), s in pt()) {
        let pts: Vec<Point> = v.into_iter().map(p).collect();
        let o = visibility_permutation(&p(s), &pts);
        let seen: BTreeSet<usize> = o.as_slice().iter().copied().collect();
        prop_assert_eq!(seen.len(), pts.len());
        prop_assert!(CircularOrder::new(o.as_slice().to_vec()).is_ok());
    }

    #[test]
    fn canonical_form_ignores_shifts(v in distinct_points(2, 9), s in pt(), shift in 0usize..9) {
        let pts: Vec<Point> = v.into_iter().map(p).collect();
        let o = visibility_permutation(&p(s), &pts);
        let mut seq = o.as_slice().to_vec();
        let r = shift % seq.len();
        seq.rotate_left(r);
        let shifted = CircularOrder::new(seq).unwrap();
        prop_assert!(shifted.is_shift_of(&o));
        prop_assert_eq!(shifted.canonical(), o.canonical());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_standpoint_falls_in_a_known_class(v in distinct_points(3, 6), s in prop::collection::vec(pt(), 1..8)) {
        let x = PointSet::from_ints(&v).unwrap();
        let q = visibility_classes(&x).unwrap();
        prop_assert!((q.len() as f64) < 0.75 * (x.len() as f64).powi(4));
        for sp in s {
            let sp = Point::new(
                num_rational::BigRational::new(sp.0.into(), 3.into()),
                num_rational::BigRational::new(sp.1.into(), 7.into()),
            );
            prop_assert!(q.contains(&visibility_permutation(&sp, x.points()).canonical()));
        }
    }

    #[test]
    fn arrangement_faces_have_distinct_sign_vectors(v in distinct_points(3, 6)) {
        let x = PointSet::from_ints(&v).unwrap();
        let arr = build_arrangement(&x).unwrap();
        let keys: BTreeSet<Vec<i8>> = arr.faces.iter().map(|f| arr.sign_vector(f)).collect();
        prop_assert_eq!(keys.len(), arr.faces.len());
        prop_assert!(keys.iter().all(|k| !k.contains(&0)));
    }
}
