use proptest::prelude::*;
use untangle_core::graphs::{
    complete, cycle, fan, fixed_set, is_3_connected, is_planar, is_plane_drawing, make_hn, path,
    star_forest, wheel, Family, Graph, TriangulationKind,
};
use untangle_core::{Drawing, Point, Rational};

#[test]
fn family_shapes() {
    for n in 4..12 {
        let w = wheel(n).unwrap();
        assert_eq!(w.edge_count(), 2 * (n - 1));
        assert_eq!(w.degree(n - 1), n - 1);
        assert!(is_planar(&w) && is_3_connected(&w));
        let f = fan(n).unwrap();
        assert_eq!(f.edge_count(), 2 * n - 3);
        assert!(is_planar(&f));
        assert_eq!(cycle(n).unwrap().edge_count(), n);
        assert_eq!(path(n).edge_count(), n - 1);
    }
    let s = star_forest(4).unwrap();
    assert_eq!((s.n(), s.edge_count()), (16, 12));
    assert!(!is_planar(&complete(5)));
    assert!(is_planar(&complete(4)) && is_3_connected(&complete(4)));
    assert_eq!(Family::parse("wheel", 7).unwrap().name(), "wheel");
}

#[test]
fn hn_groups_partition_the_vertices() {
    for kind in [
        TriangulationKind::FanStack,
        TriangulationKind::BoundedDegree,
    ] {
        for k in 3..=7 {
            let h = make_hn(k, kind).unwrap();
            let mut all: Vec<usize> = h.groups.iter().flatten().copied().collect();
            all.sort();
            assert_eq!(all, (0..k * k).collect::<Vec<_>>());
            assert_eq!(h.graph.edge_count(), k * (3 * k - 6) + 2 * k);
            assert!(is_planar(&h.graph) && is_3_connected(&h.graph));
        }
    }
}

fn drawing(g: Graph, coords: &[(i64, i64)]) -> Drawing {
    Drawing::new(
        g,
        coords
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect(),
    )
    .unwrap()
}

fn coords(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::btree_set((-15i64..15, -15i64..15), n..=n)
        .prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn planeness_is_invariant_under_translation_and_scaling(
        c in coords(6), dx in -9i64..9, dy in -9i64..9, s in 1i64..5,
    ) {
        let d = drawing(wheel(6).unwrap(), &c);
        let moved: Vec<(i64, i64)> = c.iter().map(|&(x, y)| (s * x + dx, s * y + dy)).collect();
        let e = drawing(wheel(6).unwrap(), &moved);
        prop_assert_eq!(is_plane_drawing(&d), is_plane_drawing(&e));
    }

    #[test]
    fn fixed_set_counts_unmoved_vertices(c in coords(7), mv in prop::collection::btree_set(0usize..7, 0..7)) {
        let d = drawing(fan(7).unwrap(), &c);
        let placement: Vec<Point> = d
            .placement()
            .iter()
            .enumerate()
            .map(|(v, p)| {
                if mv.contains(&v) {
                    Point::new(&p.x + Rational::new(1.into(), 1000.into()), p.y.clone())
                } else {
                    p.clone()
                }
            })
            .collect();
        let Ok(e) = d.with_placement(placement) else { return Ok(()) };
        let f = fixed_set(&d, &e).unwrap();
        prop_assert_eq!(f.len(), 7 - mv.len());
        prop_assert_eq!(fixed_set(&e, &d).unwrap(), f);
    }

    #[test]
    fn path_on_sorted_points_is_plane(xs in prop::collection::btree_set(-50i64..50, 2..10), y in -5i64..5) {
        let c: Vec<(i64, i64)> = xs.iter().map(|&x| (x, y)).collect();
        prop_assert!(is_plane_drawing(&drawing(path(c.len()), &c)));
    }
}
