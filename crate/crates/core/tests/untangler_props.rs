use proptest::prelude::*;
use untangle_core::graphs::{complete, cycle, fixed_set, is_plane_drawing, wheel, Graph};
use untangle_core::untangler::{
    collinear_reduce, extend_single_free, fix_oracle, naive_collinear_untangler, OracleOptions,
};
use untangle_core::{Drawing, Point, Rational};

fn coords(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::btree_set((0i64..12, 0i64..12), n..=n).prop_map(|s| s.into_iter().collect())
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    prop_oneof![
        Just(complete(4)),
        Just(cycle(5).unwrap()),
        Just(wheel(5).unwrap()),
        Just(wheel(6).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Positive answers are checked by the plane test; negative answers are
    /// checked against a grid of half-integer positions.
    #[test]
    fn single_free_vertex_is_decided_correctly(g in graph_strategy(), c in coords(6), v in 0usize..6) {
        let n = g.n();
        let v = v % n;
        let pts: Vec<Point> = c[..n].iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        let d = Drawing::new(g.clone(), pts).unwrap();
        let mut pos: Vec<Option<Point>> = d.placement().iter().cloned().map(Some).collect();
        pos[v] = None;
        match extend_single_free(&g, &pos) {
            Some(p) => {
                pos[v] = Some(p);
                let w = d.with_placement(pos.into_iter().map(Option::unwrap).collect()).unwrap();
                prop_assert!(is_plane_drawing(&w));
            }
            None => {
                for gx in -4..28 {
                    for gy in -4..28 {
                        let p = Point::new(Rational::new(gx.into(), 2.into()), Rational::new(gy.into(), 2.into()));
                        let mut placement = d.placement().to_vec();
                        placement[v] = p;
                        if let Ok(w) = d.with_placement(placement) {
                            prop_assert!(!is_plane_drawing(&w));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_intervals_are_consistent(g in graph_strategy(), c in coords(6), seed in 0u64..100) {
        let n = g.n();
        let pts: Vec<Point> = c[..n].iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        let d = Drawing::new(g, pts).unwrap();
        let r = fix_oracle(&d, &OracleOptions { seed, ..OracleOptions::default() });
        prop_assert!(r.lower <= r.upper && r.upper <= n);
        if let Some(w) = &r.witness {
            prop_assert!(is_plane_drawing(w));
            prop_assert_eq!(fixed_set(&d, w).unwrap().len(), r.lower);
        }
        prop_assert_eq!(r.is_exact() && r.upper == n, is_plane_drawing(&d));
    }

    #[test]
    fn collinear_reduction_keeps_what_the_line_drawing_kept(g in graph_strategy(), c in coords(6)) {
        let n = g.n();
        let pts: Vec<Point> = c[..n].iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        let d = Drawing::new(g, pts).unwrap();
        let opts = OracleOptions::default();
        let red = collinear_reduce(&d, |g, xs| naive_collinear_untangler(g, xs, &opts)).unwrap();
        prop_assert!(is_plane_drawing(&red.drawing));
        prop_assert!(red.kept.is_subset(&fixed_set(&d, &red.drawing).unwrap()));
        prop_assert!(red.epsilon > Rational::from_integer(0.into()));
    }
}
