//! Self-check suites run by `untangle verify`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use untangle_core::adversary::{fan_adversary, wheel_adversary};
use untangle_core::bounds::{fan_upper, wheel_upper};
use untangle_core::geometry::{
    hull_vertices, orient, point_in_hull, segments_relation, visibility_classes,
    visibility_permutation,
};
use untangle_core::graphs::{complete, fixed_set, is_plane_drawing};
use untangle_core::sequences::reference::{l2_bruteforce, max_alternation_free_bruteforce};
use untangle_core::sequences::{
    ds_max_length, l2, lds, lis, max_alternation_free_subsequence, random_permutation, Permutation,
    SymbolSequence,
};
use untangle_core::untangler::{extend_single_free, fix_oracle, rim_heuristic, OracleOptions};
use untangle_core::{Drawing, Point, PointSet, Rational, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Geometry,
    Sequences,
    BoundsSoundness,
    Oracle,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, failures: Vec<String>, total: usize) -> Check {
    Check {
        name,
        passed: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{total} cases"),
            Some(f) => format!("{} of {total} failed, first: {f}", failures.len()),
        },
    }
}

pub fn run(suite: Suite, seed: u64) -> Vec<Check> {
    match suite {
        Suite::Geometry => geometry(seed),
        Suite::Sequences => sequences(seed),
        Suite::BoundsSoundness => bounds_soundness(seed),
        Suite::Oracle => oracle(seed),
    }
}

fn random_set(rng: &mut ChaCha8Rng, n: usize, side: i64) -> PointSet {
    let mut c = BTreeSet::new();
    while c.len() < n {
        c.insert((rng.gen_range(0..side), rng.gen_range(0..side)));
    }
    PointSet::from_ints(&c.into_iter().collect::<Vec<_>>()).expect("distinct points")
}

fn geometry(seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orient_fail = Vec::new();
    let mut seg_fail = Vec::new();
    let mut hull_fail = Vec::new();
    for _ in 0..200 {
        let x = random_set(&mut rng, 4, 12);
        let p = x.points();
        if orient(&p[0], &p[1], &p[2]) != -orient(&p[1], &p[0], &p[2])
            || orient(&p[0], &p[1], &p[2]) != orient(&p[1], &p[2], &p[0])
        {
            orient_fail.push(format!("{:?}", p));
        }
        let s = Segment::new(p[0].clone(), p[1].clone());
        let t = Segment::new(p[2].clone(), p[3].clone());
        if segments_relation(&s, &t) != segments_relation(&t, &s) {
            seg_fail.push(format!("{:?}", p));
        }
        let h = hull_vertices(p);
        if !p.iter().all(|q| point_in_hull(&h, q)) {
            hull_fail.push(format!("{:?}", p));
        }
    }
    let mut class_fail = Vec::new();
    for _ in 0..10 {
        let n = rng.gen_range(3..=6);
        let x = random_set(&mut rng, n, 10);
        let q = visibility_classes(&x).expect("n >= 3");
        if q.len() as f64 >= 0.75 * (n as f64).powi(4) {
            class_fail.push(format!("|Q| = {} for N = {n}", q.len()));
        }
        for _ in 0..50 {
            let s = Point::new(
                Rational::new(rng.gen_range(-300..300).into(), 7.into()),
                Rational::new(rng.gen_range(-300..300).into(), 11.into()),
            );
            if !q.contains(&visibility_permutation(&s, x.points()).canonical()) {
                class_fail.push(format!("standpoint {s:?} outside the known classes"));
            }
        }
    }
    let mut collinear_fail = Vec::new();
    for n in 2..=7i64 {
        let x = PointSet::from_ints(&(0..n).map(|i| (i, 3 * i)).collect::<Vec<_>>()).unwrap();
        let q = visibility_classes(&x).expect("n >= 2");
        if q.len() > n as usize {
            collinear_fail.push(format!("N = {n}: |Q| = {}", q.len()));
        }
    }
    vec![
        check("orientation identities", orient_fail, 200),
        check("segment relation symmetry", seg_fail, 200),
        check("hull containment", hull_fail, 200),
        check("visibility classes cover standpoints", class_fail, 10),
        check("collinear sets have at most N classes", collinear_fail, 6),
    ]
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut v = p.clone();
            v.insert(i, n);
            out.push(v);
        }
    }
    out
}

fn sequences(seed: u64) -> Vec<Check> {
    let mut l2_fail = Vec::new();
    let mut total = 0;
    for n in 2..=7 {
        for p in permutations(n) {
            total += 1;
            let fast = l2(&Permutation::new(p.clone()).unwrap()).unwrap().value;
            let slow = l2_bruteforce(&p);
            if fast != slow {
                l2_fail.push(format!("{p:?}: {fast} vs {slow}"));
            }
        }
    }
    let mut es_fail = Vec::new();
    for t in 0..100 {
        let s = random_permutation(50, seed.wrapping_add(t));
        if lis(s.as_slice()) * lds(s.as_slice()) < 50 {
            es_fail.push(format!("{:?}", s.as_slice()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alt_fail = Vec::new();
    for _ in 0..100 {
        let k = rng.gen_range(2..=3);
        let len = rng.gen_range(1..=12);
        let symbols: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=k)).collect();
        let p = rng.gen_range(1..=4);
        let seq = SymbolSequence::new(symbols, k, rng.gen_bool(0.5)).unwrap();
        let fast = max_alternation_free_subsequence(&seq, p, 10_000_000).unwrap();
        let slow = max_alternation_free_bruteforce(&seq, p);
        if fast.exact() != Some(slow) {
            alt_fail.push(format!(
                "{:?} p={p}: {:?} vs {slow}",
                seq.symbols,
                fast.exact()
            ));
        }
    }
    let mut ds_fail = Vec::new();
    for k in 1..=5 {
        let two = ds_max_length(k, 2, 10_000_000).unwrap();
        if two.exact() != Some(2 * k - 1) {
            ds_fail.push(format!("lambda_2({k}) = {:?}", two.exact()));
        }
        let one = ds_max_length(k, 1, 10_000_000).unwrap();
        if one.exact() != Some(k) {
            ds_fail.push(format!("lambda_1({k}) = {:?}", one.exact()));
        }
    }
    vec![
        check("l2 equals brute force", l2_fail, total),
        check("Erdos-Szekeres", es_fail, 100),
        check("alternation search equals brute force", alt_fail, 100),
        check("Davenport-Schinzel small orders", ds_fail, 10),
    ]
}

fn bounds_soundness(seed: u64) -> Vec<Check> {
    let mut fail = Vec::new();
    for t in 0..20u64 {
        let s = seed.wrapping_add(t);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let n = rng.gen_range(5..=8);
        let x = random_set(&mut rng, n, 20);
        let (d, bound) = if t % 2 == 0 {
            let d = wheel_adversary(&x, s).unwrap();
            let b = wheel_upper(&d).unwrap().value;
            (d, b)
        } else {
            let d = fan_adversary(&x, s).unwrap();
            let b = fan_upper(&d).unwrap().value;
            (d, b)
        };
        let opts = OracleOptions {
            seed: s,
            ..OracleOptions::default()
        };
        for w in fix_oracle(&d, &opts)
            .witness
            .into_iter()
            .chain(rim_heuristic(&d))
        {
            let f = fixed_set(&d, &w).unwrap().len();
            if !is_plane_drawing(&w) || f > bound {
                fail.push(format!("instance {t}: fixed {f}, bound {bound}"));
            }
        }
    }
    vec![check(
        "wheel and fan redrawings stay within the bound",
        fail,
        20,
    )]
}

fn oracle(seed: u64) -> Vec<Check> {
    let opts = OracleOptions::default();
    let k4 = complete(4);
    let line = (0..4).map(|i| Point::from_ints(i, 0)).collect();
    let d = Drawing::new(k4.clone(), line).unwrap();
    let r = fix_oracle(&d, &opts);
    let two = if (r.lower, r.upper) == (2, 2) {
        vec![]
    } else {
        vec![format!("collinear K4 gives [{}, {}]", r.lower, r.upper)]
    };
    let square = [(0, 0), (4, 0), (4, 4), (0, 4)]
        .iter()
        .map(|&(x, y)| Point::from_ints(x, y))
        .collect();
    let d = Drawing::new(k4.clone(), square).unwrap();
    let r = fix_oracle(&d, &opts);
    let three = if (r.lower, r.upper) == (3, 3) {
        vec![]
    } else {
        vec![format!("convex K4 gives [{}, {}]", r.lower, r.upper)]
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assign_fail = Vec::new();
    let mut cases = 0;
    while cases < 5 {
        let x = random_set(&mut rng, 4, 30);
        if hull_vertices(x.points()).len() != 4 {
            continue;
        }
        cases += 1;
        for p in permutations(4) {
            let placement: Vec<Point> = p.iter().map(|&i| x.get(i - 1).clone()).collect();
            let d = Drawing::new(k4.clone(), placement).unwrap();
            let ok = (0..4).any(|v| {
                let mut pos: Vec<Option<Point>> = d.placement().iter().cloned().map(Some).collect();
                pos[v] = None;
                extend_single_free(&k4, &pos).is_some()
            });
            if !ok {
                assign_fail.push(format!("{:?} assigned {p:?}", x.points()));
            }
        }
    }
    vec![
        check("fix(K4) = 2 on four collinear points", two, 1),
        check("K4 on a convex quadrilateral keeps 3", three, 1),
        check(
            "every K4 assignment on convex points keeps 3",
            assign_fail,
            120,
        ),
    ]
}
