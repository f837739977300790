//! Clustered subsets: subsets whose color classes have pairwise disjoint
//! closed convex hulls.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::adversary::{interweaving_coloring, random_balanced_coloring, BalancedColoring};
use crate::error::{Error, Result};
use crate::geometry::hull::{hull_vertices, point_in_hull};
use crate::geometry::{
    on_segment, orient, position_class, segments_relation, Point, PointSet, Segment,
    SegmentRelation,
};
use crate::scalar::Scalar;

fn hull_edges<T: Scalar>(h: &[Point<T>]) -> Vec<Segment<T>> {
    match h.len() {
        0 | 1 => vec![],
        2 => vec![Segment::new(h[0].clone(), h[1].clone())],
        m => (0..m)
            .map(|i| Segment::new(h[i].clone(), h[(i + 1) % m].clone()))
            .collect(),
    }
}

/// Whether the closed convex hulls of two nonempty point sets meet.
pub fn hulls_intersect<T: Scalar>(a: &[Point<T>], b: &[Point<T>]) -> bool {
    let ha = hull_vertices(a);
    let hb = hull_vertices(b);
    if ha.iter().any(|p| point_in_hull(&hb, p)) || hb.iter().any(|p| point_in_hull(&ha, p)) {
        return true;
    }
    let eb = hull_edges(&hb);
    hull_edges(&ha).iter().any(|s| {
        eb.iter()
            .any(|t| segments_relation(s, t) != SegmentRelation::Disjoint)
    })
}

/// Whether `subset` (indices into `points`) is clustered with respect to
/// `color_of`.
pub fn is_clustered<T: Scalar>(points: &[Point<T>], color_of: &[usize], subset: &[usize]) -> bool {
    let k = color_of.iter().max().map_or(0, |&c| c + 1);
    let mut parts: Vec<Vec<Point<T>>> = vec![Vec::new(); k];
    for &i in subset {
        parts[color_of[i]].push(points[i].clone());
    }
    let parts: Vec<&Vec<Point<T>>> = parts.iter().filter(|p| !p.is_empty()).collect();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if hulls_intersect(parts[i], parts[j]) {
                return false;
            }
        }
    }
    true
}

/// Orientation and betweenness tables over a fixed point list. By
/// Kirchberger's theorem two finite planar sets have disjoint closed hulls
/// exactly when every choice of at most four of their points does, which
/// makes incremental checks local.
pub struct HullOracle {
    n: usize,
    orient: Vec<i8>,
    between: Vec<bool>,
}

impl HullOracle {
    pub fn new<T: Scalar>(points: &[Point<T>]) -> Self {
        let n = points.len();
        let mut o = vec![0i8; n * n * n];
        let mut b = vec![false; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let idx = (i * n + j) * n + l;
                    o[idx] = orient(&points[i], &points[j], &points[l]);
                    b[idx] = on_segment(&points[i], &points[j], &points[l]);
                }
            }
        }
        HullOracle {
            n,
            orient: o,
            between: b,
        }
    }

    fn o(&self, i: usize, j: usize, l: usize) -> i8 {
        self.orient[(i * self.n + j) * self.n + l]
    }

    /// `l` on the closed segment `ij`.
    fn on(&self, i: usize, j: usize, l: usize) -> bool {
        self.between[(i * self.n + j) * self.n + l]
    }

    fn segments_meet(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let (o1, o2) = (self.o(a, b, c), self.o(a, b, d));
        let (o3, o4) = (self.o(c, d, a), self.o(c, d, b));
        if o1 * o2 < 0 && o3 * o4 < 0 {
            return true;
        }
        self.on(a, b, c) || self.on(a, b, d) || self.on(c, d, a) || self.on(c, d, b)
    }

    /// `p` in the closed triangle `abc`; degenerate triangles report false
    /// (their hull is a segment, covered by the segment checks).
    fn in_triangle(&self, a: usize, b: usize, c: usize, p: usize) -> bool {
        let o = self.o(a, b, c);
        if o == 0 {
            return false;
        }
        self.o(a, b, p) * o >= 0 && self.o(b, c, p) * o >= 0 && self.o(c, a, p) * o >= 0
    }

    /// Whether adding `p` to `same` makes its hull meet the hull of `other`,
    /// assuming the hulls of `same` and `other` were disjoint.
    pub fn conflicts(&self, p: usize, same: &[usize], other: &[usize]) -> bool {
        for (x, &b1) in other.iter().enumerate() {
            for &b2 in &other[x + 1..] {
                if self.on(b1, b2, p) {
                    return true;
                }
            }
        }
        for (x, &b1) in other.iter().enumerate() {
            for (y, &b2) in other.iter().enumerate().skip(x + 1) {
                for &b3 in &other[y + 1..] {
                    if self.in_triangle(b1, b2, b3, p) {
                        return true;
                    }
                }
            }
        }
        for &a in same {
            for (x, &b1) in other.iter().enumerate() {
                if self.on(p, a, b1) {
                    return true;
                }
                for &b2 in &other[x + 1..] {
                    if self.segments_meet(p, a, b1, b2) {
                        return true;
                    }
                }
            }
        }
        for (x, &a1) in same.iter().enumerate() {
            for &a2 in &same[x + 1..] {
                for &b in other {
                    if self.in_triangle(p, a1, a2, b) {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn disjoint_with(&self, p: usize, same: &[usize], other: &[usize]) -> bool {
        other.is_empty() || !self.conflicts(p, same, other)
    }

    /// Whether the hulls of two index sets are disjoint, built up point by point.
    pub fn disjoint(&self, a: &[usize], b: &[usize]) -> bool {
        let mut acc = Vec::with_capacity(a.len());
        for &p in a {
            if self.conflicts(p, &acc, b) {
                return false;
            }
            acc.push(p);
        }
        true
    }
}

/// Exact value with witness, or an interval when the search was cut short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusteredResult {
    pub lower: usize,
    pub upper: usize,
    /// Point indices of a clustered subset of size `lower`.
    pub witness: Vec<usize>,
}

impl ClusteredResult {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Largest clustered subset, by branch and bound over points in sweep
/// order. At most `budget` search nodes are visited.
pub fn max_clustered_subset<T: Scalar>(
    points: &[Point<T>],
    coloring: &BalancedColoring,
    budget: u64,
) -> ClusteredResult {
    let n = points.len();
    let oracle = HullOracle::new(points);
    let color = coloring.color_of();
    let k = coloring.k();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));

    struct Search<'a> {
        oracle: &'a HullOracle,
        color: &'a [usize],
        order: &'a [usize],
        parts: Vec<Vec<usize>>,
        size: usize,
        best: Vec<usize>,
        nodes: u64,
        budget: u64,
        exhausted: bool,
    }
    impl Search<'_> {
        fn go(&mut self, t: usize) {
            if self.exhausted {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            if self.size + (self.order.len() - t) <= self.best.len() {
                return;
            }
            if t == self.order.len() {
                self.best = self.parts.iter().flatten().copied().collect();
                self.best.sort_unstable();
                return;
            }
            let p = self.order[t];
            let c = self.color[p];
            let ok = (0..self.parts.len())
                .all(|d| d == c || self.oracle.disjoint_with(p, &self.parts[c], &self.parts[d]));
            if ok {
                self.parts[c].push(p);
                self.size += 1;
                self.go(t + 1);
                self.size -= 1;
                self.parts[c].pop();
            }
            self.go(t + 1);
        }
    }
    let mut s = Search {
        oracle: &oracle,
        color: &color,
        order: &order,
        parts: vec![Vec::new(); k],
        size: 0,
        best: Vec::new(),
        nodes: 0,
        budget: budget.max(1),
        exhausted: false,
    };
    s.go(0);
    let lower = s.best.len();
    ClusteredResult {
        lower,
        upper: if s.exhausted { n } else { lower },
        witness: s.best,
    }
}

/// Minimum over sampled balanced colorings of the largest clustered subset.
#[derive(Clone, Debug)]
pub struct CxEstimate {
    /// Smallest exact value seen; an upper estimate of the minimum over all
    /// balanced colorings.
    pub value: usize,
    pub coloring: BalancedColoring,
    pub witness: Vec<usize>,
    /// Every balanced coloring was examined.
    pub exhaustive: bool,
    /// Number of colorings whose search did not close (their lower ends
    /// were ignored).
    pub inexact: usize,
    pub colorings_tried: usize,
}

/// Number of partitions of `k^2` labelled points into `k` unlabelled classes of size `k`.
pub fn balanced_coloring_count(k: usize) -> u128 {
    let mut c: u128 = 1;
    let mut left = k * k;
    for _ in 0..k {
        // choose the class of the smallest unassigned point
        c *= binom(left as u128 - 1, k as u128 - 1);
        left -= k;
    }
    c
}

fn binom(n: u128, r: u128) -> u128 {
    let mut v = 1u128;
    for i in 0..r {
        v = v * (n - i) / (i + 1);
    }
    v
}

/// All balanced colorings, classes ordered by smallest member.
pub fn all_balanced_colorings(k: usize) -> Vec<BalancedColoring> {
    fn rec(k: usize, colors: &mut Vec<usize>, next: usize, out: &mut Vec<BalancedColoring>) {
        let Some(first) = colors.iter().position(|&c| c == usize::MAX) else {
            out.push(BalancedColoring::from_colors(k, colors).expect("balanced"));
            return;
        };
        colors[first] = next;
        let free: Vec<usize> = (first + 1..colors.len())
            .filter(|&i| colors[i] == usize::MAX)
            .collect();
        choose(k - 1, &free, 0, colors, next, &mut |cs| {
            rec(k, cs, next + 1, out)
        });
        colors[first] = usize::MAX;
    }
    fn choose(
        r: usize,
        free: &[usize],
        from: usize,
        colors: &mut Vec<usize>,
        c: usize,
        f: &mut dyn FnMut(&mut Vec<usize>),
    ) {
        if r == 0 {
            f(colors);
            return;
        }
        for i in from..free.len() {
            if free.len() - i < r {
                break;
            }
            colors[free[i]] = c;
            choose(r - 1, free, i + 1, colors, c, f);
            colors[free[i]] = usize::MAX;
        }
    }
    let mut out = Vec::new();
    let mut colors = vec![usize::MAX; k * k];
    rec(k, &mut colors, 0, &mut out);
    out
}

/// Upper estimate of `C(X)`: every balanced coloring when there are at most
/// `trials` of them, otherwise `trials` seeded random colorings plus the
/// interweaving coloring for weakly convex `X`.
pub fn estimate_cx<T: Scalar>(
    x: &PointSet<T>,
    k: usize,
    trials: usize,
    seed: u64,
    budget: u64,
) -> Result<CxEstimate> {
    if x.len() != k * k {
        return Err(Error::InvalidParameter(format!(
            "need {} points, got {}",
            k * k,
            x.len()
        )));
    }
    let exhaustive = balanced_coloring_count(k) <= trials as u128;
    let mut colorings = if exhaustive {
        all_balanced_colorings(k)
    } else {
        (0..trials)
            .map(|t| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
                random_balanced_coloring(k, &mut rng)
            })
            .collect()
    };
    if !exhaustive && position_class(x).is_weakly_convex() {
        colorings.push(interweaving_coloring(x, k)?);
    }
    let results: Vec<ClusteredResult> = colorings
        .par_iter()
        .map(|c| max_clustered_subset(x.points(), c, budget))
        .collect();
    let inexact = results.iter().filter(|r| !r.is_exact()).count();
    let best = results
        .iter()
        .enumerate()
        .filter(|(_, r)| r.is_exact())
        .min_by_key(|(i, r)| (r.lower, *i));
    let (value, coloring, witness) = match best {
        Some((i, r)) => (r.lower, colorings[i].clone(), r.witness.clone()),
        None => {
            let (i, r) = results
                .iter()
                .enumerate()
                .min_by_key(|(i, r)| (r.upper, *i))
                .expect("at least one coloring");
            (r.upper, colorings[i].clone(), r.witness.clone())
        }
    };
    Ok(CxEstimate {
        value,
        coloring,
        witness,
        exhaustive,
        inexact,
        colorings_tried: colorings.len(),
    })
}

/// Number of partitions of `z` into nonempty parts with pairwise disjoint
/// closed hulls. Limited to 9 points.
pub fn count_crossing_free_partitions<T: Scalar>(z: &PointSet<T>) -> Result<u64> {
    let n = z.len();
    if n > 9 {
        return Err(Error::SizeCap(n, 9));
    }
    let pts = z.points();
    fn rec<T: Scalar>(pts: &[Point<T>], i: usize, blocks: &mut Vec<Vec<usize>>, count: &mut u64) {
        if i == pts.len() {
            let ok = (0..blocks.len()).all(|a| {
                (a + 1..blocks.len()).all(|b| {
                    let pa: Vec<Point<T>> = blocks[a].iter().map(|&j| pts[j].clone()).collect();
                    let pb: Vec<Point<T>> = blocks[b].iter().map(|&j| pts[j].clone()).collect();
                    !hulls_intersect(&pa, &pb)
                })
            });
            *count += ok as u64;
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(pts, i + 1, blocks, count);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(pts, i + 1, blocks, count);
        blocks.pop();
    }
    let mut count = 0;
    rec(pts, 0, &mut Vec::new(), &mut count);
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn square() -> PointSet {
        PointSet::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap()
    }

    type PointSet = crate::geometry::PointSet<Rational>;

    #[test]
    fn square_examples() {
        let x = square();
        let color = [0, 1, 0, 1];
        assert!(is_clustered(x.points(), &color, &[0, 1]));
        assert!(!is_clustered(x.points(), &color, &[0, 1, 2, 3]));
        assert!(is_clustered(x.points(), &color, &[0, 2]));
        let c = BalancedColoring::from_colors(2, &color).unwrap();
        let r = max_clustered_subset(x.points(), &c, 1 << 20);
        assert_eq!((r.lower, r.upper), (3, 3));
        assert!(is_clustered(x.points(), &color, &r.witness));
    }

    #[test]
    fn oracle_agrees_with_hull_test() {
        let x = PointSet::from_ints(&[
            (0, 0),
            (4, 0),
            (2, 3),
            (1, 1),
            (3, 1),
            (2, 0),
            (5, 5),
            (0, 5),
            (2, 1),
        ])
        .unwrap();
        let o = HullOracle::new(x.points());
        let pts = x.points();
        for mask in 0u32..(1 << 9) {
            let a: Vec<usize> = (0..9).filter(|&i| mask >> i & 1 == 1).collect();
            let b: Vec<usize> = (0..9).filter(|&i| mask >> i & 1 == 0).collect();
            if a.is_empty() || b.is_empty() || a.len() > 4 {
                continue;
            }
            let pa: Vec<_> = a.iter().map(|&i| pts[i].clone()).collect();
            let pb: Vec<_> = b.iter().take(3).map(|&i| pts[i].clone()).collect();
            let bb: Vec<usize> = b.iter().take(3).copied().collect();
            assert_eq!(
                o.disjoint(&a, &bb),
                !hulls_intersect(&pa, &pb),
                "{a:?} {bb:?}"
            );
        }
    }

    #[test]
    fn partition_counts() {
        let one = PointSet::from_ints(&[(0, 0)]).unwrap();
        assert_eq!(count_crossing_free_partitions(&one).unwrap(), 1);
        let tri = PointSet::from_ints(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(count_crossing_free_partitions(&tri).unwrap(), 5);
        // convex position: Catalan numbers
        assert_eq!(count_crossing_free_partitions(&square()).unwrap(), 14);
        let big = PointSet::from_ints(&(0..10).map(|i| (i, i * i)).collect::<Vec<_>>()).unwrap();
        assert!(count_crossing_free_partitions(&big).is_err());
    }

    #[test]
    fn coloring_enumeration() {
        assert_eq!(balanced_coloring_count(2), 3);
        assert_eq!(balanced_coloring_count(3), 280);
        assert_eq!(all_balanced_colorings(2).len(), 3);
        assert_eq!(all_balanced_colorings(3).len(), 280);
        let line = PointSet::from_ints(&[(0, 0), (1, 0), (2, 0), (3, 0)]).unwrap();
        let e = estimate_cx(&line, 2, 10, 0, 1 << 20).unwrap();
        assert!(e.exhaustive);
        assert_eq!(e.value, 3);
    }
}
