//! Upper bounds on the number of vertices any plane redrawing can keep
//! fixed, for the adversarial drawings of the `adversary` module.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::adversary::BalancedColoring;
use crate::clustering::max_clustered_subset;
use crate::error::{Error, Result};
use crate::geometry::arrangement::arrangement_of;
use crate::geometry::{boundary_order, position_class, visibility_permutation, Point, PointSet};
use crate::graphs::{fan, star_forest, wheel, Drawing, HnGraph};
use crate::scalar::Scalar;
use crate::sequences::{
    block_sequence, l2_of, longest_circular_monotone, max_alternation_free_subsequence,
    SearchBound, SplitScore, SymbolSequence,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundFamily {
    Wheel,
    Fan,
    StarsCollinear,
    StarsWeaklyConvex,
    Hn,
}

#[derive(Clone, Debug)]
pub struct BoundReport<T> {
    pub family: BoundFamily,
    pub value: usize,
    /// Named parts whose sum is `value`.
    pub decomposition: Vec<(&'static str, usize)>,
    /// Maximising standpoint (wheels and fans).
    pub standpoint: Option<Point<T>>,
    /// Vertex sequence seen from the standpoint.
    pub order: Vec<usize>,
    /// Maximising split (fans).
    pub split: Option<SplitScore>,
    /// False when some part had to use the upper end of an unfinished search.
    pub exact_parts: bool,
}

impl<T> BoundReport<T> {
    fn from_parts(family: BoundFamily, parts: Vec<(&'static str, usize)>, exact: bool) -> Self {
        BoundReport {
            family,
            value: parts.iter().map(|p| p.1).sum(),
            decomposition: parts,
            standpoint: None,
            order: Vec::new(),
            split: None,
            exact_parts: exact,
        }
    }
}

/// Maximum of `score` over the visibility orders of `points` from every
/// cell of their arrangement (one evaluation per distinct circular order).
fn best_standpoint<T: Scalar, F>(points: &[Point<T>], score: F) -> (usize, Point<T>, Vec<usize>)
where
    F: Fn(&[usize]) -> usize + Sync,
{
    let arr = arrangement_of(points);
    let mut seen: HashMap<Vec<usize>, Point<T>> = HashMap::new();
    for p in arr.standpoints() {
        let order = visibility_permutation(p, points).canonical();
        seen.entry(order.as_slice().to_vec())
            .or_insert_with(|| p.clone());
    }
    let mut classes: Vec<(Vec<usize>, Point<T>)> = seen.into_iter().collect();
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    classes
        .par_iter()
        .map(|(order, p)| (score(order), p.clone(), order.clone()))
        .reduce_with(|a, b| if b.0 > a.0 { b } else { a })
        .expect("arrangement has standpoints")
}

fn check_graph<T: Scalar>(d: &Drawing<T>, expected: Result<crate::graphs::Graph>) -> Result<()> {
    match expected {
        Ok(g) if g == d.graph => Ok(()),
        _ => Err(Error::WrongForm(
            "drawing is not of the expected family".into(),
        )),
    }
}

/// Wheel `W_n` with rim `0..n-1` and hub `n-1`. In a plane redrawing the
/// fixed rim vertices appear around the new hub in the rim's circular order,
/// so they form a circularly monotone subsequence of what the hub sees.
pub fn wheel_upper<T: Scalar>(d: &Drawing<T>) -> Result<BoundReport<T>> {
    let n = d.n();
    check_graph(d, wheel(n))?;
    let rim = &d.placement()[..n - 1];
    let (best, p, order) = best_standpoint(rim, longest_circular_monotone);
    let mut r = BoundReport::from_parts(BoundFamily::Wheel, vec![("hub", 1), ("rim", best)], true);
    r.standpoint = Some(p);
    r.order = order;
    Ok(r)
}

/// Fan `F_n` with path `0..n-1` and center `n-1`; the fixed path vertices
/// split into two non-interweaving monotone runs around the new center.
pub fn fan_upper<T: Scalar>(d: &Drawing<T>) -> Result<BoundReport<T>> {
    let n = d.n();
    check_graph(d, fan(n))?;
    let path = &d.placement()[..n - 1];
    let (best, p, order) = best_standpoint(path, |s| {
        if s.len() < 2 {
            s.len()
        } else {
            l2_of(s).expect("length checked").value
        }
    });
    let mut r =
        BoundReport::from_parts(BoundFamily::Fan, vec![("center", 1), ("path", best)], true);
    if order.len() >= 2 {
        r.split = Some(l2_of(&order)?);
    }
    r.standpoint = Some(p);
    r.order = order;
    Ok(r)
}

/// Largest subsequence of the leaf sequence `(1..k)^(k-1)` without an
/// alternation of length `p + 2`.
pub fn leaf_sequence_cap(k: usize, p: usize, budget: usize) -> Result<SearchBound> {
    let mut s: SymbolSequence = block_sequence(k, k - 1);
    s.circular = false;
    max_alternation_free_subsequence(&s, p, budget)
}

fn matches_listing<T: Scalar>(d: &Drawing<T>, k: usize, order: &[usize], x: &PointSet<T>) -> bool {
    let n = k * k;
    (0..k).all(|i| {
        (0..k - 1).all(|j| d.position(i * k + j) == x.get(order[i + j * k]))
            && d.position(i * k + k - 1) == x.get(order[n - k + i])
    })
}

fn placed_set<T: Scalar>(d: &Drawing<T>) -> PointSet<T> {
    let mut pts = d.placement().to_vec();
    pts.sort();
    PointSet::new(pts).expect("placement is injective")
}

/// Star forest `kS_k` drawn by the collinear adversary: fixed centers
/// (at most `k`), leaves whose star center sits on the line (at most `2k`),
/// and leaves above / below the line, each an `xyxy`-free subsequence of
/// the leaf sequence.
pub fn stars_collinear_upper<T: Scalar>(
    d: &Drawing<T>,
    k: usize,
    budget: usize,
) -> Result<BoundReport<T>> {
    check_graph(d, star_forest(k))?;
    let x = placed_set(d);
    if position_class(&x) != crate::geometry::PositionClass::Collinear {
        return Err(Error::WrongForm("stars are not placed on a line".into()));
    }
    let fwd: Vec<usize> = (0..x.len()).collect();
    let rev: Vec<usize> = fwd.iter().rev().copied().collect();
    if !matches_listing(d, k, &fwd, &x) && !matches_listing(d, k, &rev, &x) {
        return Err(Error::WrongForm(
            "stars are not in the interleaved layout".into(),
        ));
    }
    let cap = leaf_sequence_cap(k, 2, budget)?;
    Ok(BoundReport::from_parts(
        BoundFamily::StarsCollinear,
        vec![("E", k), ("D", 2 * k), ("A", cap.upper), ("B", cap.upper)],
        cap.is_exact(),
    ))
}

/// Star forest drawn along the boundary of a convex body: fixed centers,
/// leaves with edges inside or outside the body (`xyxy`-free), and leaves
/// with red or blue arrows (`xyxyxy`-free). For collinear points the
/// collinear bound is also computed and the smaller one reported.
pub fn stars_weakly_convex_upper<T: Scalar>(
    d: &Drawing<T>,
    k: usize,
    budget: usize,
) -> Result<BoundReport<T>> {
    check_graph(d, star_forest(k))?;
    let x = placed_set(d);
    let base = boundary_order(&x)
        .ok_or_else(|| Error::WrongPosition("points are not in weakly convex position".into()))?;
    let n = x.len();
    let mut matched = false;
    for dir in [false, true] {
        for shift in 0..n {
            let order: Vec<usize> = (0..n)
                .map(|t| {
                    let t = if dir { n - 1 - t } else { t };
                    base[(t + shift) % n]
                })
                .collect();
            if matches_listing(d, k, &order, &x) {
                matched = true;
                break;
            }
        }
        if matched {
            break;
        }
    }
    let collinear = position_class(&x) == crate::geometry::PositionClass::Collinear;
    if !matched && !collinear {
        return Err(Error::WrongForm(
            "stars are not in the interleaved layout".into(),
        ));
    }
    let cap2 = leaf_sequence_cap(k, 2, budget)?;
    let cap4 = leaf_sequence_cap(k, 4, budget)?;
    let convex = BoundReport::from_parts(
        BoundFamily::StarsWeaklyConvex,
        vec![
            ("E", k),
            ("I", cap2.upper),
            ("O", cap2.upper),
            ("R", cap4.upper),
            ("B", cap4.upper),
        ],
        cap2.is_exact() && cap4.is_exact(),
    );
    if collinear {
        if let Ok(line) = stars_collinear_upper(d, k, budget) {
            if line.value < convex.value || !matched {
                return Ok(line);
            }
        }
    }
    if !matched {
        return Err(Error::WrongForm(
            "stars are not in the interleaved layout".into(),
        ));
    }
    Ok(convex)
}

/// `H_n` drawn with triangulation `i` on color class `i`: the largest
/// clustered subset plus `k`.
pub fn hn_upper<T: Scalar>(
    x: &PointSet<T>,
    coloring: &BalancedColoring,
    h: &HnGraph,
    budget: u64,
) -> Result<BoundReport<T>> {
    if coloring.k() != h.k || x.len() != h.n() {
        return Err(Error::InvalidParameter(
            "sizes of X, coloring and H differ".into(),
        ));
    }
    let c = max_clustered_subset(x.points(), coloring, budget);
    Ok(BoundReport::from_parts(
        BoundFamily::Hn,
        vec![("clustered", c.upper), ("exception", h.k)],
        c.is_exact(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::{interweaving_coloring, stars_collinear_adversary};
    use crate::graphs::{make_hn, TriangulationKind};
    use crate::Rational;

    fn parabola(n: usize) -> PointSet<Rational> {
        PointSet::from_ints(&(0..n as i64).map(|i| (i, i * i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn wheel_in_whitney_order_gives_n() {
        // rim on a convex arc in order, hub below
        let mut pts: Vec<Point<Rational>> = parabola(5).into_points();
        pts.push(Point::from_ints(2, -5));
        let d = Drawing::new(wheel(6).unwrap(), pts).unwrap();
        let r = wheel_upper(&d).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.decomposition, vec![("hub", 1), ("rim", 5)]);
    }

    #[test]
    fn fan_in_order_gives_n() {
        let mut pts: Vec<Point<Rational>> = parabola(5).into_points();
        pts.push(Point::from_ints(2, -5));
        let d = Drawing::new(fan(6).unwrap(), pts).unwrap();
        assert_eq!(fan_upper(&d).unwrap().value, 6);
        assert!(wheel_upper(&d).is_err());
    }

    #[test]
    fn stars_bounds() {
        for k in 2..=4 {
            let x = PointSet::<Rational>::from_ints(
                &(0..(k * k) as i64).map(|i| (i, 0)).collect::<Vec<_>>(),
            )
            .unwrap();
            let d = stars_collinear_adversary(&x, k).unwrap();
            let r = stars_collinear_upper(&d, k, 1 << 22).unwrap();
            assert!(r.exact_parts);
            assert!(r.value < 7 * k, "k={k} value={}", r.value);
            let w = stars_weakly_convex_upper(&d, k, 1 << 22).unwrap();
            assert!(w.value <= r.value);
        }
    }

    #[test]
    fn hn_bound_on_convex_points() {
        let k = 3;
        let x = parabola(k * k);
        let c = interweaving_coloring(&x, k).unwrap();
        let h = make_hn(k, TriangulationKind::FanStack).unwrap();
        let r = hn_upper(&x, &c, &h, u64::MAX).unwrap();
        assert!(r.value < 3 * k && r.value >= 2 * k);
    }
}
