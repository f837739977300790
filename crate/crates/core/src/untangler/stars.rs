//! Redrawing a star forest inside separated neighbourhoods of the color
//! classes of a clustered subset.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::clustering::is_clustered;
use crate::error::{Error, Result};
use crate::geometry::hull::hull_vertices;
use crate::geometry::{orient, point_segment_dist2, segment_dist2, Segment};
use crate::graphs::is_plane_drawing;
use crate::scalar::sqrt_floor;
use crate::{Drawing, Point, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Squared distance between the convex hulls of two disjoint point sets.
fn hull_gap2(a: &[Point], b: &[Point]) -> Rational {
    // a hull of one point is a degenerate piece (p, p)
    let pieces = |h: &[Point]| -> Vec<(Point, Point)> {
        match h.len() {
            1 => vec![(h[0].clone(), h[0].clone())],
            2 => vec![(h[0].clone(), h[1].clone())],
            m => (0..m)
                .map(|i| (h[i].clone(), h[(i + 1) % m].clone()))
                .collect(),
        }
    };
    let dist = |s: &(Point, Point), t: &(Point, Point)| -> Rational {
        match (s.0 == s.1, t.0 == t.1) {
            (true, true) => s.0.dist2(&t.0),
            (true, false) => point_segment_dist2(&s.0, &t.0, &t.1),
            (false, true) => point_segment_dist2(&t.0, &s.0, &s.1),
            (false, false) => segment_dist2(
                &Segment::new(s.0.clone(), s.1.clone()),
                &Segment::new(t.0.clone(), t.1.clone()),
            ),
        }
    };
    let (pa, pb) = (pieces(&hull_vertices(a)), pieces(&hull_vertices(b)));
    pa.iter()
        .flat_map(|s| pb.iter().map(move |t| dist(s, t)))
        .min()
        .expect("nonempty hulls")
}

/// Whether `z` sees every point of `leaves` in a different direction.
fn distinct_directions(z: &Point, leaves: &[Point]) -> bool {
    for (i, a) in leaves.iter().enumerate() {
        if a == z {
            return false;
        }
        for b in &leaves[i + 1..] {
            if orient(z, a, b) == 0 {
                let (da, db) = (a.sub(z), b.sub(z));
                if (&da.0 * &db.0 + &da.1 * &db.1).is_positive() {
                    return false;
                }
            }
        }
    }
    true
}

/// Star forest `kS_k` with star `i` on vertices `i*k .. (i+1)*k` (center last).
/// `keep` lists vertices whose positions form a clustered subset for the
/// coloring by star. Every kept leaf stays fixed; centers are kept when
/// possible. The result is plane.
pub fn stars_cluster_untangler(d: &Drawing, k: usize, keep: &[usize]) -> Result<Drawing> {
    let n = d.n();
    if n != k * k {
        return Err(Error::InvalidParameter(format!("{n} vertices for k = {k}")));
    }
    let star_of: Vec<usize> = (0..n).map(|v| v / k).collect();
    if !is_clustered(d.placement(), &star_of, keep) {
        return Err(Error::InvalidParameter("kept set is not clustered".into()));
    }
    let keep: BTreeSet<usize> = keep.iter().copied().collect();
    let groups: Vec<Vec<Point>> = (0..k)
        .map(|i| {
            keep.iter()
                .filter(|&&v| star_of[v] == i)
                .map(|&v| d.position(v).clone())
                .collect()
        })
        .collect();
    // room around each kept group that no other group comes near
    let mut gap2: Option<Rational> = None;
    for i in 0..k {
        for j in i + 1..k {
            if !groups[i].is_empty() && !groups[j].is_empty() {
                let g = hull_gap2(&groups[i], &groups[j]);
                if gap2.as_ref().is_none_or(|m| g < *m) {
                    gap2 = Some(g);
                }
            }
        }
    }
    let radius = match gap2 {
        Some(g) => sqrt_floor(&g, 32) / Rational::from_integer(4.into()),
        None => Rational::one(),
    };
    let far_x = d
        .placement()
        .iter()
        .map(|p| p.x.abs() + p.y.abs())
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::from_integer(10.into())
        + &radius * Rational::from_integer(2.into());

    let mut placement = d.placement().to_vec();
    for i in 0..k {
        let center = i * k + k - 1;
        let leaves: Vec<usize> = (i * k..i * k + k - 1).collect();
        let kept_leaves: Vec<Point> = leaves
            .iter()
            .filter(|v| keep.contains(v))
            .map(|&v| d.position(v).clone())
            .collect();
        let z = if kept_leaves.is_empty() && !keep.contains(&center) {
            // nothing to keep: park the star far away
            Point::new(
                far_x.clone() + Rational::from_integer((4 * i as i64).into()),
                Rational::zero(),
            )
        } else if keep.contains(&center) && distinct_directions(d.position(center), &kept_leaves) {
            d.position(center).clone()
        } else {
            choose_center(&kept_leaves, &radius)
        };
        let r = if kept_leaves.is_empty() && !keep.contains(&center) {
            Rational::one()
        } else {
            radius.clone()
        };
        placement[center] = z.clone();
        let mut spokes = kept_leaves.clone();
        let mut t = 0i64;
        for &v in &leaves {
            if keep.contains(&v) {
                continue;
            }
            loop {
                t += 1;
                // directions (t, 1 - t^2 / 7) spread around the circle
                let dir = (q(t, 1), q(1, 1) - q(t * t, 7));
                let len = dir.0.abs() + dir.1.abs();
                let cand = z.offset(&dir, &(&r / len / Rational::from_integer(2.into())));
                let mut with = spokes.clone();
                with.push(cand.clone());
                if distinct_directions(&z, &with) {
                    placement[v] = cand.clone();
                    spokes.push(cand);
                    break;
                }
            }
        }
    }
    let out = d.with_placement(placement)?;
    if !is_plane_drawing(&out) {
        return Err(Error::NotPlane);
    }
    Ok(out)
}

/// A point within `radius` of the hull of `leaves` (nonempty) seeing every
/// leaf in a different direction.
fn choose_center(leaves: &[Point], radius: &Rational) -> Point {
    let m = Rational::from_integer((leaves.len() as i64).into());
    let sx = leaves.iter().fold(Rational::zero(), |a, p| a + &p.x);
    let sy = leaves.iter().fold(Rational::zero(), |a, p| a + &p.y);
    let c = Point::new(sx / &m, sy / &m);
    for t in 1i64.. {
        let dir = (q(1, 1), q(t, 3) - q(1, 1));
        let len = dir.0.abs() + dir.1.abs();
        let z = c.offset(
            &dir,
            &(radius / len / Rational::from_integer((t + 1).into())),
        );
        if distinct_directions(&z, leaves) {
            return z;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::{stars_collinear_adversary, BalancedColoring};
    use crate::clustering::max_clustered_subset;
    use crate::graphs::fixed_set;
    use crate::PointSet;

    #[test]
    fn collinear_stars_keep_clustered_leaves() {
        for k in 2..=3 {
            let x = PointSet::from_ints(&(0..(k * k) as i64).map(|i| (i, 0)).collect::<Vec<_>>())
                .unwrap();
            let d = stars_collinear_adversary(&x, k).unwrap();
            let colors: Vec<usize> = (0..k * k).map(|v| v / k).collect();
            let coloring = BalancedColoring::from_colors(k, &colors).unwrap();
            let best = max_clustered_subset(d.placement(), &coloring, u64::MAX);
            let out = stars_cluster_untangler(&d, k, &best.witness).unwrap();
            assert!(is_plane_drawing(&out));
            let fixed = fixed_set(&d, &out).unwrap().len();
            assert!(
                fixed + k >= best.lower,
                "k={k} fixed={fixed} |Y|={}",
                best.lower
            );
        }
    }

    #[test]
    fn rejects_unclustered() {
        let x = PointSet::from_ints(&[(0, 0), (1, 0), (2, 0), (3, 0)]).unwrap();
        let d = stars_collinear_adversary(&x, 2).unwrap();
        // stars: {0 -> x0, 1 -> x2}, {2 -> x1, 3 -> x3}
        assert!(stars_cluster_untangler(&d, 2, &[0, 1, 2, 3]).is_err());
    }
}
