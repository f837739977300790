//! Reducing untangling of an arbitrary drawing to untangling of its
//! projection onto a line.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::oracle::{fix_oracle, redraw_keeping_two, OracleOptions};
use crate::error::{Error, Result};
use crate::geometry::{point_segment_dist2, segment_dist2, Segment};
use crate::graphs::{fixed_set, is_plane_drawing, Graph};
use crate::scalar::sqrt_floor;
use crate::{Drawing, Point, Rational};

/// Exact affine change of coordinates: a rotation by a rational angle
/// followed by `(x, y) -> (x, (y - y0) / h)`.
#[derive(Clone, Debug)]
struct Frame {
    cos: Rational,
    sin: Rational,
    y0: Rational,
    h: Rational,
}

impl Frame {
    fn forward(&self, p: &Point) -> Point {
        let x = &self.cos * &p.x - &self.sin * &p.y;
        let y = &self.sin * &p.x + &self.cos * &p.y;
        Point::new(x, (y - &self.y0) / &self.h)
    }

    fn backward(&self, p: &Point) -> Point {
        let (x, y) = (p.x.clone(), &p.y * &self.h + &self.y0);
        Point::new(
            &self.cos * &x + &self.sin * &y,
            -(&self.sin * &x) + &self.cos * &y,
        )
    }
}

/// Rotation by the angle with `tan(theta / 2) = 1 / q`; `q = 0` is the identity.
fn rotation(q: u64) -> (Rational, Rational) {
    if q == 0 {
        return (Rational::one(), Rational::zero());
    }
    let t = Rational::new(1.into(), q.into());
    let d = Rational::one() + &t * &t;
    (
        (Rational::one() - &t * &t) / &d,
        (Rational::from_integer(2.into()) * &t) / d,
    )
}

fn choose_frame(points: &[Point]) -> Frame {
    let mut q = 0;
    loop {
        let (cos, sin) = rotation(q);
        let xs: BTreeSet<Rational> = points.iter().map(|p| &cos * &p.x - &sin * &p.y).collect();
        if xs.len() == points.len() {
            let ys: Vec<Rational> = points.iter().map(|p| &sin * &p.x + &cos * &p.y).collect();
            let y0 = ys.iter().min().cloned().unwrap_or_else(Rational::zero);
            let y1 = ys.iter().max().cloned().unwrap_or_else(Rational::zero);
            let h = if y1 > y0 { y1 - &y0 } else { Rational::one() };
            return Frame { cos, sin, y0, h };
        }
        q += 1;
    }
}

/// Result of [`collinear_reduce`].
#[derive(Clone, Debug)]
pub struct CollinearReduction {
    /// Plane redrawing of the input.
    pub drawing: Drawing,
    /// Vertices kept by the collinear untangling; all of them are fixed in `drawing`.
    pub kept: BTreeSet<usize>,
    /// The collinear drawing that was untangled (in the rotated frame).
    pub projection: Vec<Rational>,
    pub epsilon: Rational,
}

/// Projects `d` to a line, untangles the projection with `untangle`, and
/// lifts the result back: every vertex the collinear untangling keeps in
/// place stays in place in the returned plane drawing.
///
/// `untangle` receives the graph and the x-coordinates of the projection
/// (the vertices sit at `(x_v, 0)`) and must return a plane drawing.
pub fn collinear_reduce<F>(d: &Drawing, untangle: F) -> Result<CollinearReduction>
where
    F: FnOnce(&Graph, &[Rational]) -> Result<Vec<Point>>,
{
    let frame = choose_frame(d.placement());
    let local: Vec<Point> = d.placement().iter().map(|p| frame.forward(p)).collect();
    let xs: Vec<Rational> = local.iter().map(|p| p.x.clone()).collect();
    let lambda: Vec<Point> = xs
        .iter()
        .map(|x| Point::new(x.clone(), Rational::zero()))
        .collect();
    let lambda_d = d.with_placement(lambda.clone())?;
    let untangled = untangle(&d.graph, &xs)?;
    let lambda2 = d.with_placement(untangled)?;
    if !is_plane_drawing(&lambda2) {
        return Err(Error::NotPlane);
    }
    let kept = fixed_set(&lambda_d, &lambda2)?;
    let eps = separation(&lambda2);
    let moved: Vec<Point> = (0..d.n())
        .map(|v| {
            if kept.contains(&v) {
                Point::new(xs[v].clone(), &eps * &local[v].y)
            } else {
                lambda2.position(v).clone()
            }
        })
        .collect();
    let placement: Vec<Point> = moved
        .iter()
        .map(|p| frame.backward(&Point::new(p.x.clone(), &p.y / &eps)))
        .collect();
    let out = d.with_placement(placement)?;
    if !is_plane_drawing(&out) {
        return Err(Error::NotPlane);
    }
    let fixed = fixed_set(d, &out)?;
    if !kept.is_subset(&fixed) {
        return Err(Error::Degenerate(
            "lifted drawing lost a kept vertex".into(),
        ));
    }
    Ok(CollinearReduction {
        drawing: out,
        kept,
        projection: xs,
        epsilon: eps,
    })
}

/// A positive rational at most a third of the smallest distance between
/// two disjoint edges, a vertex and an edge not containing it, or two
/// vertices of the plane drawing `d`.
fn separation(d: &Drawing) -> Rational {
    let edges: Vec<(usize, usize)> = d.graph.edges().collect();
    let pos = d.placement();
    let mut min2: Option<Rational> = None;
    let mut see = |v: Rational| {
        if v.is_positive() && min2.as_ref().is_none_or(|m| v < *m) {
            min2 = Some(v);
        }
    };
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, e) in &edges[i + 1..] {
            if a != c && a != e && b != c && b != e {
                see(segment_dist2(
                    &Segment::new(pos[a].clone(), pos[b].clone()),
                    &Segment::new(pos[c].clone(), pos[e].clone()),
                ));
            }
        }
        for (w, pw) in pos.iter().enumerate() {
            if w != a && w != b {
                see(point_segment_dist2(pw, &pos[a], &pos[b]));
            }
        }
    }
    for i in 0..pos.len() {
        for j in i + 1..pos.len() {
            see(pos[i].dist2(&pos[j]));
        }
    }
    let Some(m2) = min2 else {
        return Rational::one();
    };
    let mut bits = 16;
    loop {
        let r = sqrt_floor(&m2, bits);
        if r.is_positive() {
            return r / Rational::from_integer(3.into());
        }
        bits *= 2;
    }
}

/// Collinear untangler by exhaustive search over fixed sets (small graphs
/// only): the best redrawing the oracle finds, or one keeping two vertices.
pub fn naive_collinear_untangler(
    g: &Graph,
    xs: &[Rational],
    opts: &OracleOptions,
) -> Result<Vec<Point>> {
    if g.n() > 8 {
        return Err(Error::SizeCap(g.n(), 8));
    }
    let pts: Vec<Point> = xs
        .iter()
        .map(|x| Point::new(x.clone(), Rational::zero()))
        .collect();
    let d = Drawing::new(g.clone(), pts)?;
    let mut o = opts.clone();
    o.max_free = o.max_free.max(g.n());
    if let Some(w) = fix_oracle(&d, &o).witness {
        return Ok(w.placement().to_vec());
    }
    redraw_keeping_two(&d, opts)
        .map(|w| w.placement().to_vec())
        .ok_or_else(|| Error::Degenerate("no plane drawing found within budget".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle};

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    #[test]
    fn frame_round_trip() {
        let p = pts(&[(0, 0), (0, 5), (3, 7)]);
        let f = choose_frame(&p);
        for q in &p {
            assert_eq!(&f.backward(&f.forward(q)), q);
        }
        let xs: BTreeSet<Rational> = p.iter().map(|q| f.forward(q).x).collect();
        assert_eq!(xs.len(), 3);
    }

    #[test]
    fn identity_when_projection_is_plane() {
        // a path whose projection is already in path order
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let d = Drawing::new(g, pts(&[(0, 0), (1, 3), (2, 1)])).unwrap();
        let r = collinear_reduce(&d, |_, xs| {
            Ok(xs
                .iter()
                .map(|x| Point::new(x.clone(), Rational::zero()))
                .collect())
        })
        .unwrap();
        assert_eq!(r.kept.len(), 3);
        assert_eq!(r.drawing, d);
    }

    #[test]
    fn k4_and_cycle_with_naive_untangler() {
        let opts = OracleOptions::default();
        for (g, p) in [
            (complete(4), pts(&[(0, 0), (5, 1), (2, 7), (3, 2)])),
            (
                cycle(5).unwrap(),
                pts(&[(0, 0), (5, 1), (2, 7), (3, 2), (9, 4)]),
            ),
        ] {
            let d = Drawing::new(g, p).unwrap();
            let r = collinear_reduce(&d, |g, xs| naive_collinear_untangler(g, xs, &opts)).unwrap();
            assert!(is_plane_drawing(&r.drawing));
            assert!(r.kept.is_subset(&fixed_set(&d, &r.drawing).unwrap()));
        }
    }

    #[test]
    fn rejects_non_plane_untangling() {
        let d = Drawing::new(complete(4), pts(&[(0, 0), (5, 1), (2, 7), (3, 2)])).unwrap();
        let r = collinear_reduce(&d, |_, xs| {
            Ok(xs
                .iter()
                .map(|x| Point::new(x.clone(), Rational::zero()))
                .collect())
        });
        assert!(r.is_err());
    }
}
