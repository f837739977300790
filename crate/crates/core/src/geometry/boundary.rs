//! Convex polygonal boundaries, arc lengths along them, and the arrows and
//! quivers used to analyse star forests drawn on weakly convex point sets.
//!
//! "Clockwise" along the boundary means decreasing vertex index, since the
//! polygon is stored counter-clockwise.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::One;

use super::algebraic::SqrtSum;
use super::hull::{hull_vertices, point_in_hull};
use super::point::{on_segment, orient, segments_relation, Point, Segment, SegmentRelation};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Boundary<T> {
    polygon: Vec<Point<T>>,
    side_len2: Vec<BigRational>,
}

/// Location of a boundary point: side index and parameter in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryPos {
    pub side: usize,
    pub t: BigRational,
}

impl<T: Scalar> Boundary<T> {
    /// `polygon` must list a strictly convex polygon counter-clockwise.
    pub fn new(polygon: Vec<Point<T>>) -> Result<Self> {
        let n = polygon.len();
        if n < 3 {
            return Err(Error::NotConvex);
        }
        for i in 0..n {
            if orient(&polygon[i], &polygon[(i + 1) % n], &polygon[(i + 2) % n]) <= 0 {
                return Err(Error::NotConvex);
            }
        }
        // a locally convex polygon can still wind more than once
        if hull_vertices(&polygon).len() != n {
            return Err(Error::NotConvex);
        }
        let side_len2 = (0..n)
            .map(|i| polygon[i].dist2(&polygon[(i + 1) % n]).to_rational())
            .collect();
        Ok(Boundary { polygon, side_len2 })
    }

    /// The hull of `points`, which must not be collinear.
    pub fn hull_of(points: &[Point<T>]) -> Result<Self> {
        Boundary::new(hull_vertices(points))
    }

    pub fn polygon(&self) -> &[Point<T>] {
        &self.polygon
    }

    pub fn contains_closed(&self, p: &Point<T>) -> bool {
        point_in_hull(&self.polygon, p)
    }

    pub fn locate(&self, p: &Point<T>) -> Result<BoundaryPos> {
        let n = self.polygon.len();
        for side in 0..n {
            let a = &self.polygon[side];
            let b = &self.polygon[(side + 1) % n];
            if p != b && on_segment(a, b, p) {
                let (dx, dy) = b.sub(a);
                let (px, py) = p.sub(a);
                let t = if dx.is_zero() { py / dy } else { px / dx };
                return Ok(BoundaryPos {
                    side,
                    t: t.to_rational(),
                });
            }
        }
        Err(Error::NotOnBoundary(p.to_string()))
    }

    pub fn perimeter(&self) -> SqrtSum {
        let mut s = SqrtSum::zero();
        for r in &self.side_len2 {
            s.push(BigRational::one(), r.clone());
        }
        s
    }

    /// Length of the counter-clockwise walk from `from` to `to`.
    pub fn ccw_arc(&self, from: &BoundaryPos, to: &BoundaryPos) -> SqrtSum {
        let n = self.polygon.len();
        let mut s = SqrtSum::zero();
        if from == to {
            return s;
        }
        if from.side == to.side && to.t > from.t {
            s.push(&to.t - &from.t, self.side_len2[from.side].clone());
            return s;
        }
        s.push(
            BigRational::one() - &from.t,
            self.side_len2[from.side].clone(),
        );
        let mut side = (from.side + 1) % n;
        while side != to.side {
            s.push(BigRational::one(), self.side_len2[side].clone());
            side = (side + 1) % n;
        }
        s.push(to.t.clone(), self.side_len2[to.side].clone());
        s
    }

    pub fn cw_arc(&self, from: &BoundaryPos, to: &BoundaryPos) -> SqrtSum {
        self.ccw_arc(to, from)
    }

    /// Sign of `cw_arc(from, to) - ccw_arc(from, to)`.
    fn cw_minus_ccw(&self, from: &BoundaryPos, to: &BoundaryPos) -> Ordering {
        let cw = self.cw_arc(from, to);
        let two = BigRational::from_integer(2.into());
        cw.scaled(&two).minus(&self.perimeter()).signum()
    }

    /// Whether `q` lies strictly inside the shorter of the two open arcs
    /// between the endpoints of `arrow`. Medians have no shorter arc.
    pub fn in_shorter_arc(&self, arrow: &Arrow<T>, q: &Point<T>) -> Result<bool> {
        let t = self.locate(&arrow.tail)?;
        let h = self.locate(&arrow.head)?;
        let x = self.locate(q)?;
        if x == t || x == h {
            return Ok(false);
        }
        let (arc, to_q) = match arrow.color {
            ArrowColor::Median => return Ok(false),
            ArrowColor::Red => (self.cw_arc(&t, &h), self.cw_arc(&t, &x)),
            ArrowColor::Blue => (self.ccw_arc(&t, &h), self.ccw_arc(&t, &x)),
        };
        Ok(to_q.minus(&arc).signum() == Ordering::Less)
    }

    /// Length of the shorter arc cut off by a chord.
    pub fn shorter_arc(&self, arrow: &Arrow<T>) -> Result<SqrtSum> {
        let t = self.locate(&arrow.tail)?;
        let h = self.locate(&arrow.head)?;
        Ok(match arrow.color {
            ArrowColor::Blue => self.ccw_arc(&t, &h),
            _ => self.cw_arc(&t, &h),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArrowColor {
    Red,
    Blue,
    Median,
}

/// A directed chord of a boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow<T> {
    pub tail: Point<T>,
    pub head: Point<T>,
    pub color: ArrowColor,
}

impl<T: Scalar> Arrow<T> {
    pub fn new(tail: Point<T>, head: Point<T>, boundary: &Boundary<T>) -> Result<Self> {
        if tail == head {
            return Err(Error::Degenerate("arrow with equal endpoints".into()));
        }
        let color = arrow_color(&tail, &head, boundary)?;
        Ok(Arrow { tail, head, color })
    }
}

/// Red when the shorter way from tail to head along the boundary is
/// clockwise, blue when it is counter-clockwise, median when both ways have
/// equal length.
pub fn arrow_color<T: Scalar>(
    tail: &Point<T>,
    head: &Point<T>,
    boundary: &Boundary<T>,
) -> Result<ArrowColor> {
    let t = boundary.locate(tail)?;
    let h = boundary.locate(head)?;
    Ok(match boundary.cw_minus_ccw(&t, &h) {
        Ordering::Less => ArrowColor::Red,
        Ordering::Greater => ArrowColor::Blue,
        Ordering::Equal => ArrowColor::Median,
    })
}

/// The arrow of the quiver seen from `p` that starts at the boundary point
/// `v`: when the segment from `v` to `p` leaves the body through a second
/// boundary point `h`, the arrow runs from `v` to `h` (the head is the end
/// nearer to `p`).
pub fn quiver_arrow<T: Scalar>(
    p: &Point<T>,
    v: &Point<T>,
    boundary: &Boundary<T>,
) -> Result<Option<Arrow<T>>> {
    if boundary.contains_closed(p) {
        return Err(Error::Degenerate(format!(
            "standpoint {p} is not outside the body"
        )));
    }
    boundary.locate(v)?;
    let ray = Segment::new(v.clone(), p.clone());
    let poly = boundary.polygon();
    let n = poly.len();
    let mut hits: Vec<Point<T>> = Vec::new();
    for i in 0..n {
        let side = Segment::new(poly[i].clone(), poly[(i + 1) % n].clone());
        let rel = segments_relation(&ray, &side);
        let hit = match rel {
            SegmentRelation::Disjoint => continue,
            SegmentRelation::Overlap => {
                return Err(Error::Degenerate(format!(
                    "segment {v}-{p} runs along a side of the boundary"
                )))
            }
            _ => match super::arrangement::Line::through(&ray.a, &ray.b)
                .intersect(&super::arrangement::Line::through(&side.a, &side.b))
            {
                Some(x) => x,
                // collinear and touching in one point: that point is v
                None => v.clone(),
            },
        };
        if &hit != v && !hits.contains(&hit) {
            hits.push(hit);
        }
    }
    match hits.len() {
        0 => Ok(None),
        1 => Arrow::new(v.clone(), hits.pop().unwrap(), boundary).map(Some),
        _ => Err(Error::Degenerate(format!(
            "segment {v}-{p} meets the boundary three times"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn p(x: i64, y: i64) -> Point<Rational> {
        Point::from_ints(x, y)
    }

    fn square() -> Boundary<Rational> {
        Boundary::new(vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)]).unwrap()
    }

    #[test]
    fn colors_on_a_square() {
        let g = square();
        // clockwise from (2,0) reaches (0,0) along one side
        assert_eq!(
            arrow_color(&p(2, 0), &p(0, 0), &g).unwrap(),
            ArrowColor::Red
        );
        assert_eq!(
            arrow_color(&p(0, 0), &p(2, 0), &g).unwrap(),
            ArrowColor::Blue
        );
        assert_eq!(
            arrow_color(&p(0, 0), &p(2, 2), &g).unwrap(),
            ArrowColor::Median
        );
        assert_eq!(
            arrow_color(&p(1, 0), &p(1, 2), &g).unwrap(),
            ArrowColor::Median
        );
        assert!(arrow_color(&p(1, 1), &p(0, 0), &g).is_err());
    }

    #[test]
    fn median_detection_with_irrational_sides() {
        // a kite symmetric about the x-axis: the axis chord is a median
        let g = Boundary::new(vec![p(0, 0), p(3, -1), p(5, 0), p(3, 1)]).unwrap();
        assert_eq!(
            arrow_color(&p(0, 0), &p(5, 0), &g).unwrap(),
            ArrowColor::Median
        );
        assert_eq!(
            arrow_color(&p(0, 0), &p(3, 1), &g).unwrap(),
            ArrowColor::Red
        );
        assert_eq!(
            arrow_color(&p(0, 0), &p(3, -1), &g).unwrap(),
            ArrowColor::Blue
        );
    }

    #[test]
    fn quiver_crossing_near_side() {
        let g = square();
        let a = quiver_arrow(&p(1, -3), &p(1, 2), &g).unwrap().unwrap();
        assert_eq!(a.tail, p(1, 2));
        assert_eq!(a.head, p(1, 0));
        assert_eq!(a.color, ArrowColor::Median);
        let a = quiver_arrow(&p(4, -2), &p(0, 2), &g).unwrap().unwrap();
        assert_eq!(a.head, p(2, 0));
    }

    #[test]
    fn quiver_leaving_immediately() {
        let g = square();
        assert_eq!(quiver_arrow(&p(1, -3), &p(1, 0), &g).unwrap(), None);
        assert_eq!(quiver_arrow(&p(5, -3), &p(2, 0), &g).unwrap(), None);
    }

    #[test]
    fn quiver_along_a_side_is_degenerate() {
        let g = square();
        assert!(quiver_arrow(&p(5, 0), &p(1, 0), &g).is_err());
        assert!(quiver_arrow(&p(1, 1), &p(1, 0), &g).is_err());
    }

    #[test]
    fn rejects_non_convex() {
        assert!(Boundary::new(vec![p(0, 0), p(2, 0), p(1, 1), p(2, 2), p(0, 2)]).is_err());
        assert!(Boundary::new(vec![p(0, 0), p(0, 2), p(2, 2), p(2, 0)]).is_err());
    }
}
