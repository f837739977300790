use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(T::from_int(x), T::from_int(y))
    }

    pub fn sub(&self, o: &Self) -> (T, T) {
        (self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone())
    }

    /// `self + t * d`.
    pub fn offset(&self, d: &(T, T), t: &T) -> Self {
        Point::new(
            self.x.clone() + d.0.clone() * t.clone(),
            self.y.clone() + d.1.clone() * t.clone(),
        )
    }

    pub fn midpoint(&self, o: &Self) -> Self {
        let two = T::from_int(2);
        Point::new(
            (self.x.clone() + o.x.clone()) / two.clone(),
            (self.y.clone() + o.y.clone()) / two,
        )
    }

    pub fn dist2(&self, o: &Self) -> T {
        let (dx, dy) = self.sub(o);
        dx.clone() * dx + dy.clone() * dy
    }
}

impl<T: Scalar> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn cross<T: Scalar>(a: &(T, T), b: &(T, T)) -> T {
    a.0.clone() * b.1.clone() - a.1.clone() * b.0.clone()
}

pub fn dot<T: Scalar>(a: &(T, T), b: &(T, T)) -> T {
    a.0.clone() * b.0.clone() + a.1.clone() * b.1.clone()
}

/// Orientation of the triple: `1` counter-clockwise, `0` collinear, `-1` clockwise.
pub fn orient<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> i8 {
    let d = cross(&q.sub(p), &r.sub(p));
    sign(&d)
}

pub fn sign<T: Scalar>(v: &T) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// True when `r` lies on the closed segment `[p, q]`.
pub fn on_segment<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> bool {
    orient(p, q, r) == 0 && in_box(p, q, r)
}

/// True when `r` lies strictly inside the segment `(p, q)`.
pub fn in_open_segment<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> bool {
    r != p && r != q && on_segment(p, q, r)
}

// for collinear triples, bounding-box containment is betweenness
fn in_box<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> bool {
    let (x0, x1) = if p.x <= q.x {
        (&p.x, &q.x)
    } else {
        (&q.x, &p.x)
    };
    let (y0, y1) = if p.y <= q.y {
        (&p.y, &q.y)
    } else {
        (&q.y, &p.y)
    };
    *x0 <= r.x && r.x <= *x1 && *y0 <= r.y && r.y <= *y1
}

/// An ordered list of pairwise distinct points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet<T> {
    points: Vec<Point<T>>,
}

impl<T: Scalar> PointSet<T> {
    pub fn new(points: Vec<Point<T>>) -> Result<Self> {
        let mut sorted: Vec<&Point<T>> = points.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint(w[0].to_string()));
        }
        Ok(PointSet { points })
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&(x, y)| Point::from_ints(x, y))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn get(&self, i: usize) -> &Point<T> {
        &self.points[i]
    }

    pub fn index_of(&self, p: &Point<T>) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn into_points(self) -> Vec<Point<T>> {
        self.points
    }

    pub fn subset(&self, idx: &[usize]) -> PointSet<T> {
        PointSet {
            points: idx.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bbox(&self) -> Option<(Point<T>, Point<T>)> {
        bbox(&self.points)
    }
}

pub fn bbox<T: Scalar>(points: &[Point<T>]) -> Option<(Point<T>, Point<T>)> {
    let first = points.first()?;
    let mut lo = first.clone();
    let mut hi = first.clone();
    for p in &points[1..] {
        if p.x < lo.x {
            lo.x = p.x.clone();
        }
        if p.y < lo.y {
            lo.y = p.y.clone();
        }
        if p.x > hi.x {
            hi.x = p.x.clone();
        }
        if p.y > hi.y {
            hi.y = p.y.clone();
        }
    }
    Some((lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment<T> {
    pub a: Point<T>,
    pub b: Point<T>,
}

impl<T: Scalar> Segment<T> {
    pub fn new(a: Point<T>, b: Point<T>) -> Self {
        debug_assert!(a != b, "degenerate segment");
        Segment { a, b }
    }

    fn has_endpoint(&self, p: &Point<T>) -> bool {
        &self.a == p || &self.b == p
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentRelation {
    Disjoint,
    /// The segments meet in exactly one point, which is an endpoint of both.
    SharedEndpointOnly,
    /// The relative interiors cross in a single point.
    ProperCross,
    /// A single common point that is an endpoint of exactly one segment.
    ImproperTouch,
    /// Collinear with a common part of positive length.
    Overlap,
}

impl SegmentRelation {
    /// Whether two edges of a plane drawing may stand in this relation.
    pub fn is_plane_compatible(self) -> bool {
        matches!(
            self,
            SegmentRelation::Disjoint | SegmentRelation::SharedEndpointOnly
        )
    }
}

pub fn segments_relation<T: Scalar>(s: &Segment<T>, t: &Segment<T>) -> SegmentRelation {
    use SegmentRelation::*;
    let o1 = orient(&s.a, &s.b, &t.a);
    let o2 = orient(&s.a, &s.b, &t.b);
    if o1 == 0 && o2 == 0 {
        return collinear_relation(s, t);
    }
    let o3 = orient(&t.a, &t.b, &s.a);
    let o4 = orient(&t.a, &t.b, &s.b);
    if o1 * o2 > 0 || o3 * o4 > 0 {
        return Disjoint;
    }
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return ProperCross;
    }
    // exactly one common point, and it is an endpoint of at least one segment
    let common = if o1 == 0 {
        &t.a
    } else if o2 == 0 {
        &t.b
    } else if o3 == 0 {
        &s.a
    } else {
        &s.b
    };
    if s.has_endpoint(common) && t.has_endpoint(common) {
        SharedEndpointOnly
    } else {
        ImproperTouch
    }
}

fn collinear_relation<T: Scalar>(s: &Segment<T>, t: &Segment<T>) -> SegmentRelation {
    use SegmentRelation::*;
    // project onto the dominant axis of s
    let (dx, dy) = s.b.sub(&s.a);
    let key = |p: &Point<T>| {
        if dx.abs() >= dy.abs() {
            p.x.clone()
        } else {
            p.y.clone()
        }
    };
    let (s0, s1) = minmax(key(&s.a), key(&s.b));
    let (t0, t1) = minmax(key(&t.a), key(&t.b));
    let lo = if s0 > t0 { s0 } else { t0 };
    let hi = if s1 < t1 { s1 } else { t1 };
    match lo.cmp(&hi) {
        std::cmp::Ordering::Greater => Disjoint,
        std::cmp::Ordering::Less => Overlap,
        std::cmp::Ordering::Equal => {
            // touching at a single point, necessarily an endpoint of both
            SharedEndpointOnly
        }
    }
}

fn minmax<T: Ord>(a: T, b: T) -> (T, T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Squared Euclidean distance from `p` to the closed segment `[a, b]`.
pub fn point_segment_dist2<T: Scalar>(p: &Point<T>, a: &Point<T>, b: &Point<T>) -> T {
    let ab = b.sub(a);
    let ap = p.sub(a);
    let len2 = dot(&ab, &ab);
    let t = dot(&ap, &ab);
    if !t.is_positive() {
        return p.dist2(a);
    }
    if t >= len2 {
        return p.dist2(b);
    }
    // |ap x ab|^2 / |ab|^2
    let c = cross(&ab, &ap);
    c.clone() * c / len2
}

/// Squared distance between two closed segments.
pub fn segment_dist2<T: Scalar>(s: &Segment<T>, t: &Segment<T>) -> T {
    if segments_relation(s, t) != SegmentRelation::Disjoint {
        return T::zero();
    }
    [
        point_segment_dist2(&s.a, &t.a, &t.b),
        point_segment_dist2(&s.b, &t.a, &t.b),
        point_segment_dist2(&t.a, &s.a, &s.b),
        point_segment_dist2(&t.b, &s.a, &s.b),
    ]
    .into_iter()
    .min()
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Point<Rational>;

    fn p(x: i64, y: i64) -> P {
        Point::from_ints(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment<Rational> {
        Segment::new(p(a.0, a.1), p(b.0, b.1))
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), 1);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)), 0);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 0)), -1);
    }

    #[test]
    fn segment_relation_examples() {
        use SegmentRelation::*;
        assert_eq!(
            segments_relation(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))),
            ProperCross
        );
        assert_eq!(
            segments_relation(&seg((0, 0), (1, 0)), &seg((1, 0), (2, 1))),
            SharedEndpointOnly
        );
        assert_eq!(
            segments_relation(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))),
            Overlap
        );
        assert_eq!(
            segments_relation(&seg((0, 0), (2, 0)), &seg((1, 0), (1, 5))),
            ImproperTouch
        );
        assert_eq!(
            segments_relation(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 0))),
            Disjoint
        );
        assert_eq!(
            segments_relation(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0))),
            SharedEndpointOnly
        );
        assert_eq!(
            segments_relation(&seg((0, 0), (2, 0)), &seg((0, 0), (1, 0))),
            Overlap
        );
        assert_eq!(
            segments_relation(&seg((0, 0), (1, 1)), &seg((3, 0), (4, 7))),
            Disjoint
        );
    }

    #[test]
    fn point_set_rejects_duplicates() {
        assert!(PointSet::<Rational>::from_ints(&[(0, 0), (1, 0), (0, 0)]).is_err());
    }

    #[test]
    fn distances() {
        assert_eq!(
            point_segment_dist2(&p(1, 1), &p(0, 0), &p(2, 0)),
            Rational::from_int(1)
        );
        assert_eq!(
            point_segment_dist2(&p(3, 1), &p(0, 0), &p(2, 0)),
            Rational::from_int(2)
        );
        assert_eq!(
            segment_dist2(&seg((0, 0), (1, 0)), &seg((0, 2), (1, 3))),
            Rational::from_int(4)
        );
    }
}
