use super::point::{orient, Point, PointSet};
use crate::scalar::Scalar;

/// Convex hull of a finite point set.
///
/// `vertices` are the extreme points in counter-clockwise order. For a
/// collinear input the hull is the segment between its two extreme points;
/// for a single point it is that point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexHull<T> {
    pub vertices: Vec<Point<T>>,
    /// Input points on the hull boundary that are not hull vertices.
    pub on_boundary: Vec<Point<T>>,
    /// Input points strictly inside the hull.
    pub interior: Vec<Point<T>>,
}

impl<T: Scalar> ConvexHull<T> {
    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    /// Closed-hull membership.
    pub fn contains(&self, p: &Point<T>) -> bool {
        point_in_hull(&self.vertices, p)
    }
}

/// Andrew's monotone chain, keeping only extreme points.
pub fn hull_vertices<T: Scalar>(points: &[Point<T>]) -> Vec<Point<T>> {
    let mut pts: Vec<&Point<T>> = points.iter().collect();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts.into_iter().cloned().collect();
    }
    let mut lower: Vec<&Point<T>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<&Point<T>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // all collinear: the chain degenerates to the two extremes
    lower.dedup();
    lower.into_iter().cloned().collect()
}

/// Closed membership of `p` in the convex polygon (possibly a point or a
/// segment) with counter-clockwise vertices `hull`.
pub fn point_in_hull<T: Scalar>(hull: &[Point<T>], p: &Point<T>) -> bool {
    match hull.len() {
        0 => false,
        1 => &hull[0] == p,
        2 => super::point::on_segment(&hull[0], &hull[1], p),
        n => (0..n).all(|i| orient(&hull[i], &hull[(i + 1) % n], p) >= 0),
    }
}

pub fn convex_hull<T: Scalar>(set: &PointSet<T>) -> ConvexHull<T> {
    let vertices = hull_vertices(set.points());
    let mut on_boundary = Vec::new();
    let mut interior = Vec::new();
    let n = vertices.len();
    for p in set.points() {
        if vertices.contains(p) {
            continue;
        }
        let on_edge = match n {
            0 | 1 => false,
            2 => true,
            _ => (0..n).any(|i| orient(&vertices[i], &vertices[(i + 1) % n], p) == 0),
        };
        if on_edge {
            on_boundary.push(p.clone());
        } else {
            interior.push(p.clone());
        }
    }
    ConvexHull {
        vertices,
        on_boundary,
        interior,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositionClass {
    Collinear,
    WeaklyConvex,
    General,
}

impl PositionClass {
    pub fn is_weakly_convex(self) -> bool {
        self != PositionClass::General
    }
}

pub fn all_collinear<T: Scalar>(points: &[Point<T>]) -> bool {
    if points.len() <= 2 {
        return true;
    }
    let a = &points[0];
    let Some(b) = points.iter().find(|p| *p != a) else {
        return true;
    };
    points.iter().all(|p| orient(a, b, p) == 0)
}

pub fn position_class<T: Scalar>(set: &PointSet<T>) -> PositionClass {
    if all_collinear(set.points()) {
        return PositionClass::Collinear;
    }
    if convex_hull(set).interior.is_empty() {
        PositionClass::WeaklyConvex
    } else {
        PositionClass::General
    }
}

/// Indices of the points of a weakly convex set in counter-clockwise order
/// along the hull boundary, starting from the lowest-leftmost point. For a
/// collinear set this is the order along the line.
pub fn boundary_order<T: Scalar>(set: &PointSet<T>) -> Option<Vec<usize>> {
    let pts = set.points();
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    if all_collinear(pts) {
        idx.sort_by(|&i, &j| pts[i].cmp(&pts[j]));
        return Some(idx);
    }
    let hull = convex_hull(set);
    if !hull.interior.is_empty() {
        return None;
    }
    let verts = &hull.vertices;
    let m = verts.len();
    let mut out = Vec::with_capacity(pts.len());
    for e in 0..m {
        let a = &verts[e];
        let b = &verts[(e + 1) % m];
        let mut on: Vec<usize> = idx
            .iter()
            .copied()
            .filter(|&i| &pts[i] != b && super::point::on_segment(a, b, &pts[i]))
            .collect();
        on.sort_by_key(|&i| pts[i].dist2(a));
        out.extend(on);
    }
    Some(out)
}
