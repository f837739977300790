//! Arrangement of all lines through at least two points of a finite set.
//!
//! Cells are the open faces, the open edges (pieces of lines between
//! consecutive vertices, two of them unbounded per line) and the vertices.
//! Every cell carries one exact representative point lying strictly inside it.

use std::collections::{BTreeMap, HashMap};

use super::point::{bbox, dot, sign, Point, PointSet};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The line `a*x + b*y = c`, normalized so that the first non-zero of
/// `(a, b)` equals one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Scalar> Line<T> {
    pub fn through(p: &Point<T>, q: &Point<T>) -> Self {
        debug_assert!(p != q);
        let a = q.y.clone() - p.y.clone();
        let b = p.x.clone() - q.x.clone();
        let c = a.clone() * p.x.clone() + b.clone() * p.y.clone();
        let lead = if a.is_zero() { b.clone() } else { a.clone() };
        Line {
            a: a / lead.clone(),
            b: b / lead.clone(),
            c: c / lead,
        }
    }

    /// `a*x + b*y - c`; its sign tells the side of `p`.
    pub fn eval(&self, p: &Point<T>) -> T {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() - self.c.clone()
    }

    pub fn side(&self, p: &Point<T>) -> i8 {
        sign(&self.eval(p))
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        self.eval(p).is_zero()
    }

    pub fn normal(&self) -> (T, T) {
        (self.a.clone(), self.b.clone())
    }

    pub fn direction(&self) -> (T, T) {
        (-self.b.clone(), self.a.clone())
    }

    /// Coordinate of `p` along the line direction (monotone along the line).
    pub fn param(&self, p: &Point<T>) -> T {
        dot(&self.direction(), &(p.x.clone(), p.y.clone()))
    }

    pub fn intersect(&self, o: &Self) -> Option<Point<T>> {
        let det = self.a.clone() * o.b.clone() - o.a.clone() * self.b.clone();
        if det.is_zero() {
            return None;
        }
        let x = (self.c.clone() * o.b.clone() - o.c.clone() * self.b.clone()) / det.clone();
        let y = (self.a.clone() * o.c.clone() - o.a.clone() * self.c.clone()) / det;
        Some(Point::new(x, y))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    Face,
    Edge { bounded: bool },
    Vertex,
}

#[derive(Clone, Debug)]
pub struct ArrangementEdge<T> {
    pub line: usize,
    pub bounded: bool,
    pub rep: Point<T>,
}

#[derive(Clone, Debug)]
pub struct Arrangement<T> {
    pub lines: Vec<Line<T>>,
    /// Pairwise intersections of lines together with the input points.
    pub vertices: Vec<Point<T>>,
    pub edges: Vec<ArrangementEdge<T>>,
    /// One interior point per face.
    pub faces: Vec<Point<T>>,
    sites: Vec<Point<T>>,
}

impl<T: Scalar> Arrangement<T> {
    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn sites(&self) -> &[Point<T>] {
        &self.sites
    }

    /// All representatives tagged with their cell kind.
    pub fn cells(&self) -> impl Iterator<Item = (CellKind, &Point<T>)> {
        self.faces
            .iter()
            .map(|p| (CellKind::Face, p))
            .chain(
                self.edges
                    .iter()
                    .map(|e| (CellKind::Edge { bounded: e.bounded }, &e.rep)),
            )
            .chain(self.vertices.iter().map(|p| (CellKind::Vertex, p)))
    }

    /// Every cell representative plus every input point.
    pub fn standpoints(&self) -> impl Iterator<Item = &Point<T>> {
        self.cells().map(|(_, p)| p).chain(self.sites.iter())
    }

    /// Side of `p` with respect to every line.
    pub fn sign_vector(&self, p: &Point<T>) -> Vec<i8> {
        self.lines.iter().map(|l| l.side(p)).collect()
    }

    /// Which line-cell a point belongs to is determined by its sign vector
    /// plus, on a line, its position among the vertices; this helper locates
    /// faces only.
    pub fn face_of(&self, p: &Point<T>) -> Option<usize> {
        let key = self.sign_vector(p);
        if key.contains(&0) {
            return None;
        }
        self.faces.iter().position(|f| self.sign_vector(f) == key)
    }
}

/// Lines through pairs of `points`, deduplicated, each with the indices of the
/// points it contains.
pub fn lines_through<T: Scalar>(points: &[Point<T>]) -> Vec<(Line<T>, Vec<usize>)> {
    let mut map: BTreeMap<Line<T>, Vec<usize>> = BTreeMap::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let l = Line::through(&points[i], &points[j]);
            let on = map.entry(l).or_default();
            for k in [i, j] {
                if !on.contains(&k) {
                    on.push(k);
                }
            }
        }
    }
    map.into_iter()
        .map(|(l, mut on)| {
            on.sort_unstable();
            (l, on)
        })
        .collect()
}

pub fn build_arrangement<T: Scalar>(set: &PointSet<T>) -> Result<Arrangement<T>> {
    if set.len() < 2 {
        return Err(Error::TooFewPoints {
            need: 2,
            got: set.len(),
        });
    }
    Ok(arrangement_of(set.points()))
}

/// Builds the arrangement of lines through pairs of `points` (assumed
/// distinct, at least two).
pub(crate) fn arrangement_of<T: Scalar>(points: &[Point<T>]) -> Arrangement<T> {
    let with_sites = lines_through(points);
    let lines: Vec<Line<T>> = with_sites.iter().map(|(l, _)| l.clone()).collect();

    // vertices on each line, keyed by their parameter along the line
    let mut on_line: Vec<BTreeMap<T, Point<T>>> = vec![BTreeMap::new(); lines.len()];
    let mut vertex_set: HashMap<Point<T>, ()> = HashMap::new();
    let mut vertices = Vec::new();
    let mut add_vertex = |p: Point<T>, vs: &mut Vec<Point<T>>| {
        if vertex_set.insert(p.clone(), ()).is_none() {
            vs.push(p);
        }
    };
    for (li, (_, on)) in with_sites.iter().enumerate() {
        for &k in on {
            let p = &points[k];
            on_line[li].insert(lines[li].param(p), p.clone());
            add_vertex(p.clone(), &mut vertices);
        }
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if let Some(p) = lines[i].intersect(&lines[j]) {
                on_line[i].insert(lines[i].param(&p), p.clone());
                on_line[j].insert(lines[j].param(&p), p.clone());
                add_vertex(p, &mut vertices);
            }
        }
    }

    // rays are pushed past twice the L-infinity diameter of all vertices
    let (lo, hi) = bbox(&vertices).expect("at least two vertices");
    let w = hi.x.clone() - lo.x.clone();
    let h = hi.y.clone() - lo.y.clone();
    let diam = if w > h { w } else { h };
    let reach = T::from_int(2) * diam + T::one();

    let mut edges = Vec::new();
    for (li, line) in lines.iter().enumerate() {
        let d = line.direction();
        let dmax = if d.0.abs() > d.1.abs() {
            d.0.abs()
        } else {
            d.1.abs()
        };
        let step = reach.clone() / dmax;
        let pts: Vec<&Point<T>> = on_line[li].values().collect();
        let first = pts[0];
        let last = pts[pts.len() - 1];
        edges.push(ArrangementEdge {
            line: li,
            bounded: false,
            rep: first.offset(&d, &-step.clone()),
        });
        for w in pts.windows(2) {
            edges.push(ArrangementEdge {
                line: li,
                bounded: true,
                rep: w[0].midpoint(w[1]),
            });
        }
        edges.push(ArrangementEdge {
            line: li,
            bounded: false,
            rep: last.offset(&d, &step),
        });
    }

    // every face is incident to some edge: step off each edge to both sides
    let mut face_keys: HashMap<Vec<i8>, ()> = HashMap::new();
    let mut faces = Vec::new();
    let half = T::from_frac(1, 2);
    for e in &edges {
        let n = lines[e.line].normal();
        let mut delta: Option<T> = None;
        for (lj, other) in lines.iter().enumerate() {
            if lj == e.line {
                continue;
            }
            let rate = dot(&n, &other.normal()).abs();
            if rate.is_zero() {
                continue;
            }
            let room = other.eval(&e.rep).abs() / rate * half.clone();
            delta = Some(match delta {
                Some(d) if d <= room => d,
                _ => room,
            });
        }
        let delta = delta.unwrap_or_else(T::one);
        for s in [delta.clone(), -delta] {
            let f = e.rep.offset(&n, &s);
            let key: Vec<i8> = lines.iter().map(|l| l.side(&f)).collect();
            debug_assert!(!key.contains(&0));
            if face_keys.insert(key, ()).is_none() {
                faces.push(f);
            }
        }
    }

    Arrangement {
        lines,
        vertices,
        edges,
        faces,
        sites: points.to_vec(),
    }
}
