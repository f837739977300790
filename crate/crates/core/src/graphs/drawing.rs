use std::collections::{BTreeSet, HashSet};

use super::graph::Graph;
use crate::error::{Error, Result};
use crate::geometry::{segments_relation, Point, Segment, SegmentRelation};
use crate::scalar::Scalar;

/// A graph together with an injective placement of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing<T> {
    pub graph: Graph,
    placement: Vec<Point<T>>,
}

impl<T: Scalar> Drawing<T> {
    pub fn new(graph: Graph, placement: Vec<Point<T>>) -> Result<Self> {
        if placement.len() != graph.n() {
            return Err(Error::GraphMismatch(format!(
                "{} positions for {} vertices",
                placement.len(),
                graph.n()
            )));
        }
        let mut seen = HashSet::with_capacity(placement.len());
        for (v, p) in placement.iter().enumerate() {
            if !seen.insert(p) {
                let u = placement.iter().position(|q| q == p).expect("seen before");
                return Err(Error::NotInjective(u, v));
            }
        }
        Ok(Drawing { graph, placement })
    }

    pub fn placement(&self) -> &[Point<T>] {
        &self.placement
    }

    pub fn position(&self, v: usize) -> &Point<T> {
        &self.placement[v]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn segment(&self, (u, v): (usize, usize)) -> Segment<T> {
        Segment::new(self.placement[u].clone(), self.placement[v].clone())
    }

    /// Same graph, some vertices moved.
    pub fn with_placement(&self, placement: Vec<Point<T>>) -> Result<Self> {
        Drawing::new(self.graph.clone(), placement)
    }
}

/// Outcome of a crossing check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneCheck {
    pub edge_conflicts: Vec<((usize, usize), (usize, usize))>,
    /// A vertex lying in the relative interior of a non-incident edge.
    pub vertex_on_edge: Vec<(usize, (usize, usize))>,
}

impl PlaneCheck {
    pub fn is_plane(&self) -> bool {
        self.edge_conflicts.is_empty() && self.vertex_on_edge.is_empty()
    }
}

/// Two placed edges are compatible in a plane drawing when disjoint, or
/// when they share an endvertex and meet only there.
pub fn edges_compatible<T: Scalar>(pos: &[Point<T>], e: (usize, usize), f: (usize, usize)) -> bool {
    let shared = e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
    let rel = segments_relation(
        &Segment::new(pos[e.0].clone(), pos[e.1].clone()),
        &Segment::new(pos[f.0].clone(), pos[f.1].clone()),
    );
    if shared {
        rel == SegmentRelation::SharedEndpointOnly
    } else {
        rel == SegmentRelation::Disjoint
    }
}

pub fn check_plane<T: Scalar>(d: &Drawing<T>) -> PlaneCheck {
    let edges: Vec<(usize, usize)> = d.graph.edges().collect();
    let pos = d.placement();
    let mut out = PlaneCheck::default();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if !edges_compatible(pos, e, f) {
                out.edge_conflicts.push((e, f));
            }
        }
        for (v, p) in pos.iter().enumerate() {
            if v != e.0 && v != e.1 && crate::geometry::in_open_segment(&pos[e.0], &pos[e.1], p) {
                out.vertex_on_edge.push((v, e));
            }
        }
    }
    out
}

pub fn is_plane_drawing<T: Scalar>(d: &Drawing<T>) -> bool {
    check_plane(d).is_plane()
}

/// Vertices placed identically by both drawings.
pub fn fixed_set<T: Scalar>(a: &Drawing<T>, b: &Drawing<T>) -> Result<BTreeSet<usize>> {
    if a.graph != b.graph {
        return Err(Error::GraphMismatch("drawings of different graphs".into()));
    }
    Ok((0..a.n())
        .filter(|&v| a.position(v) == b.position(v))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{complete, path};
    use crate::Rational;

    fn pts(v: &[(i64, i64)]) -> Vec<Point<Rational>> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    #[test]
    fn k4_drawings() {
        let inside = Drawing::new(complete(4), pts(&[(0, 0), (4, 0), (0, 4), (1, 1)])).unwrap();
        assert!(is_plane_drawing(&inside));
        let convex = Drawing::new(complete(4), pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap();
        let check = check_plane(&convex);
        assert_eq!(check.edge_conflicts.len(), 1);
    }

    #[test]
    fn collinear_paths() {
        let good = Drawing::new(path(3), pts(&[(0, 0), (1, 0), (2, 0)])).unwrap();
        assert!(is_plane_drawing(&good));
        let bad = Drawing::new(path(3), pts(&[(0, 0), (2, 0), (1, 0)])).unwrap();
        assert!(!is_plane_drawing(&bad));
        // vertex on a non-incident edge
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let d = Drawing::new(g, pts(&[(0, 0), (2, 0), (1, 0)])).unwrap();
        assert_eq!(check_plane(&d).vertex_on_edge, vec![(2, (0, 1))]);
    }

    #[test]
    fn injectivity_and_fixed() {
        assert!(Drawing::new(path(2), pts(&[(0, 0), (0, 0)])).is_err());
        let a = Drawing::new(complete(4), pts(&[(0, 0), (4, 0), (0, 4), (1, 1)])).unwrap();
        let b = a
            .with_placement(pts(&[(0, 0), (4, 0), (0, 4), (1, 2)]))
            .unwrap();
        assert_eq!(fixed_set(&a, &b).unwrap(), BTreeSet::from([0, 1, 2]));
        assert_eq!(fixed_set(&a, &a).unwrap().len(), 4);
        let c = Drawing::new(path(4), pts(&[(0, 0), (4, 0), (0, 4), (1, 1)])).unwrap();
        assert!(fixed_set(&a, &c).is_err());
    }
}
