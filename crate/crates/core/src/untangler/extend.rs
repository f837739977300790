//! Placing free vertices so that a partial drawing stays plane.
//!
//! The set of valid positions for one free vertex is open, and whether a
//! position is valid depends only on its side of every line through two
//! placed points. So a free vertex can be placed if and only if some face
//! of that line arrangement works, and one representative per face decides it.

use crate::geometry::arrangement::arrangement_of;
use crate::geometry::{
    in_open_segment, segments_relation, CellKind, Point, Segment, SegmentRelation,
};
use crate::graphs::Graph;
use crate::Rational;

type P = Point<Rational>;

/// Graph data shared by the placement routines.
pub(crate) struct Frame {
    pub edges: Vec<(usize, usize)>,
    pub adj: Vec<Vec<usize>>,
}

impl Frame {
    pub fn new(g: &Graph) -> Self {
        Frame {
            edges: g.edges().collect(),
            adj: g.adjacency(),
        }
    }

    /// Edges between placed vertices are pairwise compatible and avoid all
    /// other placed vertices.
    pub fn placed_part_plane(&self, pos: &[Option<P>]) -> bool {
        let placed: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| pos[a].is_some() && pos[b].is_some())
            .collect();
        for (i, &(a, b)) in placed.iter().enumerate() {
            let (pa, pb) = (pos[a].as_ref().unwrap(), pos[b].as_ref().unwrap());
            for (w, pw) in pos.iter().enumerate() {
                if let Some(pw) = pw {
                    if w != a && w != b && in_open_segment(pa, pb, pw) {
                        return false;
                    }
                }
            }
            let s = Segment::new(pa.clone(), pb.clone());
            for &(c, d) in &placed[i + 1..] {
                let t = Segment::new(pos[c].clone().unwrap(), pos[d].clone().unwrap());
                let shared = a == c || a == d || b == c || b == d;
                let rel = segments_relation(&s, &t);
                let ok = if shared {
                    rel == SegmentRelation::SharedEndpointOnly
                } else {
                    rel == SegmentRelation::Disjoint
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Whether putting the unplaced vertex `v` at `c` keeps the placed part
    /// plane, given that it was plane before.
    pub fn valid_at(&self, pos: &[Option<P>], v: usize, c: &P) -> bool {
        if pos.iter().flatten().any(|p| p == c) {
            return false;
        }
        for &(a, b) in &self.edges {
            if a == v || b == v {
                continue;
            }
            if let (Some(pa), Some(pb)) = (&pos[a], &pos[b]) {
                if in_open_segment(pa, pb, c) {
                    return false;
                }
            }
        }
        let nbrs: Vec<usize> = self.adj[v]
            .iter()
            .copied()
            .filter(|&u| pos[u].is_some())
            .collect();
        for (i, &u) in nbrs.iter().enumerate() {
            let pu = pos[u].as_ref().unwrap();
            for (w, pw) in pos.iter().enumerate() {
                if let Some(pw) = pw {
                    if w != u && in_open_segment(c, pu, pw) {
                        return false;
                    }
                }
            }
            let s = Segment::new(c.clone(), pu.clone());
            for &(a, b) in &self.edges {
                if a == v || b == v {
                    continue;
                }
                if let (Some(pa), Some(pb)) = (&pos[a], &pos[b]) {
                    let rel = segments_relation(&s, &Segment::new(pa.clone(), pb.clone()));
                    let ok = if a == u || b == u {
                        rel == SegmentRelation::SharedEndpointOnly
                    } else {
                        rel == SegmentRelation::Disjoint
                    };
                    if !ok {
                        return false;
                    }
                }
            }
            for &u2 in &nbrs[i + 1..] {
                let t = Segment::new(c.clone(), pos[u2].clone().unwrap());
                if segments_relation(&s, &t) != SegmentRelation::SharedEndpointOnly {
                    return false;
                }
            }
        }
        true
    }
}

/// One point in every open face of the arrangement of lines through pairs
/// of `placed`; for fewer than two points, a point off them.
pub(crate) fn face_candidates(placed: &[P]) -> Vec<P> {
    match placed.len() {
        0 => vec![Point::from_ints(0, 0)],
        1 => vec![Point::new(
            placed[0].x.clone() + Rational::from_integer(1.into()),
            placed[0].y.clone(),
        )],
        _ => {
            let arr = arrangement_of(placed);
            arr.cells()
                .filter(|(kind, _)| *kind == CellKind::Face)
                .map(|(_, p)| p.clone())
                .collect()
        }
    }
}

/// Exact decision for a single free vertex: `pos` must leave exactly one
/// vertex unplaced. Returns a position making the whole drawing plane, or
/// `None` when no position does.
pub fn extend_single_free(g: &Graph, pos: &[Option<P>]) -> Option<P> {
    let free: Vec<usize> = (0..pos.len()).filter(|&v| pos[v].is_none()).collect();
    assert_eq!(free.len(), 1, "exactly one vertex must be free");
    assert_eq!(pos.len(), g.n());
    let v = free[0];
    let frame = Frame::new(g);
    if !frame.placed_part_plane(pos) {
        return None;
    }
    let placed: Vec<P> = pos.iter().flatten().cloned().collect();
    face_candidates(&placed)
        .into_iter()
        .find(|c| frame.valid_at(pos, v, c))
}
