//! The graphs `H_n`, `n = k^2`: `k` triangulations on `k` vertices each,
//! arranged in a ring, neighbouring triangulations joined by two
//! vertex-disjoint edges.
//!
//! Every triangulation exposes an outer triangle `(a, b, c)` at local
//! indices `0, 1, 2`. Between groups `i` and `i + 1` we add `a_i a_{i+1}`
//! (these `k` edges form a cycle) and `b_i c_{i+1}` (together with the
//! triangle edges `c_i b_i` these form a cycle of length `2k`).

use super::graph::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangulationKind {
    /// A path on `k - 2` vertices joined with an edge; two vertices have
    /// unbounded degree.
    FanStack,
    /// Nested triangles joined by octahedral bands, maximum degree 6.
    BoundedDegree,
}

impl TriangulationKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "fan_stack" => Ok(TriangulationKind::FanStack),
            "bounded_degree" => Ok(TriangulationKind::BoundedDegree),
            _ => Err(Error::InvalidParameter(format!(
                "unknown triangulation {s}"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HnGraph {
    pub k: usize,
    pub graph: Graph,
    /// `groups[i]` lists the vertices of the `i`-th triangulation.
    pub groups: Vec<Vec<usize>>,
    pub connectors: Vec<(usize, usize)>,
    pub kind: TriangulationKind,
}

impl HnGraph {
    pub fn n(&self) -> usize {
        self.k * self.k
    }

    /// Group index of each vertex.
    pub fn group_of(&self) -> Vec<usize> {
        let mut g = vec![0; self.n()];
        for (i, vs) in self.groups.iter().enumerate() {
            for &v in vs {
                g[v] = i;
            }
        }
        g
    }
}

/// A maximal planar graph on `k >= 3` vertices whose outer face is the
/// triangle `0, 1, 2`.
pub fn triangulation(k: usize, kind: TriangulationKind) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "triangulation needs k >= 3, got {k}"
        )));
    }
    let mut g = Graph::empty(k);
    match kind {
        TriangulationKind::FanStack => {
            // apexes 0 and 1, path 2, 3, ..., k-1
            g.add_edge(0, 1)?;
            for v in 2..k {
                g.add_edge(0, v)?;
                g.add_edge(1, v)?;
                if v > 2 {
                    g.add_edge(v - 1, v)?;
                }
            }
        }
        TriangulationKind::BoundedDegree => {
            let layers = k / 3;
            for l in 0..layers {
                let t = |i: usize| 3 * l + i % 3;
                for i in 0..3 {
                    g.add_edge(t(i), t(i + 1))?;
                }
                if l > 0 {
                    let o = |i: usize| 3 * (l - 1) + i % 3;
                    for i in 0..3 {
                        g.add_edge(t(i), o(i))?;
                        g.add_edge(t(i), o(i + 1))?;
                    }
                }
            }
            let inner = 3 * (layers - 1);
            match k % 3 {
                0 => {}
                1 => {
                    for i in 0..3 {
                        g.add_edge(k - 1, inner + i)?;
                    }
                }
                _ => {
                    let (u, w) = (k - 2, k - 1);
                    for i in 0..3 {
                        g.add_edge(u, inner + i)?;
                    }
                    g.add_edge(w, u)?;
                    g.add_edge(w, inner)?;
                    g.add_edge(w, inner + 1)?;
                }
            }
        }
    }
    Ok(g)
}

pub fn make_hn(k: usize, kind: TriangulationKind) -> Result<HnGraph> {
    let t = triangulation(k, kind)?;
    let mut graph = Graph::empty(0);
    for _ in 0..k {
        graph = graph.disjoint_union(&t);
    }
    let groups: Vec<Vec<usize>> = (0..k).map(|i| (i * k..(i + 1) * k).collect()).collect();
    let mut connectors = Vec::with_capacity(2 * k);
    for i in 0..k {
        let j = (i + 1) % k;
        let (a_i, b_i) = (i * k, i * k + 1);
        let (a_j, c_j) = (j * k, j * k + 2);
        connectors.push((a_i, a_j));
        connectors.push((b_i, c_j));
    }
    for &(u, v) in &connectors {
        graph.add_edge(u, v)?;
    }
    Ok(HnGraph {
        k,
        graph,
        groups,
        connectors,
        kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::graph::{is_3_connected, is_planar};

    #[test]
    fn triangulations_are_maximal_planar() {
        for kind in [
            TriangulationKind::FanStack,
            TriangulationKind::BoundedDegree,
        ] {
            for k in 3..=12 {
                let t = triangulation(k, kind).unwrap();
                assert_eq!(t.edge_count(), 3 * k - 6, "{kind:?} k={k}");
                assert!(is_planar(&t));
                assert!(t.has_edge(0, 1) && t.has_edge(1, 2) && t.has_edge(0, 2));
                if k >= 4 {
                    assert!(is_3_connected(&t));
                }
                if kind == TriangulationKind::BoundedDegree {
                    assert!(t.max_degree() <= 6);
                }
            }
        }
    }

    #[test]
    fn hn_structure() {
        let h = make_hn(4, TriangulationKind::FanStack).unwrap();
        assert_eq!(h.graph.n(), 16);
        assert_eq!(h.graph.edge_count(), 4 * (3 * 4 - 6) + 2 * 4);
        assert_eq!(h.connectors.len(), 8);
        assert!(is_planar(&h.graph));
        assert!(is_3_connected(&h.graph));
    }
}
