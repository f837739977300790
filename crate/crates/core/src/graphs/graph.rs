use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`. Edges are stored as
/// `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; a repeated edge is ignored, a loop or unknown vertex is an error.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) on {} vertices",
                self.n
            )));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Disjoint union, `other` relabelled to `n..n + other.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        g.edges.extend(self.edges.iter().copied());
        g.edges
            .extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        g
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.edges.insert((u, self.n + v));
            }
        }
        g
    }

    /// Induced subgraph on `keep` (relabelled in increasing order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &v) in sorted.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(sorted.len());
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.edges
                    .insert((index[u].min(index[v]), index[u].max(index[v])));
            }
        }
        g
    }

    /// Whether the graph minus `removed` is connected (the empty graph counts).
    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        for &r in removed {
            seen[r] = true;
        }
        let Some(start) = (0..self.n).find(|&v| !seen[v]) else {
            return true;
        };
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }
}

/// `n >= 4` and removing any two vertices leaves the graph connected.
pub fn is_3_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || !g.is_connected() {
        return false;
    }
    for a in 0..n {
        if !g.is_connected_without(&[a]) {
            return false;
        }
        for b in a + 1..n {
            if !g.is_connected_without(&[a, b]) {
                return false;
            }
        }
    }
    true
}

pub fn is_planar(g: &Graph) -> bool {
    use rustworkx_core::petgraph::graph::UnGraph;
    let pg = UnGraph::<(), ()>::from_edges(g.edges().map(|(u, v)| (u as u32, v as u32)));
    let mut pg = pg;
    while pg.node_count() < g.n() {
        pg.add_node(());
    }
    rustworkx_core::planar::is_planar(&pg)
}
