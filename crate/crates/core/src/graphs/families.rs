//! Standard planar families. Joins place the second operand after the
//! first, so wheels have rim `0..n-1` and hub `n-1`, fans have path
//! `0..n-1` and center `n-1`, and stars have center `n-1`.

use super::graph::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Star(usize),
    Empty(usize),
    Wheel(usize),
    Fan(usize),
    /// `k` disjoint copies of the star on `k` vertices.
    StarForest(usize),
    Complete(usize),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle(_) => "cycle",
            Family::Path(_) => "path",
            Family::Star(_) => "star",
            Family::Empty(_) => "empty",
            Family::Wheel(_) => "wheel",
            Family::Fan(_) => "fan",
            Family::StarForest(_) => "star_forest",
            Family::Complete(_) => "complete",
        }
    }

    /// Parses a family name and its size parameter.
    pub fn parse(name: &str, size: usize) -> Result<Family> {
        Ok(match name {
            "cycle" => Family::Cycle(size),
            "path" => Family::Path(size),
            "star" => Family::Star(size),
            "empty" => Family::Empty(size),
            "wheel" => Family::Wheel(size),
            "fan" => Family::Fan(size),
            "star_forest" | "stars" => Family::StarForest(size),
            "complete" => Family::Complete(size),
            _ => return Err(Error::InvalidParameter(format!("unknown family {name}"))),
        })
    }
}

fn need(what: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!(
            "{what} needs at least {min}, got {n}"
        )));
    }
    Ok(())
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn cycle(n: usize) -> Result<Graph> {
    need("cycle", n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn star(n: usize) -> Result<Graph> {
    need("star", n, 1)?;
    Ok(Graph::empty(n - 1).join(&Graph::empty(1)))
}

pub fn wheel(n: usize) -> Result<Graph> {
    need("wheel", n, 4)?;
    Ok(cycle(n - 1)?.join(&Graph::empty(1)))
}

pub fn fan(n: usize) -> Result<Graph> {
    need("fan", n, 3)?;
    Ok(path(n - 1).join(&Graph::empty(1)))
}

/// `k` copies of the star on `k` vertices; copy `i` occupies
/// `i*k .. (i+1)*k` with its center last.
pub fn star_forest(k: usize) -> Result<Graph> {
    need("star forest", k, 2)?;
    let s = star(k)?;
    let mut g = Graph::empty(0);
    for _ in 0..k {
        g = g.disjoint_union(&s);
    }
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("valid edge");
        }
    }
    g
}

pub fn family(kind: Family) -> Result<Graph> {
    match kind {
        Family::Cycle(n) => cycle(n),
        Family::Path(n) => Ok(path(n)),
        Family::Star(n) => star(n),
        Family::Empty(n) => Ok(Graph::empty(n)),
        Family::Wheel(n) => wheel(n),
        Family::Fan(n) => fan(n),
        Family::StarForest(k) => star_forest(k),
        Family::Complete(n) => Ok(complete(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let w = wheel(5).unwrap();
        assert_eq!((w.n(), w.edge_count()), (5, 8));
        assert_eq!(w.degree(4), 4);
        let f = fan(3).unwrap();
        assert_eq!((f.n(), f.edge_count()), (3, 3));
        let sf = star_forest(3).unwrap();
        assert_eq!((sf.n(), sf.edge_count()), (9, 6));
        assert!(!sf.is_connected());
        assert!(sf.has_edge(0, 2) && sf.has_edge(3, 5) && sf.has_edge(7, 8));
        assert!(wheel(3).is_err());
        assert!(fan(2).is_err());
        assert_eq!(complete(5).edge_count(), 10);
    }

    #[test]
    fn wheel_degrees() {
        for n in 5..10 {
            let d = wheel(n).unwrap().degrees();
            assert_eq!(d.iter().filter(|&&x| x == 3).count(), n - 1);
            assert_eq!(d[n - 1], n - 1);
        }
    }
}
