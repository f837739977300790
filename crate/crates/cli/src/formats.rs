//! JSON files for point sets, graphs and drawings. Coordinates are written
//! as `"p/q"` strings so they survive the round trip exactly.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use untangle_core::graphs::Graph;
use untangle_core::{Drawing, Point, PointSet, Rational};

pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .with_context(|| format!("bad numerator in {s:?}"))?;
    let d: BigInt = d
        .parse()
        .with_context(|| format!("bad denominator in {s:?}"))?;
    if d == BigInt::from(0) {
        bail!("zero denominator in {s:?}");
    }
    Ok(Rational::new(n, d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetFile {
    pub n: usize,
    pub points: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<Vec<usize>>>,
}

/// A vertex goes either to a point of `points` (by index) or to an explicit
/// coordinate pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Placement {
    Index(usize),
    Coord([String; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingFile {
    pub graph: GraphFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[String; 2]>>,
    pub placement: Vec<Placement>,
}

fn coord(p: &Point) -> [String; 2] {
    [format_rational(&p.x), format_rational(&p.y)]
}

fn point(c: &[String; 2]) -> Result<Point> {
    Ok(Point::new(parse_rational(&c[0])?, parse_rational(&c[1])?))
}

impl PointSetFile {
    pub fn from_set(x: &PointSet) -> Self {
        PointSetFile {
            n: x.len(),
            points: x.points().iter().map(coord).collect(),
        }
    }

    pub fn to_set(&self) -> Result<PointSet> {
        if self.n != self.points.len() {
            bail!("n = {} but {} points listed", self.n, self.points.len());
        }
        let pts = self.points.iter().map(point).collect::<Result<Vec<_>>>()?;
        Ok(PointSet::new(pts)?)
    }
}

impl GraphFile {
    pub fn from_graph(g: &Graph, family: Option<&str>, groups: Option<Vec<Vec<usize>>>) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            family: family.map(str::to_string),
            groups,
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Ok(Graph::from_edges(
            self.n,
            self.edges.iter().map(|e| (e[0], e[1])),
        )?)
    }
}

impl DrawingFile {
    pub fn from_drawing(d: &Drawing, family: Option<&str>) -> Self {
        DrawingFile {
            graph: GraphFile::from_graph(&d.graph, family, None),
            points: None,
            placement: d
                .placement()
                .iter()
                .map(|p| Placement::Coord(coord(p)))
                .collect(),
        }
    }

    pub fn to_drawing(&self) -> Result<Drawing> {
        let g = self.graph.to_graph()?;
        if self.placement.len() != g.n() {
            bail!("{} vertices but {} placements", g.n(), self.placement.len());
        }
        let pool = self
            .points
            .as_ref()
            .map(|ps| ps.iter().map(point).collect::<Result<Vec<_>>>())
            .transpose()?;
        let placement = self
            .placement
            .iter()
            .map(|p| match p {
                Placement::Coord(c) => point(c),
                Placement::Index(i) => pool
                    .as_ref()
                    .and_then(|ps| ps.get(*i).cloned())
                    .ok_or_else(|| anyhow!("placement refers to missing point {i}")),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Drawing::new(g, placement)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_round_trip() {
        for s in ["3/4", "-7/2", "0/1", "12/1"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(
            parse_rational("6/8").unwrap(),
            Rational::new(3.into(), 4.into())
        );
        assert_eq!(
            parse_rational("5").unwrap(),
            Rational::from_integer(5.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn drawing_with_indexed_placement() {
        let json = r#"{"graph": {"n": 3, "edges": [[0, 1], [1, 2]]},
                       "points": [["0/1", "0/1"], ["1/1", "0/1"], ["1/2", "3/1"]],
                       "placement": [2, 0, ["5/1", "5/1"]]}"#;
        let f: DrawingFile = serde_json::from_str(json).unwrap();
        let d = f.to_drawing().unwrap();
        assert_eq!(
            d.position(0),
            &Point::new(
                Rational::new(1.into(), 2.into()),
                Rational::from_integer(3.into())
            )
        );
        assert_eq!(d.position(2), &Point::from_ints(5, 5));
    }
}
