//! Drawings and colorings used as hard instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{boundary_order, position_class, PositionClass};
use crate::graphs::{fan, star_forest, wheel, Drawing, HnGraph};
use crate::scalar::Scalar;
use crate::sequences::random_permutation_with;
use crate::{geometry, graphs};

/// A partition of `0..k^2` (point indices) into `k` classes of size `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BalancedColoring {
    k: usize,
    classes: Vec<Vec<usize>>,
}

impl BalancedColoring {
    /// `color_of[i]` in `0..k` for each of the `k^2` points.
    pub fn from_colors(k: usize, color_of: &[usize]) -> Result<Self> {
        if color_of.len() != k * k {
            return Err(Error::InvalidParameter(format!(
                "{} colors for k = {k}",
                color_of.len()
            )));
        }
        let mut classes = vec![Vec::with_capacity(k); k];
        for (i, &c) in color_of.iter().enumerate() {
            if c >= k {
                return Err(Error::InvalidParameter(format!("color {c} >= k = {k}")));
            }
            classes[c].push(i);
        }
        if classes.iter().any(|c| c.len() != k) {
            return Err(Error::InvalidParameter("coloring is not balanced".into()));
        }
        Ok(BalancedColoring { k, classes })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn color_of(&self) -> Vec<usize> {
        let mut c = vec![0; self.k * self.k];
        for (i, class) in self.classes.iter().enumerate() {
            for &p in class {
                c[p] = i;
            }
        }
        c
    }
}

pub fn random_balanced_coloring<R: Rng>(k: usize, rng: &mut R) -> BalancedColoring {
    let mut colors: Vec<usize> = (0..k * k).map(|i| i / k).collect();
    colors.shuffle(rng);
    BalancedColoring::from_colors(k, &colors).expect("balanced by construction")
}

fn rim_drawing<T: Scalar>(
    graph: graphs::Graph,
    x: &geometry::PointSet<T>,
    seed: u64,
) -> Result<Drawing<T>> {
    let n = x.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = random_permutation_with(n - 1, &mut rng);
    let mut placement = Vec::with_capacity(n);
    for &s in sigma.as_slice() {
        placement.push(x.get(s - 1).clone());
    }
    placement.push(x.get(n - 1).clone());
    Drawing::new(graph, placement)
}

/// Wheel `W_n` with the hub on the last point and the rim permuted
/// uniformly over the others.
pub fn wheel_adversary<T: Scalar>(x: &geometry::PointSet<T>, seed: u64) -> Result<Drawing<T>> {
    rim_drawing(wheel(x.len())?, x, seed)
}

/// Fan `F_n` with the center on the last point and the path permuted
/// uniformly over the others.
pub fn fan_adversary<T: Scalar>(x: &geometry::PointSet<T>, seed: u64) -> Result<Drawing<T>> {
    rim_drawing(fan(x.len())?, x, seed)
}

fn stars_on_listing<T: Scalar>(
    x: &geometry::PointSet<T>,
    order: &[usize],
    k: usize,
) -> Result<Drawing<T>> {
    let n = k * k;
    if x.len() != n {
        return Err(Error::InvalidParameter(format!(
            "star forest with k = {k} needs {n} points, got {}",
            x.len()
        )));
    }
    let g = star_forest(k)?;
    let mut placement = vec![x.get(0).clone(); n];
    for i in 0..k {
        for j in 0..k - 1 {
            placement[i * k + j] = x.get(order[i + j * k]).clone();
        }
        placement[i * k + k - 1] = x.get(order[n - k + i]).clone();
    }
    Drawing::new(g, placement)
}

/// `kS_k` on collinear points listed along their line: the leaves of star
/// `i` go to `x_i, x_{i+k}, ...` and the centers to the last `k` points.
pub fn stars_collinear_adversary<T: Scalar>(
    x: &geometry::PointSet<T>,
    k: usize,
) -> Result<Drawing<T>> {
    if position_class(x) != PositionClass::Collinear {
        return Err(Error::WrongPosition("points are not collinear".into()));
    }
    let pts = x.points();
    if pts.len() >= 3 {
        let forward = pts[0] < pts[1];
        if pts.windows(2).any(|w| (w[0] < w[1]) != forward) {
            return Err(Error::WrongPosition(
                "points are not listed in order along their line".into(),
            ));
        }
    }
    let order: Vec<usize> = (0..x.len()).collect();
    stars_on_listing(x, &order, k)
}

/// The same layout with the points listed along the boundary of their
/// convex hull (weakly convex position).
pub fn stars_boundary_adversary<T: Scalar>(
    x: &geometry::PointSet<T>,
    k: usize,
) -> Result<Drawing<T>> {
    let order = boundary_order(x)
        .ok_or_else(|| Error::WrongPosition("points are not in weakly convex position".into()))?;
    stars_on_listing(x, &order, k)
}

/// Colors `0, 1, ..., k-1` repeated `k` times along the boundary.
pub fn interweaving_coloring<T: Scalar>(
    x: &geometry::PointSet<T>,
    k: usize,
) -> Result<BalancedColoring> {
    if x.len() != k * k {
        return Err(Error::InvalidParameter(format!(
            "need {} points, got {}",
            k * k,
            x.len()
        )));
    }
    let order = boundary_order(x)
        .ok_or_else(|| Error::WrongPosition("points are not in weakly convex position".into()))?;
    let mut colors = vec![0; x.len()];
    for (t, &i) in order.iter().enumerate() {
        colors[i] = t % k;
    }
    BalancedColoring::from_colors(k, &colors)
}

/// Places triangulation `i` of `H` onto color class `i` in index order.
pub fn hn_adversary<T: Scalar>(
    x: &geometry::PointSet<T>,
    coloring: &BalancedColoring,
    h: &HnGraph,
) -> Result<Drawing<T>> {
    if coloring.k() != h.k || x.len() != h.n() {
        return Err(Error::InvalidParameter(format!(
            "k = {} coloring, k = {} graph, {} points",
            coloring.k(),
            h.k,
            x.len()
        )));
    }
    let mut placement = vec![x.get(0).clone(); h.n()];
    for (group, class) in h.groups.iter().zip(coloring.classes()) {
        for (&v, &p) in group.iter().zip(class) {
            placement[v] = x.get(p).clone();
        }
    }
    Drawing::new(h.graph.clone(), placement)
}

/// Simulated annealing over balanced colorings, minimising `score` (for
/// example the largest clustered subset). Moves swap the colors of two
/// points. Returns the best coloring seen and its score.
pub fn anneal_coloring<F>(
    k: usize,
    start: BalancedColoring,
    iterations: usize,
    seed: u64,
    mut score: F,
) -> (BalancedColoring, usize)
where
    F: FnMut(&BalancedColoring) -> usize,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut colors = start.color_of();
    let mut cur = score(&start);
    let mut best = (start, cur);
    let n = k * k;
    for it in 0..iterations {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if colors[a] == colors[b] {
            continue;
        }
        colors.swap(a, b);
        let cand = BalancedColoring::from_colors(k, &colors).expect("swap keeps balance");
        let s = score(&cand);
        let temp = 1.0 - it as f64 / iterations.max(1) as f64;
        let accept = s <= cur || rng.gen::<f64>() < (-((s - cur) as f64) / temp.max(1e-9)).exp();
        if accept {
            cur = s;
            if s < best.1 {
                best = (cand, s);
            }
        } else {
            colors.swap(a, b);
        }
    }
    best
}

/// Whether the classes interleave pairwise along the given cyclic listing:
/// for every two classes the points of one separate those of the other.
pub fn classes_interleave(order: &[usize], coloring: &BalancedColoring) -> bool {
    let color = coloring.color_of();
    let k = coloring.k();
    for a in 0..k {
        for b in a + 1..k {
            let seq: Vec<usize> = order
                .iter()
                .map(|&i| color[i])
                .filter(|&c| c == a || c == b)
                .collect();
            let runs = (0..seq.len())
                .filter(|&t| seq[t] != seq[(t + 1) % seq.len()])
                .count();
            if runs < 4 {
                return false;
            }
        }
    }
    true
}
