//! `fix(G, pi)`: the most vertices a plane redrawing can keep in place.
//!
//! Fixed sets are tried in decreasing size. With no free vertex this is a
//! plane test and with one free vertex the face argument of
//! [`extend_single_free`](super::extend_single_free) makes it exact. With
//! more free vertices, all but the last are tried at face representatives
//! of the current arrangement only, which is sound but not known to be
//! complete, so such levels never lower the upper end.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::extend::{face_candidates, Frame};
use crate::graphs::{fixed_set, is_plane_drawing};
use crate::{Drawing, Point};

#[derive(Clone, Debug)]
pub struct FixInterval {
    /// Realised by `witness`.
    pub lower: usize,
    /// Certified by exhaustion of the exact levels (or supplied externally).
    pub upper: usize,
    /// A plane redrawing fixing `lower` vertices; absent only when `lower == 0`.
    pub witness: Option<Drawing>,
}

impl FixInterval {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// Tightens the upper end with an externally proven bound.
    pub fn with_upper_bound(mut self, bound: usize) -> Self {
        self.upper = self.upper.min(bound.max(self.lower));
        self
    }
}

#[derive(Clone, Debug)]
pub struct OracleOptions {
    /// Largest number of free vertices to try.
    pub max_free: usize,
    /// Cap on candidate evaluations across the whole search.
    pub budget: u64,
    /// Candidates kept per non-final free vertex (all when `None`).
    pub branch: Option<usize>,
    pub seed: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_free: 2,
            budget: 2_000_000,
            branch: Some(24),
            seed: 0,
        }
    }
}

pub(crate) struct Placer<'a> {
    frame: Frame,
    counter: &'a AtomicU64,
    budget: u64,
    branch: Option<usize>,
    seed: u64,
}

impl<'a> Placer<'a> {
    pub fn new(
        graph: &'a crate::graphs::Graph,
        counter: &'a AtomicU64,
        budget: u64,
        branch: Option<usize>,
        seed: u64,
    ) -> Self {
        Placer {
            frame: Frame::new(graph),
            counter,
            budget,
            branch,
            seed,
        }
    }

    fn spend(&self, n: u64) -> bool {
        self.counter.fetch_add(n, Ordering::Relaxed) + n <= self.budget
    }

    pub fn exhausted(&self) -> bool {
        self.counter.load(Ordering::Relaxed) > self.budget
    }

    /// Places every vertex in `free` (in order); `pos` holds the others.
    pub fn place(&self, pos: &mut Vec<Option<Point>>, free: &[usize]) -> bool {
        if free.is_empty() {
            return self.frame.placed_part_plane(pos);
        }
        if !self.frame.placed_part_plane(pos) {
            return false;
        }
        self.place_rec(pos, free)
    }

    fn place_rec(&self, pos: &mut Vec<Option<Point>>, free: &[usize]) -> bool {
        let v = free[0];
        let placed: Vec<Point> = pos.iter().flatten().cloned().collect();
        let mut cands = face_candidates(&placed);
        if !self.spend(cands.len() as u64) {
            return false;
        }
        if free.len() > 1 {
            if let Some(b) = self.branch {
                if cands.len() > b {
                    let mut rng = ChaCha8Rng::seed_from_u64(
                        self.seed ^ (v as u64) ^ (placed.len() as u64) << 32,
                    );
                    cands.shuffle(&mut rng);
                    cands.truncate(b);
                }
            }
        }
        for c in cands {
            if !self.frame.valid_at(pos, v, &c) {
                continue;
            }
            pos[v] = Some(c);
            if free.len() == 1 || self.place_rec(pos, &free[1..]) {
                return true;
            }
            pos[v] = None;
            if self.exhausted() {
                return false;
            }
        }
        false
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

/// Free vertices ordered with the most constrained (most placed
/// neighbours) first and the final one decided exactly.
fn order_free(g: &crate::graphs::Graph, free: &[usize]) -> Vec<usize> {
    let adj = g.adjacency();
    let mut f = free.to_vec();
    f.sort_by_key(|&v| {
        let placed_nbrs = adj[v].iter().filter(|u| !free.contains(u)).count();
        (std::cmp::Reverse(placed_nbrs), v)
    });
    f
}

/// Tries to keep exactly the vertices outside `free` in place.
pub fn redraw_with_free(d: &Drawing, free: &[usize], opts: &OracleOptions) -> Option<Drawing> {
    let counter = AtomicU64::new(0);
    let placer = Placer::new(&d.graph, &counter, opts.budget, opts.branch, opts.seed);
    try_free(d, &placer, free)
}

fn try_free(d: &Drawing, placer: &Placer<'_>, free: &[usize]) -> Option<Drawing> {
    let mut pos: Vec<Option<Point>> = d.placement().iter().cloned().map(Some).collect();
    for &v in free {
        pos[v] = None;
    }
    let order = order_free(&d.graph, free);
    if placer.place(&mut pos, &order) {
        let placement: Vec<Point> = pos.into_iter().map(|p| p.expect("all placed")).collect();
        let w = d.with_placement(placement).ok()?;
        debug_assert!(is_plane_drawing(&w));
        Some(w)
    } else {
        None
    }
}

pub fn fix_oracle(d: &Drawing, opts: &OracleOptions) -> FixInterval {
    let n = d.n();
    if is_plane_drawing(d) {
        return FixInterval {
            lower: n,
            upper: n,
            witness: Some(d.clone()),
        };
    }
    let counter = AtomicU64::new(0);
    let mut upper = n - 1;
    for f in 1..=opts.max_free.min(n) {
        let exact_level = f == 1;
        let placer = Placer::new(
            &d.graph,
            &counter,
            if exact_level { u64::MAX } else { opts.budget },
            opts.branch,
            opts.seed.wrapping_add(f as u64),
        );
        let found = combinations(n, f)
            .par_iter()
            .find_map_first(|free| try_free(d, &placer, free));
        if let Some(w) = found {
            let lower = fixed_set(d, &w).map(|s| s.len()).unwrap_or(0);
            return FixInterval {
                lower,
                upper: upper.max(lower),
                witness: Some(w),
            };
        }
        if exact_level {
            upper = n - 2;
        }
        if placer.exhausted() {
            break;
        }
    }
    FixInterval {
        lower: 0,
        upper,
        witness: None,
    }
}

/// A plane drawing of `d.graph` keeping two chosen vertices in place, found
/// by placing everything from scratch and moving the result by a similarity.
pub fn redraw_keeping_two(d: &Drawing, opts: &OracleOptions) -> Option<Drawing> {
    let n = d.n();
    let all: Vec<usize> = (0..n).collect();
    let counter = AtomicU64::new(0);
    let placer = Placer::new(&d.graph, &counter, opts.budget, opts.branch, opts.seed);
    let mut pos: Vec<Option<Point>> = vec![None; n];
    let order = bfs_order(&d.graph);
    debug_assert_eq!(order.len(), all.len());
    if !placer.place(&mut pos, &order) {
        return None;
    }
    let fresh: Vec<Point> = pos.into_iter().map(|p| p.expect("placed")).collect();
    if n < 2 {
        return d.with_placement(d.placement().to_vec()).ok();
    }
    // similarity z -> a z + b (complex arithmetic) sending fresh[0], fresh[1]
    // to the original positions of vertices 0 and 1
    let (u0, u1) = (&fresh[0], &fresh[1]);
    let (t0, t1) = (d.position(0), d.position(1));
    let du = u1.sub(u0);
    let dt = t1.sub(t0);
    let den = du.0.clone() * du.0.clone() + du.1.clone() * du.1.clone();
    let a = (
        (dt.0.clone() * du.0.clone() + dt.1.clone() * du.1.clone()) / den.clone(),
        (dt.1.clone() * du.0.clone() - dt.0.clone() * du.1.clone()) / den,
    );
    let map = |p: &Point| -> Point {
        let (x, y) = p.sub(u0);
        Point::new(
            t0.x.clone() + a.0.clone() * x.clone() - a.1.clone() * y.clone(),
            t0.y.clone() + a.0.clone() * y + a.1.clone() * x,
        )
    };
    let placement: Vec<Point> = fresh.iter().map(map).collect();
    let w = d.with_placement(placement).ok()?;
    is_plane_drawing(&w).then_some(w)
}

fn bfs_order(g: &crate::graphs::Graph) -> Vec<usize> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.n()];
    let mut out = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            out.push(u);
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, cycle, path};

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    #[test]
    fn plane_input_is_exact_n() {
        let d = Drawing::new(path(3), pts(&[(0, 0), (1, 0), (2, 0)])).unwrap();
        let r = fix_oracle(&d, &OracleOptions::default());
        assert_eq!((r.lower, r.upper), (3, 3));
    }

    #[test]
    fn k4_convex_keeps_three() {
        let d = Drawing::new(complete(4), pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap();
        let r = fix_oracle(&d, &OracleOptions::default());
        assert_eq!((r.lower, r.upper), (3, 3));
        let w = r.witness.unwrap();
        assert!(is_plane_drawing(&w));
        assert_eq!(fixed_set(&d, &w).unwrap().len(), 3);
    }

    #[test]
    fn bowtie_cycle_fixes_three() {
        let d = Drawing::new(cycle(4).unwrap(), pts(&[(0, 0), (4, 4), (4, 0), (0, 4)])).unwrap();
        let r = fix_oracle(&d, &OracleOptions::default());
        assert_eq!((r.lower, r.upper), (3, 3));
    }

    #[test]
    fn from_scratch_keeps_two() {
        let d = Drawing::new(complete(4), pts(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap();
        let w = redraw_keeping_two(&d, &OracleOptions::default()).unwrap();
        assert!(fixed_set(&d, &w).unwrap().len() >= 2);
    }
}
