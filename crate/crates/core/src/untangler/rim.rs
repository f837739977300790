//! Constructive redrawings of wheels and fans: put the hub somewhere, keep
//! a circularly monotone run of rim vertices, and thread the others through
//! the angular gaps so the rim becomes star-shaped around the hub.

use std::collections::HashSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::geometry::arrangement::arrangement_of;
use crate::geometry::{cross, visibility_permutation};
use crate::graphs::{fixed_set, is_plane_drawing, Drawing as GDrawing};
use crate::sequences::{circular_monotone_positions, longest_circular_monotone};
use crate::{Drawing, Point, Rational};

fn rot_cw(v: &(Rational, Rational)) -> (Rational, Rational) {
    (v.1.clone(), -v.0.clone())
}

/// Rim positions around hub `p` keeping `kept` (rim vertex ids in clockwise
/// order around `p`, labels cyclically monotone in direction `step`).
fn thread_rim(rim: &[Point], p: &Point, kept: &[usize], step: isize) -> Option<Vec<Point>> {
    let m = rim.len();
    let mut out: Vec<Option<Point>> = vec![None; m];
    for &v in kept {
        out[v] = Some(rim[v].clone());
    }
    let nk = kept.len();
    if nk == 0 {
        return None;
    }
    for j in 0..nk {
        let a_v = kept[j];
        let b_v = kept[(j + 1) % nk];
        // free rim vertices strictly between a_v and b_v in label direction
        let mut free = Vec::new();
        let mut cur = a_v;
        loop {
            cur = ((cur as isize + step).rem_euclid(m as isize)) as usize;
            if cur == b_v {
                break;
            }
            free.push(cur);
            if free.len() > m {
                return None;
            }
        }
        let a = rim[a_v].sub(p);
        let b = rim[b_v].sub(p);
        // turn clockwise from a until b is less than half a turn away
        let mut dirs: Vec<(Rational, Rational)> = vec![a.clone()];
        loop {
            let last = dirs.last().unwrap();
            let c = cross(last, &b);
            let same_ray = c.is_zero() && (&last.0 * &b.0 + &last.1 * &b.1).is_positive();
            if c.is_negative() && !(nk == 1 && dirs.len() == 1) || (same_ray && dirs.len() > 1) {
                break;
            }
            if dirs.len() > 4 {
                return None;
            }
            dirs.push(rot_cw(last));
        }
        // dirs[1..] need a free vertex each; anything left goes on the last chord
        let hops = dirs.len() - 1;
        if free.len() < hops {
            return None;
        }
        let mut anchor = rim[a_v].clone();
        for (t, d) in dirs[1..].iter().enumerate() {
            let q = Point::new(&p.x + &d.0, &p.y + &d.1);
            out[free[t]] = Some(q.clone());
            anchor = q;
        }
        let rest = &free[hops..];
        let target = &rim[b_v];
        let parts = Rational::from_integer(((rest.len() + 1) as i64).into());
        for (t, &v) in rest.iter().enumerate() {
            let f = Rational::from_integer(((t + 1) as i64).into()) / &parts;
            let d = target.sub(&anchor);
            out[v] = Some(anchor.offset(&d, &f));
        }
    }
    out.into_iter().collect()
}

/// Best redrawing found by trying every visibility class of the rim (and
/// the hub's own position) as the new hub position. Works for wheels and
/// fans (hub / center is the last vertex). Every returned drawing is
/// checked to be plane.
pub fn rim_heuristic(d: &Drawing) -> Option<GDrawing<Rational>> {
    let n = d.n();
    if n < 4 {
        return None;
    }
    let rim: Vec<Point> = d.placement()[..n - 1].to_vec();
    let hub = d.position(n - 1).clone();
    let arr = arrangement_of(&rim);
    // one standpoint per class; the hub's own position first so it wins ties
    let mut seen = HashSet::new();
    let mut cands: Vec<(usize, Point, Vec<usize>, bool)> = Vec::new();
    for p in std::iter::once(&hub).chain(arr.cells().map(|(_, p)| p)) {
        if rim.contains(p) {
            continue;
        }
        let order = visibility_permutation(p, &rim);
        let is_hub = *p == hub;
        if !seen.insert((order.canonical(), is_hub)) {
            continue;
        }
        let seq = order.as_slice().to_vec();
        let score = longest_circular_monotone(&seq) + usize::from(is_hub);
        cands.push((score, p.clone(), seq, is_hub));
    }
    // stable: equal scores keep discovery order
    cands.sort_by_key(|c| std::cmp::Reverse(c.0));

    let attempt = |(_, p, seq, _): &(usize, Point, Vec<usize>, bool)| {
        let (pos, inc) = circular_monotone_positions(seq);
        let kept: Vec<usize> = pos.iter().map(|&t| seq[t]).collect();
        let mut placement = thread_rim(&rim, p, &kept, if inc { 1 } else { -1 })?;
        placement.push(p.clone());
        let w = d.with_placement(placement).ok()?;
        if !is_plane_drawing(&w) {
            return None;
        }
        let f = fixed_set(d, &w).ok()?.len();
        Some((f, w))
    };
    let mut best: Option<(usize, GDrawing<Rational>)> = None;
    for batch in cands.chunks(32) {
        if best.as_ref().is_some_and(|b| b.0 >= batch[0].0) {
            break;
        }
        let found: Vec<Option<(usize, GDrawing<Rational>)>> =
            batch.par_iter().map(attempt).collect();
        for (f, w) in found.into_iter().flatten() {
            if best.as_ref().is_none_or(|b| f > b.0) {
                best = Some((f, w));
            }
        }
    }
    best.map(|b| b.1)
}
