//! Seeded point-set generators.

use std::collections::BTreeSet;

use anyhow::{bail, Result};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use untangle_core::PointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Shape {
    Collinear,
    Convex,
    WeaklyConvex,
    Grid,
    Random,
}

/// `n` points of the given shape. Collinear points are listed along their
/// line and convex / weakly convex points along the hull boundary.
pub fn generate(shape: Shape, n: usize, seed: u64) -> Result<PointSet> {
    if n == 0 {
        bail!("need at least one point");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords: Vec<(i64, i64)> = match shape {
        Shape::Collinear => {
            // distinct x on the line y = 2x + 1, increasing
            let xs = sample(&mut rng, 4 * n, n).into_vec();
            let mut xs: Vec<i64> = xs.into_iter().map(|x| x as i64).collect();
            xs.sort();
            xs.into_iter().map(|x| (x, 2 * x + 1)).collect()
        }
        Shape::Convex => {
            // distinct x on the parabola y = x^2
            let mut xs: Vec<i64> = sample(&mut rng, 4 * n, n)
                .into_iter()
                .map(|x| x as i64 - 2 * n as i64)
                .collect();
            xs.sort();
            xs.into_iter().map(|x| (x, x * x)).collect()
        }
        Shape::WeaklyConvex => weakly_convex(&mut rng, n),
        Shape::Grid => {
            let side = (1..).find(|s| s * s >= n).unwrap() as i64;
            (0..n as i64).map(|i| (i % side, i / side)).collect()
        }
        Shape::Random => {
            let side = 4 * n as i64;
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            while out.len() < n {
                let p = (rng.gen_range(0..side), rng.gen_range(0..side));
                if seen.insert(p) {
                    out.push(p);
                }
            }
            out
        }
    };
    Ok(PointSet::from_ints(&coords)?)
}

/// Points on the boundary of an axis-parallel rectangle, clockwise from the
/// lower-left corner. Sides carry several points, so the set is weakly but
/// usually not strictly convex.
fn weakly_convex(rng: &mut ChaCha8Rng, n: usize) -> Vec<(i64, i64)> {
    let (w, h) = (n as i64 + 2, n as i64 / 2 + 2);
    let perimeter = 2 * (w + h);
    let mut ts: Vec<i64> = sample(rng, perimeter as usize, n)
        .into_iter()
        .map(|t| t as i64)
        .collect();
    ts.sort();
    ts.into_iter()
        .map(|t| {
            if t < h {
                (0, t)
            } else if t < h + w {
                (t - h, h)
            } else if t < 2 * h + w {
                (w, h - (t - h - w))
            } else {
                (w - (t - 2 * h - w), 0)
            }
        })
        .collect()
}
