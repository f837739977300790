//! Seeded experiments producing CSV tables: one row per trial, then
//! `#summary` rows.

use std::io::Write;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;

use untangle_core::adversary::{
    fan_adversary, interweaving_coloring, stars_boundary_adversary, stars_collinear_adversary,
    wheel_adversary,
};
use untangle_core::bounds::{
    fan_upper, hn_upper, stars_collinear_upper, stars_weakly_convex_upper, wheel_upper, BoundReport,
};
use untangle_core::clustering::estimate_cx;
use untangle_core::geometry::{position_class, PositionClass};
use untangle_core::graphs::{fixed_set, make_hn, TriangulationKind};
use untangle_core::sequences::{l2, lis, random_permutation};
use untangle_core::untangler::{fix_oracle, rim_heuristic, OracleOptions};
use untangle_core::Drawing;

use crate::shapes::{generate, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Experiment {
    Lis,
    L2,
    Wheel,
    Fan,
    Stars,
    Hn,
    Cx,
}

#[derive(Clone, Debug)]
pub struct Params {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub trials: Option<usize>,
    pub seed: u64,
    pub budget: u64,
    pub exact: bool,
    pub shape: Option<Shape>,
    pub kind: TriangulationKind,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            n: None,
            k: None,
            trials: None,
            seed: 0,
            budget: 50_000_000,
            exact: false,
            shape: None,
            kind: TriangulationKind::FanStack,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub summary: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            ..Table::default()
        }
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        for s in &self.summary {
            let mut rec = vec!["#summary".to_string()];
            rec.extend(s.iter().cloned());
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Seed of trial `t`; distinct trials get distinct seeds.
pub fn trial_seed(seed: u64, t: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(t as u64)
}

fn mean_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

fn f(x: f64) -> String {
    format!("{x:.4}")
}

pub fn run(e: Experiment, p: &Params) -> Result<Table> {
    match e {
        Experiment::Lis => run_lis(p),
        Experiment::L2 => run_l2(p),
        Experiment::Wheel | Experiment::Fan => run_rim(e == Experiment::Wheel, p),
        Experiment::Stars => run_stars(p),
        Experiment::Hn => run_hn(p),
        Experiment::Cx => run_cx(p),
    }
}

fn run_lis(p: &Params) -> Result<Table> {
    let n = p.n.unwrap_or(400);
    let trials = p.trials.unwrap_or(200);
    let values: Vec<usize> = (0..trials)
        .into_par_iter()
        .map(|t| lis(random_permutation(n, trial_seed(p.seed, t)).as_slice()))
        .collect();
    let mut table = Table::new(&["n", "trial", "lis"]);
    for (t, v) in values.iter().enumerate() {
        table
            .rows
            .push(vec![n.to_string(), t.to_string(), v.to_string()]);
    }
    let xs: Vec<f64> = values.iter().map(|&v| v as f64).collect();
    let (mean, stderr) = mean_stderr(&xs);
    let harmonic: f64 = (1..=n).map(|i| 1.0 / (i as f64).sqrt()).sum();
    table.summary.push(vec![
        "n".into(),
        "trials".into(),
        "mean".into(),
        "stderr".into(),
        "sum_inv_sqrt".into(),
        "two_sqrt_n_minus_1".into(),
        "within_bound".into(),
    ]);
    table.summary.push(vec![
        n.to_string(),
        trials.to_string(),
        f(mean),
        f(stderr),
        f(harmonic),
        f(2.0 * (n as f64).sqrt() - 1.0),
        (mean <= harmonic + 3.0 * stderr).to_string(),
    ]);
    Ok(table)
}

fn run_l2(p: &Params) -> Result<Table> {
    let n = p.n.unwrap_or(400);
    if n < 2 {
        bail!("l2 needs n >= 2");
    }
    let trials = p.trials.unwrap_or(100);
    let rows: Vec<(usize, usize, usize, usize)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let s = random_permutation(n, trial_seed(p.seed, t));
            let r = l2(&s).expect("n >= 2");
            (r.value, r.i, r.j, lis(s.as_slice()))
        })
        .collect();
    let limit = 2.0 * 2f64.sqrt() * (n as f64).sqrt() + 2.0 * (n as f64).powf(0.3);
    let mut table = Table::new(&["n", "trial", "l2", "i", "j", "lis"]);
    for (t, r) in rows.iter().enumerate() {
        table.rows.push(vec![
            n.to_string(),
            t.to_string(),
            r.0.to_string(),
            r.1.to_string(),
            r.2.to_string(),
            r.3.to_string(),
        ]);
    }
    let xs: Vec<f64> = rows.iter().map(|r| r.0 as f64).collect();
    let (mean, stderr) = mean_stderr(&xs);
    let below = rows.iter().filter(|r| (r.0 as f64) < limit).count();
    table.summary.push(vec![
        "n".into(),
        "trials".into(),
        "mean".into(),
        "stderr".into(),
        "limit".into(),
        "below_limit".into(),
    ]);
    table.summary.push(vec![
        n.to_string(),
        trials.to_string(),
        f(mean),
        f(stderr),
        f(limit),
        below.to_string(),
    ]);
    Ok(table)
}

/// Largest number of fixed vertices among the redrawings we can find.
fn best_redrawing(d: &Drawing, p: &Params, seed: u64) -> usize {
    let mut best = 0;
    if p.exact {
        let opts = OracleOptions {
            budget: p.budget,
            seed,
            ..OracleOptions::default()
        };
        best = fix_oracle(d, &opts).lower;
    } else if let Some(w) = rim_heuristic(d) {
        best = fixed_set(d, &w).map(|s| s.len()).unwrap_or(0);
    }
    best
}

fn run_rim(wheel: bool, p: &Params) -> Result<Table> {
    let n = p.n.unwrap_or(12);
    if n < 4 {
        bail!("wheels and fans need n >= 4");
    }
    let trials = p.trials.unwrap_or(50);
    let shape = p.shape.unwrap_or(Shape::Random);
    let rows: Vec<Result<(usize, usize)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let s = trial_seed(p.seed, t);
            let x = generate(shape, n, s)?;
            let (d, bound) = if wheel {
                let d = wheel_adversary(&x, s)?;
                let b = wheel_upper(&d)?.value;
                (d, b)
            } else {
                let d = fan_adversary(&x, s)?;
                let b = fan_upper(&d)?.value;
                (d, b)
            };
            Ok((bound, best_redrawing(&d, p, s)))
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let reference = 2.0 * (n as f64).sqrt();
    let mut table = Table::new(&["n", "trial", "bound", "found", "two_sqrt_n"]);
    for (t, r) in rows.iter().enumerate() {
        table.rows.push(vec![
            n.to_string(),
            t.to_string(),
            r.0.to_string(),
            r.1.to_string(),
            f(reference),
        ]);
    }
    let bounds: Vec<f64> = rows.iter().map(|r| r.0 as f64).collect();
    let (mean, stderr) = mean_stderr(&bounds);
    let max = rows.iter().map(|r| r.0).max().unwrap_or(0);
    let sound = rows.iter().all(|r| r.1 <= r.0);
    table.summary.push(vec![
        "n".into(),
        "trials".into(),
        "mean_bound".into(),
        "stderr".into(),
        "max_bound".into(),
        "two_sqrt_n".into(),
        "found_within_bound".into(),
    ]);
    table.summary.push(vec![
        n.to_string(),
        trials.to_string(),
        f(mean),
        f(stderr),
        max.to_string(),
        f(reference),
        sound.to_string(),
    ]);
    Ok(table)
}

fn decomposition<T>(r: &BoundReport<T>) -> String {
    r.decomposition
        .iter()
        .map(|(name, v)| format!("{name}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn run_stars(p: &Params) -> Result<Table> {
    let k = p.k.unwrap_or(3);
    if k < 2 {
        bail!("stars need k >= 2");
    }
    let shape = p.shape.unwrap_or(Shape::Collinear);
    let x = generate(shape, k * k, p.seed)?;
    let budget = usize::try_from(p.budget).unwrap_or(usize::MAX);
    let (r, limit) = match position_class(&x) {
        PositionClass::Collinear => {
            let d = stars_collinear_adversary(&x, k)?;
            (stars_collinear_upper(&d, k, budget)?, 7 * k)
        }
        PositionClass::WeaklyConvex => {
            let d = stars_boundary_adversary(&x, k)?;
            (stars_weakly_convex_upper(&d, k, budget)?, 0)
        }
        PositionClass::General => bail!("stars need collinear or weakly convex points"),
    };
    if p.exact && !r.exact_parts {
        bail!("search budget exhausted before the caps were exact");
    }
    let mut table = Table::new(&["k", "shape", "value", "exact", "decomposition", "seven_k"]);
    table.rows.push(vec![
        k.to_string(),
        format!("{shape:?}").to_lowercase(),
        r.value.to_string(),
        r.exact_parts.to_string(),
        decomposition(&r),
        if limit > 0 {
            limit.to_string()
        } else {
            String::new()
        },
    ]);
    Ok(table)
}

fn run_hn(p: &Params) -> Result<Table> {
    let k = p.k.unwrap_or(4);
    let shape = p.shape.unwrap_or(Shape::Convex);
    let x = generate(shape, k * k, p.seed)?;
    let coloring = interweaving_coloring(&x, k)?;
    let h = make_hn(k, p.kind)?;
    let r = hn_upper(&x, &coloring, &h, p.budget)?;
    if p.exact && !r.exact_parts {
        bail!("clustered-subset search did not close within the budget");
    }
    let mut table = Table::new(&["k", "kind", "clustered", "bound", "exact", "three_k"]);
    let clustered = r.value - k;
    table.rows.push(vec![
        k.to_string(),
        format!("{:?}", p.kind).to_lowercase(),
        clustered.to_string(),
        r.value.to_string(),
        r.exact_parts.to_string(),
        (3 * k).to_string(),
    ]);
    Ok(table)
}

fn run_cx(p: &Params) -> Result<Table> {
    let k = p.k.unwrap_or(3);
    let trials = p.trials.unwrap_or(200);
    let shape = p.shape.unwrap_or(Shape::Random);
    let x = generate(shape, k * k, p.seed)?;
    let e = estimate_cx(&x, k, trials, p.seed, p.budget).context("estimating C(X)")?;
    if p.exact && e.inexact > 0 {
        bail!("{} colorings did not close within the budget", e.inexact);
    }
    let mut table = Table::new(&[
        "k",
        "shape",
        "value",
        "exhaustive",
        "inexact",
        "colorings_tried",
        "coloring",
    ]);
    table.rows.push(vec![
        k.to_string(),
        format!("{shape:?}").to_lowercase(),
        e.value.to_string(),
        e.exhaustive.to_string(),
        e.inexact.to_string(),
        e.colorings_tried.to_string(),
        e.coloring
            .color_of()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    ]);
    Ok(table)
}
