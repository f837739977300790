use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use untangle_cli::experiments::{self, Experiment, Params};
use untangle_cli::formats::{DrawingFile, PointSetFile};
use untangle_cli::shapes::{generate, Shape};
use untangle_cli::verify::{self, Suite};
use untangle_core::bounds::{
    fan_upper, stars_collinear_upper, stars_weakly_convex_upper, wheel_upper, BoundReport,
};
use untangle_core::graphs::{is_plane_drawing, TriangulationKind};
use untangle_core::untangler::{fix_oracle, rim_heuristic, OracleOptions};
use untangle_core::Rational;

#[derive(Parser)]
#[command(
    name = "untangle",
    version,
    about = "Exact experiments on untangling planar graph drawings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    FanStack,
    BoundedDegree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BoundFamily {
    Wheel,
    Fan,
    StarsCollinear,
    StarsConvex,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded point set as JSON.
    GenPoints {
        #[arg(long, value_enum)]
        shape: Shape,
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a seeded experiment and write a CSV table.
    Experiment {
        #[arg(value_enum)]
        name: Experiment,
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(short, long)]
        k: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Search node cap for exact searches.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// Fail instead of falling back to heuristics or open intervals.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum)]
        shape: Option<Shape>,
        #[arg(long, value_enum, default_value = "fan-stack")]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a self-check suite; exits nonzero on failure.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Upper bound on the fixed vertices of a drawing from a JSON file.
    Bound {
        #[arg(long, value_enum)]
        family: BoundFamily,
        drawing: PathBuf,
        /// Number of stars for the star families.
        #[arg(short, long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Search for a plane redrawing fixing many vertices and write it as JSON.
    Redraw {
        drawing: PathBuf,
        /// Largest number of moved vertices the exact search tries.
        #[arg(long, default_value_t = 2)]
        max_free: usize,
        #[arg(long, default_value_t = 2_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the wheel/fan heuristic.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn output(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_json<T: serde::Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let mut w = output(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn read_drawing(path: &Path) -> Result<untangle_core::Drawing> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: DrawingFile = serde_json::from_str(&text).context("parsing drawing JSON")?;
    file.to_drawing()
}

fn report_json(r: &BoundReport<Rational>) -> serde_json::Value {
    let parts: serde_json::Map<String, serde_json::Value> = r
        .decomposition
        .iter()
        .map(|(k, v)| (k.to_string(), (*v).into()))
        .collect();
    serde_json::json!({
        "family": format!("{:?}", r.family),
        "value": r.value,
        "exact": r.exact_parts,
        "parts": parts,
        "standpoint": r.standpoint.as_ref().map(|p| [
            untangle_cli::formats::format_rational(&p.x),
            untangle_cli::formats::format_rational(&p.y),
        ]),
    })
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::GenPoints {
            shape,
            n,
            seed,
            out,
        } => {
            let x = generate(shape, n, seed)?;
            write_json(&PointSetFile::from_set(&x), out.as_deref())?;
        }
        Command::Experiment {
            name,
            n,
            k,
            trials,
            seed,
            budget,
            exact,
            shape,
            kind,
            out,
        } => {
            let params = Params {
                n,
                k,
                trials,
                seed,
                budget,
                exact,
                shape,
                kind: match kind {
                    Kind::FanStack => TriangulationKind::FanStack,
                    Kind::BoundedDegree => TriangulationKind::BoundedDegree,
                },
            };
            let table = experiments::run(name, &params)?;
            table.write_csv(output(out.as_deref())?)?;
        }
        Command::Verify { suite, seed } => {
            let checks = verify::run(suite, seed);
            let mut ok = true;
            for c in &checks {
                println!(
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
                ok &= c.passed;
            }
            return Ok(ok);
        }
        Command::Bound {
            family,
            drawing,
            k,
            budget,
        } => {
            let d = read_drawing(&drawing)?;
            let cap = usize::try_from(budget).unwrap_or(usize::MAX);
            let stars = || k.context("--k is required for star forests");
            let r = match family {
                BoundFamily::Wheel => wheel_upper(&d)?,
                BoundFamily::Fan => fan_upper(&d)?,
                BoundFamily::StarsCollinear => stars_collinear_upper(&d, stars()?, cap)?,
                BoundFamily::StarsConvex => stars_weakly_convex_upper(&d, stars()?, cap)?,
            };
            write_json(&report_json(&r), None)?;
        }
        Command::Redraw {
            drawing,
            max_free,
            budget,
            seed,
            exact,
            out,
        } => {
            let d = read_drawing(&drawing)?;
            let opts = OracleOptions {
                max_free,
                budget,
                seed,
                ..OracleOptions::default()
            };
            let r = fix_oracle(&d, &opts);
            let mut best = r.witness.map(|w| (r.lower, w));
            if !exact {
                if let Some(w) = rim_heuristic(&d) {
                    let f = untangle_core::graphs::fixed_set(&d, &w)?.len();
                    if best.as_ref().is_none_or(|b| f > b.0) {
                        best = Some((f, w));
                    }
                }
            }
            let (fixed, w) = best.context("no plane redrawing found within the budget")?;
            debug_assert!(is_plane_drawing(&w));
            eprintln!(
                "fixed {fixed} of {} vertices (oracle upper end {})",
                d.n(),
                r.upper
            );
            write_json(&DrawingFile::from_drawing(&w, None), out.as_deref())?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
