use std::path::Path;
use std::process::{Command, Output};

use untangle_cli::formats::{DrawingFile, PointSetFile};
use untangle_core::adversary::wheel_adversary;
use untangle_core::bounds::wheel_upper;
use untangle_core::geometry::{position_class, PositionClass};
use untangle_core::graphs::{fixed_set, is_plane_drawing};
use untangle_core::PointSet;

fn untangle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_untangle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn summary(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| l.starts_with("#summary"))
        .map(|l| l.split(',').skip(1).map(str::to_string).collect())
        .collect()
}

fn column(rows: &[Vec<String>], name: &str) -> String {
    let i = rows[0]
        .iter()
        .position(|h| h == name)
        .expect("column present");
    rows[1][i].clone()
}

#[test]
fn gen_points_is_deterministic_and_labelled() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = untangle(&[
            "gen-points",
            "--shape",
            "collinear",
            "-n",
            "9",
            "--seed",
            "5",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let file: PointSetFile = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(file.n, 9);
    assert!(file.points.iter().all(|c| c[0].contains('/')));
    assert_eq!(
        position_class(&file.to_set().unwrap()),
        PositionClass::Collinear
    );
}

#[test]
fn lis_experiment_reproduces_and_stays_below_the_bound() {
    let args = [
        "experiment",
        "lis",
        "-n",
        "400",
        "--trials",
        "200",
        "--seed",
        "9",
    ];
    let first = stdout(&untangle(&args));
    assert_eq!(first, stdout(&untangle(&args)));
    assert!(first.starts_with("n,trial,lis\n"));
    assert_eq!(first.lines().filter(|l| l.starts_with("400,")).count(), 200);
    let s = summary(&first);
    assert_eq!(column(&s, "within_bound"), "true");
    assert_eq!(column(&s, "two_sqrt_n_minus_1"), "39.0000");
}

#[test]
fn star_experiment_reports_below_seven_k() {
    let out = stdout(&untangle(&["experiment", "stars", "-k", "3", "--exact"]));
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[0], "3");
    assert!(row[2].parse::<usize>().unwrap() < 21);
    assert_eq!(row[3], "true");
}

#[test]
fn wheel_experiment_has_sound_redrawings() {
    let out = stdout(&untangle(&[
        "experiment",
        "wheel",
        "-n",
        "12",
        "--trials",
        "8",
        "--seed",
        "2",
    ]));
    let s = summary(&out);
    assert_eq!(column(&s, "found_within_bound"), "true");
    assert_eq!(column(&s, "trials"), "8");
}

#[test]
fn hn_and_cx_experiments_run() {
    let out = stdout(&untangle(&["experiment", "hn", "-k", "4", "--exact"]));
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert!(row[3].parse::<usize>().unwrap() < 12);
    let out = stdout(&untangle(&["experiment", "cx", "-k", "2", "--exact"]));
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(
        row[3], "true",
        "k = 2 colorings are enumerated exhaustively"
    );
}

#[test]
fn verify_suites_pass() {
    for suite in ["geometry", "sequences", "oracle", "bounds-soundness"] {
        let o = untangle(&["verify", suite]);
        let text = stdout(&o);
        assert!(o.status.success(), "{suite}: {text}");
        assert!(text.lines().all(|l| l.starts_with("PASS")));
    }
}

fn write_wheel(path: &Path) -> untangle_core::Drawing {
    let x =
        PointSet::from_ints(&[(0, 0), (7, 1), (3, 9), (10, 8), (5, 4), (1, 6), (8, 3)]).unwrap();
    let d = wheel_adversary(&x, 4).unwrap();
    let f = DrawingFile::from_drawing(&d, Some("wheel"));
    std::fs::write(path, serde_json::to_string(&f).unwrap()).unwrap();
    d
}

#[test]
fn bound_and_redraw_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("wheel.json");
    let d = write_wheel(&input);
    let o = untangle(&["bound", "--family", "wheel", input.to_str().unwrap()]);
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let bound = report["value"].as_u64().unwrap() as usize;
    assert_eq!(bound, wheel_upper(&d).unwrap().value);

    let output = dir.path().join("redrawn.json");
    let o = untangle(&[
        "redraw",
        input.to_str().unwrap(),
        "--out",
        output.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let w: DrawingFile = serde_json::from_slice(&std::fs::read(&output).unwrap()).unwrap();
    let w = w.to_drawing().unwrap();
    assert!(is_plane_drawing(&w));
    assert!(fixed_set(&d, &w).unwrap().len() <= bound);
}

#[test]
fn bad_input_fails_with_a_message() {
    let o = untangle(&["experiment", "stars", "-k", "1"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("k >= 2"));
    let o = untangle(&["bound", "--family", "wheel", "/nonexistent/drawing.json"]);
    assert_eq!(o.status.code(), Some(2));
}
