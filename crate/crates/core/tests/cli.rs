use std::process::{Command, Output};

use annular_polyspline::report::{ConvergenceReport, InterpolationReport};
use annular_polyspline::TorsionReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyspline")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn torsion_d4_closed_form() {
    let o = run(&["torsion", "--dim", "4", "--radii", "1,3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: TorsionReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((r.c_value - 0.5).abs() < 1e-14);
}

#[test]
fn torsion_csv_matches_grid_maximum() {
    let o = run(&["torsion", "--dim", "3", "--radii", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let c: f64 = row[header.iter().position(|h| *h == "c_value").unwrap()].parse().unwrap();
    // T0 = -r^2/6 + a + b/r with T0(1) = T0(2) = 0
    let (a, b) = (7.0 / 6.0, -1.0);
    let grid = (0..=100_000).map(|i| 1.0 + i as f64 / 100_000.0).map(|r| -r * r / 6.0 + a + b / r);
    let max = grid.fold(f64::NEG_INFINITY, f64::max);
    assert!((c - max).abs() < 1e-9 * max);
    // 17 significant digits in scientific notation
    assert!(row[3].contains('e') && row[3].split('e').next().unwrap().len() == 18);
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["torsion", "--dim", "3", "--radii", "2,1"][..],
        &["torsion", "--dim", "3", "--radii", "-1,1"][..],
        &["interpolate", "--dim", "3", "--radii", "1,2", "--field", "r4", "--order", "3"][..],
        &["interpolate", "--dim", "3", "--radii", "1,2", "--field", "nope", "--order", "2"][..],
        &["convergence", "--dim", "3", "--radii", "1,2", "--field", "r2", "--levels", "1"][..],
        &["torsion", "--dim", "3", "--radii", "1,2", "--format", "xml"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn harmonic_field_at_rounding_floor() {
    let o = run(&["interpolate", "--dim", "3", "--radii", "1,2", "--field", "x1", "--order", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: InterpolationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.sup_error < 1e-12 && r.l2_error < 1e-12);
    assert!(r.passes && r.ratio.is_none());
}

#[test]
fn biharmonic_certificate_row() {
    let o = run(&["interpolate", "--dim", "3", "--radii", "1,1.5,2", "--field", "r4", "--order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].ends_with("ratio,passes"));
    let cells: Vec<&str> = lines[1].split(',').collect();
    let ratio: f64 = cells[cells.len() - 2].parse().unwrap();
    assert!(ratio < 1.01);
    assert_eq!(cells[cells.len() - 1], "true");
}

#[test]
fn convergence_rates_in_csv() {
    let o = run(&["convergence", "--dim", "3", "--radii", "1,2", "--field", "r2", "--order", "2", "--levels", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("level,h_max,error,rate"));
    let rates: Vec<f64> = lines.filter_map(|l| l.split(',').nth(3).filter(|s| !s.is_empty()).map(|s| s.parse().unwrap())).collect();
    assert_eq!(rates.len(), 3);
    assert!(rates.iter().all(|r| (r - 2.0).abs() < 0.02));

    let o = run(&["convergence", "--dim", "3", "--radii", "1,2", "--field", "r4", "--order", "4", "--format", "json"]);
    let r: ConvergenceReport = serde_json::from_str(&stdout(&o)).unwrap();
    let rate = r.terminal_rate().unwrap();
    assert!((3.7..=4.5).contains(&rate));
}

#[test]
fn output_is_byte_identical_and_round_trips() {
    let dir = std::env::temp_dir().join(format!("polyspline-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let args = ["convergence", "--dim", "2", "--radii", "1,1.5,2", "--field", "exp", "--order", "4", "--levels", "3"];
    for format in ["csv", "json"] {
        let a = dir.join(format!("a.{format}"));
        let b = dir.join(format!("b.{format}"));
        for path in [&a, &b] {
            let mut full: Vec<&str> = args.to_vec();
            full.extend(["--format", format, "--out", path.to_str().unwrap()]);
            assert_eq!(run(&full).status.code(), Some(0));
        }
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }
    let text = std::fs::read_to_string(dir.join("a.json")).unwrap();
    let report: ConvergenceReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
    std::fs::remove_dir_all(&dir).ok();
}
