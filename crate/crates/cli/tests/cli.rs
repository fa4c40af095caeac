use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn tfe(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tfe"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("run tfe")
}

fn ok(dir: &Path, args: &[&str]) {
    let out = tfe(dir, args);
    assert!(
        out.status.success(),
        "tfe {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
}

fn lines(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

fn parse_rows(path: &Path) -> Vec<Vec<f64>> {
    lines(path)
        .iter()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn generate_tones_writes_one_row_per_sample() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &[
            "generate", "tones", "--freqs", "100", "--fs", "1000", "--n", "1000", "--out",
            "tone.csv",
        ],
    );
    let rows = lines(&dir.path().join("tone.csv"));
    assert_eq!(rows.len(), 1000);
    assert_eq!(rows[0], "1");
}

#[test]
fn generate_impulses_matches_example_signal() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &[
            "generate",
            "impulses",
            "--pos",
            "1000,3000",
            "--fs",
            "100",
            "--n",
            "4000",
        ],
    );
    let rows = lines(&dir.path().join("signal.csv"));
    assert_eq!(rows.len(), 4000);
    let ones: Vec<usize> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| *r == "1")
        .map(|(i, _)| i)
        .collect();
    assert_eq!(ones, vec![1000, 3000]);
}

#[test]
fn generate_chirp_rejects_frequency_at_nyquist() {
    let dir = TempDir::new().unwrap();
    let out = tfe(
        dir.path(),
        &[
            "generate", "chirp", "--f0", "600", "--f1", "600", "--fs", "1000",
        ],
    );
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert!(!dir.path().join("signal.csv").exists());
}

#[test]
fn five_chirps_thirty_band_if() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &[
            "generate",
            "chirp",
            "--f0",
            "500,1000,1500,2000,2500",
            "--f1",
            "1500,2000,2500,3000,3500",
            "--out",
            "chirps.csv",
        ],
    );
    assert_eq!(lines(&dir.path().join("chirps.csv")).len(), 8000);
    ok(
        dir.path(),
        &[
            "analyze",
            "--method",
            "if",
            "--bands",
            "30",
            "--in",
            "chirps.csv",
            "--fs",
            "8000",
        ],
    );
    let dist = dir.path().join("distribution.csv");
    assert_eq!(lines(&dist)[0], "time_s,freq_hz,energy");
    assert_eq!(lines(&dist).len(), 1 + 30 * 8000);
    let meta = fs::read_to_string(dir.path().join("distribution.json")).unwrap();
    assert!(meta.contains("\"method\": \"tfd_if\""));
    assert!(meta.contains("\"n_freq\": 30"));
}

#[test]
fn ft_of_deltas_with_grid_conserves_energy() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &[
            "generate",
            "impulses",
            "--pos",
            "1000",
            "--fs",
            "100",
            "--n",
            "4000",
            "--out",
            "delta.csv",
        ],
    );
    ok(
        dir.path(),
        &[
            "analyze",
            "--method",
            "ft",
            "--in",
            "delta.csv",
            "--fs",
            "100",
            "--out",
            "ft.csv",
            "--grid",
            "10x10",
        ],
    );
    let points = parse_rows(&dir.path().join("ft.csv"));
    assert_eq!(points.len(), 2001);
    assert!(points.iter().all(|p| (p[0] - 10.0).abs() < 0.01));
    let point_total: f64 = points.iter().map(|p| p[2]).sum();

    let grid = lines(&dir.path().join("ft.grid.csv"));
    assert_eq!(grid.len(), 12);
    assert!(grid[0].starts_with("time_s\\freq_hz,0,"));
    let body: Vec<Vec<f64>> = grid[1..]
        .iter()
        .map(|l| l.split(',').skip(1).map(|v| v.parse().unwrap()).collect())
        .collect();
    let cell_total: f64 = body.iter().flatten().sum();
    assert!((cell_total - point_total).abs() <= 1e-9 * point_total);
    let busy_rows = body.iter().filter(|r| r.iter().any(|&c| c > 0.0)).count();
    assert_eq!(busy_rows, 1);
}

#[test]
fn bands_with_ft_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    ok(
        dir.path(),
        &[
            "generate", "impulses", "--pos", "3", "--fs", "100", "--n", "16", "--out", "d.csv",
        ],
    );
    let out = tfe(
        dir.path(),
        &[
            "analyze", "--method", "ft", "--bands", "5", "--in", "d.csv", "--fs", "100",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--bands"));
    assert!(!dir.path().join("distribution.csv").exists());
}

#[test]
fn unreadable_input_fails() {
    let dir = TempDir::new().unwrap();
    let out = tfe(
        dir.path(),
        &[
            "analyze",
            "--method",
            "ft",
            "--in",
            "missing.csv",
            "--fs",
            "100",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn marginals_follow_method_contracts() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(
        d,
        &[
            "generate", "tones", "--freqs", "100", "--fs", "1000", "--n", "1000", "--out",
            "tone.csv",
        ],
    );
    ok(
        d,
        &[
            "analyze", "--method", "ft", "--in", "tone.csv", "--fs", "1000", "--out", "ft.csv",
        ],
    );
    ok(
        d,
        &[
            "analyze", "--method", "if", "--in", "tone.csv", "--fs", "1000", "--out", "if.csv",
        ],
    );

    ok(
        d,
        &[
            "marginal", "--axis", "time", "--in", "ft.csv", "--out", "psd.csv",
        ],
    );
    assert_eq!(lines(&d.join("psd.csv"))[0], "freq_hz,energy");
    let psd = parse_rows(&d.join("psd.csv"));
    assert_eq!(psd.len(), 501);
    let peak = psd.iter().max_by(|a, b| a[1].total_cmp(&b[1])).unwrap();
    assert_eq!(peak[0], 100.0);
    assert!((peak[1] - 250_000.0).abs() < 1e-3);

    ok(
        d,
        &[
            "marginal",
            "--axis",
            "frequency",
            "--in",
            "if.csv",
            "--out",
            "energy.csv",
        ],
    );
    assert_eq!(lines(&d.join("energy.csv"))[0], "time_s,energy");
    let energy = parse_rows(&d.join("energy.csv"));
    assert_eq!(energy.len(), 1000);
    assert!(energy.iter().all(|r| (r[1] - 1.0).abs() < 1e-9));

    let out = tfe(
        d,
        &[
            "marginal",
            "--axis",
            "frequency",
            "--in",
            "ft.csv",
            "--out",
            "bad.csv",
        ],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tfd_if"));
    assert!(!d.join("bad.csv").exists());
}

#[test]
fn reads_named_column_of_fixture() {
    let dir = TempDir::new().unwrap();
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures/synthetic_accelerogram.csv");
    let fixture = fixture.to_str().unwrap();
    ok(
        dir.path(),
        &[
            "analyze", "--method", "ft", "--in", fixture, "--fs", "50", "--column", "accel_g",
            "--pad", "2",
        ],
    );
    let meta = fs::read_to_string(dir.path().join("distribution.json")).unwrap();
    assert!(meta.contains("\"pad_factor\": 2"));
    assert!(meta.contains("\"n_time\": 500"));
}

#[test]
fn commands_are_reproducible() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    ok(
        d,
        &[
            "generate", "chirp", "--f0", "10", "--f1", "200", "--fs", "1000", "--n", "777",
            "--out", "c.csv",
        ],
    );
    for out in ["a.csv", "b.csv"] {
        ok(
            d,
            &[
                "analyze", "--method", "if", "--bands", "4", "--in", "c.csv", "--fs", "1000",
                "--out", out, "--grid", "20x8",
            ],
        );
    }
    for (x, y) in [
        ("a.csv", "b.csv"),
        ("a.json", "b.json"),
        ("a.grid.csv", "b.grid.csv"),
    ] {
        assert_eq!(
            fs::read(d.join(x)).unwrap(),
            fs::read(d.join(y)).unwrap(),
            "{x}"
        );
    }
}
