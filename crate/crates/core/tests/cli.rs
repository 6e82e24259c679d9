use std::path::Path;
use std::process::{Command, Output};

use dcl::epr::epr_measures;
use dcl::sweep::format_value;
use dcl::{BathParams, Regime, Squeeze};

fn dcl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcl")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn two_point_sweep_matches_library() {
    let out = dcl(&[
        "sweep", "--quantity", "eta", "--regime", "common", "--squeeze", "0.4", "--gamma", "0.2", "--temp", "15",
        "--t-max", "1.5", "--steps", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "t,eta:common:s=0.4:gamma=0.2:T=15");
    let b = BathParams::new(0.2, 15.0).unwrap();
    let want = epr_measures(Regime::Common(b), Squeeze::new(0.4).unwrap(), 1.5).unwrap().eta;
    assert_eq!(lines[2], format!("{},{}", format_value(1.5), format_value(want)));
}

#[test]
fn negative_squeezing_is_accepted() {
    let out = dcl(&["sweep", "--squeeze", "-0.3", "--steps", "2", "--t-max", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).starts_with("t,coherence:common:s=-0.3:gamma=0.1:T=10\n"));
}

#[test]
fn figure_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = dcl(&["figure", "fig6", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    assert!(!bytes.contains(&b'\r'));
    assert_eq!(bytes.iter().filter(|&&c| c == b'\n').count(), 2001);
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "run.cfg",
        "# shared bath\nregime = distinct\ngamma = 0.3\ntemp = 5, 7\nsteps = 2\nt_max = 1\nquantity = xi\n",
    );
    let out = dcl(&["sweep", "--config", &cfg, "--gamma", "0.2"]);
    assert_eq!(out.status.code(), Some(0));
    let header = stdout(&out).lines().next().unwrap().to_owned();
    assert_eq!(header, "t,xi:distinct:s=0:gamma=0.2:T=5,xi:distinct:s=0:gamma=0.2:T=7");
}

#[test]
fn exit_codes() {
    assert_eq!(dcl(&["--help"]).status.code(), Some(0));
    assert_eq!(dcl(&[]).status.code(), Some(1));
    assert_eq!(dcl(&["sweep", "--bogus"]).status.code(), Some(1));
    assert_eq!(dcl(&["sweep", "--regime", "vacuum"]).status.code(), Some(1));
    assert_eq!(dcl(&["figure", "fig9"]).status.code(), Some(1));

    let out = dcl(&["sweep", "--gamma", "0.2", "--t-max", "6000"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("common:s=0:gamma=0.2:T=10") && err.contains("5000"), "{err}");
    assert_eq!(dcl(&["sweep", "--gamma", "-1"]).status.code(), Some(2));
    assert_eq!(dcl(&["sweep", "--steps", "1"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "bad.cfg", "gamma = 0.1\ncolour = red\n");
    let out = dcl(&["sweep", "--config", &cfg]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.cfg:2: unknown key `colour`"));
    let missing = dir.path().join("missing.cfg");
    assert_eq!(dcl(&["sweep", "--config", missing.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn death_time_rows() {
    let out = dcl(&["death-time", "--squeeze", "1.5", "--squeeze", "0", "--gamma", "0.2", "--temp", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["s", "gamma", "T", "status", "death_time"]);
    assert_eq!(&rows[1][..4], ["1.5", "0.2", "10", "death"]);
    let t_d: f64 = rows[1][4].parse().unwrap();
    assert!((t_d - 0.3256760794576378).abs() < 1e-8);
    assert_eq!(&rows[2][..4], ["0", "0.2", "10", "separable"]);

    let out = dcl(&["death-time", "--squeeze", "1.5", "--gamma", "0.2", "--temp", "10", "--t-max", "0.1"]);
    assert!(stdout(&out).ends_with("1.5,0.2,10,no-death,\n"));
}

#[test]
fn dark_period_rows() {
    let out = dcl(&[
        "dark-period", "--squeeze", "0.8", "--squeeze", "0", "--squeeze", "1.5", "--gamma", "0.2", "--temp", "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["s", "gamma", "T", "status", "t_off", "t_on", "death_time"]);
    assert_eq!(rows[1][3], "dark-period");
    let on: f64 = rows[1][5].parse().unwrap();
    assert!((on - 7.437_908_774_542_3).abs() < 1e-8);
    assert_eq!(rows[2], ["0", "0.2", "10", "never-entangled", "", "", ""]);
    assert_eq!(rows[3], ["1.5", "0.2", "10", "entangled", "", "", ""]);
}

#[test]
fn validate_passes() {
    let out = dcl(&["validate"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}
