//! End-to-end tests of the binary: exit codes, output stability, file
//! round-trips.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tourlab"))
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tourlab-cli-{name}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_l6(dir: &Path) -> PathBuf {
    let path = dir.join("L6.trn");
    fs::write(&path, "6\n111101111110110\n").unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn det_prints_25_for_l6() {
    let dir = tmpdir("det");
    let l6 = write_l6(&dir);
    let out = bin().arg("det").arg(&l6).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "25");

    let out = bin().args(["--json", "det"]).arg(&l6).output().unwrap();
    assert_eq!(stdout(&out).trim(), r#"{"det":25}"#);
}

#[test]
fn pfaffian_of_l6() {
    let dir = tmpdir("pf");
    let l6 = write_l6(&dir);
    let out = bin().arg("pfaffian").arg(&l6).output().unwrap();
    assert!(out.status.success());
    let pf: i64 = stdout(&out).trim().parse().unwrap();
    assert_eq!(pf * pf, 25);
}

#[test]
fn diamonds_census_of_l6() {
    let dir = tmpdir("diamonds");
    let l6 = write_l6(&dir);
    let out = bin()
        .args(["diamonds", "--witnesses"])
        .arg(&l6)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("delta: 5\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn psi_of_l6_prints_alternation() {
    let dir = tmpdir("psi");
    let l6 = write_l6(&dir);
    let out = bin()
        .args(["psi"])
        .arg(&l6)
        .args(["--vertex", "6", "--set", "1,2,3,4,5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "+1 -1 +1 -1 +1");
}

#[test]
fn switch_round_trips_through_files() {
    let dir = tmpdir("switch");
    let l6 = write_l6(&dir);
    let switched = dir.join("switched.trn");
    let out = bin()
        .arg("switch")
        .arg(&l6)
        .args(["--set", "1,3,5"])
        .arg("--out")
        .arg(&switched)
        .output()
        .unwrap();
    assert!(out.status.success());

    // switch-equiv must recover a switch set mapping one onto the other.
    let out = bin()
        .arg("switch-equiv")
        .arg(&l6)
        .arg(&switched)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("switch-set:"));

    // Switching back yields the original bytes.
    let back = dir.join("back.trn");
    bin()
        .arg("switch")
        .arg(&switched)
        .args(["--set", "1,3,5"])
        .arg("--out")
        .arg(&back)
        .output()
        .unwrap();
    assert_eq!(
        fs::read_to_string(&l6).unwrap(),
        fs::read_to_string(&back).unwrap()
    );
}

#[test]
fn blowup_and_formula_agree() {
    let dir = tmpdir("blowup");
    let l6 = write_l6(&dir);
    let big = dir.join("big.trn");
    assert!(bin()
        .arg("blowup")
        .arg(&l6)
        .args(["--counts", "2,1,1,1,1,1"])
        .arg("--out")
        .arg(&big)
        .output()
        .unwrap()
        .status
        .success());
    let direct = bin().arg("det").arg(&big).output().unwrap();
    let formula = bin()
        .arg("blowup-det")
        .arg(&l6)
        .args(["--counts", "2,1,1,1,1,1"])
        .output()
        .unwrap();
    assert_eq!(stdout(&direct).trim(), stdout(&formula).trim());
}

#[test]
fn ln_and_its_determinant() {
    let dir = tmpdir("ln");
    let path = dir.join("L8.trn");
    assert!(bin()
        .args(["ln", "8", "--out"])
        .arg(&path)
        .output()
        .unwrap()
        .status
        .success());
    let out = bin().arg("det").arg(&path).output().unwrap();
    assert_eq!(stdout(&out).trim(), "49");
    let out = bin().args(["ln-det", "16"]).output().unwrap();
    assert_eq!(stdout(&out).trim(), "225");
    let out = bin().args(["q", "15"]).output().unwrap();
    assert_eq!(stdout(&out).trim(), "15");
}

#[test]
fn classify_with_certificate() {
    let dir = tmpdir("classify");
    let l6 = write_l6(&dir);
    let out = bin()
        .args(["classify", "--certificate"])
        .arg(&l6)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("level: 5"));
    assert!(text.contains("max-even-det: 25"));
    assert!(text.contains("base: L6"));
}

#[test]
fn six_profile_of_l6() {
    let dir = tmpdir("sixprofile");
    let l6 = write_l6(&dir);
    let out = bin().arg("six-profile").arg(&l6).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "delta: 5\ndet: 25");
}

#[test]
fn verify_single_claim_passes() {
    let out = bin().args(["verify", "lemma-fzt"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("PASS lemma-fzt"), "got: {text}");
    assert!(text.contains("1024"));
}

#[test]
fn verify_unknown_claim_is_a_domain_error() {
    let out = bin().args(["verify", "lemma-nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn census_of_four_vertex_tournaments() {
    let out = bin().args(["census", "4"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("population=64"));
    // Exactly determinants 1 and 9 occur.
    assert!(text.lines().any(|l| l.trim_start().starts_with("1 ")));
    assert!(text.lines().any(|l| l.trim_start().starts_with("9 ")));
}

#[test]
fn convert_round_trips() {
    let dir = tmpdir("convert");
    let l6 = write_l6(&dir);
    let out = bin().arg("convert").arg(&l6).output().unwrap();
    assert!(out.status.success());
    let matrix_text = stdout(&out);
    assert_eq!(matrix_text.lines().count(), 6);
    let matrix_path = dir.join("L6.matrix");
    fs::write(&matrix_path, &matrix_text).unwrap();
    let out = bin().arg("convert").arg(&matrix_path).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "6\n111101111110110\n");
}

#[test]
fn domain_errors_exit_one_usage_errors_exit_two() {
    let out = bin().args(["q", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let dir = tmpdir("errs");
    let bad = dir.join("bad.trn");
    fs::write(&bad, "4\n11\n").unwrap();
    let out = bin().arg("det").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().args(["ln-det", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_byte_stable() {
    let dir = tmpdir("stable");
    let l6 = write_l6(&dir);
    let a = bin()
        .args(["classify", "--certificate"])
        .arg(&l6)
        .output()
        .unwrap();
    let b = bin()
        .args(["classify", "--certificate"])
        .arg(&l6)
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    // --timing writes to stderr only.
    let c = bin()
        .args(["--timing", "classify", "--certificate"])
        .arg(&l6)
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
    assert!(!c.stderr.is_empty());
}
