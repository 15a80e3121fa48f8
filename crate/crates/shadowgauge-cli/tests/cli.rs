//! Black-box tests of the `shadowgauge` binary: exit-code contract, file
//! counts, determinism, and report formats.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_shadowgauge"))
}

fn tmp(tag: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(tag);
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("process terminated by signal")
}

#[test]
fn gen_writes_the_contracted_file_count() {
    let dir = tmp("gen_count");
    let out = bin()
        .args(["gen", "--dim", "3", "--bodies", "5", "--generators", "6", "--seed", "7"])
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let mut names: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(
        names,
        vec![
            "ball.json",
            "box.json",
            "cross_polytope.json",
            "cube.json",
            "zonotope_00.json",
            "zonotope_01.json",
            "zonotope_02.json",
            "zonotope_03.json",
            "zonotope_04.json",
        ]
    );
}

#[test]
fn gen_is_byte_deterministic() {
    let a = tmp("gen_det_a");
    let b = tmp("gen_det_b");
    for dir in [&a, &b] {
        let out = bin()
            .args(["gen", "--dim", "2", "--bodies", "3", "--generators", "5", "--seed", "99"])
            .arg("--out")
            .arg(dir)
            .output()
            .unwrap();
        assert_eq!(code(&out), 0);
    }
    for entry in fs::read_dir(&a).unwrap() {
        let name = entry.unwrap().file_name();
        assert_eq!(
            fs::read(a.join(&name)).unwrap(),
            fs::read(b.join(&name)).unwrap(),
            "{name:?} differs between identical runs"
        );
    }
}

#[test]
fn gen_rejects_generator_counts_beyond_the_cap() {
    let dir = tmp("gen_cap");
    let out = bin()
        .args(["gen", "--dim", "3", "--generators", "25"])
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn constants_prints_the_sharp_table() {
    let out = bin().args(["constants", "--n-max", "3"]).output().unwrap();
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("0.88622693"), "missing c_2 in:\n{stdout}");
    assert!(stdout.contains("0.82713399"), "missing c_3 in:\n{stdout}");
    assert!(stdout.contains("0.27969627"), "missing c_2 gap in:\n{stdout}");
}

#[test]
fn constants_requires_n_max_of_at_least_two() {
    let out = bin().args(["constants", "--n-max", "1"]).output().unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn constants_gaps_stay_positive_to_50() {
    let out = bin().args(["constants", "--n-max", "50"]).output().unwrap();
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    for line in stdout.lines().skip(1) {
        let gap: f64 = line.split_whitespace().last().unwrap().parse().unwrap();
        assert!(gap > 0.0, "nonpositive gap in line: {line}");
    }
}

#[test]
fn verify_accepts_the_fixture_suite() {
    let dir = tmp("verify_fixtures");
    bin()
        .args(["gen", "--dim", "3", "--bodies", "1", "--generators", "6", "--seed", "3"])
        .arg("--out")
        .arg(&dir)
        .output()
        .unwrap();
    let report_path = dir.join("report.json");
    let mut files: Vec<PathBuf> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    let out = bin()
        .arg("verify")
        .args(&files)
        .arg("--out")
        .arg(&report_path)
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));

    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["summary"]["failed"], 0);
    // Ball rows certify the equality case to machine precision.
    let rows = report["reports"].as_array().unwrap();
    let ball_row = rows
        .iter()
        .find(|r| r["subject"] == "ball" && r["name"] == "ball_equality")
        .expect("ball equality row present");
    let lhs = ball_row["lhs"].as_f64().unwrap();
    let gap = ball_row["gap"].as_f64().unwrap();
    assert!((gap / lhs).abs() <= 1e-9);
}

#[test]
fn verify_reports_degenerate_zonotopes_as_not_applicable() {
    let dir = tmp("verify_degenerate");
    let path = dir.join("flat.json");
    fs::write(
        &path,
        r#"{"type":"zonotope","dim":3,"generators":[[1.0,0.0,0.0],[0.0,1.0,0.0]]}"#,
    )
    .unwrap();
    let out = bin().arg("verify").arg(&path).output().unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["not_applicable"], 1);
    assert_eq!(report["summary"]["failed"], 0);
    let reason = report["reports"][0]["reason"].as_str().unwrap();
    assert!(reason.contains("rank"), "reason: {reason}");
}

#[test]
fn verify_rejects_malformed_input_with_exit_2() {
    let dir = tmp("verify_malformed");
    let path = dir.join("bad.json");
    fs::write(&path, "{ this is not json").unwrap();
    let out = bin().arg("verify").arg(&path).output().unwrap();
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.json"));
}

#[test]
fn verify_rejects_invalid_bodies_with_exit_2() {
    let dir = tmp("verify_invalid");
    let path = dir.join("bad_ball.json");
    fs::write(&path, r#"{"type":"ball","dim":3,"radius":-1.0}"#).unwrap();
    let out = bin().arg("verify").arg(&path).output().unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_emits_csv_when_asked() {
    let dir = tmp("verify_csv");
    let path = dir.join("cube.json");
    fs::write(
        &path,
        r#"{"type":"zonotope","dim":2,"generators":[[1.0,0.0],[0.0,1.0]]}"#,
    )
    .unwrap();
    let out = bin()
        .arg("verify")
        .arg(&path)
        .args(["--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let header = stdout.lines().next().unwrap();
    assert!(header.starts_with("subject,against,name,lhs,rhs,gap"));
    // Witness directions flatten into semicolon-joined decimals.
    assert!(stdout.lines().skip(1).any(|l| l.contains(';')), "no witness column in:\n{stdout}");
}

#[test]
fn verify_with_oracle_adds_rows_within_three_sigma() {
    let dir = tmp("verify_oracle");
    let path = dir.join("zonogon.json");
    fs::write(
        &path,
        r#"{"type":"zonotope","dim":2,"generators":[[1.0,0.0],[0.0,1.0],[1.0,1.0]]}"#,
    )
    .unwrap();
    let out = bin()
        .arg("verify")
        .arg(&path)
        .args(["--with-oracle", "--seed", "5"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = report["reports"].as_array().unwrap();
    for name in ["oracle_volume", "oracle_surface_area"] {
        let row = rows.iter().find(|r| r["name"] == name).expect("oracle row");
        assert_eq!(row["verdict"], "passed", "{name} row failed");
    }
}

#[test]
fn thread_cap_does_not_change_results() {
    let dir = tmp("verify_threads");
    let path = dir.join("zonogon.json");
    fs::write(
        &path,
        r#"{"type":"zonotope","dim":2,"generators":[[1.0,0.0],[0.0,1.0],[1.0,1.0]]}"#,
    )
    .unwrap();
    let run = |threads: &str| {
        let out = bin()
            .arg("verify")
            .arg(&path)
            .args(["--with-oracle", "--seed", "11"])
            .env("SHADOWGAUGE_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(code(&out), 0);
        out.stdout
    };
    assert_eq!(run("1"), run("2"), "reports differ across thread caps");
}
