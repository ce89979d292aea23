use std::path::PathBuf;
use std::process::{Command, Output};

fn bireg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bireg"))
        .args(args)
        .env_remove("BIREG_FIXTURES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> String {
    fixtures_dir().join(name).to_string_lossy().into_owned()
}

#[test]
fn classify_exit_codes() {
    let out = bireg(&["classify", "3", "8", "4", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Eulerian, planar"));

    let out = bireg(&["classify", "3", "5", "3", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("NOT planar"));

    let out = bireg(&["classify", "3", "4", "4", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("not Eulerian"));
}

#[test]
fn usage_errors() {
    assert_eq!(bireg(&["classify", "3", "4", "4"]).status.code(), Some(64));
    assert_eq!(bireg(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(bireg(&["classify", "0", "4", "4", "3"]).status.code(), Some(64));
    assert_eq!(bireg(&["--help"]).status.code(), Some(0));
    assert_eq!(bireg(&["--version"]).status.code(), Some(0));
}

#[test]
fn construct_formats() {
    let out = bireg(&["construct", "3", "4", "3", "4", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches(" -- ").count(), 12);

    let out = bireg(&["construct", "2", "2", "2", "2", "--format", "edgelist"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("rotations:"));
}

#[test]
fn construct_refusals() {
    let out = bireg(&["construct", "3", "25", "5", "15"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not planar graphic"));

    let out = bireg(&["construct", "1", "6", "3", "2", "--connect"]);
    assert_eq!(out.status.code(), Some(1));
    let out = bireg(&["construct", "1", "6", "3", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    let path = file.to_str().unwrap();
    let out = bireg(&["construct", "3", "55", "5", "33", "--connect", "--out", path]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let out = bireg(&["verify", path, "--expect", "3,55,5,33"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("1 component(s)"));
    assert!(text.trim_end().ends_with("PASS"));

    let out = bireg(&["verify", path, "--expect", "3,55,5,34"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_fixtures() {
    let out = bireg(&["verify", &fixture("r7.edgelist"), "--expect", "3,35,5,21"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));

    let out = bireg(&["verify", &fixture("r9.edgelist")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("72 vertices, 135 edges"));
}

#[test]
fn verify_bad_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let dup = dir.path().join("dup.txt");
    std::fs::write(&dup, "biregular-edgelist v1\np=1 q=1\n0 0\n0 0\n").unwrap();
    let out = bireg(&["verify", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("duplicate edge"));

    let junk = dir.path().join("junk.txt");
    std::fs::write(&junk, "garbage\n").unwrap();
    assert_eq!(bireg(&["verify", junk.to_str().unwrap()]).status.code(), Some(65));

    let missing = dir.path().join("missing.txt");
    assert_eq!(bireg(&["verify", missing.to_str().unwrap()]).status.code(), Some(74));
}

#[test]
fn enumerate_counts() {
    let out = bireg(&["enumerate", "3", "5", "3", "5", "--count-only"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "total=2040 planar=0");

    let out = bireg(&["enumerate", "2", "2", "2", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("biregular-edgelist v1").count(), 1);

    let out = bireg(&["enumerate", "3", "25", "5", "15"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--limit"));
}

#[test]
fn enumerate_seed_is_reproducible() {
    let args = ["enumerate", "3", "25", "5", "15", "--limit", "3", "--seed", "7"];
    let first = stdout(&bireg(&args));
    assert_eq!(first, stdout(&bireg(&args)));
    assert_eq!(first.matches("biregular-edgelist v1").count(), 3);
}

#[test]
fn json_outputs_parse() {
    for args in [
        &["classify", "3", "8", "4", "6", "--json"][..],
        &["construct", "3", "4", "3", "4", "--json"],
        &["enumerate", "3", "5", "3", "5", "--count-only", "--json"],
        &["verify", &fixture("r7.edgelist"), "--json"],
        &["selftest", "--json"],
    ] {
        let out = bireg(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert!(value.is_object(), "{args:?}");
    }
    let out = bireg(&["classify", "3", "8", "4", "6", "--json"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["planar"], true);
}

#[test]
fn selftest_passes() {
    let out = bireg(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn selftest_reports_corrupt_fixture() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["r7.edgelist", "r9.edgelist", "sector35.template"] {
        std::fs::copy(fixtures_dir().join(name), dir.path().join(name)).unwrap();
    }
    let r7 = dir.path().join("r7.edgelist");
    let text = std::fs::read_to_string(&r7).unwrap();
    assert!(text.contains("B0: A1 A3 A0 A4 A5"));
    std::fs::write(&r7, text.replace("B0: A1 A3 A0 A4 A5", "B0: A3 A1 A0 A4 A5")).unwrap();

    let out = Command::new(env!("CARGO_BIN_EXE_bireg"))
        .arg("selftest")
        .env("BIREG_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL fixtures"));
}
