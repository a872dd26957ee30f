use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn pleth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pleth")).args(args).output().expect("binary runs")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Compares stdout with `tests/golden/<name>.json`; `UPDATE_GOLDEN=1` rewrites it.
fn check(name: &str, args: &[&str], code: i32) {
    let out = pleth(args);
    assert_eq!(out.status.code(), Some(code), "{name}: stderr {}", String::from_utf8_lossy(&out.stderr));
    let path = golden_dir().join(format!("{name}.json"));
    let got = String::from_utf8(out.stdout).unwrap();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{name}");
    // identical invocations give identical bytes
    assert_eq!(String::from_utf8(pleth(args).stdout).unwrap(), want, "{name} rerun");
}

#[test]
fn quotient() {
    check("quotient", &["quotient", "-r", "3", "[6,5,2,1]/[3,2]"], 0);
    let out = std::fs::read_to_string(golden_dir().join("quotient.json")).unwrap();
    assert_eq!(out.trim(), "[[1],[],[[2,1],[1]]]");
}

#[test]
fn core() {
    check("core", &["core", "-r", "3", "[6,5,2,1]"], 0);
}

#[test]
fn star() {
    check("star", &["star", "-r", "3", "--tau", "[3]", "[[1],[],[[2,1],[1]]]"], 0);
    check("star_second", &["star", "-r", "3", "--tau", "[3,2]", "[[1],[2],[[1],[1]]]"], 0);
}

#[test]
fn sign() {
    check("sign", &["sign", "-r", "3", "[6,5,2,1]/[3,2]"], 0);
}

#[test]
fn ssyt_count() {
    check("ssyt_count", &["ssyt-count", "[4,3]/[1]", "--content", "3,3"], 0);
}

#[test]
fn lr() {
    check("lr", &["lr", "--lambda", "[3,3]", "[[1],[2],[[2,2],[1]]]"], 0);
}

#[test]
fn g_orbit() {
    check("g_orbit", &["g-orbit", "--content", "2,4", "[[1],[2],[[2,2],[1]]]"], 0);
}

#[test]
fn ribbon_count() {
    check("ribbon_count", &["ribbon-count", "-r", "3", "[6,5,5,5,2]/[3,2]", "--weight", "3,3"], 0);
}

#[test]
fn ribbon_show() {
    check("ribbon_show", &["ribbon-show", "-r", "2", "[5,5,2,2]/[3,1]", "--weight", "3,1,1"], 0);
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("svg");
    let out = pleth(&["ribbon-show", "-r", "3", "[3,3,3,3]", "--weight", "2,2", "--svg", svg.to_str().unwrap()]);
    assert!(out.status.success());
    let mut files: Vec<_> = std::fs::read_dir(&svg).unwrap().map(|e| e.unwrap().file_name()).collect();
    files.sort();
    assert_eq!(files, vec!["ribbon-1.svg", "ribbon-2.svg"]);
    let text = std::fs::read_to_string(svg.join("ribbon-1.svg")).unwrap();
    assert!(text.starts_with("<svg") && text.contains("stroke-width=\"3\""));
}

#[test]
fn mn() {
    check("mn", &["mn", "-r", "3", "--tau", "[3,2]", "--alpha", "4,2"], 0);
}

#[test]
fn sxp() {
    check("sxp_trace", &["sxp", "-r", "3", "--tau", "[3,2]", "--skew", "[4,3]/[1]", "--trace"], 0);
    check("sxp_verify", &["sxp", "-r", "3", "--tau", "[3,2]", "--skew", "[3,3]/[]", "--verify"], 0);
    let text = std::fs::read_to_string(golden_dir().join("sxp_verify.json")).unwrap();
    assert!(text.contains(r#""[6,5,5,5,2]":1"#) && text.contains(r#""verified":true"#));
}

#[test]
fn oracle() {
    check("oracle", &["oracle", "-r", "2", "--skew", "[2]"], 0);
}

#[test]
fn cl_check() {
    check("cl_check", &["cl-check", "--tau", "[3,1]", "--lambda", "[3,1,1]", "--nu", "[5,5,2,2]"], 0);
    check("cl_check_sweep", &["cl-check", "--tau", "[1]", "--lambda", "[2,1]"], 0);
}

#[test]
fn verify_conjecture() {
    check("verify_conjecture", &["verify-conjecture", "--r-max", "2", "--n-max", "3", "--jobs", "2"], 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cells.jsonl");
    let p = path.to_str().unwrap();
    assert!(pleth(&["verify-conjecture", "--r-max", "2", "--n-max", "3", "--out", p]).status.success());
    let full = std::fs::read_to_string(&path).unwrap();
    let first = full.lines().next().unwrap();
    assert_eq!(first, r#"{"r":1,"n":0,"nu":[],"lambda":[0,0],"mult":1,"rt":1,"cwl":1,"rntl":1}"#);
    let half: String = full.lines().take(5).map(|l| format!("{l}\n")).collect();
    std::fs::write(&path, half).unwrap();
    assert!(pleth(&["verify-conjecture", "--r-max", "2", "--n-max", "3", "--out", p, "--resume", "--jobs", "3"]).status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), full);
}

#[test]
fn table() {
    check("table", &["table"], 0);
}

#[test]
fn lattice_check() {
    check("lattice_check", &["lattice-check", "--r-max", "2", "--n-max", "3"], 0);
    check("lattice_check_random", &["lattice-check", "--samples", "20", "--seed", "7"], 0);
}

#[test]
fn usage_errors() {
    for args in [
        &["sign", "-r", "0", "[1]"][..],
        &["sign", "-r", "2", "[1,2]"],
        &["quotient", "[2]"],
        &["nonsense"],
        &["g-orbit", "--content", "2,3", "[[1],[2],[[2,2],[1]]]"],
        &["verify-conjecture", "--resume"],
    ] {
        let out = pleth(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let err = String::from_utf8(pleth(&["mn", "-r", "2", "--alpha", "x"]).stderr).unwrap();
    assert!(err.contains("--alpha"), "{err}");
}
