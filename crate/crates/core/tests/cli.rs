use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn holant3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holant3"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_prints_planar_verdict_and_certificate() {
    let o = holant3(&["classify", "1", "0", "-1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("#P-hard; planar P-time (a=1/2, b=-1/2)"));
    assert!(out.contains("certificate for [1, 0, -1, 2]"));
}

#[test]
fn cover_of_triple_is_six() {
    let o = holant3(&["cover", "fixtures/triple.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "6");
}

#[test]
fn planar_cover_matches_enumeration() {
    let planar = holant3(&["cover", "--planar", "fixtures/cube-cover-planar.json"]);
    let plain = holant3(&["cover", "fixtures/cube-cover-planar.json"]);
    assert_eq!(planar.status.code(), Some(0));
    assert_eq!(stdout(&planar), stdout(&plain));
}

#[test]
fn gadget_outputs() {
    let o = holant3(&["gadget", "Gaux", "1", "2", "3", "4"]);
    assert_eq!(stdout(&o).trim(), "[44, 62, 88, 126]");
    let o = holant3(&["gadget", "G3", "1", "-1", "0", "2"]);
    assert_eq!(stdout(&o).trim(), "[[1, 1], [-1, 4]]");
    let o = holant3(&["gadget", "absorbR1", "1", "2", "3", "4", "--param", "-1/2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn eval_and_planar_count() {
    assert_eq!(stdout(&holant3(&["eval", "fixtures/k33.json"])).trim(), "6");
    assert_eq!(stdout(&holant3(&["eval", "--method", "dp", "fixtures/k33-one-hot.json"])).trim(), "3");
    let o = holant3(&["planar-count", "fixtures/cube-planar.json"]);
    assert_eq!(stdout(&o), "9\nperfect matchings: 9\n");
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(holant3(&["classify", "1", "0.5", "1", "2"]).status.code(), Some(2));
    assert_eq!(holant3(&["gadget", "G9", "1", "2", "3", "4"]).status.code(), Some(2));
    assert_eq!(holant3(&["gadget", "nonlin", "1", "2", "3", "4"]).status.code(), Some(2));
    assert_eq!(holant3(&["eval", "fixtures/missing.json"]).status.code(), Some(2));
    assert_eq!(holant3(&["planar-count", "fixtures/k33.json"]).status.code(), Some(2));
    assert_eq!(holant3(&["falsify", "nothing"]).status.code(), Some(2));
}

#[test]
fn failing_verification_exits_with_one() {
    // the G4 calibration for [1, a, -a, -1] does not hold
    let o = holant3(&["verify", "gadgets", "--quick"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("PASS [2] Hadamard identities"));
}

#[test]
fn json_report_is_deterministic_apart_from_timing() {
    let run = || {
        let o = holant3(&["--json", "falsify", "r-t-v", "--samples", "300", "--seed", "5"]);
        assert_eq!(o.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("seconds");
        v
    };
    let a = run();
    assert_eq!(a, run());
    assert_eq!(a["versions"]["schema"], 1);
    assert_eq!(a["inputs_digest"].as_str().unwrap().len(), 64);
    assert_eq!(a["outputs"]["samples"], 300);
}

#[test]
fn solutions_suite_passes() {
    let o = holant3(&["verify", "solutions"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}
