use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn toric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn validate_prints_normalized_instance() {
    let out = toric(&["validate", fixture("d3a4.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["d"], 3);
    assert_eq!(v["alpha"], 4);
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
}

#[test]
fn validate_rejects_bad_degree_with_exit_2() {
    let out = toric(&["validate", fixture("bad_degree.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["errors"][0]["kind"], "WrongDegree");
}

#[test]
fn missing_file_exits_3() {
    let out = toric(&["groebner", "/nonexistent/instance.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn malformed_file_exits_3() {
    let dir = std::env::temp_dir().join("toric-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("garbage.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = toric(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn groebner_text_output() {
    let out = toric(&["groebner", fixture("d3a4.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("N0 (6 generators):"));
    assert!(text.contains("x2^2 - y1*y3"));
    assert!(text.contains("x1^2*x2*y1 - x3^2*y3^2"));
    assert!(text.contains("max degree over candidates: 6"));
}

#[test]
fn groebner_with_report() {
    let out = toric(&[
        "groebner",
        fixture("d3a4.json").to_str().unwrap(),
        "--with-report",
    ]);
    let text = stdout(&out);
    assert!(text.contains("reduction number + 1: 6"));
    assert!(text.contains("candidate degrees within bound: true"));
}

#[test]
fn groebner_json_output() {
    let out = toric(&[
        "groebner",
        fixture("d3a4.json").to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n0"].as_array().unwrap().len(), 6);
    assert_eq!(v["basis"].as_array().unwrap().len(), 6);
    assert_eq!(v["max_degree"], 6);
}

#[test]
fn groebner_m2_output() {
    let out = toric(&[
        "groebner",
        fixture("d3a4.json").to_str().unwrap(),
        "--format",
        "m2",
    ]);
    let text = stdout(&out);
    assert!(text.contains("R = QQ[x_1..x_3, y_1..y_3, MonomialOrder => GRevLex];"));
    assert!(text.contains("x_2^2 - y_1*y_3"));
}

#[test]
fn groebner_c0_instance() {
    let out = toric(&["groebner", fixture("c0.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("N0 (0 generators):"));
}

#[test]
fn text_and_json_instances_agree() {
    let a = toric(&["groebner", fixture("d3a4.json").to_str().unwrap()]);
    let b = toric(&["groebner", fixture("d3a4.txt").to_str().unwrap()]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn output_is_deterministic() {
    let a = toric(&["groebner", fixture("d2a12.json").to_str().unwrap()]);
    let b = toric(&["groebner", fixture("d2a12.json").to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let c = toric(&["decompose", fixture("d2a12.json").to_str().unwrap()]);
    let d = toric(&["decompose", fixture("d2a12.json").to_str().unwrap()]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn decompose_text_output() {
    let out = toric(&["decompose", fixture("d3a3.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("e = 9 equivalence classes"));
    assert!(text.contains("cohen_macaulay: false"));
    assert!(text.contains("buchsbaum: false"));
    assert!(text.contains("degree_one_condition: true"));
}

#[test]
fn decompose_json_output() {
    let out = toric(&[
        "decompose",
        fixture("d3a4.json").to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), v["e"].as_u64().unwrap() as usize);
    assert_eq!(v["reduction_number"], 5);
}

#[test]
fn verify_passes_on_fixture() {
    let out = toric(&["verify", fixture("d3a4.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("fiber oracle"));
    assert!(text.contains("pass"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_detects_injected_fault() {
    let out = toric(&[
        "verify",
        fixture("d3a4.json").to_str().unwrap(),
        "--inject-fault",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn threads_flag_accepted() {
    let out = toric(&[
        "verify",
        "--threads",
        "2",
        fixture("quadric.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
}
