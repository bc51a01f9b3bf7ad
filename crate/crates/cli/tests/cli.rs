use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> String {
    root()
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_octarray"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = run(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn ok_json(args: &[&str], stdin: Option<&str>) -> Value {
    serde_json::from_str(&ok(args, stdin)).unwrap()
}

fn error_code(out: &Output) -> String {
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    err["error"].as_str().unwrap().to_owned()
}

#[test]
fn condensation_of_an_array() {
    let d = ok_json(&["condense", &fixture("f2.json"), "--dir", "down"], None);
    assert_eq!(
        d,
        json!({"n": 3, "m": 3, "rows": [[4, 3, 4], [0, 3, 3], [0, 0, 1]]})
    );
    let l = ok_json(&["condense", &fixture("f2.json"), "--dir", "left"], None);
    assert_eq!(l["rows"], json!([[6, 0, 0], [2, 5, 0], [3, 1, 1]]));
}

#[test]
fn rsk_matches_condensation_and_inverts() {
    let out = ok_json(&["rsk", &fixture("f2.json")], None);
    let d = ok_json(&["condense", &fixture("f2.json"), "--dir", "down"], None);
    assert_eq!(out["d"], d);
    assert_eq!(out["shape"], json!([11, 6, 1]));
    let dir = std::env::temp_dir().join(format!("octarray-rsk-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (dp, lp) = (dir.join("d.json"), dir.join("l.json"));
    std::fs::write(&dp, out["d"].to_string()).unwrap();
    std::fs::write(&lp, out["l"].to_string()).unwrap();
    let back = ok_json(
        &[
            "rsk",
            "--inverse",
            dp.to_str().unwrap(),
            lp.to_str().unwrap(),
        ],
        None,
    );
    let original: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("f2.json")).unwrap()).unwrap();
    assert_eq!(back, original);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn propagation_faces() {
    let top = ok_json(&["propagate", &fixture("f2.json"), "--emit", "top"], None);
    assert_eq!(
        top["values"],
        json!([[0, 0, 0, 0], [0, 4, 7, 11], [0, 4, 10, 17], [0, 4, 10, 18]])
    );
    let wall = ok_json(&["propagate", &fixture("f2.json"), "--emit", "wall"], None);
    assert_eq!(
        wall["values"],
        json!([[0], [0, 6], [0, 8, 13], [0, 11, 17, 18]])
    );
}

#[test]
fn hive_round_trip() {
    let hive = std::fs::read_to_string(fixture("f4.json")).unwrap();
    let pair = ok(&["hive", "to-pair", &fixture("f4.json")], None);
    let back = ok_json(&["hive", "from-pair", "-"], Some(&pair));
    assert_eq!(back, serde_json::from_str::<Value>(&hive).unwrap());
    assert_eq!(
        ok_json(&["hive", "increments", &fixture("f4.json")], None)["lambda"],
        json!([3, 2, 0])
    );
}

#[test]
fn commuters_agree_on_the_hive_fixture() {
    let functional = ok_json(&["commute", "--functional", &fixture("f4.json")], None);
    assert_eq!(
        functional["values"],
        json!([[0], [5, 6], [9, 11, 11], [10, 13, 15, 15]])
    );
    let pair = ok(&["hive", "to-pair", &fixture("f4.json")], None);
    let swapped = ok(&["commute", "-"], Some(&pair));
    let via_pair = ok_json(&["hive", "from-pair", "-"], Some(&swapped));
    assert_eq!(via_pair, functional);
}

#[test]
fn anti_standard_commuter_is_an_involution() {
    let once = ok(&["commute", "--anti", &fixture("f3.json")], None);
    let twice = ok_json(&["commute", "--anti", "-"], Some(&once));
    let original: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("f3.json")).unwrap()).unwrap();
    assert_eq!(twice, original);
}

#[test]
fn littlewood_richardson_coefficients() {
    assert_eq!(ok(&["lr", "2,1,0", "2,1,0", "3,2,1"], None).trim(), "2");
    assert_eq!(ok(&["lr", "1,0", "1,0", "1,1"], None).trim(), "1");
    assert_eq!(ok(&["lr", "2,1,0", "2,1,0", "3,2,2"], None).trim(), "0");
    let listed = ok_json(&["lr", "2,1,0", "2,1,0", "3,2,1", "--list"], None);
    assert_eq!(listed.as_array().map(Vec::len), Some(2));
}

#[test]
fn tableau_rendering_is_stable() {
    let ssyt = ok(&["tableau", "from-array", &fixture("f1.json")], None);
    assert_eq!(ssyt.trim(), golden("f1_ssyt.json").trim());
    assert_eq!(
        ok(&["tableau", "render", "-"], Some(&ssyt)),
        golden("f1_render.txt")
    );
    let back = ok_json(&["tableau", "to-array", "-"], Some(&ssyt));
    let f1: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("f1.json")).unwrap()).unwrap();
    assert_eq!(back, f1);

    let pair = ok(&["hive", "to-pair", &fixture("f4.json")], None);
    let skew = ok(&["tableau", "from-pair", "-"], Some(&pair));
    assert_eq!(skew.trim(), golden("f4_skew.json").trim());
    assert_eq!(
        ok(&["tableau", "render", "-"], Some(&skew)),
        golden("f4_skew_render.txt")
    );
}

#[test]
fn verification_suites_pass_and_are_deterministic() {
    let args = ["verify", "involution", "--cases", "200", "--seed", "7"];
    let first = ok_json(&args, None);
    assert_eq!(first["passed"], json!(true));
    assert!(first["checks"].as_u64().unwrap() > 200);
    assert_eq!(ok_json(&args, None), first);
    for suite in [
        "thm1",
        "thm2",
        "thm3",
        "thm4",
        "shapes",
        "assoc-count",
        "commut-count",
    ] {
        assert_eq!(
            ok_json(&["verify", suite, "--seed", "3"], None)["passed"],
            json!(true),
            "{suite}"
        );
    }
}

#[test]
fn invalid_input_exits_with_one() {
    // an anti-standard pair is not a standard one
    let out = run(&["commute", &fixture("f3.json")], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_code(&out), "invalid_pair");
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_input_exits_with_two() {
    for text in ["{", "{\"n\": 2, \"m\": 1, \"rows\": [[1, 2, 3]]}", "[1, 2]"] {
        let out = run(&["condense", "-", "--dir", "down"], Some(text));
        assert_eq!(out.status.code(), Some(2), "{text}");
        assert_eq!(error_code(&out), "malformed_input");
    }
    let out = run(
        &["condense", "/nonexistent/array.json", "--dir", "down"],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["condense"], None).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "no-such-suite"], None).status.code(),
        Some(2)
    );
    assert_eq!(run(&["lr", "1,x", "1", "2"], None).status.code(), Some(2));
}
