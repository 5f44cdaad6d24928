mod common;

use common::{check_golden, check_invalid, run, GOLDEN, INVALID};
use serde_json::Value;

fn json_out(args: &[&str], stdin: Option<&str>) -> Value {
    let out = run(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn golden_outputs() {
    let failures: Vec<String> = GOLDEN.iter().filter_map(|c| check_golden(c).err()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn invalid_inputs_exit_2() {
    let failures: Vec<String> = INVALID.iter().filter_map(|c| check_invalid(c).err()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn output_is_deterministic() {
    for case in GOLDEN.iter().filter(|c| !c.name.starts_with("verify")) {
        let (a, b) = (run(case.args, case.stdin), run(case.args, case.stdin));
        assert_eq!(a.stdout, b.stdout, "{}", case.name);
    }
}

#[test]
fn reduction_output_classifies_like_its_input() {
    let x = "[\"3/2\",-1,4,0,2,\"1/5\",-3]";
    let reduced = json_out(&["case1-reduce", "--vector", x], None);
    let y = reduced["y"].to_string();
    let before = json_out(&["case1-classify", "--vector", x], None);
    let after = json_out(&["case1-classify", "--vector", &y], None);
    assert_eq!(before, after);
    assert_eq!(reduced["class"], before["class"]);
    let same = json_out(&["case1-same-orbit"], Some(&format!("{{\"x\":{x},\"y\":{y}}}")));
    assert_eq!(same["same_orbit"], Value::Bool(true));
}

#[test]
fn representative_round_trips_through_classify() {
    for (d, s) in [("-1", "3"), ("5", "-2/3"), ("-7", "11")] {
        let rep = json_out(&["case2-representative", "--d", d, "--s", s], None);
        let pair = serde_json::json!({"x1": rep["x1"], "x2": rep["x2"]}).to_string();
        let report = json_out(&["case2-classify"], Some(&pair));
        assert_eq!(report["class"], rep["class"], "d = {d}, s = {s}");
    }
}

#[test]
fn quick_verify_passes() {
    let out = run(&["verify", "--quick"], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
