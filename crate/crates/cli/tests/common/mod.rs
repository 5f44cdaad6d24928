//! Golden cases shared by the CLI tests and the acceptance runner.
//!
//! Each case compares stdout with `tests/golden/<name>.out`. Setting
//! `G2PV_UPDATE_GOLDEN=1` rewrites the files instead.

#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: Option<&'static str>,
}

pub const GOLDEN: &[Case] = &[
    Case { name: "case1_classify", args: &["case1-classify", "--vector", "[0,1,0,0,2,0,0]"], stdin: None },
    Case { name: "case1_classify_text", args: &["--format", "text", "case1-classify", "--vector", "[1,\"1/2\",0,3,0,-2,5]"], stdin: None },
    Case { name: "case1_classify_file", args: &["case1-classify", "--file", "tests/golden/inputs/point.json"], stdin: None },
    Case { name: "case1_reduce", args: &["case1-reduce"], stdin: Some("[1,2,0,0,3,0,-1]") },
    Case { name: "case1_same_orbit", args: &["case1-same-orbit"], stdin: Some(r#"{"x":[0,1,0,0,2,0,0],"y":[0,2,0,0,1,0,0]}"#) },
    Case { name: "case1_different_orbit", args: &["case1-same-orbit"], stdin: Some(r#"{"x":[0,1,0,0,2,0,0],"y":[0,1,0,0,3,0,0]}"#) },
    Case { name: "case2_classify", args: &["case2-classify"], stdin: Some(r#"{"x1":[0,0,1,0,0,0,0],"x2":[0,0,0,0,0,1,"2/3"]}"#) },
    Case { name: "case2_representative", args: &["case2-representative", "--d", "-1", "--s", "3"], stdin: None },
    Case { name: "case2_same_orbit", args: &["case2-same-orbit", "--d", "-1", "--s1", "5", "--s2", "1"], stdin: None },
    Case { name: "case2_different_orbit", args: &["case2-same-orbit", "--d", "-1", "--s1", "3", "--s2", "1"], stdin: None },
    Case { name: "normclass_norm", args: &["normclass", "--d", "-1", "--s", "5"], stdin: None },
    Case { name: "normclass_obstructed", args: &["normclass", "--d", "-1", "--s", "-3/7"], stdin: None },
    Case { name: "normclass_text", args: &["--format", "text", "normclass", "--d", "5", "--s", "-1"], stdin: None },
    Case { name: "verify_identities", args: &["--format", "text", "verify", "--suite", "identities", "--quick"], stdin: None },
];

/// Inputs rejected with exit status 2.
pub const INVALID: &[Case] = &[
    Case { name: "zero_delta", args: &["case1-classify", "--vector", "[0,0,1,0,0,0,0]"], stdin: None },
    Case { name: "zero_delta_reduce", args: &["case1-reduce"], stdin: Some("[0,1,0,0,0,0,0]") },
    Case { name: "zero_s", args: &["case2-representative", "--d", "-1", "--s", "0"], stdin: None },
    Case { name: "zero_s_normclass", args: &["normclass", "--d", "3", "--s", "0"], stdin: None },
    Case { name: "malformed_json", args: &["case1-classify", "--vector", "[1,2"], stdin: None },
    Case { name: "malformed_stdin", args: &["case2-classify"], stdin: Some("{\"x1\": [1,2,3") },
    Case { name: "wrong_length", args: &["case1-classify", "--vector", "[1,2,3]"], stdin: None },
    Case { name: "square_d", args: &["case2-same-orbit", "--d", "4", "--s1", "1", "--s2", "2"], stdin: None },
    Case { name: "unknown_suite", args: &["verify", "--suite", "nonsense"], stdin: None },
];

pub fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_g2pv"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn g2pv");
    let mut pipe = child.stdin.take().expect("stdin");
    pipe.write_all(stdin.unwrap_or("").as_bytes()).expect("write stdin");
    drop(pipe);
    child.wait_with_output().expect("wait for g2pv")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

/// Ok on exit 0 with stdout equal to the golden file.
pub fn check_golden(case: &Case) -> Result<(), String> {
    let out = run(case.args, case.stdin);
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    if !out.status.success() {
        return Err(format!("{}: exit {:?}: {}", case.name, out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    let path = golden_path(case.name);
    if std::env::var_os("G2PV_UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if stdout == expected {
        Ok(())
    } else {
        Err(format!("{}: stdout differs from golden\n--- expected\n{expected}--- actual\n{stdout}", case.name))
    }
}

/// Ok on exit 2 with an `error:` diagnostic and empty stdout.
pub fn check_invalid(case: &Case) -> Result<(), String> {
    let out = run(case.args, case.stdin);
    let stderr = String::from_utf8_lossy(&out.stderr);
    match out.status.code() {
        Some(2) if stderr.starts_with("error:") && out.stdout.is_empty() => Ok(()),
        code => Err(format!("{}: exit {code:?}, stderr {stderr:?}", case.name)),
    }
}
