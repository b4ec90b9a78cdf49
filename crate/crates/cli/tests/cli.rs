use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::NamedTempFile;

fn asreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asreg")).args(args).output().unwrap()
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const T1: &str = "x*y*z + y*z*x + z*x*y - (x*z*y + z*y*x + y*x*z) + (x*x*y + x*y*x + y*x*x) - (y*y*x + y*x*y + x*y*y)\n";

#[test]
fn regular_potential() {
    let f = file(T1);
    let o = asreg(&["regular", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: Regular"));
    let o = asreg(&["--json", "regular", f.path().to_str().unwrap()]);
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "regular");
    assert_eq!(v["field"], "Q");
    assert_eq!(v["ok"], true);
    assert_eq!(v["result"]["verdict"], "regular");
}

#[test]
fn regular_from_relations_and_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_asreg"))
        .args(["regular", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"# commutative polynomial ring\ny*z - z*y\nz*x - x*z\nx*y - y*x\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let f = file("x*x\ny*y\nz*z\n");
    let o = asreg(&["regular", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn superpotential_checks() {
    let sp = file("x*y*z + y*z*x + z*x*y\n");
    assert_eq!(asreg(&["check-sp", sp.path().to_str().unwrap()]).status.code(), Some(0));
    let not = file("x*y*x\n");
    let o = asreg(&["check-sp", not.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("superpotential: no"));
    let o = asreg(&["check-tsp", not.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "none");
    let o = asreg(&["--json", "check-tsp", sp.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["witness"], "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]");
}

#[test]
fn twist_and_derivation_quotient() {
    let w = file("(x*y*z + y*z*x + z*x*y) - (z*y*x + y*x*z + x*z*y)\n");
    let p = w.path().to_str().unwrap();
    let o = asreg(&["twist", p, "--theta", "2,0,0,0,3,0,0,0,5"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert!(t.contains("12*x*y*z") && t.contains("45*y*z*x") && t.contains("50*z*x*y"), "{t}");
    let o = asreg(&["--json", "dqa", p]);
    let v = json(&o);
    assert_eq!(v["result"]["hilbert"], serde_json::json!([1, 3, 6, 10, 15]));
    assert_eq!(v["result"]["relations"].as_array().unwrap().len(), 3);
    let o = asreg(&["twist", p, "--theta", "1,0,0,0,0,0,0,0,1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn nakayama_reports_scalar() {
    let f = file(T1);
    let o = asreg(&["nakayama", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert!(t.contains("nu = ") && t.contains("theta' = ") && t.contains("scalar: nu = ("), "{t}");
}

#[test]
fn verify_sweeps() {
    let o = asreg(&["verify", "table1", "--type", "T1", "--seed", "0", "--count", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3/3 instances passed"));
    let o = asreg(&["--json", "--field", "fp:1000003", "verify", "table3", "--type", "S'1", "--count", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["ok"], true);
    assert!(v["result"]["reports"][0].get("elapsed").is_none());
    let o = asreg(&["--bind", "alpha=1", "--bind", "beta=1", "--bind", "gamma=1", "verify", "table1", "--type", "T2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = asreg(&["--bind", "alpha=1", "--bind", "beta=1", "--bind", "gamma=1", "verify", "table1", "--type", "S3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_is_deterministic() {
    let args = ["--json", "--seed", "7", "verify", "table1", "--count", "1"];
    assert_eq!(asreg(&args).stdout, asreg(&args).stdout);
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(asreg(&["--field", "fp:7", "verify", "table1"]).status.code(), Some(2));
    assert_eq!(asreg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(asreg(&["verify", "table1", "--type", "Q9"]).status.code(), Some(2));
    assert_eq!(asreg(&["--bind", "alpha", "verify", "table1", "--type", "P1"]).status.code(), Some(2));
    let mixed = file("x*y + x*y*z\n");
    assert_eq!(asreg(&["check-sp", mixed.path().to_str().unwrap()]).status.code(), Some(3));
    let junk = file("x*(y\n");
    assert_eq!(asreg(&["check-sp", junk.path().to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(asreg(&["--field", "r", "tables"]).status.code(), Some(3));
}

#[test]
fn tables_dump() {
    let o = asreg(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    for name in ["P1", "S'1", "T'", "TL4", "CC"] {
        assert!(t.contains(&format!("| {name} |")), "{name}");
    }
}

#[test]
fn elliptic_curve_commands() {
    let o = asreg(&["ec", "j", "--lambda", "2"]);
    assert_eq!(stdout(&o).trim(), "j = 884736/343");
    let o = asreg(&["--json", "ec", "add", "--lambda", "2", "--point", "1,2,3", "--point2", "-1,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["sum"], serde_json::json!(["1/3", "2/3", "1"]));
    let o = asreg(&["ec", "regular", "--lambda", "5", "--prime", "1000003", "--i", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not regular"));
    let o = asreg(&["ec", "regular", "--lambda", "5", "--prime", "1000003", "--i", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let o = asreg(&["ec", "g1", "--lambda", "5", "--prime", "1000003", "--i", "1", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let o = asreg(&["ec", "extension", "--lambda", "5", "--prime", "1000003", "--i", "1", "--point", "-1,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let o = asreg(&["ec", "j", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(1));
}
