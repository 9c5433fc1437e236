use std::process::{Command, Output};

use serde_json::Value;

fn qalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qalg")).args(args).env_remove("QALG_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn eval_prints_canonical_form() {
    let o = qalg(&["eval", "[-2,2]*[-4,4]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[-8,8]");
    assert_eq!(stdout(&qalg(&["eval", "-[1,2]"])), "[-2,-1]");
}

#[test]
fn eval_json() {
    let o = qalg(&["eval", "0*[5,7]", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["text"], "{0}");
    assert_eq!(v["result"]["kind"], "interval");
}

#[test]
fn errors_exit_with_one() {
    let o = qalg(&["eval", "[1,2]+d(0,1)"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("interval") && err.contains("disk"), "{err}");
    assert_eq!(qalg(&["eval", "[1,"]).status.code(), Some(1));
    assert_eq!(qalg(&["nonsense"]).status.code(), Some(1));
    assert_eq!(qalg(&["hom", "nosuchmap", "[0,1]"]).status.code(), Some(1));
}

#[test]
fn queries() {
    assert_eq!(stdout(&qalg(&["norm", "[-3,2]"])), "3");
    assert_eq!(stdout(&qalg(&["dist", "[0,1]", "u({0},{1})"])), "1/2");
    assert_eq!(stdout(&qalg(&["qsp", "u([1,2],{5})"])), "u([1,2],{5})");
    assert_eq!(stdout(&qalg(&["qsp", "[1,2]", "--scope", "zero-only"])), "empty");
    assert_eq!(stdout(&qalg(&["hom", "half", "[-2,2]"])), "[-1,1]");
    assert_eq!(stdout(&qalg(&["hom", "interval2disk", "[-1,3]"])), "d(1,2)");
}

#[test]
fn chain_links() {
    let o = qalg(&["chain", "[0,1]", "-n", "3", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["links"].as_array().unwrap().len(), 3);
    assert!(v["strict"].as_array().unwrap().iter().all(|s| s == true));
}

#[test]
fn enclose_demo() {
    let o = qalg(&["enclose", "--coeffs", "0,-1,1", "--domain", "[0,1]", "--depth", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["enclosure"], "[-3/4,1/2]");
    assert_eq!(v["sampled"], "[-1/4,0]");
    let o = qalg(&["enclose", "--coeffs", "-1.5", "--domain", "[2,3]"]);
    assert!(stdout(&o).starts_with("enclosure {-3/2}"), "{}", stdout(&o));
}

#[test]
fn conform_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o =
        qalg(&["conform", "--instance", "interval", "--cases", "50", "--seed", "7", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["instance"], "interval");
    assert_eq!(v["seed"], 7);
    assert!(v["properties"].as_array().unwrap().iter().all(|p| p["pass"] == true));
}

#[test]
fn seed_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = Command::new(env!("CARGO_BIN_EXE_qalg"))
        .args(["conform", "--instance", "real", "--cases", "5", "--json", path.to_str().unwrap()])
        .env("QALG_SEED", "99")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["seed"], 99);
}

#[test]
fn unknown_instance_is_an_error() {
    assert_eq!(qalg(&["conform", "--instance", "octonion", "--cases", "5"]).status.code(), Some(1));
}
