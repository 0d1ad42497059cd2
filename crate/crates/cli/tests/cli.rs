use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn csf(args: &[&str]) -> Output {
    csf_env(args, &[])
}

fn csf_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_csf"));
    cmd.args(args).env_remove("CSF_MAX_DEGREE").env_remove("CSF_MAX_EDGES");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn csf_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_csf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).expect("stdout is JSON")
}

fn error_kind(o: &Output) -> String {
    let v: Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).expect("stderr is JSON");
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn path_three_in_e() {
    let o = csf(&["compute-y", "--family", "path", "--d", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1/2*e((2),1) + 1/2*e(∅,3)");

    let o = csf(&["compute-y", "--family", "path", "--d", "3", "--format", "json"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"basis":"e","degree":3,"terms":[{"b":1,"den":"2","lambda":[2],"num":"1"},{"b":3,"den":"2","lambda":[],"num":"1"}]}"#
    );
    let v = json(&o);
    let y = csf_core::json::ubcsym_from_json(&v.to_string()).unwrap();
    assert_eq!(y.to_string(), "1/2*e((2),1) + 1/2*e(∅,3)");
}

#[test]
fn graph_from_stdin_and_vertex_choice() {
    let g = r#"{"n":3,"edges":[[1,2],[2,3]]}"#;
    let last = csf_stdin(&["compute-y", "--graph", "-"], g);
    let three = csf_stdin(&["compute-y", "--graph", "-", "--vertex", "3"], g);
    assert_eq!(stdout(&last), stdout(&three));
    let middle = csf_stdin(&["compute-y", "--graph", "-", "--vertex", "2"], g);
    assert_eq!(stdout(&middle).trim(), "-1/2*e((2),1) + e((1),2) + 1/2*e(∅,3)");
}

#[test]
fn bases_agree_through_json() {
    let get = |basis: &str| {
        let o = csf(&["compute-y", "--family", "twin-peaks", "--n", "3", "--basis", basis, "--format", "json"]);
        assert!(o.status.success());
        csf_core::json::ubcsym_from_json(&stdout(&o)).unwrap()
    };
    let e = get("e");
    let m = get("m");
    let p = get("p");
    use csf_core::algebra::Basis;
    assert_eq!(m.to_basis(Basis::E).unwrap(), e);
    assert_eq!(p.to_basis(Basis::E).unwrap(), e);
}

#[test]
fn compute_x_of_a_path() {
    let o = csf(&["compute-x", "--family", "path", "--d", "3", "--format", "json"]);
    assert!(o.status.success());
    let x = csf_core::json::sym_from_json(&stdout(&o)).unwrap();
    let direct = csf_core::sym::x_of(&csf_core::graphs::families::path(3).unwrap()).unwrap();
    assert_eq!(x, direct.to_basis(csf_core::algebra::Basis::E).unwrap());
}

#[test]
fn family_output() {
    let o = csf(&["family", "twin-peaks", "--n", "2", "--format", "json"]);
    assert_eq!(json(&o), serde_json::json!({"n": 3, "edges": [[1, 2], [2, 3]]}));

    let o = csf(&["family", "kayak", "-p", "m=4", "l=4", "n=4", "--format", "json"]);
    assert_eq!(json(&o)["n"], 11);

    let o = csf(&["family", "wl", "--m", "5", "--n", "2", "--k", "1", "--format", "json"]);
    let g = csf_core::graphs::graph_from_json(&stdout(&o)).unwrap();
    assert_eq!(g, csf_core::graphs::families::wide_lollipop(5, 2, 1).unwrap());

    let o = csf(&["family", "twin-peaks", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n >= 2"));

    let o = csf(&["family", "no-such-family"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_summary_and_exit_codes() {
    let o = csf(&["verify", "kayak"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "suite=kayak checked=12 failed=0");

    let o = csf(&["verify", "sinks", "--max-n", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["failed"], 0);
    assert!(v["summary"].as_str().unwrap().starts_with("suite=sinks "));

    let o = csf(&["verify", "no-such-suite"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_kind(&o), "invalid_input");

    let o = csf(&["verify", "list"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("conjecture-e")));
}

#[test]
fn scan_reports_cut_vertex() {
    let o = csf(&["scan-e-positivity", "--family", "kayak", "-p", "m=3", "l=0", "n=3", "--format", "json"]);
    assert!(o.status.success());
    let rows = json(&o)["results"].as_array().unwrap().clone();
    let negative: Vec<u64> = rows
        .iter()
        .filter(|r| r["e_positive"] == false)
        .map(|r| r["vertex"].as_u64().unwrap())
        .collect();
    assert_eq!(negative, [3]);

    let o = csf(&["scan-e-positivity", "--max-n", "5"]);
    assert_eq!(stdout(&o).trim(), "scanned=64 e_positive=64 not_e_positive=0");
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["verify", "sinks", "--max-n", "6", "--samples", "40", "--format", "json"];
    let one = csf(&[&args[..], &["--threads", "1"]].concat());
    let many = csf(&[&args[..], &["--threads", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn caps_and_bad_input() {
    let o = csf_env(&["compute-y", "--family", "path", "--d", "4"], &[("CSF_MAX_EDGES", "2")]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(error_kind(&o), "cap_exceeded");

    let o = csf_env(&["compute-y", "--family", "path", "--d", "3"], &[("CSF_MAX_EDGES", "lots")]);
    assert_eq!(o.status.code(), Some(2));

    let o = csf_env(&["scan-e-positivity", "--max-n", "5"], &[("CSF_MAX_DEGREE", "4")]);
    assert_eq!(o.status.code(), Some(3));

    let o = csf_stdin(&["compute-y", "--graph", "-"], r#"{"n":2,"edges":[[1,3]]}"#);
    assert_eq!(o.status.code(), Some(2));
    let o = csf_stdin(&["compute-y", "--graph", "-"], "not json");
    assert_eq!(o.status.code(), Some(2));

    let o = csf(&["compute-y"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(error_kind(&o), "usage");
    let o = csf(&["compute-y", "--family", "path", "--d", "3", "--vertex", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = csf(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(csf(&["--help"]).status.code(), Some(0));
}
