//! End-to-end tests of the `groupcycles` binary: exit codes, text output,
//! and JSON output.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groupcycles"))
        .args(args)
        .output()
        .expect("failed to spawn groupcycles")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn compute_text_output() {
    let out = run(&["compute", "PSL2:5", "--quantity", "lambda-aff"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("order:    60"), "got: {text}");
    assert!(text.contains("lambda-aff: 15"), "got: {text}");
    assert!(text.contains("(1/4 of |G|)"), "got: {text}");
}

#[test]
fn compute_json_output() {
    let out = run(&["compute", "PGammaL2:13", "--quantity", "lambda", "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["group"], "PGammaL2:13");
    assert_eq!(v["order"], "2184");
    assert_eq!(v["quantity"], "lambda");
    assert_eq!(v["value"], "14");
}

#[test]
fn compute_composite_expressions() {
    let out = run(&["compute", "Hol(Cyclic:5)", "--quantity", "order"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("order: 20"), "got: {}", stdout(&out));

    let out = run(&["compute", "PGammaL2:9 wr Sym:2", "--quantity", "meo"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("meo: 40"), "got: {}", stdout(&out));
}

#[test]
fn parse_error_exits_2() {
    let out = run(&["compute", "PSL2:", "--quantity", "order"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error"), "got: {}", stderr(&out));
}

#[test]
fn unknown_quantity_exits_2() {
    let out = run(&["compute", "Sym:4", "--quantity", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_2() {
    let out = run(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guard_exceeded_exits_3() {
    let out = run(&["compute", "Sym:5", "--quantity", "order", "--max-group-order", "100"]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", stderr(&out));
}

#[test]
fn verify_suite_exits_0() {
    let out = run(&["verify", "landau"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("[PASS]"), "got: {text}");
    assert!(text.contains("0 failed"), "got: {text}");
}

#[test]
fn verify_json_output() {
    let out = run(&["verify", "landau", "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "landau");
    assert_eq!(v["failed"], 0);
    assert!(v["items"].as_array().unwrap().iter().all(|i| i["pass"] == true));
}

#[test]
fn landau_table_runs() {
    let out = run(&["landau-table", "--max-n", "10", "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[9]["g"], "30");
}

#[test]
fn bounds_grid_small() {
    let out =
        run(&["bounds-grid", "--max-q", "5", "--max-d", "3", "--max-m", "2", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("0 failing"), "got: {text}");
    assert!(!text.contains("[FAIL]"), "got: {text}");
}
