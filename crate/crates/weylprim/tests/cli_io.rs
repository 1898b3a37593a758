//! Black-box tests of the `weylprim` binary: golden outputs, exit codes,
//! error codes, determinism, and JSON round-trips.

use std::process::{Command, Output};

use serde_json::Value;

fn weylprim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylprim"))
        .args(args)
        .env_remove("WEYLPRIM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_line(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn parse_report(out: &Output) -> Value {
    serde_json::from_str(stdout_line(out).trim_end()).expect("stdout is one JSON object")
}

fn stderr_code(out: &Output) -> String {
    let value: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    value["error"]["code"].as_str().expect("error has a code").to_string()
}

#[test]
fn dim_reports_the_weyl_dimension() {
    let out = weylprim(&["dim", "--n", "3", "--weight", "4,3"]);
    assert!(out.status.success());
    let expected = format!(
        concat!(
            "{{\"command\":\"dim\",\"inputs\":{{\"n\":3,\"weight\":\"4,3\"}},",
            "\"result\":{{\"dimension\":90}},\"version\":\"{}\"}}\n"
        ),
        env!("CARGO_PKG_VERSION")
    );
    assert_eq!(stdout_line(&out), expected);
}

#[test]
fn simple_check_reports_jantzen_simplicity() {
    let out = weylprim(&["simple-check", "--n", "4", "--p", "5", "--weight", "4,1,2"]);
    assert!(out.status.success());
    let expected = format!(
        concat!(
            "{{\"command\":\"simple-check\",\"inputs\":{{\"n\":4,\"p\":5,",
            "\"weight\":\"4,1,2\"}},\"result\":{{\"simple\":true}},\"version\":\"{}\"}}\n"
        ),
        env!("CARGO_PKG_VERSION")
    );
    assert_eq!(stdout_line(&out), expected);

    let out = weylprim(&["simple-check", "--n", "4", "--p", "5", "--weight", "5,1,2"]);
    assert!(out.status.success());
    assert_eq!(parse_report(&out)["result"]["simple"], Value::Bool(false));
}

#[test]
fn theorem_a_rejects_level_four_citing_the_third_line() {
    let out = weylprim(&[
        "theorem-a", "--n", "5", "--p", "5", "--weight", "3,3,1,2", "--k", "4", "--q", "1",
    ]);
    assert!(out.status.success());
    let report = parse_report(&out);
    assert_eq!(report["result"]["applies"], Value::Bool(false));
    let divisibility = report["result"]["divisibility"].as_array().unwrap();
    let failing: Vec<i64> = divisibility
        .iter()
        .filter(|row| row["passes"] == Value::Bool(false))
        .map(|row| row["l"].as_i64().unwrap())
        .collect();
    assert_eq!(failing, vec![3]);
}

#[test]
fn verify_confirms_the_level_four_embedding() {
    let out = weylprim(&["verify", "--n", "3", "--p", "5", "--weight", "4,3", "--k", "4"]);
    assert!(out.status.success());
    let report = parse_report(&out);
    assert_eq!(report["result"]["is_weyl"], Value::Bool(true));
    assert_eq!(report["result"]["dim"], Value::from(8));
    assert_eq!(report["result"]["expected"], Value::from(8));
}

#[test]
fn tableaux_counts_match_the_dimension() {
    let out = weylprim(&["tableaux", "--n", "4", "--weight", "2,1"]);
    assert!(out.status.success());
    let report = parse_report(&out);
    assert_eq!(report["result"]["standard_count"], Value::from(15));
    assert_eq!(report["result"]["weyl_dimension"], Value::from(15));
    assert_eq!(report["result"]["shape"], serde_json::json!([3, 1, 0]));
}

#[test]
fn primitives_finds_the_line_in_the_embedded_submodule() {
    let out = weylprim(&[
        "primitives", "--n", "3", "--p", "5", "--weight", "4,3",
        "--drop", "4,3", "--omit", "1",
    ]);
    assert!(out.status.success());
    let report = parse_report(&out);
    assert_eq!(report["result"]["dimension"], Value::from(1));
    assert_eq!(report["result"]["mu"], Value::from("-1,1"));
}

#[test]
fn search_reports_the_embedded_string() {
    let out = weylprim(&[
        "search", "--n", "3", "--p", "5", "--max-coord", "4", "--k-max", "4",
        "--budget", "1000000",
    ]);
    assert!(out.status.success());
    let report = parse_report(&out);
    let records = report["result"].as_array().unwrap();
    assert_eq!(records.len(), 25 * 5);
    let row = records
        .iter()
        .find(|r| r["omega"] == Value::from("4,3") && r["k"] == Value::from(4))
        .expect("the grid contains the (4,3) level-4 row");
    assert_eq!(row["theorem_a"]["applies"], Value::Bool(true));
    assert_eq!(row["target_simple"], Value::Bool(false));
    assert_eq!(row["verified_dim"], Value::from(8));
    assert_eq!(row["primitives_confirmed"], Value::Bool(true));
    assert_eq!(row["new_primitive_weights"], serde_json::json!(["-1,1"]));
    for r in records {
        if r["k"] == Value::from(0) {
            assert_eq!(r["new_primitive_weights"].as_array().unwrap().len(), 0);
        }
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "search", "--n", "3", "--p", "3", "--max-coord", "2", "--k-max", "2",
        "--budget", "100000",
    ];
    let first = weylprim(&args);
    let second = weylprim(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let args = ["theorem-b", "--n", "3", "--p", "5", "--weight", "4,3", "--k", "4"];
    let first = weylprim(&args);
    let second = weylprim(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn reports_reserialize_to_the_same_bytes() {
    for args in [
        vec!["dim", "--n", "4", "--weight", "1,0,1"],
        vec!["theorem-a", "--n", "3", "--p", "5", "--weight", "4,3", "--k", "4"],
        vec!["theorem-b", "--n", "3", "--p", "3", "--weight", "2,2", "--k", "1"],
    ] {
        let out = weylprim(&args);
        assert!(out.status.success());
        let line = stdout_line(&out);
        let value: Value = serde_json::from_str(line.trim_end()).unwrap();
        let recoded = serde_json::to_string(&value).unwrap();
        assert_eq!(format!("{recoded}\n"), line, "args: {args:?}");
    }
}

#[test]
fn pretty_output_holds_the_same_report() {
    let compact = weylprim(&["dim", "--n", "3", "--weight", "4,3"]);
    let pretty = weylprim(&["dim", "--n", "3", "--weight", "4,3", "--pretty"]);
    assert!(pretty.status.success());
    let a: Value = serde_json::from_slice(&compact.stdout).unwrap();
    let b: Value = serde_json::from_slice(&pretty.stdout).unwrap();
    assert_eq!(a, b);
    assert!(stdout_line(&pretty).lines().count() > 1);
}

#[test]
fn usage_errors_carry_machine_readable_codes() {
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["bogus"], "unknown_subcommand"),
        (vec!["dim", "--n", "3", "--weight", "4,x"], "malformed_weight"),
        (vec!["dim", "--n", "3", "--weight", "4,3,1"], "malformed_weight"),
        (vec!["dim", "--n", "3", "--weight", "4,-3"], "nondominant_weight"),
        (
            vec!["theorem-a", "--n", "3", "--p", "5", "--weight", "4,3", "--k", "7"],
            "k_out_of_range",
        ),
        (
            vec!["theorem-a", "--n", "4", "--p", "5", "--weight", "1,1,1", "--k", "1", "--q", "2"],
            "invalid_q",
        ),
        (vec!["simple-check", "--n", "3", "--p", "6", "--weight", "1,1"], "not_prime"),
    ];
    for (args, code) in cases {
        let out = weylprim(&args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        assert!(out.stdout.is_empty(), "args: {args:?}");
        assert_eq!(stderr_code(&out), code, "args: {args:?}");
    }
}

#[test]
fn budget_environment_variable_caps_the_oracle() {
    let out = Command::new(env!("CARGO_BIN_EXE_weylprim"))
        .args(["verify", "--n", "3", "--p", "5", "--weight", "4,3", "--k", "4"])
        .env("WEYLPRIM_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let report = parse_report(&out);
    assert_eq!(report["result"], Value::from("SKIPPED"));
}
