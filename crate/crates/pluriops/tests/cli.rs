//! End-to-end tests of the `pluriops` binary: output bytes, exit codes,
//! and determinism.

use std::process::{Command, Output};

fn pluriops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pluriops"))
        .args(args)
        .env_remove("PLURIOPS_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn dims_tsv_matches_sequence() {
    let output = pluriops(&["dims", "--operad", "dias", "--gamma", "2", "--max-arity", "6"]);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output),
        "gamma\tn\tdim\n2\t1\t1\n2\t2\t4\n2\t3\t12\n2\t4\t32\n2\t5\t80\n2\t6\t192\n"
    );
}

#[test]
fn trias_dims_sequence() {
    let output = pluriops(&["trias", "dims", "--gamma", "2", "--max-arity", "7"]);
    assert!(output.status.success());
    let body = stdout(&output);
    let dims: Vec<&str> =
        body.lines().skip(1).map(|line| line.rsplit('\t').next().unwrap()).collect();
    assert_eq!(dims, vec!["1", "5", "19", "65", "211", "665", "2059"]);
}

#[test]
fn compose_reproduces_worked_example() {
    let output =
        pluriops(&["compose", "--gamma", "4", "--x", "211201", "--i", "4", "--y", "31103"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "2113222301\n");
}

#[test]
fn compose_rejects_bad_position_with_usage_exit() {
    let output = pluriops(&["compose", "--gamma", "2", "--x", "10", "--i", "9", "--y", "01"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_usage_error() {
    let output = pluriops(&["dims", "--nonsense"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn enumerate_lists_component() {
    let output = pluriops(&["enumerate", "--operad", "trias", "--gamma", "2", "--arity", "2"]);
    assert_eq!(stdout(&output), "00\n01\n02\n10\n20\n");
}

#[test]
fn normal_form_with_trace() {
    let output = pluriops(&[
        "normal-form",
        "--gamma",
        "1",
        "--tree",
        "(R1 . (L1 . .))",
        "--trace",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "(L1 (R1 . .) .)\t1\t2\n(L1 (R1 . .) .)\n");
}

#[test]
fn normal_form_routes_middle_trees_to_trias_rules() {
    let output = pluriops(&["normal-form", "--gamma", "1", "--tree", "(M (L1 . .) .)"]);
    assert!(output.status.success());
    // ⊥ ∘_1 ⊣_1 rewrites to ⊥ ∘_2 ⊢_1.
    assert_eq!(stdout(&output), "(M . (R1 . .))\n");
}

#[test]
fn kbasis_expand_displayed() {
    let output = pluriops(&["kbasis", "expand", "--gamma", "3", "--word", "23102"]);
    assert_eq!(
        stdout(&output),
        "23102 - 23103 - 23202 + 23203 - 33102 + 33103 + 33202 - 33203\n"
    );
}

#[test]
fn kbasis_compose_displayed() {
    let zero = pluriops(&["kbasis", "compose", "--gamma", "5", "--x", "20413", "--i", "3", "--y", "304"]);
    assert_eq!(stdout(&zero), "0\n");
    let triple = pluriops(&["kbasis", "compose", "--gamma", "5", "--x", "20413", "--i", "5", "--y", "304"]);
    assert_eq!(stdout(&triple), "2041334 + 2041344 + 2041354\n");
}

#[test]
fn classes_match_dimensions() {
    let output = pluriops(&["classes", "--gamma", "2", "--arity", "3"]);
    assert!(output.status.success());
    let body = stdout(&output);
    assert_eq!(body.lines().count(), 13); // header + 12 classes
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let args = ["verify", "all", "--gamma", "1", "--budget", "smoke", "--seed", "7"];
    let first = pluriops(&args);
    assert!(first.status.success(), "verify all must pass");
    let second = pluriops(&args);
    assert_eq!(stdout(&first), stdout(&second), "stdout must be byte-identical");
    for line in stdout(&first).lines().skip(1) {
        assert!(line.ends_with("PASS"), "unexpected line: {line}");
    }
}

#[test]
fn verify_json_carries_schema_version() {
    let output = pluriops(&[
        "verify", "dims", "--gamma", "1", "--budget", "smoke", "--format", "json",
    ]);
    assert!(output.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["reports"][0]["status"], "PASS");
}

#[test]
fn verify_unknown_check_is_usage_error() {
    let output = pluriops(&["verify", "nonsense"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn budget_env_var_overrides_flag() {
    let output = Command::new(env!("CARGO_BIN_EXE_pluriops"))
        .args(["verify", "dims", "--budget", "desk"])
        .env("PLURIOPS_BUDGET", "smoke")
        .output()
        .unwrap();
    assert!(output.status.success());
    let body = String::from_utf8(output.stdout).unwrap();
    assert!(body.contains("gamma<=2 n<=4"), "smoke bounds expected: {body}");
}

#[test]
fn algebra_demo_prints_displayed_examples() {
    let output = pluriops(&["algebra", "demo", "--which", "mwords"]);
    let body = stdout(&output);
    assert!(body.contains("3 2! 5 dashv_3 4 4! 1 = 3 4! 5 4 4! 3"));
    let output = pluriops(&["algebra", "demo", "--which", "sets"]);
    assert!(stdout(&output).contains("{2,4} dashv_3 {1,3,5} = {2,3,4,5}"));
}

#[test]
fn algebra_verify_passes() {
    for which in ["pos", "sets", "words", "mwords", "free"] {
        let output =
            pluriops(&["algebra", "verify", "--which", which, "--gamma", "2", "--bound", "2"]);
        assert!(output.status.success(), "algebra verify {which}");
        assert_eq!(stdout(&output), "PASS\n");
    }
}

#[test]
fn trias_verify_subcommands_pass() {
    let output = pluriops(&["trias", "verify", "presentation", "--gamma", "2"]);
    assert!(output.status.success());
    let output = pluriops(&["trias", "verify", "pbw", "--gamma", "1", "--degree", "3"]);
    assert!(output.status.success());
    let body = stdout(&output);
    assert!(body.contains("arity 4\t15 normal forms, dimension 15\tPASS"));
}
