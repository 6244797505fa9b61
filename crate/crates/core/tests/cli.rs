//! End-to-end tests of the `charvar` binary: documented commands, output
//! formats and exit codes.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_charvar"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

#[test]
fn pair_gamma_genus_two() {
    let (code, stdout, _) = run(&["pair", "--genus", "2", "gamma"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "4\n");
}

#[test]
fn pair_quadruple_genus_three() {
    let (code, stdout, _) = run(&["pair", "--genus", "3", "b1 b2 b4 b5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "-1\n");
}

#[test]
fn pair_strict_degree_mismatch_exits_two() {
    let (code, _, stderr) = run(&["pair", "--genus", "2", "--strict", "b1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("strict"));
    // without --strict the same query is an honest zero
    let (code, stdout, _) = run(&["pair", "--genus", "2", "b1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0\n");
}

#[test]
fn pair_json_uses_num_den_strings() {
    let (code, stdout, _) = run(&["pair", "--genus", "2", "--format", "json", "gamma"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), r#"{"num":"4","den":"1"}"#);
}

#[test]
fn pair_paper_literal_flips_sign() {
    let (code, stdout, _) = run(&[
        "pair",
        "--genus",
        "2",
        "--sign-convention",
        "paper-literal",
        "gamma",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "-4\n");
}

#[test]
fn pair_syntax_error_exits_one() {
    let (code, _, stderr) = run(&["pair", "--genus", "2", "f^"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("syntax error"));
    let (code, _, stderr) = run(&["pair", "--genus", "2", "b9"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("index out of range"));
}

#[test]
fn table_csv_genus_one_and_two() {
    let (code, stdout, _) = run(&["table", "--genus", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0,0,0,1\n");
    let (code, stdout, _) = run(&["table", "--genus", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "3,0,0,4\n1,1,0,-4\n0,0,1,4\n");
}

#[test]
fn table_genus_zero_exits_one() {
    let (code, _, stderr) = run(&["table", "--genus", "0"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("genus"));
}

#[test]
fn missing_genus_exits_one() {
    let (code, _, stderr) = run(&["table"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("--genus"));
}

#[test]
fn gram_genus_two_degree_three() {
    let (code, stdout, _) = run(&["gram", "--genus", "2", "--degree", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("rank: 4"));
    assert!(stdout.contains("radical dimension: 0"));
    let (code, stdout, _) = run(&["gram", "--genus", "2", "--degree", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with(",b1,b2,b3,b4\n"));
    assert!(stdout.contains("b1,0/1,0/1,1/1,0/1\n"));
    assert!(stdout.contains("rank,4\n"));
}

#[test]
fn gram_genus_three_shows_newstead_radical() {
    let (code, stdout, _) = run(&["gram", "--genus", "3", "--degree", "12"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().any(|l| l == "radical: a^3"), "{stdout}");
}

#[test]
fn gram_degree_out_of_range_exits_one() {
    let (code, _, stderr) = run(&["gram", "--genus", "2", "--degree", "7"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("out of range"));
}

#[test]
fn dual_partners() {
    let (code, stdout, _) = run(&["dual", "--genus", "2", "--gen", "b1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().next().unwrap(), "b3");
    let (code, stdout, _) = run(&["dual", "--genus", "2", "--gen", "a"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().next().unwrap(), "-1/4 f");
    let (code, _, _) = run(&["dual", "--genus", "2", "--gen", "b9"]);
    assert_eq!(code, 1);
}

#[test]
fn dual_json_has_functional_vector() {
    let (code, stdout, _) = run(&["dual", "--genus", "2", "--format", "json", "--gen", "f"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["partner"], "-1/4 a");
    assert_eq!(v["functional"][0]["monomial"], "a");
    assert_eq!(v["functional"][0]["value"]["num"], "-4");
}

#[test]
fn newstead_passes_and_notes_vacuous_cases() {
    let (code, _, _) = run(&["newstead", "--genus", "5"]);
    assert_eq!(code, 0);
    let (code, stdout, _) = run(&["newstead", "--genus", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("vacuous"));
}

#[test]
fn verify_rep_reports_clean_histograms() {
    let (code, stdout, _) = run(&[
        "verify-rep",
        "--genus",
        "3",
        "--samples",
        "100",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["jacobian_rank_histogram"]["3"], 100);
    assert_eq!(v["stabilizer_rank_histogram"]["3"], 100);
    assert_eq!(v["dims"]["ambient"], 18);
    assert_eq!(v["dims"]["fiber"], 15);
    assert_eq!(v["dims"]["quotient"], 12);
}

#[test]
fn verify_rep_unreachable_tolerance_exits_three() {
    let (code, _, stderr) = run(&[
        "verify-rep",
        "--genus",
        "2",
        "--samples",
        "3",
        "--tol",
        "1e-30",
    ]);
    assert_eq!(code, 3);
    assert!(stderr.contains("failures"));
}

#[test]
fn json_and_csv_outputs_are_bit_identical_across_runs() {
    for args in [
        vec!["table", "--genus", "3", "--format", "json"],
        vec!["gram", "--genus", "3", "--degree", "6", "--format", "csv"],
        vec!["verify-rep", "--genus", "2", "--samples", "5", "--format", "json"],
    ] {
        let (c1, first, _) = run(&args);
        let (c2, second, _) = run(&args);
        assert_eq!(c1, 0);
        assert_eq!(c2, 0);
        assert_eq!(first, second, "output differs across runs for {args:?}");
    }
}
