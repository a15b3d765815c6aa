//! End-to-end tests of the `primal` binary: output wording, exit
//! codes, and report determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

/// Writes the three-point fixture space — opens ∅, {0}, X; primal of
/// all sets not containing point 2 — into a temp dir and returns its
/// path alongside the guard that keeps the dir alive.
fn fixture_space() -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("space.json");
    std::fs::write(&path, r#"{"n":3,"open":[0,1,7],"primal":{"generator":4}}"#).unwrap();
    (dir, path)
}

#[test]
fn validate_accepts_a_good_space() {
    let (_dir, path) = fixture_space();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "valid\n");
}

#[test]
fn validate_rejects_a_family_not_closed_under_union() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("space.json");
    std::fs::write(&path, r#"{"n":3,"open":[0,1,2,7],"primal":{"generator":4}}"#).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not closed under union"), "{}", stderr(&out));
}

#[test]
fn validate_rejects_a_primal_containing_the_full_set() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("space.json");
    std::fs::write(&path, r#"{"n":3,"open":[0,1,7],"primal":{"sets":[0,7]}}"#).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("full set"), "{}", stderr(&out));
}

#[test]
fn validate_rejects_unknown_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("space.json");
    std::fs::write(
        &path,
        r#"{"n":3,"open":[0,1,7],"primal":{"generator":4},"comment":"hi"}"#,
    )
    .unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown field"), "{}", stderr(&out));
}

#[test]
fn compute_prints_binary_and_roster() {
    let (_dir, path) = fixture_space();
    let path = path.to_str().unwrap();

    let out = run(&["compute", path, "--expr", "d(A)", "--bind", "A=0b100"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0b110 = {1,2}\n");

    let out = run(&["compute", path, "--expr", "intd(A)", "--bind", "A=0b011"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0b001 = {0}\n");

    // Diamond images are closed, so closing one changes nothing.
    let out = run(&["compute", path, "--expr", "cl(d(A))", "--bind", "A=0b100"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0b110 = {1,2}\n");
}

#[test]
fn compute_reports_errors_with_offsets() {
    let (_dir, path) = fixture_space();
    let path = path.to_str().unwrap();

    let out = run(&["compute", path, "--expr", "d(A"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("offset 3"), "{}", stderr(&out));

    let out = run(&["compute", path, "--expr", "d(A)"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no binding"), "{}", stderr(&out));

    let out = run(&["compute", path, "--expr", "d(A)", "--bind", "A=0b1000"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("outside"), "{}", stderr(&out));
}

#[test]
fn check_on_one_space_fails_with_a_replayable_witness() {
    let (_dir, path) = fixture_space();
    let path = path.to_str().unwrap();

    let out = run(&["check", path, "forall A: d(A) <= A"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.starts_with("FAIL\n"), "{text}");
    assert!(text.contains("A = 0b100 = {2}"), "{text}");

    // Replay the witness through compute: d({2}) = {1,2} ⊄ {2}.
    let out = run(&["compute", path, "--expr", "d(A)", "--bind", "A=0b100"]);
    assert_eq!(stdout(&out), "0b110 = {1,2}\n");
}

#[test]
fn check_on_one_space_passes_and_reports_unmet_hypotheses() {
    let (_dir, path) = fixture_space();
    let path = path.to_str().unwrap();

    let out = run(&["check", path, "forall A, B: d(A | B) = d(A) | d(B)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "PASS\n");

    // The fixture does not satisfy the closed-complement condition,
    // so a ccc-guarded formula is not falsifiable here.
    let out = run(&["check", path, "forall U:open: ccc => U <= d(U)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "HYPOTHESIS NOT MET\n");
}

#[test]
fn check_all_n_scans_every_space_of_one_size() {
    let out = run(&["check", "--all-n", "2", "forall U:open: U <= psi(U)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "PASS over 16 spaces\n");

    let out = run(&["check", "--all-n", "3", "forall A: d(A) <= A"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.starts_with("FAIL after 2 of 232 spaces\n"), "{text}");
    assert!(
        text.contains(r#"space: {"n":3,"open":[0,7],"primal":{"generator":1}}"#),
        "{text}"
    );
    assert!(text.contains("A = 0b001 = {0}"), "{text}");
}

#[test]
fn check_usage_errors_exit_two() {
    let (_dir, path) = fixture_space();
    let path = path.to_str().unwrap();

    // --all-n takes one argument, plain mode takes two.
    let out = run(&["check", "--all-n", "2", path, "d(0) = 0"]);
    assert_eq!(code(&out), 2);
    let out = run(&["check", path]);
    assert_eq!(code(&out), 2);

    // Formula errors also exit 2.
    let out = run(&["check", path, "forall A: d(A"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("in formula"), "{}", stderr(&out));

    // Capacity errors too.
    let out = run(&["check", "--all-n", "9", "d(0) = 0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("supports 1 to 4"), "{}", stderr(&out));
}

#[test]
fn verify_paper_json_is_byte_identical_across_runs() {
    let first = run(&["verify-paper", "--n", "2", "--format", "json"]);
    let second = run(&["verify-paper", "--n", "2", "--format", "json"]);
    assert_eq!(code(&first), 0);
    assert_eq!(code(&second), 0);
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains("\"spaces\": 16"), "{}", stdout(&first));
}

#[test]
fn verify_paper_writes_reports_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify-paper",
        "--n",
        "1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "");
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"tool\": \"primal\""), "{written}");
    assert!(written.contains("\"spaces\": 2"), "{written}");
}

#[test]
fn verify_paper_text_report_summarizes_the_battery() {
    let out = run(&["verify-paper", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("spaces: 16\n"), "{text}");
    assert!(text.contains("failures: 0\n"), "{text}");
    assert!(text.contains("elapsed: "), "{text}");
    assert!(text.contains("t1a-6-union-additive"), "{text}");
}

#[test]
fn verify_paper_rejects_oversized_n() {
    let out = run(&["verify-paper", "--n", "9"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("supports 1 to 4"), "{}", stderr(&out));
}

#[test]
fn enumerate_counts_match_the_catalog() {
    for (args, expected) in [
        (["topologies", "--n", "3"], "29"),
        (["primals", "--n", "3"], "8"),
        (["spaces", "--n", "2"], "16"),
    ] {
        let out = run(&[&["enumerate"], &args[..], &["--count"]].concat());
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), format!("{expected}\n"));
    }
}

#[test]
fn enumerate_lists_canonical_documents() {
    let out = run(&["enumerate", "topologies", "--n", "2", "--list"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        concat!(
            r#"{"n":2,"open":[0,3]}"#, "\n",
            r#"{"n":2,"open":[0,1,3]}"#, "\n",
            r#"{"n":2,"open":[0,2,3]}"#, "\n",
            r#"{"n":2,"open":[0,1,2,3]}"#, "\n",
        )
    );

    let out = run(&["enumerate", "primals", "--n", "1", "--list"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        concat!(
            r#"{"n":1,"generator":0,"sets":[]}"#, "\n",
            r#"{"n":1,"generator":1,"sets":[0]}"#, "\n",
        )
    );

    // Space listings are valid space files: feed one back to validate.
    let out = run(&["enumerate", "spaces", "--n", "1", "--list"]);
    assert_eq!(code(&out), 0);
    let first_line = stdout(&out).lines().next().unwrap().to_string();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("space.json");
    std::fs::write(&path, first_line).unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn enumerate_requires_exactly_one_mode() {
    let out = run(&["enumerate", "spaces", "--n", "2"]);
    assert_eq!(code(&out), 2);
    let out = run(&["enumerate", "spaces", "--n", "2", "--count", "--list"]);
    assert_eq!(code(&out), 2);
}
