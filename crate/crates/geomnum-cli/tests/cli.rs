//! End-to-end tests of the `geomnum` binary: golden transcripts, exit
//! codes, and byte determinism of every report format.

use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_geomnum"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin is piped")
        .write_all(stdin.as_bytes())
        .expect("stdin accepts the body");
    child.wait_with_output().expect("binary exits")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("reports are UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("diagnostics are UTF-8")
}

const SHARP_TRIANGLE: &str =
    r#"{"dim": 2, "vertices": [["3/2", "0"], ["0", "1"], ["-1", "-1"]]}"#;
const SQUARE: &str =
    r#"{"dim": 2, "vertices": [["-1","-1"],["1","-1"],["1","1"],["-1","1"]]}"#;
const SMALL_SQUARE: &str = r#"{"dim": 2, "vertices":
    [["-1/4","-1/4"],["1/4","-1/4"],["1/4","1/4"],["-1/4","1/4"]]}"#;
const TRI_BALL: &str = r#"{"dim": 2, "vertices": [["1","1"],["-2","1"],["1","-2"]]}"#;

#[test]
fn descend_matches_the_worked_transcript() {
    let output = run(&["descend"], SHARP_TRIANGLE);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output),
        "step 1: vertex (3/2, 0) slides along (-3, 2), t = 1/10,\n\
        \x20       weight-increase at line (1, -1); area 2 -> 8/5\n\
        step 2: vertex (6/5, 1/5) slides along (-1, -1), t = 1/5,\n\
        \x20       weight-increase (landing on the integer point (1, 0)); area 8/5 -> 3/2\n\
        terminal: (-1,-1) (1,0) (0,1), area 3/2, basic triangle: yes\n\
        minimal: no (area decreased along the way)\n"
    );
}

#[test]
fn seeded_random_body_pipes_into_the_avoidance_check() {
    let dir = tempfile::tempdir().unwrap();
    let body = dir.path().join("body.json");
    let body_arg = body.to_str().unwrap();
    let generate = run(
        &["random", "--seed", "2", "--constraint", "unavoidable", "--output", body_arg],
        "",
    );
    assert!(generate.status.success());
    let check = run(&["check-unavoidable", "--input", body_arg], "");
    assert!(check.status.success());
    assert_eq!(
        stdout(&check),
        "unavoidable: yes\ndual interior lattice points: none\n"
    );
}

#[test]
fn equal_seeds_give_byte_identical_bodies() {
    let args = ["random", "--seed", "2", "--constraint", "unavoidable"];
    let first = run(&args, "");
    let second = run(&args, "");
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    // The emitted file is a parseable, symmetric body.
    let file = geomnum::io::parse_body(&stdout(&first)).unwrap();
    assert!(file.as_polygon().unwrap().is_symmetric());
}

#[test]
fn structured_dual_output_round_trips_as_a_body_file() {
    let output = run(&["dual", "--format", "structured"], SHARP_TRIANGLE);
    assert!(output.status.success());
    let file = geomnum::io::parse_body(&stdout(&output)).unwrap();
    let dual = file.as_polygon().unwrap();
    assert_eq!(dual.area(), geomnum::scalar::frac(32, 9));
}

#[test]
fn an_avoidable_verdict_is_still_exit_zero() {
    let output = run(&["check-unavoidable"], SMALL_SQUARE);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with("unavoidable: no\nwitness line: "));
}

#[test]
fn usage_errors_exit_two() {
    let nonconvex =
        r#"{"dim": 2, "vertices": [["0","0"],["2","0"],["1","1"],["0","2"]]}"#;
    let output = run(&["dual"], nonconvex);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("strict left turn"));

    let output = run(&["dual", "--frobnicate"], SQUARE);
    assert_eq!(output.status.code(), Some(2));

    let output = run(&["torus", "bh-area"], TRI_BALL);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("not reversible"));

    let output = run(&["dual", "--input", "/nonexistent/body.json"], "");
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn torus_check_reports_the_square_equalities() {
    let output = run(&["torus", "check"], SQUARE);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output),
        "systole: 1\n\
        ht area times pi: 2\n\
        bh area over pi: 1/4\n\
        general inequality: holds (defect 1)\n\
        reversible inequality: equality (defect 0)\n\
        zoll: yes\n"
    );
}

#[test]
fn rendered_scenes_match_their_goldens() {
    let basic_triangle =
        r#"{"dim": 2, "vertices": [["-1","-1"],["1","0"],["0","1"]]}"#;
    for (args, body, golden) in [
        (
            vec!["render", "--max-coeff", "4"],
            basic_triangle,
            include_str!("golden/triangle_lines.svg"),
        ),
        (
            vec!["render", "--trace"],
            SHARP_TRIANGLE,
            include_str!("golden/sharp_trace.svg"),
        ),
        (vec!["render"], SQUARE, include_str!("golden/square_plain.svg")),
    ] {
        let output = run(&args, body);
        assert!(output.status.success());
        assert_eq!(stdout(&output), golden, "scene for {args:?} drifted");
    }
}

#[test]
fn battery_over_a_small_corpus_passes_cleanly() {
    let output = run(&["battery", "--count", "6", "--seed", "11"], "");
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 7);
    assert!(text.ends_with("battery: 6 bodies, 0 failures\n"));
}

#[test]
fn structured_descent_certificates_are_valid_json() {
    let output = run(&["descend", "--format", "structured"], SHARP_TRIANGLE);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["is_minimal"], serde_json::Value::Bool(false));
    assert_eq!(value["steps"].as_array().unwrap().len(), 2);
    assert_eq!(value["terminal_area"]["exact"], "3/2");
}

#[test]
fn written_output_files_equal_the_streamed_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.txt");
    let out_arg = out.to_str().unwrap();
    let streamed = run(&["invariants"], SQUARE);
    let written = run(&["invariants", "--output", out_arg], SQUARE);
    assert!(streamed.status.success() && written.status.success());
    assert_eq!(fs::read_to_string(&out).unwrap(), stdout(&streamed));
}

#[test]
fn help_names_every_subcommand() {
    let output = run(&["--help"], "");
    assert!(output.status.success());
    let text = stdout(&output);
    for command in [
        "dual",
        "check-unavoidable",
        "descend",
        "invariants",
        "critical-lattice",
        "torus",
        "reduce",
        "minkowski",
        "simplex",
        "random",
        "render",
        "battery",
    ] {
        assert!(text.contains(command), "help is missing `{command}`");
    }
}
