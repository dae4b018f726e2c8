//! Runs the built `sturm` binary as a subprocess.

use std::process::{Command, Output};

fn sturm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sturm"))
        .args(args)
        .output()
        .expect("failed to spawn sturm")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn assert_error(out: &Output, exit: i32, tag: &str) {
    assert_eq!(code(out), exit, "stderr: {}", stderr(out));
    let err = stderr(out);
    assert_eq!(err.lines().count(), 1, "{err:?}");
    assert!(err.starts_with(&format!("error[{tag}]: ")), "{err:?}");
    assert!(out.stdout.is_empty());
}

#[test]
fn count_agrees() {
    let out = sturm(&["count", "x^3-x"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "variation: 3\ninertia: 3 (q(a) = 3, q(b) = 0)\nagreement: true\n"
    );
    assert!(out.stderr.is_empty());
}

#[test]
fn count_multiple_root_endpoint() {
    let out = sturm(&["count", "(x-1)^2*(x+2)", "--from", "0", "--to", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("variation: n/a"), "{text}");
    assert!(text.contains("inertia: 1 "), "{text}");

    let out = sturm(&["count", "(x-1)^2*(x+2)", "--from", "0", "--to", "1", "--method", "variation"]);
    assert_error(&out, 2, "multiple-root-endpoint");
}

#[test]
fn leading_minus_arguments() {
    let out = sturm(&["count", "-x^2+4", "--from", "-3", "--to", "-1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).starts_with("variation: 1\n"));

    let out = sturm(&["chain", "-x^3", "--g", "-1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn isolate_lists_intervals() {
    let out = sturm(&["isolate", "x^3-x"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(-2, -1]\n(-1, 0]\n(0, 2]\n");
}

#[test]
fn usage_errors_exit_1() {
    assert_error(&sturm(&["bogus"]), 1, "usage");
    assert_error(&sturm(&["count"]), 1, "usage");
    assert_error(&sturm(&["count", "x", "--method", "guess"]), 1, "usage");
    assert_error(&sturm(&["count", "2*x*"]), 1, "parse");
    assert_error(&sturm(&["count", "2x"]), 1, "parse");
    assert_error(&sturm(&["count", "x", "--from", "1/0"]), 1, "parse");
}

#[test]
fn precondition_errors_exit_2() {
    assert_error(&sturm(&["count", "5"]), 2, "constant-polynomial");
    assert_error(&sturm(&["count", "x^2", "--from", "1", "--to", "0"]), 2, "empty-interval");
    assert_error(&sturm(&["chain", "x^2", "--g", "0"]), 2, "zero-polynomial");
}

#[test]
fn fault_injection_exits_3() {
    let out = sturm(&["verify", "x^4-2", "--samples", "5"]);
    assert_eq!(code(&out), 0);
    let out = sturm(&["verify", "x^4-2", "--samples", "5", "--inject-fault"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("FAIL minor-identity"));

    let out = sturm(&["count", "x^3-x", "--inject-fault"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("agreement: false"));
}

#[test]
fn structured_output_is_deterministic() {
    for args in [
        &["--format", "structured", "count", "x^2-1", "--from", "-2", "--to", "2"][..],
        &["--format", "structured", "chain", "x^5-3*x+1"],
        &["--format", "structured", "matrix", "x^4-2"],
        &["--format", "structured", "isolate", "(x-1/3)^2*(x+5)"],
        &["--format", "structured", "verify", "x^3-2*x", "--seed", "7"],
    ] {
        let first = sturm(args);
        let second = sturm(args);
        assert_eq!(code(&first), 0, "{args:?}: {}", stderr(&first));
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        let json: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
        assert_eq!(json["command"], args[2]);
        assert!(json["inputs"].is_object() && !json["results"].is_null());
    }
}

#[test]
fn structured_count_fields() {
    let out = sturm(&["--format", "structured", "count", "x^2-1", "--from", "-2", "--to", "2"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["inputs"]["f"], "x^2 - 1");
    assert_eq!(json["results"]["count_inertia"], 2);
    assert_eq!(json["results"]["count_variation"], 2);
    assert_eq!(json["results"]["agreement"], true);
}
