//! The command-line contract: outputs, exit codes, determinism.

use torusq::cli::{run, EXIT_PASS, EXIT_USAGE};
use torusq::io::series_from_json;

fn torusq(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("torusq").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn pretty_series() {
    let (code, out, _) = torusq(&["series", "U", "--t", "2", "--m", "1", "--trunc", "5", "--format", "pretty"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.trim(), "1 + q + (x+2+x^-1)q^2 + (2x+3+2x^-1)q^3 + (3x+6+3x^-1)q^4");

    let (_, out, _) = torusq(&["series", "jones", "--t", "1", "--N", "2", "--hand", "left", "--format", "pretty"]);
    assert_eq!(out.trim(), "q + q^3 - q^4");

    let (_, out, _) = torusq(&["series", "C", "--t", "1", "--m", "1", "--n", "3", "--format", "pretty"]);
    assert_eq!(out.trim(), "q^3");
}

#[test]
fn json_output_parses_back() {
    let (code, out, _) = torusq(&["series", "hecke", "--t", "2", "--m", "2", "--trunc", "6"]);
    assert_eq!(code, EXIT_PASS);
    let s = series_from_json(&out).unwrap();
    assert_eq!(s.trunc(), Some(6));
}

#[test]
fn output_is_deterministic() {
    let args = ["series", "U", "--t", "3", "--m", "2", "--trunc", "8", "--format", "csv"];
    assert_eq!(torusq(&args).1, torusq(&args).1);
}

#[test]
fn specialized_x() {
    let (_, out, _) = torusq(&["series", "U", "--t", "1", "--N", "2", "--x", "minus-q^N", "--format", "pretty"]);
    let (_, jones, _) = torusq(&["series", "jones", "--t", "1", "--N", "2", "--format", "pretty"]);
    assert_eq!(out, jones);
    let (code, _, _) = torusq(&["series", "U", "--t", "1", "--x", "1/2", "--trunc", "4"]);
    assert_eq!(code, EXIT_PASS);
}

#[test]
fn check_reports_and_exit_codes() {
    let (code, out, _) = torusq(&["check", "duality", "--t", "1", "--m", "1", "--N", "2"]);
    assert_eq!(code, EXIT_PASS);
    let report: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["value"], "-3");

    let (code, _, _) = torusq(&["check", "hecke", "--t", "1", "--m", "1", "--trunc", "20"]);
    assert_eq!(code, EXIT_PASS);

    let (code, out, _) = torusq(&["check", "bailey", "--pair", "multisum", "--t", "2", "--m", "1", "--n", "3", "--trunc", "12"]);
    assert_eq!(code, EXIT_PASS, "{out}");
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["check", "duality", "--t", "1", "--m", "2", "--N", "2"][..],
        &["check", "duality", "--t", "1"],
        &["series", "U", "--trunc", "0"],
        &["series", "nonsense"],
        &["check", "suite", "--profile", "huge"],
        &["check", "hecke", "--format", "csv"],
    ] {
        assert_eq!(torusq(args).0, EXIT_USAGE, "{args:?}");
    }
    assert_eq!(torusq(&["--help"]).0, EXIT_PASS);
}

#[test]
fn smoke_suite_with_negative_controls() {
    let (code, out, err) = torusq(&["check", "suite", "--profile", "smoke", "--mutate", "3", "--format", "pretty"]);
    assert_eq!(code, EXIT_PASS, "{out}\n{err}");
    assert!(out.lines().all(|l| l.starts_with("pass ")));
    assert!(err.contains("mutations caught"));
}
