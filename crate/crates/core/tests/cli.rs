mod common;

use common::{check_golden, run_binary, DOCUMENTED, EXTRA};
use serde_json::Value;

#[test]
fn text_reports_match_golden_files() {
    for case in DOCUMENTED.iter().chain(EXTRA) {
        let out = run_binary(case.args);
        assert_eq!(out.code, case.code, "{}: {}", case.name, out.stderr);
        check_golden(case.name, "txt", &out.stdout).unwrap();
    }
}

#[test]
fn json_reports_match_golden_files_and_round_trip() {
    for case in DOCUMENTED.iter().chain(EXTRA) {
        let mut args = vec!["--json"];
        args.extend_from_slice(case.args);
        let out = run_binary(&args);
        assert_eq!(out.code, case.code, "{}", case.name);
        check_golden(case.name, "json", &out.stdout).unwrap();
        let parsed: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(
            serde_json::to_string_pretty(&parsed).unwrap() + "\n",
            out.stdout
        );
        assert_eq!(parsed["command"], Value::from(case.args[0]));
    }
}

#[test]
fn parse_error_reports_line_number() {
    let out = run_binary(&["rees", "malformed.ideal"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);
}

#[test]
fn closure_of_x2y3() {
    let out = run_binary(&["closure", "x2y3.ideal", "--k", "1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("(x^2, xy^2, y^3)"), "{}", out.stdout);
}

#[test]
fn rees_of_maximal_ideal() {
    let out = run_binary(&["rees", "xy.ideal"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("normal (1,1)  rees integer 1"));
    assert!(out.stdout.contains("lcm of rees integers: 1"));
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        &["itoh", "--rees", "2,3", "--k", "1"][..],
        &["tower", "--e", "0", "--k", "2"],
        &["co2", "--components", "2,3", "--e", "4"],
        &["closure", "xy.ideal", "--k", "0"],
        &["krull", "--rees", "2,3", "--k", "1", "--family", "W"],
        &["frobnicate"],
    ] {
        let out = run_binary(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn undecided_warning_goes_to_stderr() {
    let out = run_binary(&[
        "--json", "krull", "--rees", "2,2", "--k", "1", "--family", "S",
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.starts_with("warning: "));
    let parsed: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(parsed["payload"]["decision"]["verdict"], "undecided");
}
