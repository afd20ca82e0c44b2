//! End-to-end tests against the built binary: output schemas, exit codes,
//! and the documented failure modes.

use std::process::Command;

const VARS: &[&str] = &[
    "ZETASUM_REL_TOL",
    "ZETASUM_ABS_TOL",
    "ZETASUM_MAX_DEPTH",
    "ZETASUM_MAX_EVALS",
    "ZETASUM_TAIL_MARGIN",
];

fn run_with(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zetasum"));
    for v in VARS {
        cmd.env_remove(v);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.args(args).output().expect("binary must run");
    (
        out.status.code().expect("no exit code"),
        String::from_utf8(out.stdout).expect("stdout must be utf-8"),
        String::from_utf8(out.stderr).expect("stderr must be utf-8"),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with(args, &[])
}

fn json(line: &str) -> serde_json::Value {
    serde_json::from_str(line).unwrap_or_else(|e| panic!("bad JSON {line:?}: {e}"))
}

#[test]
fn eval_zeta_prints_the_documented_record() {
    let (code, out, _) = run(&["eval", "zeta", "--k", "2"]);
    assert_eq!(code, 0);
    let v = json(out.trim());
    assert_eq!(v["target"], "zeta");
    assert_eq!(v["params"]["k"]["re"].as_f64().unwrap(), 2.0);
    let re = v["value"]["re"].as_f64().unwrap();
    assert!((re - std::f64::consts::PI.powi(2) / 6.0).abs() <= 1e-12);
    assert_eq!(v["value"]["im"].as_f64().unwrap(), 0.0);
    assert!(v["err_estimate"].as_f64().unwrap() < 1e-10);
    assert!(v["evals_used"].as_u64().unwrap() > 0);
    assert!(v["truncation_point"].as_f64().unwrap() > 0.0);
    assert_eq!(v["converged"], true);

    // the record must carry enough digits to round-trip a double
    let mantissa_frac = out
        .split("\"value\":{\"re\":")
        .nth(1)
        .and_then(|rest| rest.split(',').next())
        .and_then(|num| num.split('e').next())
        .and_then(|m| m.split('.').nth(1))
        .expect("formatted value field");
    assert!(
        mantissa_frac.len() >= 15,
        "only {} fractional digits printed",
        mantissa_frac.len()
    );
}

#[test]
fn eval_powersum_hits_the_hand_value() {
    let (code, out, _) = run(&["eval", "powersum", "--k", "3", "--n", "10"]);
    assert_eq!(code, 0);
    let v = json(out.trim());
    assert_eq!(v["params"]["n"].as_u64().unwrap(), 10);
    assert!((v["value"]["re"].as_f64().unwrap() - 3025.0).abs() <= 1e-6);
}

#[test]
fn eval_accepts_complex_argument_syntax() {
    let (code, out, _) = run(&["eval", "zeta", "--k", "-1.5-2i"]);
    assert_eq!(code, 0);
    let v = json(out.trim());
    assert_eq!(v["params"]["k"]["re"].as_f64().unwrap(), -1.5);
    assert_eq!(v["params"]["k"]["im"].as_f64().unwrap(), -2.0);
}

#[test]
fn eval_hurwitz_pole_is_a_hard_error() {
    let (code, out, err) = run(&["eval", "hurwitz", "--k", "1", "--b", "1"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("pole"), "stderr was {err:?}");
}

#[test]
fn eval_harmonic_exponent_is_a_hard_error() {
    let (code, _, err) = run(&["eval", "powersum", "--k", "-1", "--n", "5"]);
    assert_eq!(code, 1);
    assert!(err.contains("singular"), "stderr was {err:?}");
}

#[test]
fn eval_from_zero_switches_the_hp_convention() {
    let (code, out, _) = run(&[
        "eval",
        "hp",
        "--k",
        "2",
        "--b",
        "1",
        "--n",
        "3",
        "--from-zero",
    ]);
    assert_eq!(code, 0);
    let v = json(out.trim());
    assert!((v["value"]["re"].as_f64().unwrap() - 30.0).abs() <= 1e-7);
}

#[test]
fn eval_warns_outside_the_reference_window() {
    let (code, _, err) = run(&["eval", "zeta", "--k", "0.5+30i", "--rep", "reference"]);
    assert_eq!(code, 0);
    assert!(err.contains("window"), "stderr was {err:?}");
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["eval", "zeta", "--k", "1e"][..],            // malformed complex
        &["eval", "powersum", "--k", "2"][..],         // missing --n
        &["eval", "zeta", "--k", "2", "--bogus"][..],  // unknown flag
        &["eval", "zeta", "--k", "2", "--b", "1"][..], // inapplicable param
        &[
            "eval", "powersum", "--k", "2", "--n", "5", "--rep", "global",
        ][..],
        &[
            "scan",
            "zeta",
            "--re-min",
            "2",
            "--re-max",
            "1",
            "--re-steps",
            "5",
        ][..],
        &["eval", "zeta", "--k", "2", "--rel-tol", "-1"][..], // rejected config
    ] {
        let (code, out, _) = run(args);
        assert_eq!(code, 64, "args {args:?} should be a usage error");
        assert!(out.is_empty(), "usage error must not print a record");
    }
}

#[test]
fn malformed_environment_is_a_usage_error() {
    let (code, _, _) = run_with(
        &["eval", "zeta", "--k", "2"],
        &[("ZETASUM_REL_TOL", "banana")],
    );
    assert_eq!(code, 64);
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["--version"][..], &["eval", "--help"][..]] {
        let (code, out, _) = run(args);
        assert_eq!(code, 0, "args {args:?}");
        assert!(!out.is_empty());
    }
}

#[test]
fn compare_powersum_agrees_with_brute_force() {
    let (code, out, _) = run(&["compare", "powersum", "--k", "2", "--n", "5"]);
    assert_eq!(code, 0);
    let v = json(out.trim());
    assert!((v["formula_value"]["re"].as_f64().unwrap() - 55.0).abs() <= 1e-9);
    assert!((v["oracle_value"]["re"].as_f64().unwrap() - 55.0).abs() <= 1e-12);
    assert!(v["rel_diff"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn compare_zeta_covers_a_trivial_zero() {
    let (code, out, _) = run(&["compare", "zeta", "--k", "-2"]);
    assert_eq!(code, 0);
    let v = json(out.trim());
    assert!(v["abs_diff"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn compare_hp_agrees_with_brute_force() {
    let (code, out, _) = run(&["compare", "hp", "--k", "2", "--b", "1", "--n", "3"]);
    assert_eq!(code, 0);
    let v = json(out.trim());
    assert!((v["formula_value"]["re"].as_f64().unwrap() - 29.0).abs() <= 1e-9);
    assert!((v["oracle_value"]["re"].as_f64().unwrap() - 29.0).abs() <= 1e-12);
}

#[test]
fn compare_mismatch_exits_3() {
    // machine-level disagreement between routes is real but ~1e-16; an
    // impossible tolerance must turn it into a reported mismatch
    let (code, out, err) = run(&[
        "compare", "powersum", "--k", "2", "--n", "5", "--tol", "1e-18",
    ]);
    assert_eq!(code, 3);
    assert!(!out.is_empty(), "the record still prints on mismatch");
    assert!(err.contains("tolerance"), "stderr was {err:?}");
}

#[test]
fn compare_hurwitz_needs_a_covered_oracle_point() {
    let (code, out, _) = run(&["compare", "hurwitz", "--k", "-3", "--b", "2.5"]);
    assert_eq!(code, 0);
    let v = json(out.trim());
    assert!(v["rel_diff"].as_f64().unwrap() <= 1e-10);
    let (code, _, err) = run(&["compare", "hurwitz", "--k", "2.5", "--b", "0.3"]);
    assert_eq!(code, 1);
    assert!(err.contains("oracle"), "stderr was {err:?}");
}

#[test]
fn scan_csv_has_the_documented_header_and_singular_row() {
    let (code, out, _) = run(&[
        "scan",
        "zeta",
        "--re-min",
        "-4",
        "--re-max",
        "4",
        "--re-steps",
        "9",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.trim().lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(
        lines[0],
        "k_re,k_im,value_re,value_im,err_estimate,converged,status"
    );
    // row-major with re outer: row 6 is k = 1, the pole
    let singular: Vec<&str> = lines[6].split(',').collect();
    assert_eq!(singular[6], "singular");
    assert_eq!(singular[2], "");
    assert_eq!(singular[5], "false");
    // k = -2 is a trivial zero
    let zero_row: Vec<&str> = lines[3].split(',').collect();
    assert_eq!(zero_row[6], "ok");
    assert!(zero_row[2].parse::<f64>().unwrap().abs() <= 1e-9);
}

#[test]
fn scan_json_and_csv_agree_bit_for_bit() {
    let grid = &[
        "--re-min",
        "-3",
        "--re-max",
        "3",
        "--re-steps",
        "5",
        "--im-min",
        "-1",
        "--im-max",
        "1",
        "--im-steps",
        "2",
    ];
    let mut csv_args = vec!["scan", "zeta"];
    csv_args.extend_from_slice(grid);
    csv_args.extend_from_slice(&["--format", "csv"]);
    let mut json_args = vec!["scan", "zeta"];
    json_args.extend_from_slice(grid);

    let (code_c, out_c, _) = run(&csv_args);
    let (code_j, out_j, _) = run(&json_args);
    assert_eq!(code_c, 0);
    assert_eq!(code_j, 0);
    let csv_rows: Vec<&str> = out_c.trim().lines().skip(1).collect();
    let json_rows: Vec<&str> = out_j.trim().lines().collect();
    assert_eq!(csv_rows.len(), 10);
    assert_eq!(json_rows.len(), 10);
    for (cr, jr) in csv_rows.iter().zip(&json_rows) {
        // compare the printed digit strings themselves: stronger than any
        // parse-and-compare, and immune to parser rounding quirks
        let fields: Vec<&str> = cr.split(',').collect();
        let field = |key: &str| -> &str {
            jr.split(&format!("\"{key}\":") as &str)
                .nth(1)
                .and_then(|rest| rest.split([',', '}']).next())
                .unwrap_or_else(|| panic!("key {key} missing in {jr}"))
        };
        assert_eq!(fields[0], field("k_re"));
        assert_eq!(fields[1], field("k_im"));
        assert_eq!(fields[2], field("value_re"));
        assert_eq!(fields[3], field("value_im"));
        assert_eq!(fields[4], field("err_estimate"));
        assert_eq!(format!("\"{}\"", fields[6]), field("status"));
    }
}

#[test]
fn scan_powersum_marks_its_own_singularity() {
    let (code, out, _) = run(&[
        "scan",
        "powersum",
        "--re-min",
        "-1",
        "--re-max",
        "2",
        "--re-steps",
        "4",
        "--n",
        "5",
    ]);
    assert_eq!(code, 0);
    let rows: Vec<serde_json::Value> = out.trim().lines().map(json).collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["status"], "singular");
    assert_eq!(rows[0]["value_re"], serde_json::Value::Null);
    assert_eq!(rows[3]["status"], "ok");
    assert!((rows[3]["value_re"].as_f64().unwrap() - 55.0).abs() <= 1e-9);
}

#[test]
fn selftest_quick_passes_and_reports_each_check() {
    let (code, out, _) = run(&["selftest", "quick"]);
    assert_eq!(code, 0);
    let pass_lines = out.lines().filter(|l| l.starts_with("[PASS]")).count();
    assert!(pass_lines >= 25, "only {pass_lines} checks reported");
    assert!(out.lines().all(|l| !l.starts_with("[FAIL]")));
    let summary = json(out.trim().lines().last().unwrap());
    assert_eq!(summary["level"], "quick");
    assert_eq!(summary["failures"].as_u64().unwrap(), 0);
    assert_eq!(summary["passed"], true);
}

#[test]
fn selftest_catches_gutted_tolerances_from_the_environment() {
    let (code, out, _) = run_with(&["selftest", "quick"], &[("ZETASUM_REL_TOL", "1e-2")]);
    assert_eq!(code, 3);
    assert!(out.lines().any(|l| l.starts_with("[FAIL]")));
    let summary = json(out.trim().lines().last().unwrap());
    assert_eq!(summary["passed"], false);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = &["eval", "zeta", "--k", "0.5+2i"];
    let (c1, o1, _) = run(args);
    let (c2, o2, _) = run(args);
    assert_eq!(c1, 0);
    assert_eq!(c1, c2);
    assert_eq!(o1, o2);
}

#[test]
fn unconverged_evaluation_exits_2() {
    let (code, out, _) = run(&["eval", "zeta", "--k", "2", "--max-evals", "30"]);
    assert_eq!(code, 2);
    let v = json(out.trim());
    assert_eq!(v["converged"], false);
}

#[test]
fn negative_offset_requires_the_diagnostic_flag() {
    let (code, _, _) = run(&["eval", "hurwitz", "--k", "2", "--b", "-0.4+0.3i"]);
    assert_eq!(code, 1);
    let (code, out, _) = run(&[
        "eval",
        "hurwitz",
        "--k",
        "2",
        "--b",
        "-0.4+0.3i",
        "--allow-negative-offset",
    ]);
    assert_eq!(code, 0);
    let v = json(out.trim());
    assert!(v["value"]["re"].as_f64().unwrap().is_finite());
}
