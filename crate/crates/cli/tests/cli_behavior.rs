//! End-to-end contract of the binary: exit codes, output formats, and the
//! report schema.

use std::process::{Command, Output};

fn muzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_muzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_prints_values_and_exits_zero() {
    let out = muzeta(&["eval", "mu", "--s", "-1,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("mu(-1) = -0.5"), "{}", stdout(&out));

    let out = muzeta(&["eval", "lambda", "--s", "2.5,0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(expected 1)"), "{text}");
    assert!(text.contains("terms_used"), "{text}");
    assert!(text.contains("tail_estimate"), "{text}");
}

#[test]
fn pole_and_domain_errors_exit_two() {
    let out = muzeta(&["eval", "zeta", "--s", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("pole"), "{err}");

    // mu_direct outside its convergence region.
    let out = muzeta(&["eval", "mu_direct", "--s", "0.5,0"]);
    assert_eq!(out.status.code(), Some(2));

    // beta at a non-integer point.
    let out = muzeta(&["eval", "beta", "--s", "0.5,0"]);
    assert_eq!(out.status.code(), Some(2));

    // Usage error from clap.
    let out = muzeta(&["eval", "nonsense", "--s", "1,0"]);
    assert_eq!(out.status.code(), Some(2));

    // Bernoulli range check.
    let out = muzeta(&["bernoulli", "--n-max", "200"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nonconvergence_exits_three() {
    let out = muzeta(&["verify", "--suite", "abel-plana", "--quad-tol", "1e-15"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("error at point"), "{err}");
}

#[test]
fn bernoulli_table_exact() {
    let out = muzeta(&["bernoulli", "--n-max", "3", "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "q\tB_q\tzeta(-q)");
    assert_eq!(lines[1], "0\t1\t-1/2");
    assert_eq!(lines[2], "1\t-1/2\t-1/12");
    assert_eq!(lines[3], "2\t1/6\t0");
    assert_eq!(lines[4], "3\t0\t1/120");
}

#[test]
fn sweep_csv_shape_and_exclusions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mu.csv");
    let out = muzeta(&[
        "sweep",
        "mu",
        "--grid",
        "-4:6,-5:5,11x11",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "re_s,im_s,re_value,im_value,terms_used,converged,status"
    );
    assert_eq!(lines.len(), 1 + 121);
    // The pole cell at s = 1 is flagged, not evaluated.
    let excluded: Vec<&&str> = lines.iter().filter(|l| l.ends_with("excluded")).collect();
    assert_eq!(excluded.len(), 1);
    assert!(excluded[0].starts_with("1,0,"), "{}", excluded[0]);
}

#[test]
fn sweep_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = muzeta(&[
            "sweep",
            "lambda",
            "--grid",
            "-5:5,-5:5,7x7",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn verify_report_schema_is_self_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("beta.json");
    let out = muzeta(&[
        "verify",
        "--suite",
        "beta",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["suite"], "beta");
    assert_eq!(doc["started_at"], 0);
    assert!(doc["config"]["rel_tol"].is_number());
    let rows = doc["rows"].as_array().unwrap();
    let total = doc["summary"]["total"].as_u64().unwrap() as usize;
    assert_eq!(rows.len(), total);
    assert_eq!(
        doc["summary"]["passed"].as_u64().unwrap() + doc["summary"]["failed"].as_u64().unwrap(),
        total as u64
    );
    // Every row's errors recompute from its own lhs/rhs.
    for row in rows {
        let lhs = muzeta::Complex64::new(
            row["lhs"]["re"].as_f64().unwrap(),
            row["lhs"]["im"].as_f64().unwrap(),
        );
        let rhs = muzeta::Complex64::new(
            row["rhs"]["re"].as_f64().unwrap(),
            row["rhs"]["im"].as_f64().unwrap(),
        );
        assert_eq!(row["abs_error"].as_f64().unwrap(), (lhs - rhs).norm());
        assert_eq!(
            row["rel_error"].as_f64().unwrap(),
            muzeta::relative_error(lhs, rhs)
        );
        assert!(row["passed"].as_bool().unwrap());
    }
}

#[test]
fn verify_failure_exits_one() {
    // An absurdly tight grid-identity tolerance forces identity failures
    // (exit 1) without tripping non-convergence.
    let out = muzeta(&["verify", "--suite", "lambda", "--grid", "2:4,1:2,3x2"]);
    let code = out.status.code();
    assert!(code == Some(0), "sane run should pass, got {code:?}");

    // Far from the pole the series carries ~1e-13 of accumulated noise, so
    // demanding 1e-15 is an identity failure (not non-convergence).
    let out = muzeta(&[
        "verify",
        "--suite",
        "lambda",
        "--grid",
        "-5:-4,4:5,2x2",
        "--tol",
        "1e-15",
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("FAIL"), "{}", stdout(&out));
}
