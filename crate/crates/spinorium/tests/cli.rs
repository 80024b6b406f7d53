//! End-to-end tests of the `spinorium` binary: flag parsing, exit codes,
//! and report round-trips.

use std::process::Command;

fn spinorium(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_spinorium"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &std::process::Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn eval_prints_components() {
    let out = spinorium(&[
        "eval", "--kappa", "-1", "--mu", "0.5", "--theta", "1.0", "--phi", "0.0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("2.8209479177e-1"), "{text}");

    // fraction form of mu parses identically
    let frac = spinorium(&[
        "eval", "--kappa", "-1", "--mu", "1/2", "--theta", "1.0", "--phi", "0.0",
    ]);
    assert_eq!(stdout_of(&frac), text);
}

#[test]
fn eval_json_is_machine_readable() {
    let out = spinorium(&[
        "eval", "--kappa", "1", "--mu", "0.5", "--theta", "0", "--phi", "0", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["kappa"], 1);
    assert_eq!(doc["mu_times_2"], 1);
    let up = doc["up"]["re"].as_f64().unwrap();
    assert!((up + 0.28209479177387814).abs() < 1e-12);
}

#[test]
fn eval_rejects_invalid_input() {
    let out = spinorium(&[
        "eval", "--kappa", "0", "--mu", "0.5", "--theta", "1", "--phi", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("kappa must be nonzero"));

    // mu out of range for kappa
    let out = spinorium(&[
        "eval", "--kappa", "1", "--mu", "1.5", "--theta", "1", "--phi", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // mu that is not a half-odd integer
    let out = spinorium(&[
        "eval", "--kappa", "1", "--mu", "0.25", "--theta", "1", "--phi", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_subset_passes_and_reports() {
    let dir = std::env::temp_dir().join(format!("spinorium-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json_path = dir.join("report.json");
    let csv_path = dir.join("report.csv");

    let out = spinorium(&[
        "verify",
        "--kappa-max",
        "2",
        "--relations",
        "3.1.1,3.2.8,3.3.5",
        "--json",
        json_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(report["schema"], "spinorium/report/v1");
    let summary = report["summary"].as_array().unwrap();
    assert_eq!(summary.len(), 3);
    let total_cases: u64 = summary.iter().map(|s| s["cases"].as_u64().unwrap()).sum();
    assert!(report["failures"].as_array().unwrap().is_empty());

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("relation_id,variant,kappa,mu_times_2,profile,r,residual,pass"));
    assert_eq!(csv.lines().count() as u64, 1 + total_cases);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_unknown_relation_is_usage_error() {
    let out = spinorium(&["verify", "--relations", "9.9.9"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("9.9.9") && err.contains("3.1.1"), "{err}");
}

#[test]
fn verify_impossible_tolerance_fails_cleanly() {
    // the rounding floor is real: zero tolerance must produce failures
    let out = spinorium(&["verify", "--kappa-max", "1", "--tolerance", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn catalog_exports() {
    let out = spinorium(&["catalog", "--markdown", "-"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out).lines().count(), 2 + 91);

    let out = spinorium(&["catalog", "--json", "-"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["schema"], "spinorium/catalog/v1");
    assert_eq!(doc["entries"].as_array().unwrap().len(), 91);

    // no output selected is a usage error
    let out = spinorium(&["catalog"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_full_sweep_through_the_binary() {
    // the acceptance setting, driven through the actual executable
    let out = spinorium(&["verify", "--kappa-max", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("checked 38220 cases"), "{text}");
    assert!(text.contains("0 failed, 0 inapplicable"), "{text}");
}

#[test]
fn ortho_reports_deviation() {
    let out = spinorium(&["ortho", "--kappa-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("max Gram deviation"));
}
