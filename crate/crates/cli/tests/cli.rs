use assert_cmd::Command;
use predicates::prelude::*;

fn halfspin() -> Command {
    Command::cargo_bin("halfspin").unwrap()
}

#[test]
fn table_csv_row_count() {
    halfspin()
        .args(["table", "--lambda-max", "4", "--format", "csv"])
        .assert()
        .success()
        .stdout(
            "lambda,ell_times2,absM_times2,bigN,multiplicity\n\
             2,1,1,0,2\n\
             3,2,1,1,inf\n\
             4,3,1,2,\n\
             4,3,3,0,4\n",
        );
}

#[test]
fn table_golden_check_passes() {
    halfspin()
        .args([
            "table",
            "--lambda-max",
            "10",
            "--format",
            "json",
            "--golden-check",
        ])
        .assert()
        .success();
}

#[test]
fn table_golden_check_needs_the_full_table() {
    halfspin()
        .args(["table", "--lambda-max", "4", "--golden-check"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("GoldenCheckBound"));
}

#[test]
fn table_bad_bound_exits_two() {
    halfspin()
        .args(["table", "--lambda-max", "1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("BadBound"));
}

#[test]
fn unknown_flags_are_errors() {
    halfspin()
        .args(["table", "--lambda-max", "4", "--frobnicate"])
        .assert()
        .code(2);
}

#[test]
fn radius_matches_the_closed_form() {
    halfspin()
        .args(["radius", "--lambda", "2", "--m2", "1", "--gamma", "1"])
        .assert()
        .success()
        .stdout(predicate::str::contains("1.32934038818e0"));
}

#[test]
fn radius_scales_with_gamma() {
    halfspin()
        .args(["radius", "--lambda", "2", "--m2", "1", "--gamma", "16"])
        .assert()
        .success()
        .stdout(predicate::str::contains("3.32335097045e-1"));
}

#[test]
fn radius_depends_only_on_the_magnitude_of_m() {
    let plus = halfspin()
        .args(["radius", "--lambda", "2", "--m2", "1"])
        .output()
        .unwrap();
    let minus = halfspin()
        .args(["radius", "--lambda", "2", "--m2", "-1"])
        .output()
        .unwrap();
    assert!(plus.status.success() && minus.status.success());
    assert_eq!(plus.stdout, minus.stdout);
}

#[test]
fn density_rejects_odd_lambda_with_the_rule_name() {
    halfspin()
        .args(["density", "--lambda", "3", "--m2", "1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("OddLambda"));
}

#[test]
fn density_profile_starts_at_zero() {
    halfspin()
        .args(["density", "--lambda", "2", "--m2", "1", "--npoints", "400"])
        .assert()
        .success()
        .stdout(predicate::str::starts_with(
            "r,density\n0.00000000000e0,0.00000000000e0\n",
        ));
}

#[test]
fn density_json_reports_four_rings() {
    let out = halfspin()
        .args([
            "density",
            "--lambda",
            "10",
            "--m2",
            "3",
            "--npoints",
            "500",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["ring_count"], 4);
    assert_eq!(doc["peak_radii"].as_array().unwrap().len(), 4);
}

#[test]
fn density_csv_writes_a_sidecar() {
    let dir = std::env::temp_dir().join("halfspin-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("profile.csv");
    halfspin()
        .args([
            "density",
            "--lambda",
            "4",
            "--m2",
            "1",
            "--npoints",
            "400",
            "--output",
            path.to_str().unwrap(),
        ])
        .assert()
        .success();
    let sidecar = dir.join("profile.csv.meta.json");
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(meta["ring_count"], 2);
    assert!(meta["norm_constant"].as_f64().unwrap() > 0.0);
    std::fs::remove_file(&path).unwrap();
    std::fs::remove_file(&sidecar).unwrap();
}

#[test]
fn output_is_byte_deterministic() {
    let args = [
        "density",
        "--lambda",
        "6",
        "--m2",
        "1",
        "--npoints",
        "300",
        "--format",
        "json",
    ];
    let first = halfspin().args(args).output().unwrap();
    let second = halfspin().args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn eigfn_vanishes_at_the_origin() {
    halfspin()
        .args(["eigfn", "--lambda", "2", "--m2", "1", "--r", "0"])
        .assert()
        .success()
        .stdout(predicate::str::contains(
            "0.00000000000e0,0.00000000000e0,0.00000000000e0",
        ));
}

#[test]
fn eigfn_point_value_carries_the_phase() {
    let out = halfspin()
        .args([
            "eigfn", "--lambda", "2", "--m2", "1", "--r", "1.0", "--theta", "1.0", "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let re = doc["psi_re"].as_f64().unwrap();
    let im = doc["psi_im"].as_f64().unwrap();
    // R(1)/sqrt(pi) = e^{-1/2}/sqrt(pi), phase 2m theta = 1 rad
    let radial = (-0.5f64).exp() / std::f64::consts::PI.sqrt();
    assert!((re - radial * 1.0f64.cos()).abs() < 1e-10);
    assert!((im - radial * 1.0f64.sin()).abs() < 1e-10);
}

#[test]
fn verify_small_cutoff_exits_two() {
    halfspin()
        .args(["verify", "--nmax", "3"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("CutoffTooSmall"));
}

#[test]
fn verify_passes_on_defaults() {
    halfspin()
        .args(["verify", "--nmax", "6", "--lambda-max", "6"])
        .assert()
        .success()
        .stdout(predicate::str::contains("verification passed"));
}

#[test]
fn verify_full_sweep_passes() {
    let out = halfspin()
        .args(["verify", "--nmax", "8", "--gamma", "0.5,1,2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // the per-gamma check set appears three times
    assert_eq!(text.matches("s2-identity").count(), 3);
    assert!(!text.contains("FAIL"));
}

#[test]
fn table_caps_the_block_count() {
    halfspin()
        .args(["table", "--lambda-max", "2000000"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("BadBound"));
}

#[test]
fn eigfn_rejects_nonfinite_angles() {
    halfspin()
        .args([
            "eigfn", "--lambda", "2", "--m2", "1", "--r", "1.0", "--theta", "nan",
        ])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("BadAngle"));
}

#[test]
fn oracle_count_is_bounded_by_the_grid() {
    halfspin()
        .args([
            "oracle",
            "--m2",
            "1",
            "--count",
            "5000",
            "--npoints",
            "2000",
        ])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("GridTooCoarse"));
}

#[test]
fn oracle_fd_reports_small_errors() {
    let out = halfspin()
        .args(["oracle", "--m2", "1", "--count", "3", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for row in doc["rows"].as_array().unwrap() {
        assert!(row["abs_error"].as_f64().unwrap() < 1e-3);
    }
}

#[test]
fn oracle_series_cross_checks_one_state() {
    let out = halfspin()
        .args([
            "oracle", "--kind", "series", "--lambda", "6", "--m2", "3", "--format", "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["laguerre_residual"].as_f64().unwrap() < 1e-12);
    assert!(doc["fd_deviation"].as_f64().unwrap() < 1e-3);
    assert!(doc["norm_residual"].as_f64().unwrap() < 1e-12);
}
