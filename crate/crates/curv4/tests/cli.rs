//! Binary contract tests: exit codes, envelope shape, golden catalog
//! examples, and output determinism, all through the real executable.

use serde_json::Value;
use std::process::{Command, Output};

fn curv4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curv4"))
        .args(args)
        .env_remove("CURV4_SEED")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8");
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("stdout is JSON ({e}): {text}"))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn tmp(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("curv4-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn decompose_recovers_the_fubini_study_spectra() {
    let out = curv4(&["decompose", "--catalog", "cp2", "--scale", "S=12"]);
    assert_eq!(code(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["command"], "decompose");
    assert_eq!(doc["config"]["catalog"], "cp2");
    let plus = doc["result"]["weyl_plus_spectrum"].as_array().unwrap();
    let expect = [-1.0, -1.0, 2.0];
    for (got, want) in plus.iter().zip(expect) {
        assert!((got.as_f64().unwrap() - want).abs() < 1e-12);
    }
    for x in doc["result"]["weyl_minus_spectrum"].as_array().unwrap() {
        assert!(x.as_f64().unwrap().abs() < 1e-12);
    }
    assert!((doc["result"]["s"].as_f64().unwrap() - 12.0).abs() < 1e-12);
}

#[test]
fn decompose_on_the_identity_operator_has_no_weyl_part() {
    let rows: Vec<Vec<f64>> = (0..6)
        .map(|i| (0..6).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let path = tmp(
        "identity.json",
        &serde_json::json!({ "matrix": rows }).to_string(),
    );
    let out = curv4(&["decompose", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["norms"]["weyl_part"].as_f64().unwrap(), 0.0);
    assert_eq!(doc["result"]["norms"]["ricci_part"].as_f64().unwrap(), 0.0);
    let _ = std::fs::remove_file(path);
}

#[test]
fn decompose_rejects_a_bianchi_violation_with_diagnostics() {
    let mut rows: Vec<Vec<f64>> = (0..6)
        .map(|i| (0..6).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    rows[0][5] = 0.3;
    rows[5][0] = 0.3;
    let path = tmp(
        "bianchi.json",
        &serde_json::json!({ "matrix": rows }).to_string(),
    );
    let out = curv4(&["decompose", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("Bianchi"), "stderr: {err}");
    assert!(err.contains("residual"), "stderr: {err}");
    let _ = std::fs::remove_file(path);
}

#[test]
fn decompose_rejects_malformed_documents() {
    let path = tmp("shape.json", r#"{"matrix": [1.0, 2.0, 3.0]}"#);
    let out = curv4(&["decompose", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let _ = std::fs::remove_file(path);
}

#[test]
fn extremes_on_the_unit_product_hit_the_known_corners() {
    let out = curv4(&["extremes", "--catalog", "product_s2s2", "--params", "1,1"]);
    assert_eq!(code(&out), 0);
    let r = &json_of(&out)["result"];
    assert!((r["kmax"]["value"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!(r["kmin"]["value"].as_f64().unwrap().abs() < 1e-9);
    assert!((r["kperp_max"]["value"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert!(r["kperp_min"]["value"].as_f64().unwrap().abs() < 1e-9);
    assert!(r["cross_check"]["max_gap"].as_f64().unwrap() < 1e-6);
}

#[test]
fn extremes_on_the_round_sphere_are_all_equal() {
    let out = curv4(&["extremes", "--catalog", "sphere4", "--params", "1"]);
    assert_eq!(code(&out), 0);
    let r = &json_of(&out)["result"];
    for key in ["kmin", "kmax", "kperp_min", "kperp_max"] {
        assert!(
            (r[key]["value"].as_f64().unwrap() - 1.0).abs() < 1e-9,
            "{key}"
        );
    }
}

#[test]
fn extremes_routes_agree_within_sampling_resolution() {
    let opt = json_of(&curv4(&[
        "extremes",
        "--catalog",
        "cp2",
        "--method",
        "optimize",
    ]));
    let smp = json_of(&curv4(&[
        "extremes",
        "--catalog",
        "cp2",
        "--method",
        "sample",
        "--samples",
        "100000",
    ]));
    for key in ["kmin", "kmax", "kperp_min", "kperp_max"] {
        let a = opt["result"][key]["value"].as_f64().unwrap();
        let b = smp["result"][key]["value"].as_f64().unwrap();
        assert!((a - b).abs() < 1e-3, "{key}: optimize {a} vs sample {b}");
    }
}

#[test]
fn sampling_shortfall_is_not_a_cross_check_failure() {
    // At 2000 points the sampler misses the exact corners of the unit
    // product by far more than the cross-check tolerance; only a sampled
    // value escaping the closed-form K⊥ range would be a violation.
    let out = curv4(&[
        "extremes",
        "--catalog",
        "product_s2s2",
        "--method",
        "sample",
        "--samples",
        "2000",
    ]);
    assert_eq!(code(&out), 0);
    let doc = json_of(&out);
    let gaps = &doc["result"]["cross_check"]["gaps"];
    for key in ["kperp_min_domination", "kperp_max_domination"] {
        let g = gaps[key].as_f64().unwrap();
        assert!(g <= 1e-12, "{key} reported {g}");
    }
    let max = doc["result"]["kmax"]["value"].as_f64().unwrap();
    assert!(max < 1.0, "2000 samples should not attain the corner exactly");
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let fail = curv4(&[
        "check",
        "--catalog",
        "product_s2s2",
        "--k",
        "1",
        "--lambda1",
        "2",
        "--conditions",
        "2",
    ]);
    assert_eq!(code(&fail), 1);
    let doc = json_of(&fail);
    assert_eq!(doc["result"]["any_pass"], false);

    let pass = curv4(&[
        "check",
        "--catalog",
        "cp2",
        "--scale",
        "S=4",
        "--k",
        "1",
        "--lambda1",
        "1.3334",
        "--conditions",
        "2",
    ]);
    assert_eq!(code(&pass), 0);
    assert_eq!(json_of(&pass)["result"]["any_pass"], true);

    let sphere = curv4(&[
        "check",
        "--catalog",
        "sphere4",
        "--lambda1",
        "4",
        "--conditions",
        "3",
    ]);
    assert_eq!(code(&sphere), 0);

    let missing_k = curv4(&[
        "check",
        "--catalog",
        "sphere4",
        "--lambda1",
        "4",
        "--conditions",
        "2",
    ]);
    assert_eq!(code(&missing_k), 2);
}

#[test]
fn invariants_match_the_catalog_topology() {
    for (kind, chi, tau) in [("sphere4", 2.0, 0.0), ("rp4", 1.0, 0.0), ("cp2", 3.0, 1.0)] {
        let out = curv4(&["invariants", "--catalog", kind]);
        assert_eq!(code(&out), 0);
        let r = &json_of(&out)["result"];
        assert!(
            (r["invariants"]["chi"].as_f64().unwrap() - chi).abs() < 1e-8,
            "{kind}"
        );
        assert!(
            (r["invariants"]["tau"].as_f64().unwrap() - tau).abs() < 1e-8,
            "{kind}"
        );
    }
}

#[test]
fn invariants_require_a_volume_for_raw_tensors() {
    let rows: Vec<Vec<f64>> = (0..6)
        .map(|i| (0..6).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let path = tmp(
        "novolume.json",
        &serde_json::json!({ "matrix": rows }).to_string(),
    );
    let out = curv4(&["invariants", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let _ = std::fs::remove_file(path);
}

#[test]
fn export_round_trips_through_the_tensor_reader() {
    let path = std::env::temp_dir().join(format!("curv4-cli-{}-export.json", std::process::id()));
    let out = curv4(&[
        "export",
        "--catalog",
        "product_s2s2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["result"]["basis"], "lex-eij");
    assert_eq!(doc["result"]["metadata"]["quotient_factor"], 1);

    let inv = curv4(&["invariants", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&inv), 0);
    let r = &json_of(&inv)["result"];
    assert!((r["invariants"]["chi"].as_f64().unwrap() - 4.0).abs() < 1e-8);
    assert!((r["invariants"]["tau"].as_f64().unwrap()).abs() < 1e-8);
    let _ = std::fs::remove_file(path);
}

#[test]
fn export_requires_a_catalog_model() {
    let out = curv4(&["export"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_suites_falsify_nothing_at_full_case_counts() {
    let lemma26 = curv4(&[
        "verify", "--suite", "lemma26", "-n", "100000", "--format", "json",
    ]);
    assert_eq!(code(&lemma26), 0);
    let doc = json_of(&lemma26);
    assert_eq!(doc["result"]["total_falsifications"], 0);
    assert_eq!(doc["result"]["suites"][0]["cases"], 100_000);

    let cert = curv4(&[
        "verify",
        "--suite",
        "certificate",
        "-n",
        "10000",
        "--format",
        "json",
    ]);
    assert_eq!(code(&cert), 0);
    assert_eq!(json_of(&cert)["result"]["total_falsifications"], 0);
}

#[test]
fn verify_einstein_suite_reports_the_euler_coefficient() {
    let out = curv4(&["verify", "--suite", "einstein"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("3.4409117953391051"), "table: {text}");
}

#[test]
fn verify_rejects_unknown_suites() {
    let out = curv4(&["verify", "--suite", "nope"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn einstein_reports_the_chain_and_rejects_out_of_range() {
    let out = curv4(&["einstein", "--alpha", "0.9"]);
    assert_eq!(code(&out), 0);
    let r = &json_of(&out)["result"];
    assert_eq!(r["contradiction"], true);
    assert!(r["beta"].as_f64().unwrap() < 0.0);
    assert!(r["euler_coefficient"].as_f64().unwrap() < 4.0);

    let bad = curv4(&["einstein", "--alpha", "1.5"]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8(bad.stderr).unwrap().contains("1.5"));
}

#[test]
fn identical_config_and_seed_give_byte_identical_output() {
    let args = [
        "extremes",
        "--catalog",
        "cp2",
        "--method",
        "sample",
        "--seed",
        "7",
    ];
    let (a, b) = (curv4(&args), curv4(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn seed_resolution_prefers_flag_over_environment() {
    let env_only = Command::new(env!("CARGO_BIN_EXE_curv4"))
        .args(["extremes", "--catalog", "sphere4"])
        .env("CURV4_SEED", "9")
        .output()
        .expect("binary runs");
    assert_eq!(json_of(&env_only)["config"]["seed"], 9);

    let flag_wins = Command::new(env!("CARGO_BIN_EXE_curv4"))
        .args(["extremes", "--catalog", "sphere4", "--seed", "3"])
        .env("CURV4_SEED", "9")
        .output()
        .expect("binary runs");
    assert_eq!(json_of(&flag_wins)["config"]["seed"], 3);

    let default = curv4(&["extremes", "--catalog", "sphere4"]);
    assert_eq!(json_of(&default)["config"]["seed"], 42);
}

#[test]
fn every_envelope_echoes_its_resolved_config() {
    let out = json_of(&curv4(&["check", "--catalog", "sphere4", "--lambda1", "4"]));
    let config = out["config"].as_object().unwrap();
    assert_eq!(config["catalog"], "sphere4");
    assert_eq!(config["lambda1"], 4.0);
    assert_eq!(config["mode"], "biorthogonal");
    assert_eq!(config["format"], "json");
    // Without k the condition needing it is skipped, and the echo shows
    // exactly which ones ran.
    assert_eq!(config["conditions"], serde_json::json!([1, 3, 4]));
}

#[test]
fn floats_are_printed_with_seventeen_significant_digits() {
    let out = curv4(&["decompose", "--catalog", "sphere4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1.0000000000000000e0"), "output: {text}");
}
