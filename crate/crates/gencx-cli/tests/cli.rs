//! End-to-end tests of the `gencx` binary: fixture runs, exit codes, and
//! byte-level determinism of the JSON report.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gencx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gencx"))
        .args(args)
        .env_remove("GENCX_SEED")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    path.to_str().expect("utf-8 path").to_string()
}

#[test]
fn fixtures_pass_their_checks() {
    for (args, fixture_name) in [
        (vec!["check-dirac"], "symplectic_r2.json"),
        (vec!["check-dirac"], "complex_r2.json"),
        (vec!["gc-check"], "symplectic_r2.json"),
        (vec!["gc-check"], "complex_r2.json"),
        (vec!["gc-check"], "mixed_r4.json"),
        (vec!["poisson-quotient"], "symplectic_r2.json"),
        (vec!["pushforward"], "pushforward_q3.json"),
        (vec!["gk-from-bihermitian"], "kaehler_r2.json"),
        (vec!["gk-to-tamed"], "kaehler_r2.json"),
        (vec!["tamed-to-gk"], "hyperkaehler_r4.json"),
        (vec!["holo-poisson"], "hyperkaehler_r4.json"),
        (vec!["lie-example"], "so4_borel.json"),
    ] {
        let path = fixture(fixture_name);
        let mut full = args.clone();
        full.push("--input");
        full.push(&path);
        let out = gencx(&full);
        assert!(
            out.status.success(),
            "{args:?} on {fixture_name} failed: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn shipped_lie_example_passes() {
    let out = gencx(&["lie-example", "so4"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("multiplication_map"));
    assert!(text.contains("0 failed"));
}

#[test]
fn graph_invariance_counterexample_flags() {
    let pure = fixture("remark37_pure20.json");
    let out = gencx(&["graph-invariance", "--input", &pure, "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json report");
    assert_eq!(report["result"]["graph_invariance"], serde_json::json!(false));
    assert_eq!(report["result"]["gc_linear"], serde_json::json!(true));

    let type11 = fixture("remark37_type11.json");
    let out = gencx(&["graph-invariance", "--input", &type11, "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json report");
    assert_eq!(report["result"]["graph_invariance"], serde_json::json!(true));
    assert_eq!(report["result"]["gc_linear"], serde_json::json!(true));
}

#[test]
fn hyperkaehler_bivector_in_output() {
    let path = fixture("hyperkaehler_r4.json");
    let out = gencx(&["holo-poisson", "--input", &path, "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json report");
    // η₊ = −½ I: the (0, 1) entry of the left multiplication by i is −1,
    // so −½ I has "1/2" there.
    assert_eq!(report["result"]["eta_plus"][0][1], serde_json::json!("1/2"));
    assert_eq!(report["result"]["eta_plus"][1][0], serde_json::json!("-1/2"));
}

#[test]
fn exit_codes_distinguish_parse_and_domain_failures() {
    // Unreadable file.
    let out = gencx(&["check-dirac", "--input", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));

    // Malformed JSON.
    let dir = std::env::temp_dir().join("gencx-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad_json = dir.join("bad.json");
    std::fs::write(&bad_json, b"{ not json").unwrap();
    let out = gencx(&["check-dirac", "--input", bad_json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    // Structurally fine JSON that fails validation: span{e1, e1*} is not
    // isotropic.
    let bad_dirac = dir.join("bad_dirac.json");
    std::fs::write(
        &bad_dirac,
        br#"{"v_dim": 1, "field": "Q", "basis": [["1", "0"], ["0", "1"]]}"#,
    )
    .unwrap();
    let out = gencx(&["check-dirac", "--input", bad_dirac.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("isotropic"));

    // Missing input.
    let out = gencx(&["check-dirac"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seed_flag_and_environment_override() {
    let out = gencx(&["lie-example", "--seed", "7", "--json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json report");
    assert_eq!(report["seed"], serde_json::json!(7));

    let out = Command::new(env!("CARGO_BIN_EXE_gencx"))
        .args(["lie-example", "--seed", "7", "--json"])
        .env("GENCX_SEED", "99")
        .output()
        .expect("binary runs");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json report");
    assert_eq!(report["seed"], serde_json::json!(99));
}

#[test]
fn verify_all_is_deterministic_and_green() {
    let first = gencx(&["verify-all", "--seed", "42", "--json"]);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stdout));
    let second = gencx(&["verify-all", "--seed", "42", "--json"]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "reports must be byte-identical");

    let report: serde_json::Value = serde_json::from_slice(&first.stdout).expect("json report");
    assert_eq!(report["exit_code"], serde_json::json!(0));
    assert_eq!(report["seed"], serde_json::json!(42));
    let checks = report["checks"].as_array().expect("checks array");
    assert_eq!(checks.len(), 26);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    // Sorted by name.
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
}
