//! End-to-end runs of the `pargal` binary over the fixture documents.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn pargal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pargal")).args(args).env_remove("PARGAL_ENUM_CAP").output().expect("runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

/// A scratch file unique to this test process.
fn scratch(name: &str, content: &str) -> String {
    let dir = std::env::temp_dir().join(format!("pargal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.display().to_string()
}

#[test]
fn verify_on_ex_b_passes() {
    let out = pargal(&["verify", "--input", &fixture("exB.json")]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(code(&out), 0, "{text}");
    assert!(text.contains("PASS phi2 o phi1 = [R]"));
    assert!(text.contains("empirical"));
    assert!(text.trim_end().ends_with("status: pass"));
}

#[test]
fn cohomology_with_oracle_on_ex_a() {
    let out = pargal(&["cohomology", "--degree", "1", "--oracle", "--format", "json", "--input", &fixture("exA.json")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!((v["result"]["z_order"].as_u64(), v["result"]["b_order"].as_u64(), v["result"]["h_order"].as_u64()), (Some(3), Some(3), Some(1)));
    assert_eq!(v["checks"][0]["name"], "linear and oracle agree");
    assert_eq!(v["checks"][0]["passed"], true);
}

#[test]
fn nontrivial_h2_reported_with_two_representatives() {
    let out = pargal(&["cohomology", "--degree", "2", "--oracle", "--format", "json", "--input", &fixture("trivial_c2_f3_twisted.json")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["h_order"], 2);
    assert_eq!(v["result"]["representatives"].as_array().unwrap().len(), 2);
}

#[test]
fn json_output_is_deterministic_and_timing_is_opt_in() {
    let args = ["phi3", "--format", "json", "--input", &fixture("exA.json")];
    let a = pargal(&args);
    let b = pargal(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("timing_ms").is_none());
    let t = pargal(&["phi3", "--format", "json", "--timing", "--input", &fixture("exA.json")]);
    assert!(json(&t)["timing_ms"].is_number());
}

#[test]
fn human_output_echoes_config() {
    let out = pargal(&["cohomology", "--degree", "1", "--input", &fixture("exA.json")]);
    let first = String::from_utf8_lossy(&out.stdout).lines().next().unwrap().to_string();
    assert!(first.starts_with("pargal cohomology"), "{first}");
    assert!(first.contains("degree=1") && first.contains("cap=1000000"), "{first}");
}

#[test]
fn unreadable_or_malformed_input_exits_2() {
    let garbage = scratch("garbage.json", "{ not json");
    assert_eq!(code(&pargal(&["validate", "--input", &garbage])), 2);
    let unknown = scratch("unknown.json", &std::fs::read_to_string(fixture("exA.json")).unwrap().replacen('{', "{\"extra\": 1,", 1));
    assert_eq!(code(&pargal(&["validate", "--input", &unknown])), 2);
    assert_eq!(code(&pargal(&["validate", "--input", "/nonexistent/x.json"])), 2);
    assert_eq!(code(&pargal(&["validate"])), 2);
    let usage = pargal(&["frobnicate"]);
    assert_eq!(code(&usage), 2);
    assert!(!usage.stderr.is_empty());
}

#[test]
fn broken_action_fails_validation_with_witness() {
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(fixture("exA.json")).unwrap()).unwrap();
    // α_σ(x) = 1 breaks additivity and bijectivity
    for pair in doc["action"][1]["alpha"].as_array_mut().unwrap() {
        if pair[0] == serde_json::json!([[0, 1]]) {
            pair[1] = serde_json::json!([[1, 0]]);
        }
    }
    let path = scratch("broken.json", &doc.to_string());
    let out = pargal(&["validate", "--input", &path]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL alpha_σ additivity: (1, x)"), "{text}");
}

#[test]
fn cap_exits_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_pargal"))
        .args(["cohomology", "--degree", "2", "--oracle", "--input", &fixture("exA.json")])
        .env("PARGAL_ENUM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    assert_eq!(code(&pargal(&["verify", "--input", &fixture("klein_gf4cubed.json")])), 3);
    let partial = pargal(&["crossed", "--format", "json", "--input", &fixture("klein_gf4cubed.json")]);
    assert_eq!(code(&partial), 3);
    assert_eq!(json(&partial)["status"], "partial");
}

#[test]
fn non_galois_input_is_a_precondition_failure() {
    assert_eq!(code(&pargal(&["phi4", "--input", &fixture("trivial_c2_f3_twisted.json")])), 1);
}

#[test]
fn exit_codes_over_fixtures() {
    let cases: &[(&str, &[&str], i32)] = &[
        ("exA.json", &["validate"], 0),
        ("exB.json", &["validate"], 0),
        ("c3_f2cubed.json", &["validate"], 0),
        ("klein_gf4cubed.json", &["validate"], 0),
        ("trivial_c2_f3_twisted.json", &["validate"], 0),
        ("exA.json", &["crossed"], 0),
        ("trivial_c2_f3_twisted.json", &["crossed"], 0),
        ("exB.json", &["pics", "--oracle"], 0),
        ("exB.json", &["phi1"], 0),
        ("exB.json", &["phi2"], 0),
        ("exB.json", &["phi3"], 0),
        ("exB.json", &["phi4"], 0),
        ("exB.json", &["phi6"], 0),
        ("c3_f2cubed.json", &["verify"], 0),
        ("exA.json", &["coords"], 0),
        ("exB.json", &["trace"], 0),
        ("exB.json", &["invariants"], 0),
    ];
    for (file, args, expected) in cases {
        let mut all: Vec<&str> = args.to_vec();
        let path = fixture(file);
        all.extend(["--input", &path]);
        let out = pargal(&all);
        assert_eq!(code(&out), *expected, "{file} {args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn representatives_feed_back_into_phi1() {
    let out = pargal(&["cohomology", "--degree", "1", "--format", "json", "--input", &fixture("exA.json")]);
    let rep = json(&out)["result"]["representatives"][0].clone();
    let path = scratch("rep.json", &rep.to_string());
    let out = pargal(&["phi1", "--cocycle", &path, "--input", &fixture("exA.json")]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn cochain_for_another_extension_is_rejected() {
    let out = pargal(&["cohomology", "--degree", "1", "--format", "json", "--input", &fixture("exA.json")]);
    let rep = json(&out)["result"]["representatives"][0].clone();
    let path = scratch("foreign.json", &rep.to_string());
    assert_eq!(code(&pargal(&["phi1", "--cocycle", &path, "--input", &fixture("exB.json")])), 2);
}

#[test]
fn symbolic_pics_document() {
    let out = pargal(&["pics", "--symbolic", &fixture("pics_chain.json"), "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["elements"], 5);
    assert_eq!(v["result"]["z1"].as_array().unwrap().len(), 2);
}

#[test]
fn crossed_multiply_and_detect() {
    let out = pargal(&["crossed", "--multiply", "[[1,[1]]]", "[[1,[1]]]", "--detect", "--format", "json", "--input", &fixture("trivial_c2_f3_twisted.json")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    // δ_g δ_g = ω(g,g) δ_1 = 2 δ_1
    assert_eq!(v["result"]["product"], serde_json::json!([[0, [2]]]));
    assert!(v["result"]["coboundary_witness"].is_null());
    let table = pargal(&["crossed", "--table", "--format", "json", "--input", &fixture("exA.json")]);
    assert_eq!(json(&table)["result"]["table"].as_array().unwrap().len(), 256);
}
