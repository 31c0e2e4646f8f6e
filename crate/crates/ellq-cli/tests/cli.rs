use std::path::PathBuf;
use std::process::{Command, Output};

use ellq_core::exactq::{ratfunc_from_factored_report, ratfunc_to_factored_report};
use serde_json::Value;

fn ellq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellq")).args(args).output().expect("ellq runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let o = ellq(&a);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("ellq-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn sign_fake_degree_text_and_json() {
    let o = ellq(&["fake", "--type", "G2", "--label", "phi1,6"]);
    assert!(stdout(&o).contains("(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)"));
    let v = json(&["fake", "--type", "G2", "--label", "phi1,6"]);
    let e = &v["elliptic_fake_degree"];
    assert_eq!(e["text"], "(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)");
    let f = ratfunc_from_factored_report(e).unwrap();
    assert_eq!(&ratfunc_to_factored_report(&f), e);
}

#[test]
fn group_classes_schema() {
    let v = json(&["group", "--type", "F4", "--classes"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 25);
    assert_eq!(rows.iter().map(|r| r["size"].as_u64().unwrap()).sum::<u64>(), 1152);
    assert_eq!(rows.iter().filter(|r| r["elliptic"] == true).count(), 9);
    for r in rows {
        assert_eq!(r["rep"].as_array().unwrap().len(), 4);
        assert_eq!(r["charpoly"].as_array().unwrap().len(), 5);
    }
}

#[test]
fn efd_closed_form() {
    let o = ellq(&["efd", "--type", "B", "--n", "4", "--lambda", "2,1,1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("raw:") && s.contains("factored:") && s.contains("agrees"));
    assert_eq!(ellq(&["efd", "--type", "B", "--n", "4", "--lambda", "2,1"]).status.code(), Some(2));
    assert_eq!(ellq(&["efd", "--type", "G2", "--lambda", "1"]).status.code(), Some(2));
}

#[test]
fn fourier_s3_is_labelled_8x8() {
    let v = json(&["fourier", "--gamma", "S3"]);
    assert_eq!(v["labels"].as_array().unwrap().len(), 8);
    assert_eq!(v["matrix"][0][0], "1/6");
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["involution"], true);
}

#[test]
fn verify_exit_codes() {
    let o = ellq(&["verify", "g2-formal"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().filter(|l| l.starts_with("DISCREPANCY")).count(), 2);
    let v = json(&["verify", "sp4"]);
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "PASS"));
    let cyc = json(&["verify", "cyc"]);
    assert_eq!(cyc.as_array().unwrap().len(), 5);
    assert_eq!(ellq(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn missing_fixture_fails() {
    let d = scratch("missing");
    std::fs::write(d.join("g2_formal_degrees.json"), "{\"provenance\": \"DERIVED: broken\"}").unwrap();
    let o = ellq(&["--fixtures", d.to_str().unwrap(), "verify", "g2-formal"]);
    std::fs::remove_dir_all(&d).unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn empty_result_is_an_empty_array() {
    let d = scratch("empty");
    std::fs::write(d.join("unipotent_data.json"), r#"{"provenance": "DERIVED: empty", "groups": [], "cases": []}"#).unwrap();
    let o = ellq(&["--json", "--fixtures", d.to_str().unwrap(), "mx"]);
    std::fs::remove_dir_all(&d).unwrap();
    assert_eq!(stdout(&o).trim(), "[]");
}

#[test]
fn mx_case() {
    let v = json(&["mx", "--fixture", "g2-a1-s1"]);
    assert_eq!(v[0]["status"], "PASS");
    assert_eq!(v[0]["computed"]["text"], "q * (q-1)^2 / (Phi2^2 Phi6)");
    assert_eq!(ellq(&["mx", "--fixture", "nope"]).status.code(), Some(2));
}

#[test]
fn affine_g2_stages() {
    let v = json(&["affine", "g2", "--classes"]);
    let mu: Vec<&str> = v["classes"].as_array().unwrap().iter().map(|c| c["mu"].as_str().unwrap()).collect();
    assert_eq!(mu, vec!["1/6", "1/6", "1/12", "1/4", "1/3"]);
    assert!(v.get("nu").is_none());
    let v = json(&["affine", "g2", "--ef"]);
    assert_eq!(v["ef"]["normalization"], "operator");
    assert_eq!(v["ef"]["affine"]["symmetric"], true);
    assert_eq!(v["ef"]["affine"]["matches_stored"], false);
    let v = json(&["affine", "g2", "--formal"]);
    assert_eq!(v["formal"][3]["formal_degree"]["text"], "1/3 * q * (q-1)^2 / (Phi3 Phi6)");
    let v = json(&["affine", "g2", "--nu"]);
    assert_eq!(v["nu"][4]["nu"]["text"], "(q-1)^2 / Phi3");
}

#[test]
fn independence_single_type() {
    let v = json(&["independence", "--type", "B", "--n", "5"]);
    assert_eq!(v[0]["rank"], 6);
    assert_eq!(v[0]["elliptic_classes"], 7);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ellq(&[]).status.code(), Some(2));
    assert_eq!(ellq(&["bogus"]).status.code(), Some(2));
    assert_eq!(ellq(&["group", "--type", "Q7"]).status.code(), Some(2));
    assert_eq!(ellq(&["--fixtures", "/definitely/not/here", "verify", "cyc"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = ellq(&["--json", "verify", "g2-affine"]);
    let b = ellq(&["--json", "verify", "g2-affine"]);
    assert_eq!(a.stdout, b.stdout);
}
