use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn definitions() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../definitions")
}

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-brauer"))
        .args(args)
        .env("HOPF_BRAUER_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_products_passes_and_writes_json() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report.json");
    let o = run(dir.path(), &["verify", "--suite", "products", "--seed", "7", "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report = read_json(&out);
    assert_eq!(report["suite"], "products");
    assert_eq!(report["seed"], 7);
    assert_eq!(report["summary"]["failed"], 0);
    assert!(report["summary"]["total"].as_u64().unwrap() >= 20);
}

#[test]
fn verify_records_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let records = |file: &str| {
        let path = dir.path().join(file);
        let o = run(dir.path(), &["verify", "--suite", "transports", "--seed", "3", "--json", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        read_json(&path)["suites"][0]["records"].clone()
    };
    assert_eq!(records("a.json"), records("b.json"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
}

#[test]
fn classify_reports_beta_and_azumaya_failure() {
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("c.json");
    let o = run(dir.path(), &["classify", "1", "2", "0", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("β = 1"), "{}", stdout(&o));
    assert_eq!(read_json(&json)["azumaya"], true);

    let o = run(dir.path(), &["classify", "1", "1", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not H4-Azumaya"));

    let o = run(dir.path(), &["classify", "1", "0", "0"]);
    assert!(stdout(&o).contains("β = 0"));
}

#[test]
fn negative_and_fractional_arguments_parse() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["conjugate", "1", "2", "3", "-1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("C(1;-1,-6)"), "{}", stdout(&o));
    let o = run(dir.path(), &["transport", "psi", "1", "0", "1", "--by", "3"]);
    assert!(stdout(&o).contains("C(5/2;3,1)"), "{}", stdout(&o));
    let o = run(dir.path(), &["classify", "1", "x", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn transport_psi_without_parameter_is_rejected() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["transport", "psi", "1", "0", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn product_prints_the_presentation() {
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("p.json");
    let o = run(dir.path(), &["product", "1", "2", "0", "-1", "1", "3", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("X² = 1, Y² = -1"), "{}", stdout(&o));
    assert_eq!(read_json(&json)["mult"].as_array().unwrap().len(), 4);
}

#[test]
fn define_validates_and_caches() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["define", definitions().join("h4.json").to_str().unwrap(), "--name", "sweedler"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(dir.path().join("sweedler.json").is_file());
}

#[test]
fn yd_file_without_coaction_is_a_schema_error() {
    let dir = TempDir::new().unwrap();
    let mut def = read_json(&definitions().join("c_1_2_3.json"));
    def.as_object_mut().unwrap().remove("coaction");
    let path = dir.path().join("broken.json");
    std::fs::write(&path, def.to_string()).unwrap();
    let o = run(dir.path(), &["define", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("coaction"));
}

#[test]
fn broken_associativity_fails_the_math_check() {
    let dir = TempDir::new().unwrap();
    let mut def = read_json(&definitions().join("c_1_2_3.json"));
    def["mult"][0][1][1] = Value::String("2".into());
    let path = dir.path().join("bad.json");
    std::fs::write(&path, def.to_string()).unwrap();
    let o = run(dir.path(), &["define", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(!dir.path().join("c_1_2_3.json").exists());
}

#[test]
fn theorem61_from_file_and_cache() {
    let dir = TempDir::new().unwrap();
    let file = definitions().join("e2_c_1_2_3.json");
    let o = run(dir.path(), &["theorem61", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("the three agree:            yes"));

    run(dir.path(), &["define", definitions().join("e2_c_1_2_3_module.json").to_str().unwrap(), "--name", "m"]);
    let o = run(dir.path(), &["theorem61", "m"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = run(dir.path(), &["theorem61", definitions().join("c_1_2_3.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn counterexample_and_kernel_witness_pass() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["counterexample", "2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("closure fails"));
    let o = run(dir.path(), &["kernel-witness"]);
    assert_eq!(o.status.code(), Some(0));
}
