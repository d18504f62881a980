//! End-to-end runs of the `salemlat` binary: exit codes, certificate shape,
//! and byte-for-byte determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn salemlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_salemlat"))
        .args(args)
        .env_remove("SALEMLAT_SEED")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("certificate is JSON")
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const LEHMER: &str = "1,1,0,-1,-1,-1,-1,-1,0,1,1";

#[test]
fn salem_test_certifies_lehmer() {
    let o = salemlat(&["salem-test", "--poly", LEHMER]);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    assert_eq!(v["schema"], "salem-lattice/1");
    assert_eq!(v["command"]["subcommand"], "salem-test");
    assert_eq!(v["command"]["inputs"]["poly"], LEHMER);
    assert_eq!(v["result"]["salem"], true);
    assert!(o.stdout.ends_with(b"}\n"));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["schema", "tool_version", "command", "result", "checks"]);
}

#[test]
fn output_is_byte_deterministic() {
    let a = salemlat(&["salem-test", "--poly", LEHMER]);
    let b = salemlat(&["salem-test", "--poly", LEHMER]);
    assert_eq!(a.stdout, b.stdout);
    let a = salemlat(&["salem-enum", "--degree", "4", "--trace-min", "0", "--trace-max", "2"]);
    let b = salemlat(&["salem-enum", "--degree", "4", "--trace-min", "0", "--trace-max", "2"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn non_salem_fails_checks() {
    // x^4 + 1 is cyclotomic
    let o = salemlat(&["salem-test", "--poly", "1,0,0,0,1"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json_of(&o)["result"]["salem"], false);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&salemlat(&[])), 2);
    assert_eq!(code(&salemlat(&["frobnicate"])), 2);
    assert_eq!(code(&salemlat(&["salem-test"])), 2);
    assert_eq!(code(&salemlat(&["salem-test", "--poly", "1,x,1"])), 2);
    assert_eq!(code(&salemlat(&["salem-enum", "--degree", "5", "--trace-min", "0", "--trace-max", "1"])), 2);
    let help = salemlat(&["--help"]);
    assert_eq!(code(&help), 0);
    assert!(String::from_utf8_lossy(&help.stdout).contains("k3-run"));
}

#[test]
fn io_errors() {
    let o = salemlat(&["lattice-info", "--lattice", "/nonexistent/lattice.json"]);
    assert_eq!(code(&o), 3);
    assert!(!o.stderr.is_empty());
    let o = salemlat(&["salem-test", "--poly", LEHMER, "--output", "/nonexistent/dir/out.json"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn lattice_commands() {
    let dir = TempDir::new().unwrap();
    let e8 = salemlat::latticecore::catalog::e8_negative().to_json();
    let path = write(&dir, "e8.json", &e8);
    let o = salemlat(&["lattice-vectors", "--lattice", s(&path), "--norm", "-2"]);
    assert_eq!(code(&o), 0);
    let v = json_of(&o);
    assert_eq!(v["result"]["count"], 240);
    assert_eq!(v["result"]["pairs"], 120);

    let o = salemlat(&["lattice-info", "--lattice", s(&path)]);
    assert_eq!(code(&o), 0);

    let bad = write(&dir, "bad.json", &json!({ "gram": [[1, 2], [3, 4]] }));
    assert_eq!(code(&salemlat(&["lattice-info", "--lattice", s(&bad)])), 2);
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(code(&salemlat(&["lattice-info", "--lattice", s(&garbage)])), 2);
}

#[test]
fn isometry_classification() {
    let dir = TempDir::new().unwrap();
    let u = write(&dir, "u.json", &json!({ "gram": [[0, 1], [1, 0]] }));
    let swap = write(&dir, "swap.json", &json!({ "matrix": [[0, 1], [1, 0]] }));
    let o = salemlat(&["isom-classify", "--lattice", s(&u), "--matrix", s(&swap)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_of(&o)["result"]["order"], 2);

    let shear = write(&dir, "shear.json", &json!({ "matrix": [[1, 1], [0, 1]] }));
    let o = salemlat(&["isom-classify", "--lattice", s(&u), "--matrix", s(&shear)]);
    assert_eq!(code(&o), 1);
    let v = json_of(&o);
    assert_eq!(v["checks"][0]["name"], "isometry");
    assert_eq!(v["checks"][0]["pass"], false);
    assert!(v["checks"][0]["witness"].is_array());
}

#[test]
fn k3_run_configs() {
    let dir = TempDir::new().unwrap();
    let std_cfg = write(&dir, "std.json", &salemlat::k3pipeline::PrimeSelection::standard().to_json());
    let out = dir.path().join("k3.json");
    let o = salemlat(&["k3-run", "--config", s(&std_cfg), "--output", s(&out)]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["result"]["group_rank"], 18);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let small = write(&dir, "small.json", &salemlat::k3pipeline::PrimeSelection::small_scaling().to_json());
    let o = salemlat(&["k3-run", "--config", s(&small), "--skip-extension"]);
    assert_eq!(code(&o), 1);
    let v = json_of(&o);
    let definite = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "Nbar_negative_definite")
        .unwrap();
    assert_eq!(definite["pass"], false);
    assert!(definite["witness"].is_array());

    let mut dup = salemlat::k3pipeline::PrimeSelection::standard().to_json();
    dup["p_list"][1] = dup["p_list"][0].clone();
    let dup = write(&dir, "dup.json", &dup);
    assert_eq!(code(&salemlat(&["k3-run", "--config", s(&dup)])), 2);
}

#[test]
fn rank_command() {
    let dir = TempDir::new().unwrap();
    let vs = write(&dir, "v.json", &json!({ "vectors": [[2, 4, 0], [1, 2, 0], [0, 0, 3]] }));
    let o = salemlat(&["rank", "--vectors", s(&vs)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_of(&o)["result"]["rank"], 2);
}
