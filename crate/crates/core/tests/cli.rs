use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_flagcode"))
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    let value = if stdout.is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&stdout).unwrap()
    };
    (out.status.code().unwrap(), value, stderr)
}

fn error_kind(stderr: &str) -> String {
    let v: Value = serde_json::from_str(stderr).unwrap();
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn check_sic_on_the_closed_example() {
    let (code, v, _) = run(&["check-sic", &fixture("sec3_C")]);
    assert_eq!(code, 0);
    assert_eq!(v["sic"], true);
}

#[test]
fn equiv_prunes_on_cardinality() {
    let (code, v, _) = run(&["equiv", &fixture("sec4_C"), &fixture("sec4_Cprime"), "--mode", "linear"]);
    assert_eq!(code, 0);
    assert_eq!(v["equivalent"], false);
    assert_eq!(v["pruned_by"], "cardinality");
}

#[test]
fn empty_file_is_a_parse_error() {
    let (code, v, stderr) = run(&["distance", "--flag", &fixture("empty")]);
    assert_eq!((code, v), (2, Value::Null));
    assert_eq!(error_kind(&stderr), "ParseError");
}

#[test]
fn unknown_inputs() {
    let (code, _, stderr) = run(&["bogus"]);
    assert_eq!((code, error_kind(&stderr).as_str()), (2, "UnknownCommand"));
    let (code, _, stderr) = run(&["fixtures", "nonexistent"]);
    assert_eq!((code, error_kind(&stderr).as_str()), (2, "UnknownFixture"));
    let (code, _, stderr) = run(&["sic-closure", &fixture("sec3_not_genset_product")]);
    assert_eq!((code, error_kind(&stderr).as_str()), (2, "NotGenerating"));
}

#[test]
fn too_large_exits_with_three() {
    let (code, _, stderr) = run(&["aut", &fixture("sec3_C"), "--max-candidates", "100"]);
    assert_eq!((code, error_kind(&stderr).as_str()), (3, "TooLarge"));
    let (code, _, stderr) = run(&["aut", &fixture("sec5_n10_type47")]);
    assert_eq!((code, error_kind(&stderr).as_str()), (3, "TooLarge"));
}

#[test]
fn fixtures_round_trip_through_the_binary() {
    let (code, v, _) = run(&["fixtures", "sec5_n10_type47"]);
    assert_eq!(code, 0);
    assert_eq!(v["n"], 10);
    assert_eq!(v["payload"]["flags"].as_array().unwrap().len(), 3);
    let on_disk: Value = serde_json::from_str(&std::fs::read_to_string(fixture("sec5_n10_type47")).unwrap()).unwrap();
    assert_eq!(v, on_disk);
    let (code, v, _) = run(&["fixtures", "frobenius_cdc", "--q", "2"]);
    assert_eq!((code, v), (2, Value::Null));
}

#[test]
fn classify_reports_the_type_conditions() {
    let (code, v, _) = run(&["classify", &fixture("sec5_n10_type47")]);
    assert_eq!(code, 0);
    assert_eq!(v["increasing"]["holds"], true);
    assert_eq!(v["decreasing"]["holds"], false);
    assert_eq!((v["t_a"].as_u64(), v["t_b"].as_u64()), (Some(4), Some(7)));
    assert_eq!(v["tb_lt_2ta"]["holds"], true);
    assert_eq!(v["two_tb_lt_n_plus_ta"]["holds"], false);
}

#[test]
fn automorphism_listings() {
    let (code, v, _) = run(&["aut", "--via-projected", &fixture("sec4_aut_equal_nonsic")]);
    assert_eq!(code, 0);
    assert_eq!(v["aut_size"], 2);
    assert_eq!(v["projected_sizes"], serde_json::json!([8, 8]));
    assert_eq!(v["equal"], true);
    assert_eq!(v["sic"], false);
    let (_, v, _) = run(&["saut", &fixture("frobenius_cdc"), "--elements-limit", "10"]);
    assert_eq!(v["aut_size"], 1728);
    assert_eq!(v["elements"], Value::Null);
}

#[test]
fn sic_closure_emits_a_document() {
    let (code, v, _) = run(&["sic-closure", &fixture("sec3_example_genset")]);
    assert_eq!(code, 0);
    let on_disk: Value = serde_json::from_str(&std::fs::read_to_string(fixture("sec3_C")).unwrap()).unwrap();
    assert_eq!(v, on_disk);
}

#[test]
fn random_profiles() {
    let (code, v, _) = run(&[
        "random",
        "--seed",
        "1",
        "--n",
        "6",
        "--type",
        "1,2",
        "--size",
        "4",
        "--profile",
        "odfc-attempt",
    ]);
    assert_eq!(code, 0);
    let path = std::env::temp_dir().join("flagcode-cli-random.json");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let (_, odfc, _) = run(&["odfc-check", path.to_str().unwrap()]);
    assert_eq!(odfc["direct"], true);
    let (code, _, stderr) = run(&["random", "--n", "3", "--type", "1", "--size", "8"]);
    assert_eq!((code, error_kind(&stderr).as_str()), (2, "Infeasible"));
    let (code, _, stderr) = run(&["random", "--n", "3", "--type", "1", "--size", "2", "--profile", "wild"]);
    assert_eq!((code, error_kind(&stderr).as_str()), (2, "ParseError"));
}
