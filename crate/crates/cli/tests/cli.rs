use std::process::{Command, Output};

fn k43(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k43"))
        .args(args)
        .env_remove("K43_PRECISION")
        .env_remove("K43_FORMAT")
        .output()
        .expect("run k43")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cosets_match_golden_file() {
    let o = k43(&["cosets"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), include_str!("golden/cosets.txt"));
}

#[test]
fn cosets_json_and_csv() {
    let js: serde_json::Value = serde_json::from_str(&stdout(&k43(&["cosets", "--format", "json"]))).unwrap();
    let reps = js["representatives"].as_array().unwrap();
    assert_eq!(reps.len(), 32);
    assert_eq!(reps[0]["label"], "000000");
    assert_eq!(reps[16]["rep"], "n0");
    assert_eq!(reps[16]["label"], "111111");
    let csv = stdout(&k43(&["cosets", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 33);
}

#[test]
fn labels_and_types() {
    assert_eq!(stdout(&k43(&["label", "p1"])).trim(), "011000");
    assert_eq!(stdout(&k43(&["label", "n12"])).trim(), "111001");
    assert_eq!(stdout(&k43(&["classify", "p0", "p3", "n12"])).trim(), "224");
    assert_eq!(stdout(&k43(&["classify", "p0", "p1", "p2"])).trim(), "222");
    assert_eq!(stdout(&k43(&["classify", "p0", "n4", "p4"])).trim(), "246");
}

#[test]
fn configuration_errors_exit_with_2() {
    assert_eq!(k43(&["label", "x7"]).status.code(), Some(2));
    assert_eq!(k43(&["--precision", "32", "cosets"]).status.code(), Some(2));
    assert_eq!(k43(&["--tol", "1e-60", "verify", "two-term"]).status.code(), Some(2));
    assert_eq!(k43(&["classify", "p0", "p0", "p1"]).status.code(), Some(2));
    assert_eq!(k43(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn sampling_is_deterministic_and_on_the_hyperplane() {
    let a = stdout(&k43(&["sample", "--points", "3", "--seed", "5", "--format", "json"]));
    let b = stdout(&k43(&["sample", "--points", "3", "--seed", "5", "--format", "json"]));
    assert_eq!(a, b);
    let js: serde_json::Value = serde_json::from_str(&a).unwrap();
    for p in js["points"].as_array().unwrap() {
        let x: k43::hyper_eval::HyperplanePoint = serde_json::from_value(p.clone()).unwrap();
        assert!(x.constraint_residual() <= 1e-30);
        assert!(x.is_generic(1e-3));
    }
}

#[test]
fn csv_and_json_carry_identical_numbers() {
    let js: serde_json::Value =
        serde_json::from_str(&stdout(&k43(&["sample", "--points", "2", "--format", "json"]))).unwrap();
    let csv = stdout(&k43(&["sample", "--points", "2", "--format", "csv"]));
    for (p, line) in js["points"].as_array().unwrap().iter().zip(csv.lines().skip(1)) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], p["precision"].to_string());
        let coords: Vec<&str> = p["coords"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect();
        assert_eq!(&fields[1..], &coords[..]);
    }
}

#[test]
fn single_triple_certificate_round_trips() {
    let o = k43(&[
        "verify",
        "three-term",
        "--triple",
        "p0",
        "p3",
        "n12",
        "--points",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let cert = k43::relation_engine::RelationCertificate::from_json(&stdout(&o)).unwrap();
    assert_eq!(cert.hamming_type.to_string(), "224");
    assert_eq!(cert.verified, Some(true));
    let pts: Vec<_> = cert.residuals.iter().map(|r| r.point.clone()).collect();
    let ev = k43::relation_engine::KEvaluator::new(k43::relation_engine::EvalPath::Series);
    let again = k43::relation_engine::verify_relation(cert.clone(), &pts, 1e-8, &ev).unwrap();
    assert_eq!(again.residuals, cert.residuals);
}

#[test]
fn terminating_scope_passes() {
    let o = k43(&["verify", "terminating", "--points", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn barnes_check_passes() {
    let o = k43(&["barnes", "check", "--points", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("barnes-lemma"));
}

#[test]
fn subsampled_three_term_run() {
    let o = k43(&["verify", "three-term", "--subsample", "2", "--points", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("certificates 10 verified 10"));
}
