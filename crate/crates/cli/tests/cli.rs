use std::process::{Command, Output};

fn nsgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsgp"))
        .args(args)
        .env_remove("NSGP_TRUNC")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn info_reports_frobenius_and_apery_set() {
    let out = nsgp(&["info", "6,9,20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("frobenius: 43"), "{text}");
    assert!(text.contains("apery(6): 0,9,20,29,40,49"), "{text}");
    assert!(text.contains("minimal: yes"), "{text}");

    let out = nsgp(&["info", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("frobenius: -1"));
}

#[test]
fn info_json() {
    let out = nsgp(&["info", "6,9,12,20", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["frobenius"], 43);
    assert_eq!(v["minimal_generators"], serde_json::json!([6, 9, 20]));
    assert_eq!(v["minimally_generated"], false);
    assert_eq!(v["generator_gap_gcd"], 1);
}

#[test]
fn validation_errors_exit_2() {
    let out = nsgp(&["info", "4,6"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("gcd must be 1"), "{err}");
    assert!(err.starts_with("error[gcd_not_one]:"), "{err}");
    assert_eq!(err.lines().count(), 1);

    assert_eq!(nsgp(&["info", "0,3"]).status.code(), Some(2));
    assert_eq!(nsgp(&["info", "3,x"]).status.code(), Some(2));
    assert_eq!(
        nsgp(&["augmented", "9,10,23", "--form", "apery"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nsgp(&["augmented", "9,10,23", "--form", "closed2gen"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn augmented_chihat_text() {
    let out = nsgp(&[
        "augmented",
        "9,10,23",
        "--invariant",
        "max",
        "--form",
        "chihat",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "-2t^46 - 4t^50 - 5t^63 + 5t^73 + 6t^86 - t^90 + t^113"
    );
    assert!(text.contains("(1 - t^9)(1 - t^10)(1 - t^23)"));
}

#[test]
fn hilbert_forms() {
    let out = nsgp(&["hilbert", "6,9,20", "--form", "apery"]);
    assert_eq!(
        stdout(&out).lines().next().unwrap(),
        "1 + t^9 + t^20 + t^29 + t^40 + t^49"
    );
    let out = nsgp(&["hilbert", "6,9,20", "--form", "chi"]);
    assert_eq!(
        stdout(&out).lines().next().unwrap(),
        "1 - t^18 - t^60 + t^78"
    );
    let out = nsgp(&["hilbert", "6,9,20", "--form", "apery", "--p", "9"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn numerator_json_shape() {
    let out = nsgp(&["augmented", "9,11", "--form", "chihat", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["form"], "chihat");
    assert_eq!(v["denominator"], serde_json::json!([9, 11]));
    assert_eq!(v["terms"], serde_json::json!([[99, -9]]));
    assert_eq!(v["stable"], true);

    let out = nsgp(&[
        "augmented",
        "9,11",
        "--form",
        "closed2gen",
        "--invariant",
        "min",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["terms"], serde_json::json!([[99, -11]]));
    assert!(v["certified_to"].is_null());
}

#[test]
fn trunc_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_nsgp"))
        .args(["augmented", "9,11", "--form", "chihat", "--json"])
        .env("NSGP_TRUNC", "500")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["certified_to"], 500);

    // an explicit flag wins
    let out = Command::new(env!("CARGO_BIN_EXE_nsgp"))
        .args([
            "augmented",
            "9,11",
            "--form",
            "chihat",
            "--json",
            "--trunc",
            "600",
        ])
        .env("NSGP_TRUNC", "500")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["certified_to"], 600);
}

#[test]
fn dissonance_json() {
    let out = nsgp(&["dissonance", "9,10,23", "--invariant", "max"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["D_formula"], 71);
    assert_eq!(v["D_bruteforce"], 71);
    assert_eq!(v["harmonic"], false);
    assert_eq!(v["invariant"], "max");
}

#[test]
fn dissonance_rejects_length_count() {
    for inv in ["numlens", "linf"] {
        let out = nsgp(&["dissonance", "9,10,23", "--invariant", inv]);
        assert_eq!(out.status.code(), Some(2));
        assert!(stderr(&out).contains("maximum and minimum length only"));
    }
}

#[test]
fn complex_faces() {
    let out = nsgp(&["complex", "6,9,20", "18"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("faces: ∅, {6}, {9}"), "{text}");
    assert!(text.contains("chi: -1"), "{text}");

    let out = nsgp(&["complex", "6,9,20", "18", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["faces"], serde_json::json!([[], [6], [9]]));
    assert_eq!(v["chi"], -1);

    let out = nsgp(&["complex", "9,11", "99", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["chihat_f"], -9);
}

#[test]
fn glue_report() {
    let out = nsgp(&["glue", "6,10,15", "5,6", "23", "27", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v["generators"],
        serde_json::json!([135, 138, 162, 230, 345])
    );
    assert_eq!(v["validity"]["d1_in_s2"], true);
    assert_eq!(v["hilbert_identity"]["passed"], true);
    assert_eq!(v["harmonic_gluing"]["passed"], false);

    let out = nsgp(&["glue", "6,10,15", "5,7", "23", "27"]);
    assert!(stdout(&out).contains("d1 in S2: false"));

    let out = nsgp(&["glue", "2,3", "1", "3", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[gcd_not_one]"));
}

#[test]
fn unstable_numerator_exits_3() {
    let out = nsgp(&[
        "augmented",
        "9,10,23",
        "--form",
        "chi",
        "--trunc",
        "60",
        "--window",
        "60",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).starts_with("error[not_stable]"));
}

#[test]
fn enumeration_guard_exits_4() {
    let out = nsgp(&[
        "augmented",
        "9,10,23",
        "--invariant",
        "linf",
        "--form",
        "chi",
        "--cap",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).starts_with("error[explosion_guard]"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "augmented",
        "6,9,20",
        "--invariant",
        "numlens",
        "--form",
        "chi",
        "--json",
    ];
    assert_eq!(nsgp(&args).stdout, nsgp(&args).stdout);
}
