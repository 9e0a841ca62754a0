use std::process::{Command, Output};

use serde_json::Value;

fn as_genus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_as-genus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = as_genus(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn real_example() {
    let v = json(&["--field", "2", "--d", "1/(t^2+t)"]);
    assert_eq!(v["schema"], "as-genus/1");
    assert_eq!(v["classification"], "Real");
    assert_eq!(v["m"], 2);
    assert_eq!(v["lambda1"], 1);
    assert_eq!(v["lambda2"], 0);
    assert_eq!(
        v["redei_matrix"]["labels"],
        serde_json::json!(["t", "t + 1"])
    );
    assert!(v["zeta"].is_null());
}

#[test]
fn imaginary_example_with_zeta() {
    let v = json(&["--field", "2", "--d", "1/t + t", "--zeta"]);
    assert_eq!(v["classification"], "RamifiedImaginary");
    assert_eq!(v["zeta"]["genus"], 1);
    assert_eq!(v["zeta"]["point_counts"], serde_json::json!([4, 8]));
    assert_eq!(v["zeta"]["class_number"], 4);
    assert_eq!(v["zeta"]["divisibility"]["pass"], true);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| as_genus(args).status.code().unwrap();
    assert_eq!(code(&["--field", "2", "--d", "t"]), 0);
    assert_eq!(code(&["--field", "2", "--d", "1/(t"]), 2);
    assert_eq!(code(&["--field", "10", "--d", "t"]), 2);
    assert_eq!(code(&["--field", "2", "--d", "t^2 + t"]), 3);
    assert_eq!(code(&["--field", "4", "--d", "g"]), 4);
    assert_eq!(
        code(&["--field", "2", "--d", "1/t + t", "--zeta", "--budget", "2"]),
        5
    );
    let out = as_genus(&["--field", "4", "--d", "g"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not geometric"));
}

#[test]
fn text_is_the_default() {
    let out = as_genus(&["--field", "3", "--d", "-1/t^2 + t", "--zeta"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("class        ramified imaginary"));
    assert!(text.contains("Redei matrix"));
    assert!(text.contains("divisibility 3 | "));
}

#[test]
fn modulus_and_seed_flags() {
    let v = json(&["--field", "2^3", "--modulus", "1,1,0,1", "--d", "g/t + t"]);
    assert_eq!(v["field"]["modulus"], serde_json::json!([1, 1, 0, 1]));
    let a = json(&["--field", "5", "--d", "1/(t^4+2) + t^3", "--seed", "1"]);
    let b = json(&["--field", "5", "--d", "1/(t^4+2) + t^3", "--seed", "2"]);
    assert_eq!(a["normalized"], b["normalized"]);
    assert_eq!(a["redei_matrix"], b["redei_matrix"]);
}

#[test]
fn normalized_echo_reparses_to_the_same_extension() {
    let first = json(&["--field", "9", "--d", "1/t^3 + g*t^6 + 1/(t^2+1)"]);
    let d = first["normalized"]["d"].as_str().unwrap();
    let second = json(&["--field", "9", "--d", d]);
    assert_eq!(second["normalized"]["d"], first["normalized"]["d"]);
    assert_eq!(second["normalized"]["witness"], "0");
    assert_eq!(second["lambda2"], first["lambda2"]);
}
