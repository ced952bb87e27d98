use std::process::{Command, Output};

fn cp2q(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cp2q")).args(args).env_remove("CP2Q_Q0").output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn qnum_int() {
    let out = cp2q(&["qnum", "int", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["value"], "q + q^-1");
    let out = cp2q(&["qnum", "fact", "3"]);
    assert_eq!(json(&out)["results"]["value"], "q^3 + 2*q + 2*q^-1 + q^-3");
}

#[test]
fn reduce_commutes_generators() {
    let out = cp2q(&["reduce", "--alg", "s5q", "z2 z1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["normal_form"], "q^-1 z1 z2");
}

#[test]
fn h0_dimension() {
    let out = cp2q(&["h0", "--N", "1", "--degree", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["results"]["certificate"]["dimension"], 3);
    assert_eq!(r["pass"], true);
}

#[test]
fn mirrored_frame_verifies() {
    let out = cp2q(&["frame", "verify", "--N", "-2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(cp2q(&["reduce", "--alg", "s5q", "z9"]).status.code(), Some(2));
    assert_eq!(cp2q(&["reduce", "--alg", "s5q", "z1 +"]).status.code(), Some(2));
    assert_eq!(cp2q(&["qnum", "binom", "3"]).status.code(), Some(2));
    assert_eq!(cp2q(&["suite", "14"]).status.code(), Some(2));
    assert_eq!(cp2q(&["haar", "--degree", "1", "--q", "1.5"]).status.code(), Some(2));
}

#[test]
fn failing_checks_exit_1() {
    // the stated closed forms for j2 >= 1 do not match
    assert_eq!(cp2q(&["ring", "verify", "--maxN", "1"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["haar", "--degree", "1", "--probe", "4"];
    let (a, b) = (cp2q(&args), cp2q(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let tsv = cp2q(&["--format", "tsv", "suite", "2"]);
    assert!(String::from_utf8(tsv.stdout).unwrap().starts_with("suite\tcheck\tpass"));
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("cp2q-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let d = dir.to_str().unwrap();
    let first = cp2q(&["--cache", d, "reduce", "--alg", "suq3", "u21 u11"]);
    assert!(dir.join("suq3.cache").exists() && dir.join("s5q.cache").exists());
    let second = cp2q(&["--cache", d, "reduce", "--alg", "suq3", "u21 u11"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(json(&second)["results"], json(&cp2q(&["reduce", "--alg", "suq3", "u21 u11"]))["results"]);
    std::fs::remove_dir_all(&dir).unwrap();
}
