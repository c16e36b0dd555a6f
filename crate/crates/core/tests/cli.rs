use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;
use smm_core::cli::run;
use tempfile::TempDir;

const Z2: &str = r#"{"size":2,"table":[[0,1],[1,0]],"unit":0,"T":[0,1],"Q":[0,1],"mu":1,"eta":1,"delta":1,"eps":1}"#;
const Z2_BAD_ETA: &str =
    r#"{"size":2,"table":[[0,1],[1,0]],"unit":0,"T":[0,1],"Q":[0,1],"mu":1,"eta":0,"delta":1,"eps":1}"#;
const NON_ASSOC: &str =
    r#"{"size":3,"table":[[0,1,2],[1,2,0],[2,0,0]],"unit":0,"T":[0,1,2],"Q":[0,1,2],"mu":0,"eta":0,"delta":0,"eps":0}"#;

fn smm(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("smm").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(smm(&["check", &write(&dir, "z2.json", Z2)]).0, 0);
    let (code, out, _) = smm(&["check", &write(&dir, "bad.json", Z2_BAD_ETA)]);
    assert_eq!(code, 1);
    assert!(out.contains("SMM"), "{out}");
    let (code, _, err) = smm(&["check", &write(&dir, "na.json", NON_ASSOC)]);
    assert_eq!(code, 2);
    assert!(err.contains("associative"), "{err}");
    assert_eq!(smm(&["check", "/nonexistent/instance.json"]).0, 2);
    assert_eq!(smm(&["no-such-command"]).0, 2);
}

#[test]
fn enumerate_counts() {
    for (max, total) in [(1, 1), (2, 4)] {
        let (code, out, _) = smm(&["--format", "json", "enumerate", "--max", &max.to_string()]);
        assert_eq!(code, 0);
        let last: Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
        assert_eq!(last["summary"]["total"], total, "{out}");
        assert_eq!(out.lines().count(), total + 1);
    }
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let z2 = write(&dir, "z2.json", Z2);
    for args in [
        vec!["--format", "json", "enumerate", "--max", "3"],
        vec!["--format", "json", "report", z2.as_str()],
        vec!["suite", z2.as_str()],
    ] {
        assert_eq!(smm(&args), smm(&args), "{args:?}");
    }
}

#[test]
fn prove_then_verify() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("d.txt");
    let (code, out, _) = smm(&["prove", "eps*T(a)*eta", "a", "--out", file.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(smm(&["verify", file.to_str().unwrap()]).0, 0);

    let text = fs::read_to_string(&file).unwrap();
    let tampered = text.replacen("fwd", "bwd", 1);
    assert_ne!(text, tampered);
    let bad = write(&dir, "bad.txt", &tampered);
    assert_eq!(smm(&["verify", &bad]).0, 1);
}

#[test]
fn unprovable_equation_and_countermodel_bound() {
    let small = ["prove", "mu", "delta", "--states", "2000", "--countermodel"];
    let (code, out, _) = smm(&[&small[..], &["--max", "2"]].concat());
    assert_eq!(code, 1);
    assert!(out.contains("no countermodel found within bound"), "{out}");
    let (code, out, _) = smm(&[&small[..], &["--max", "3"]].concat());
    assert_eq!(code, 1);
    assert!(out.contains("refuted on an instance of size 3"), "{out}");
}

#[test]
fn suite_over_enumerated_instances() {
    let (code, out, _) = smm(&["suite", "--all-enumerated", "--max", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("suite: pass\n"));
}

#[test]
fn suite_rejects_mutated_instance() {
    let dir = TempDir::new().unwrap();
    let (code, out, _) = smm(&["--format", "json", "suite", &write(&dir, "bad.json", Z2_BAD_ETA)]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], false);
    let axioms = &v["instances"][0]["families"][0];
    assert_eq!(axioms["family"], "axioms");
    assert_eq!(axioms["pass"], false);
}

#[test]
fn binary_exit_status() {
    let dir = TempDir::new().unwrap();
    let bin = Path::new(env!("CARGO_BIN_EXE_smm"));
    let status = |file: &str| Command::new(bin).arg("check").arg(file).output().unwrap().status.code();
    assert_eq!(status(&write(&dir, "z2.json", Z2)), Some(0));
    assert_eq!(status(&write(&dir, "bad.json", Z2_BAD_ETA)), Some(1));
    assert_eq!(status(&write(&dir, "na.json", NON_ASSOC)), Some(2));
}
