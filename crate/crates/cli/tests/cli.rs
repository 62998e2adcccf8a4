use std::process::{Command, Output};

fn chow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chow")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn degree_of_sigma1_sixth() {
    let o = chow(&["degree", "--ring", "a3_tilde", "sigma1^6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-4103/144");
}

#[test]
fn hilbert_of_genus_two() {
    let o = chow(&["hilbert", "--ring", "a2_tilde"]);
    assert_eq!(stdout(&o).trim(), "1,2,2,1");
    let o = chow(&["hilbert", "--ring", "a3_tilde"]);
    assert_eq!(stdout(&o).trim(), "1,2,4,6,4,2,1");
}

#[test]
fn verify_table_3b_as_json() {
    let o = chow(&["verify", "--scope", "table:3b", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 25);
    assert_eq!(v["summary"]["pass"], 25);
    assert_eq!(v["summary"]["fail"], 0);
    for c in v["checks"].as_array().unwrap() {
        for field in ["id", "citation", "expected", "computed", "status"] {
            assert!(c.get(field).is_some(), "missing {field}");
        }
    }
}

#[test]
fn verify_is_deterministic() {
    let a = chow(&["verify", "--format", "json"]);
    let b = chow(&["verify", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn pushforwards() {
    assert_eq!(stdout(&chow(&["push", "--map", "x2_tilde", "t^3"])).trim(), "(1/4)*sigma1");
    assert_eq!(stdout(&chow(&["push", "--map", "x2_tilde", "t^2"])).trim(), "2");
    let o = chow(&["push", "--map", "torelli", "delta1"]);
    assert_eq!(stdout(&o).trim(), "0");
    assert_eq!(chow(&["push", "--map", "nowhere", "t"]).status.code(), Some(2));
}

#[test]
fn normal_form_and_solve() {
    assert_eq!(
        stdout(&chow(&["nf", "--ring", "a1_tilde", "sigma1"])).trim(),
        stdout(&chow(&["nf", "--ring", "a1_tilde", "12*lambda1"])).trim()
    );
    let o =
        chow(&["solve-class", "--ring", "a3_tilde", "--deg", "1", "--values", "1/181440,0", "--probes", "lambda1^5,lambda1^3*sigma1^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "lambda1");
    let o = chow(&["pairing", "--ring", "a3_tilde", "--deg", "1", "--rows", "lambda1,sigma1", "--cols", "lambda1^5,lambda1^3*sigma1^2"]);
    let text = stdout(&o);
    assert!(text.contains("1/181440") && text.contains("1/720"), "{text}");
}

#[test]
fn tables_reemit() {
    let o = chow(&["tables", "--id", "3g"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/1451520"));
    assert_eq!(chow(&["tables", "--id", "9z"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let o = chow(&["degree", "--ring", "a3_tilde", "lambda1 + tau"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("tau"));
    assert_eq!(chow(&["degree", "--ring", "a3_tilde", "lambda1"]).status.code(), Some(2));
    assert_eq!(chow(&["verify", "--scope", "nonsense"]).status.code(), Some(2));
    assert_eq!(chow(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(chow(&["hilbert", "--ring", "a4"]).status.code(), Some(2));
}

#[test]
fn failing_verification_exits_one() {
    let dir = std::env::temp_dir().join(format!("chow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.json");
    std::fs::write(
        &path,
        r#"{"name": "wrong", "generators": [{"name": "x", "degree": 1}], "relations": ["x^3"],
            "normalization": {"element": "x^2", "value": "1"},
            "expected": {"hilbert": [1, 1, 1], "degrees": {"x^2": "2"}}}"#,
    )
    .unwrap();
    let spec = path.to_str().unwrap();
    let o = chow(&["--spec", spec, "verify", "--scope", "wrong"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL wrong/degree/x^2"), "{text}");
    assert!(text.contains("1 failed"), "{text}");
    assert_eq!(stdout(&chow(&["--spec", spec, "degree", "--ring", "wrong", "x^2"])).trim(), "1");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(chow(&["--spec", spec, "hilbert", "--ring", "a1_tilde"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
