use std::path::PathBuf;
use std::process::{Command, Output};

fn weil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weil")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("weil-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn spectrum_of_f5_cube() {
    let o = weil(&["spectrum", "5", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for v in ["(5 + sqrt(5))/2", "(5 - sqrt(5))/2", "-sqrt(5)", "order 2"] {
        assert!(text.contains(v), "missing {v} in\n{text}");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn spectrum_json_parses() {
    let o = weil(&["spectrum", "9", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["record"]["q"], 9);
    assert_eq!(v["record"]["s"], 5);
    assert!(v["record"]["is_rational"].as_bool().unwrap());
}

#[test]
fn bad_input_exits_with_usage_code() {
    assert_eq!(weil(&["verify", "5", "2"]).status.code(), Some(2));
    assert_eq!(weil(&["spectrum", "6", "1"]).status.code(), Some(2));
    assert_eq!(weil(&["spectrum", "4:1,0,1", "1"]).status.code(), Some(2));
    assert_eq!(weil(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(weil(&["qcount", "7", "5", "--t", "1", "--a", "9", "--b", "1"]).status.code(), Some(2));
}

#[test]
fn qcount_with_cross_checks() {
    let o = weil(&["qcount", "7", "5", "--t", "1,6", "--a", "0", "--b", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("Q = 1\n"), "{text}");
    assert!(!text.contains("MISMATCH"));

    let o = weil(&["qcount", "8", "3", "--t", "1,2,3", "--a", "-1", "--b", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lift to k + 1"));
}

#[test]
fn algebra_check_filter() {
    let o = weil(&["algebra-check", "13", "5", "--lemma", "bracket"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() >= 2);
    assert!(text.lines().all(|l| l.starts_with("PASS") && l.contains("bracket")), "{text}");
    assert_eq!(weil(&["algebra-check", "13", "5", "--lemma", "no-such-check"]).status.code(), Some(2));
}

#[test]
fn verify_passes_for_small_pairs() {
    for (f, s) in [("5", "3"), ("8", "3"), ("3^2", "5"), ("16", "7")] {
        let o = weil(&["verify", f, s]);
        assert_eq!(o.status.code(), Some(0), "{f} {s}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn survey_output_is_reproducible() {
    let a = scratch("a.csv");
    let b = scratch("b.csv");
    let c = scratch("c.json");
    let run = |path: &PathBuf, extra: &[&str]| {
        let mut args = vec!["survey", "--q-max", "64", "--seed", "42", "--out", path.to_str().unwrap()];
        args.extend_from_slice(extra);
        let o = weil(&args);
        assert_eq!(o.status.code(), Some(0));
        let summary = String::from_utf8(o.stderr).unwrap();
        assert!(summary.contains("irrational 4-valued: (5, 3)"), "{summary}");
        std::fs::read(path).unwrap()
    };
    let first = run(&a, &["--jobs", "1"]);
    let second = run(&b, &["--jobs", "4"]);
    assert_eq!(first, second);
    assert!(String::from_utf8(first).unwrap().starts_with("q,p,n,s,"));

    let json = run(&c, &["--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&json).unwrap();
    assert!(rows["rows"].as_array().is_some_and(|r| !r.is_empty()));
    assert!(rows["summary"].is_object());
}
