use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detdeform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("detdeform-{}-{name}", std::process::id()));
    std::fs::File::create(&path)
        .and_then(|mut f| f.write_all(text.as_bytes()))
        .unwrap();
    path
}

#[test]
fn invariants_report() {
    let o = run(&["invariants", "--n", "4", "--b", "0,0", "--a", "2,2,2,2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["lambda_c"], 101);
    assert_eq!(v["K"]["K_3"], 0);
    assert_eq!(v["dimW_formula"], 101);
    assert_eq!(v["ell"]["ell_2"], 6);
    assert_eq!(v["nonempty"], true);

    let o = run(&["invariants", "--n", "3", "--b", "0,0", "--a", "1,1,1,1"]);
    let v = json(&o);
    assert_eq!(v["dimW_formula"], 13);
    assert_eq!(v["exception_family"], true);
}

#[test]
fn bad_input_exits_2() {
    for args in [
        vec!["invariants", "--n", "4", "--b", "0,0", "--a", "2,2"],
        vec!["invariants", "--n", "1", "--b", "0,0", "--a", "1,1,1"],
        vec!["analyze", "--random", "3", "--n", "3", "--b", "0,0", "--a", "1,1,1", "--field", "Q"],
        vec!["analyze", "--random", "3", "--n", "3", "--b", "0,0", "--a", "1,1,1", "--field", "15"],
        vec!["analyze", "/nonexistent/file.mat"],
        vec!["reproduce", "nope"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).contains("error"), "{args:?}");
    }
}

#[test]
fn file_diagnostic_names_the_line() {
    let path = temp_file(
        "bad.mat",
        "n 3\nfield 32003\nb 0,0\na 1,1,1\nentry 3 1 x0\n",
    );
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));

    let path = temp_file("inhomog.mat", "n 3\nb 0,0\na 1,1,1\nentry 1 1 x0^2\n");
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn analyze_twisted_cubic_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/twisted_cubic.mat");
    let o = run(&["analyze", path]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["hilbert_polynomial"], "3*v + 1");
    assert_eq!(v["genus"], 0);
    assert_eq!(v["hom_IX_A"], 12);
    assert_eq!(v["verdict"], "COMPONENT_CERTIFIED");
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn refusal_is_a_successful_run() {
    let path = temp_file(
        "repeated.mat",
        "n 3\nb 0,0\na 1,1,1\nentry 1 0 x0\nentry 1 1 x0\nentry 1 2 x2\n\
         entry 2 0 x1\nentry 2 1 x1\nentry 2 2 x3\n",
    );
    let o = run(&["analyze", path.to_str().unwrap(), "--no-exactness"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(json(&o)["verdict"], "NOT_STANDARD_DETERMINANTAL");
}

#[test]
fn reproduce_succeeds() {
    for id in ["5.10", "exception-points"] {
        let o = run(&["reproduce", id]);
        assert!(o.status.success(), "{id}: {}", stderr(&o));
        assert!(!stderr(&o).contains("MISMATCH"));
    }
}

#[test]
fn empty_survey() {
    let o = run(&["survey", "--count", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("agreements 0/0"));
}

#[test]
fn survey_is_deterministic() {
    let args = ["survey", "--count", "3", "--seed", "5", "--t", "2", "--c", "2", "--max-degree", "2"];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success(), "{}", stderr(&first));
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains("agreements 3/3"), "{}", stdout(&first));
}
