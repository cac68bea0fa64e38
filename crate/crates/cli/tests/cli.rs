//! End-to-end runs of the `spinorbit` binary against pinned reports.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const SCHEME_EXAMPLE: &str = "()x1+(1,3,4,5)x1+(1,2,3,4)x2+(1,5)x3+(2,3,4,5)x3+(2,3)x4+(4,5)x4+(1,2,4,5)x4";
/// `p1 + (1,4)x1`, a mixed element.
const MIXED: &str = "-(3,5)x1+(1,2,4,5)x2-(2,4)x3-(1,3)x4+(1,4)x1";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinorbit")).args(args).output().expect("spawn spinorbit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 report")
}

fn golden(name: &str, actual: &str) {
    let path: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(expected == actual, "{name} differs from the pinned report:\n{actual}");
}

fn json_of(args: &[&str], code: i32) -> (String, serde_json::Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut all: Vec<&str> = args.to_vec();
    all.extend(["--json", path.to_str().unwrap()]);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(code), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let value = serde_json::from_str(&text).unwrap();
    (stdout(&o), value)
}

#[test]
fn table1_reproduces_sizes_and_gamma() {
    let (text, json) = json_of(&["table1"], 0);
    golden("table1.txt", &text);
    golden("table1.json", &serde_json::to_string_pretty(&json).unwrap());
    let sizes: Vec<u64> = json["rows"].as_array().unwrap().iter().map(|r| r["size"].as_u64().unwrap()).collect();
    let gammas: Vec<u64> = json["rows"].as_array().unwrap().iter().map(|r| r["gamma"].as_u64().unwrap()).collect();
    assert_eq!(sizes, [1, 2, 4, 6, 16, 12, 24, 192, 46080]);
    assert_eq!(gammas, [46080, 384, 32, 24, 96, 4, 4, 4, 1]);
    assert!(text.ends_with("summary: 9/9 checks passed\n"));
}

#[test]
fn invariants_report_the_failing_identities() {
    let (text, json) = json_of(&["invariants"], 1);
    golden("invariants.txt", &text);
    let failed: Vec<u64> = json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| !c["passed"].as_bool().unwrap())
        .map(|c| c["criterion"].as_u64().unwrap())
        .collect();
    assert_eq!(failed, [4, 5, 6]);
    assert_eq!(json["polynomials"].as_array().unwrap().len(), 22);
}

#[test]
fn mixed_tables_pin_every_column() {
    let (text, json) = json_of(&["mixed-table", "2"], 0);
    golden("mixed-table-2.txt", &text);
    assert_eq!(json["rows"][0]["dim"], 1);
    assert_eq!(json["rows"][0]["signature"], "0");

    let (text, json) = json_of(&["mixed-table", "8"], 0);
    golden("mixed-table-8.txt", &text);
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 35);
    assert_eq!(rows[0]["dim"], 4);
    assert_eq!(rows[0]["signature"], "2A1+t2+u3");
    assert_eq!(rows[0]["characteristic"], "(0110,1/3)");
    assert_eq!(json["passed"], true);
}

#[test]
fn verify_all_ends_with_a_summary() {
    let (text, json) = json_of(&["verify-all"], 1);
    assert_eq!(json["checks"].as_array().unwrap().len(), 13);
    assert!(text.ends_with("summary: 9/13 checks passed\n"), "{text}");
    for line in text.lines().filter(|l| !l.starts_with(' ') && !l.starts_with("summary")) {
        assert!(line.starts_with("PASS [") || line.starts_with("FAIL ["), "{line}");
    }
}

#[test]
fn dynkin_scheme_of_the_example_has_eight_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("out.dot");
    let o = run(&["dynkin-scheme", "--element", SCHEME_EXAMPLE, "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    golden("dynkin-scheme.txt", &stdout(&o));
    let dot = std::fs::read_to_string(dot).unwrap();
    golden("dynkin-scheme.dot", &dot);
    let nodes = dot.lines().filter(|l| l.ends_with("\";") && !l.contains(" -- ")).count();
    assert_eq!(nodes, 8);
}

#[test]
fn jordan_reports() {
    let o = run(&["jordan", "--element", MIXED]);
    assert_eq!(o.status.code(), Some(0));
    golden("jordan-mixed.txt", &stdout(&o));
    let o = run(&["jordan", "--element", "(3,5)x1+(1,3)x4"]);
    assert_eq!(o.status.code(), Some(0));
    golden("jordan-nilpotent.txt", &stdout(&o));
}

#[test]
fn characteristic_reports() {
    let o = run(&["characteristic", "--element", "(3,5)x1"]);
    assert_eq!(o.status.code(), Some(0));
    golden("characteristic.txt", &stdout(&o));
    let (text, json) = json_of(&["characteristic", "--element", "(1,4)x1", "--relative-to", "p1"], 0);
    golden("characteristic-relative.txt", &text);
    assert_eq!(json["centralizer_type"], "2A1+A2");
    assert_eq!(json["relative_characteristic"], "(0110,1/3)");
}

#[test]
fn characteristic_of_a_non_nilpotent_element_fails() {
    let o = run(&["characteristic", "--element", MIXED]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL e is nilpotent"));
}

#[test]
fn dump_grading() {
    let o = run(&["dump-grading"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    golden("dump-grading.txt", &text);
    assert!(text.starts_with("dimensions 60 64 60 64\ng0 type D5+A3\n"));
}

#[test]
fn reports_are_byte_deterministic() {
    for args in [&["jordan", "--element", MIXED][..], &["dump-grading"][..]] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["table1", "--frobnicate"][..],
        &["no-such-command"][..],
        &["mixed-table", "9"][..],
        &["jordan"][..],
        &["jordan", "--element", "(1,2"][..],
        &["characteristic", "--element", "(3,5)x1", "--relative-to", "q7"][..],
        &["characteristic", "--element", "(3,5)x1", "--relative-to", "p1-p1"][..],
        &["dynkin-scheme", "--element", "0*(1,2)x1"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = run(&["table1", "--frobnicate"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage: spinorbit table1"));
}
