use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn kirchhoff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kirchhoff"))
        .args(args)
        .env_remove("KIRCHHOFF_DIGITS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kirchhoff(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    kirchhoff(args).status.code().unwrap()
}

fn edge_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn resistance_pair_is_exact() {
    assert_eq!(stdout(&["resdist", "--spec", "2,3,4", "--pair", "0", "2"]), "52/189\n");
    assert_eq!(stdout(&["resdist", "--spec", "2,3,4", "--pair", "0", "1"]), "2/7\n");
}

#[test]
fn resistance_matrix_is_symmetric_with_zero_diagonal() {
    let text = stdout(&["resdist", "--spec", "2,2"]);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 4);
    for i in 0..4 {
        assert_eq!(rows[i][i], "0");
        for j in 0..4 {
            assert_eq!(rows[i][j], rows[j][i]);
        }
    }
}

#[test]
fn kirchhoff_exact_and_decimal() {
    assert_eq!(stdout(&["kirchhoff", "--spec", "2,3,4"]), "409/35\n");
    assert_eq!(stdout(&["kirchhoff", "--spec", "2,3,4", "--digits", "5"]), "11.686\n");
    assert_eq!(stdout(&["kirchhoff", "--spec", "4^3,3^4", "--digits", "5"]), "25.943\n");
}

#[test]
fn exact_mode_prints_no_decimals() {
    for args in [
        ["kirchhoff", "--spec", "2,3,4"],
        ["dkirchhoff", "--spec", "2,3,4"],
        ["trees", "--spec", "2,3,4"],
        ["resdist", "--spec", "1,2,3"],
    ] {
        assert!(!stdout(&args).contains('.'), "{args:?}");
    }
}

#[test]
fn all_methods_agree() {
    for cmd in ["kirchhoff", "dkirchhoff", "trees"] {
        let text = stdout(&[cmd, "--spec", "1,2,3,3", "--all-methods"]);
        assert!(text.contains("all methods agree"), "{cmd}: {text}");
    }
}

#[test]
fn degree_kirchhoff_values() {
    assert_eq!(stdout(&["dkirchhoff", "--spec", "2,3,4"]), "382\n");
    assert_eq!(stdout(&["dkirchhoff", "--spec", "7,1,1"]), "668/3\n");
}

#[test]
fn trees_and_minor_polynomial() {
    assert_eq!(stdout(&["trees", "--spec", "2,3,4"]), "283500\n");
    let poly = stdout(&["minorpoly", "--spec", "2,3,4", "--t", "1,0,0"]);
    assert!(poly.trim_end().ends_with("+ 283500"), "{poly}");
}

#[test]
fn spectrum_from_spec_is_descending() {
    let text = stdout(&["spectrum", "--spec", "2,3,4"]);
    let values: Vec<i64> = text.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(values, vec![9, 9, 7, 6, 6, 5, 5, 5, 0]);
}

#[test]
fn edge_list_input() {
    let c4 = edge_file("4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(stdout(&["kirchhoff", "--file", path(&c4)]), "5\n");
    assert_eq!(stdout(&["trees", "--file", path(&c4)]), "4\n");
    assert!(stdout(&["kirchhoff", "--file", path(&c4), "--all-methods"]).contains("all methods agree"));
    let spectrum = stdout(&["spectrum", "--file", path(&c4)]);
    assert!(spectrum.lines().last().unwrap().starts_with("residual"));
}

#[test]
fn extremal_reports_theorem_agreement() {
    let text = stdout(&["extremal", "--n", "24", "--r", "7"]);
    let min = text.lines().find(|l| l.starts_with("min")).unwrap();
    let max = text.lines().find(|l| l.starts_with("max")).unwrap();
    assert!(min.starts_with("min 25.943 at 4^3,3^4") && min.ends_with("theorem: AGREE"), "{min}");
    assert!(max.starts_with("max 74 at 18,1^6") && max.ends_with("theorem: AGREE"), "{max}");
}

#[test]
fn table_matches_golden() {
    let golden = include_str!("golden/table_9_3.txt");
    assert_eq!(stdout(&["table", "--n", "9", "--r", "3"]), golden);
}

#[test]
fn json_output_has_schema() {
    let text = stdout(&["kirchhoff", "--spec", "2,3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["exact"], "23/3");
    let table: serde_json::Value = serde_json::from_str(&stdout(&["table", "--n", "9", "--r", "3", "--format", "json"])).unwrap();
    assert!(table.is_object());
}

#[test]
fn csv_output_has_header() {
    let text = stdout(&["kirchhoff", "--spec", "2,3", "--format", "csv"]);
    assert_eq!(text.lines().next().unwrap(), "quantity,exact,decimal");
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--n", "12", "--r", "4", "--format", "csv"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["verify", "--max-n", "5"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["kirchhoff", "--spec", "2,3"]), 0);
    assert_eq!(code(&["kirchhoff"]), 2);
    assert_eq!(code(&["kirchhoff", "--spec", "2,x"]), 2);
    assert_eq!(code(&["kirchhoff", "--spec", "2", "--file", "a"]), 2);
    assert_eq!(code(&["kirchhoff", "--file", "/nonexistent/edges.txt"]), 2);
    assert_eq!(code(&["kirchhoff", "--spec", "2,3", "--digits", "0"]), 2);
    assert_eq!(code(&["resdist", "--spec", "2,3", "--pair", "0", "9"]), 2);
    assert_eq!(code(&["kirchhoff", "--spec", "3"]), 1);
    let disconnected = edge_file("4\n0 1\n2 3\n");
    assert_eq!(code(&["kirchhoff", "--file", path(&disconnected)]), 1);
    let square = edge_file("4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(code(&["spectrum", "--file", path(&square), "--format", "exact"]), 2);
}

#[test]
fn digits_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_kirchhoff"))
        .args(["kirchhoff", "--spec", "2,3,4", "--format", "decimal"])
        .env("KIRCHHOFF_DIGITS", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "11.7\n");
}

#[test]
fn verify_passes() {
    let text = stdout(&["verify", "--max-n", "6"]);
    assert!(text.trim_end().ends_with("0 failed"), "{text}");
}
