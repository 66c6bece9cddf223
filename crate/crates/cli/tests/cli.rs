use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::{Command, Output};

use genus3_euler::fixtures::{ABELIAN3, EVEN_GENUS3, ODD_GENUS3};
use genus3_euler::lowgenus::bootstrap_unknowns;

fn euler3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_euler3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn csv_values(text: &str) -> BTreeMap<[u32; 3], String> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda1,lambda2,lambda3,space,value"));
    lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            let key = [0, 1, 2].map(|i| f[i].parse().unwrap());
            (key, f[4].to_string())
        })
        .collect()
}

#[test]
fn eval_single_values() {
    let o = euler3(&["eval", "m3-nonhyp", "8,2,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "37\n");
    assert_eq!(stdout(&euler3(&["eval", "a1", "10"])), "-3\n");
    assert_eq!(stdout(&euler3(&["eval", "m2", "0,0"])), "1\n");
    assert_eq!(stdout(&euler3(&["eval", "a111", "0,0,0"])), "1\n");
    assert_eq!(stdout(&euler3(&["eval", "h3", "6,0,0"])), "-5\n");
    assert_eq!(stdout(&euler3(&["eval", "m3", "3,3,3"])), "8\n");
}

#[test]
fn eval_breakdown() {
    let o = euler3(&["eval", "a3", "0,0,0", "--breakdown"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "m3-nonhyp 2\nh3 1\nm2xa1 1\na111 1\ntotal 5\n");
    let o = euler3(&["eval", "a3", "0,0,0", "--breakdown", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 5);
    assert_eq!(v["breakdown"]["m2_a1"], 1);
}

#[test]
fn coverage_errors_exit_with_two() {
    let o = euler3(&["eval", "a3", "40,0,0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(
        err.contains("genus-2") && err.contains("--m2-table"),
        "{err}"
    );
    let o = euler3(&["eval", "h3", "12,0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--h3-table"));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(euler3(&["eval", "m3", "1,2,3"]).status.code(), Some(1));
    assert_eq!(euler3(&["eval", "m3", "1,0"]).status.code(), Some(1));
    assert_eq!(euler3(&["eval", "nowhere", "1,0,0"]).status.code(), Some(1));
    assert_eq!(euler3(&["table", "m3"]).status.code(), Some(1));
    assert_eq!(euler3(&[]).status.code(), Some(1));
    assert_eq!(euler3(&["--help"]).status.code(), Some(0));
}

#[test]
fn extension_tables() {
    let dir = tempfile::tempdir().unwrap();
    let h3 = dir.path().join("h3.txt");
    std::fs::write(&h3, "# extra\n12,0,0,-7\n").unwrap();
    let o = euler3(&["eval", "h3", "12,0,0", "--h3-table", h3.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-7\n");

    let m2 = dir.path().join("m2.txt");
    let mut text = String::new();
    for mu in bootstrap_unknowns(40) {
        if mu.weight() > 10 {
            writeln!(text, "{},{},0", mu.part(0), mu.part(1)).unwrap();
        }
    }
    std::fs::write(&m2, text).unwrap();
    let o = euler3(&[
        "eval",
        "a3",
        "40,0,0",
        "--breakdown",
        "--m2-table",
        m2.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("m3-nonhyp 3257\nh3 -3825\n"), "{out}");
    assert!(out.contains("a111 -161\n"));

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1,2\n").unwrap();
    let o = euler3(&["eval", "a3", "0,0,0", "--m2-table", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bad.txt:1:"));
    let o = euler3(&["eval", "a3", "0,0,0", "--m2-table", "/nonexistent/m2.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn genus3_table_matches_fixtures() {
    let o = euler3(&["table", "m3", "--max-weight", "10", "--format", "csv"]);
    assert!(o.status.success());
    let rows = csv_values(&stdout(&o));
    assert_eq!(rows.len(), 67);
    for (parts, _, _, total) in EVEN_GENUS3 {
        assert_eq!(rows[&parts], total.to_string(), "{parts:?}");
    }
    for (parts, total) in ODD_GENUS3
        .iter()
        .filter(|(p, _)| p.iter().sum::<u32>() <= 10)
    {
        assert_eq!(rows[parts], total.to_string(), "{parts:?}");
    }
}

#[test]
fn abelian_table_matches_fixtures() {
    let o = euler3(&[
        "table",
        "a3",
        "--max-weight",
        "10",
        "--format",
        "json",
        "--breakdown",
    ]);
    assert!(o.status.success());
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 38);
    let expected: BTreeMap<[u32; 3], i64> = ABELIAN3.iter().copied().collect();
    for row in &v {
        let l: [u32; 3] = serde_json::from_value(row["lambda"].clone()).unwrap();
        assert_eq!(row["value"], expected[&l], "{l:?}");
        assert_eq!(row["breakdown"]["total"], expected[&l]);
        assert_eq!(row["space"], "a3");
    }
}

#[test]
fn table_order_and_small_cases() {
    let o = euler3(&["table", "a1", "--max-weight", "0"]);
    assert_eq!(
        stdout(&o),
        "lambda1,lambda2,lambda3,space,value\n0,0,0,a1,1\n"
    );
    let o = euler3(&["table", "m3-nonhyp", "--max-weight", "2"]);
    let keys: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l[..5].to_string())
        .collect();
    assert_eq!(keys, ["0,0,0", "1,0,0", "2,0,0", "1,1,0"]);
}

#[test]
fn coverage_rows_are_annotated_unless_strict() {
    let o = euler3(&["table", "a3", "--max-weight", "12"]);
    assert!(o.status.success());
    let rows = csv_values(&stdout(&o));
    assert_eq!(rows[&[12, 0, 0]], "NA");
    assert_eq!(rows[&[0, 0, 0]], "5");
    assert!(stderr(&o).contains("12,0,0"));
    assert_eq!(
        euler3(&["table", "a3", "--max-weight", "12", "--strict"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "m3", "--max-weight", "12", "--format", "json"];
    let a = euler3(&args);
    let b = euler3(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_and_skip() {
    let o = euler3(&["verify"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
    let o = euler3(&["verify", "--skip", "bootstrap"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("SKIP").count(), 2);
}

#[test]
fn bootstrap_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m2.txt");
    let o = euler3(&["bootstrap-m2", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 21);
    let o = euler3(&["eval", "m2", "9,1", "--m2-table", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "-5\n");
}
