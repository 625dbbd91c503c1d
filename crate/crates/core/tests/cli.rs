use std::process::{Command, Output};

fn ktrees(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktrees"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_formats() {
    let out = ktrees(&["count", "--k", "2", "--terms", "10", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1,1,1,2,5,12,39,136,529,2171\n");

    let out = ktrees(&["count", "--k", "1", "--terms", "1"]);
    assert_eq!(stdout(&out), "1\n");

    let out = ktrees(&["count", "--k", "3", "--terms", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(
        v["counts"],
        serde_json::json!([1, 1, 1, 2, 5, 15, 58, 275, 1505, 9003])
    );

    let out = ktrees(&["count", "--k", "1", "--terms", "5", "--format", "plain"]);
    assert_eq!(stdout(&out), "1 1 1 2 3\n");
}

#[test]
fn big_counts_stay_exact_in_json() {
    let out = ktrees(&["count", "--k", "2", "--terms", "40", "--format", "json"]);
    let csv = stdout(&ktrees(&[
        "count", "--k", "2", "--terms", "40", "--format", "csv",
    ]));
    let last = csv.trim().rsplit(',').next().unwrap().to_string();
    assert!(last.len() > 20, "{last}");
    assert!(stdout(&out).contains(&format!("{last}]")));
}

#[test]
fn table_formats() {
    let out = ktrees(&["table", "--max-k", "1", "--max-n", "0", "--format", "csv"]);
    assert_eq!(stdout(&out), "1\n");

    let out = ktrees(&[
        "table", "--max-k", "5", "--max-n", "9", "--stable", "--format", "csv",
    ]);
    let rows: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[5], "1,1,1,2,5,15,64,342,2344,19137");

    let out = ktrees(&[
        "table", "--max-k", "2", "--max-n", "3", "--stable", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[1]["k"], 2);
    assert_eq!(v[2]["stable"], true);

    let out = ktrees(&["table", "--max-k", "2", "--max-n", "4"]);
    let text = stdout(&out);
    assert!(text.starts_with("k\\n"));
    assert!(text.lines().nth(2).unwrap().ends_with("5"));
}

#[test]
fn stable_subcommand() {
    let out = ktrees(&["stable", "--terms", "10", "--format", "csv"]);
    assert_eq!(stdout(&out), "1,1,1,2,5,15,64,342,2344,19137\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "--k", "0", "--terms", "3"][..],
        &["count", "--k", "2", "--terms", "0"],
        &["count", "--k", "2"],
        &["count", "--k", "2", "--terms", "3", "--format", "xml"],
        &["verify", "--mode", "everything"],
        &["frobnicate"],
    ] {
        let out = ktrees(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_reports_one_line_per_check() {
    let out = ktrees(&["verify", "--mode", "reference"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines[..6]
        .iter()
        .all(|l| l.starts_with("PASS ") && l.ends_with("10/10 cells match")));
    assert_eq!(lines[6], "6 checks, 0 failed");

    let out = ktrees(&["verify", "--mode", "dissymmetry"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("PASS")).count(), 6);
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--max-k", "4", "--max-n", "12", "--stable"];
    assert_eq!(ktrees(&args).stdout, ktrees(&args).stdout);
}
