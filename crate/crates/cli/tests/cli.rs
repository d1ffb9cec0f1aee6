//! End-to-end checks through the spawned binary: formats, flags, files and
//! exit codes.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_minsos"))
        .args(args)
        .output()
        .expect("the binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn solve_csv_row() {
    let (stdout, _, code) = run(&["solve", "17"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "n,m_n,t_n,minimizers,partition\n17,61,5,5;6,5+3*4\n"
    );
}

#[test]
fn solve_json_is_the_library_serialization() {
    let (stdout, _, code) = run(&["solve", "17", "--format", "json"]);
    assert_eq!(code, 0);
    let got: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let want = serde_json::to_value(minsos::solver::solve(17).unwrap()).unwrap();
    assert_eq!(got, want);
}

#[test]
fn solve_bfile_line() {
    let (stdout, _, code) = run(&["solve", "100", "--format", "bfile"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "100 722\n");
}

#[test]
fn table_bfile_starts_with_the_known_values() {
    let (stdout, _, code) = run(&["table", "--from", "1", "--to", "10", "--format", "bfile"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "1 1\n2 4\n3 5\n4 8\n5 11\n6 14\n7 17\n8 22\n9 25\n10 28\n"
    );
}

#[test]
fn table_rejects_an_empty_range() {
    let (_, stderr, code) = run(&["table", "--from", "9", "--to", "3"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
}

#[test]
fn deterministic_flag_changes_nothing() {
    let fast = run(&["table", "--to", "200"]);
    let slow = run(&["table", "--to", "200", "--deterministic"]);
    assert_eq!(fast, slow);
    let fast = run(&["endo-search", "6", "--format", "json"]);
    let slow = run(&["endo-search", "6", "--format", "json", "--deterministic"]);
    assert_eq!(fast, slow);
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("twenty.csv");
    let (stdout, _, code) = run(&["table", "--to", "20"]);
    assert_eq!(code, 0);
    let (piped, _, code) = run(&["table", "--to", "20", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(piped.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn out_flag_reports_unwritable_paths() {
    let (_, stderr, code) = run(&["solve", "5", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(code, 1);
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");
}

#[test]
fn bounds_json_carries_the_bracket() {
    let (stdout, _, code) = run(&["bounds", "1000", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["bracket"], serde_json::json!([78, 82]));
}

#[test]
fn figure_one_lists_the_optimal_partitions() {
    let (stdout, _, code) = run(&["figure", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "x,partition\n17,17+6+6+6+5*13\n18,18+5*14+4+4+4\n");
}

#[test]
fn figure_two_brackets_the_optimum() {
    let (stdout, _, code) = run(&["figure", "2", "--from", "6", "--to", "8"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("n,ceil_x1,floor_x2,t_n"));
    for line in lines {
        let cells: Vec<u64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(cells[1] <= cells[3] && cells[3] <= cells[2], "{line}");
    }
}

#[test]
fn figure_three_has_the_envelope_columns() {
    let (stdout, _, code) = run(&["figure", "3", "--n", "10"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("x,l,u,objective,u_at_floor_x0"));
    assert_eq!(lines.count(), 9);
}

#[test]
fn endo_search_csv_row() {
    let (stdout, _, code) = run(&["endo-search", "7", "--deterministic"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "n,f,deg_f,deg_f2,ratio,normalized\n\
         7,1;1;1;2;2;3;3,17/7,49/7,1.8495740263569207,0.6990732721635481\n"
    );
}

#[test]
fn verify_suites_pass_on_small_ranges() {
    for (suite, to) in [
        ("oracle", "30"),
        ("envelope", "200"),
        ("bounds", "200"),
        ("bracket", "200"),
        ("parity", "500"),
        ("monotone", "500"),
        ("endofunction", "10"),
        ("corollary", "500"),
    ] {
        let (stdout, _, code) = run(&["verify", suite, "--to", to]);
        assert_eq!(code, 0, "suite {suite}: {stdout}");
        assert!(stdout.contains(", 0 failures"), "suite {suite}: {stdout}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["solve", "0"][..],
        &["solve", "17", "--format", "nope"],
        &["figure", "5"],
        &["bounds", "3"],
        &["bounds", "9", "--format", "bfile"],
        &["endo-search", "9"],
        &["verify", "oracle", "--to", "100"],
        &["no-such-command"],
    ] {
        let (_, stderr, code) = run(args);
        assert_eq!(code, 2, "args {args:?}: {stderr}");
        assert!(!stderr.is_empty(), "args {args:?}");
    }
}
