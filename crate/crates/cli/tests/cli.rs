use std::fs;
use std::process::{Command, Output};

fn resolve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resolve"))
        .args(args)
        .env_remove("RESOLVE_BUDGET")
        .output()
        .expect("run resolve")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn pd_of_star() {
    let o = resolve(&["pd", "star:5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("pd = 5"));
}

#[test]
fn dim_oracle_matches_search() {
    let a = stdout(&resolve(&["dim", "corona(path:3,complete:2)"]));
    let b = stdout(&resolve(&["dim", "--oracle", "corona(path:3,complete:2)"]));
    assert_eq!(a.lines().next(), Some("dim = 3"));
    assert_eq!(a.lines().next(), b.lines().next());
}

#[test]
fn check_c15_passes() {
    let o = resolve(&["check", "C15", "--g", "path:6", "--h", "complete:2"]);
    assert_eq!(code(&o), 0);
    let row: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(row["claim_id"], "C15");
    assert_eq!(row["lhs"], 4);
    assert_eq!(row["rhs"], 4);
    assert_eq!(row["pass"], true);
    assert_eq!(row["guard"], true);
    assert_eq!(row["millis"], 0);
}

#[test]
fn check_all_emits_one_row_per_claim() {
    let o = resolve(&["check", "all", "--g", "path:3", "--h", "complete:2"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 18);
    assert_eq!(rows[0]["claim_id"], "C1");
    assert_eq!(rows[17]["claim_id"], "C18");
}

#[test]
fn guarded_failure_exits_one() {
    let o = resolve(&["check", "C16", "--g", "path:3", "--h", "empty:3"]);
    assert_eq!(code(&o), 1);
    let row: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(row["pass"], false);
    assert_eq!(row["witness"], "0,3,6,9|1,4,7,10|2,5,8,11");
}

#[test]
fn verify_partition_and_set() {
    let o = resolve(&["verify-partition", "path:3", "--partition", "0|1,2"]);
    assert_eq!(stdout(&o).trim(), "resolving");
    let o = resolve(&["verify-set", "cycle:4", "--set", "0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).trim(),
        "not resolving: vertices 1 and 3 share a representation"
    );
}

#[test]
fn usage_errors_exit_two_without_output() {
    for args in [
        vec!["frobnicate"],
        vec!["pd", "blob:3"],
        vec!["check", "C19", "--g", "path:3", "--h", "path:2"],
        vec!["verify-set", "path:3", "--set", "0,7"],
        vec!["sweep", "--grid", "/nonexistent/grid.txt"],
    ] {
        let o = resolve(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn exhausted_budget_exits_three() {
    let o = resolve(&["pd", "corona(cycle:5,star:3)", "--budget", "10"]);
    assert_eq!(code(&o), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_resolve"))
        .args(["check", "C15", "--g", "path:6", "--h", "complete:2"])
        .env("RESOLVE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("\"status\":\"inconclusive\""));
}

#[test]
fn corona_edge_list_round_trips() {
    let o = resolve(&["corona", "path:3", "complete:2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("# corona product: n1 = 3, n2 = 2, order 9"));
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.txt");
    fs::write(&file, &text).unwrap();
    let from_file = stdout(&resolve(&["pd", file.to_str().unwrap()]));
    let from_spec = stdout(&resolve(&["pd", "corona(path:3,complete:2)"]));
    assert_eq!(from_file, from_spec);
}

#[test]
fn emitted_witnesses_verify() {
    let o = stdout(&resolve(&["pd", "corona(path:4,empty:2)"]));
    let p = o
        .lines()
        .nth(1)
        .unwrap()
        .strip_prefix("partition = ")
        .unwrap();
    let v = resolve(&[
        "verify-partition",
        "corona(path:4,empty:2)",
        "--partition",
        p,
    ]);
    assert_eq!(stdout(&v).trim(), "resolving");
    let o = stdout(&resolve(&["dim", "corona(cycle:4,path:2)"]));
    let s = o.lines().nth(1).unwrap().strip_prefix("set = ").unwrap();
    let v = resolve(&["verify-set", "corona(cycle:4,path:2)", "--set", s]);
    assert_eq!(stdout(&v).trim(), "resolving");
}

#[test]
fn constructions_verify() {
    for args in [
        vec!["construct", "path-empty", "--n1", "4", "--n2", "2"],
        vec!["construct", "star", "--g", "path:2", "--n", "4"],
        vec!["construct", "sum", "--g", "path:3", "--h", "complete:2"],
        vec!["construct", "thm2", "--g", "path:3", "--h", "path:2"],
    ] {
        let o = resolve(&args);
        assert_eq!(code(&o), 0, "{args:?}");
        let text = stdout(&o);
        assert!(text.contains("# verified: resolving"), "{args:?}");
        assert!(!text.lines().last().unwrap().starts_with('#'));
    }
    let o = resolve(&["construct", "path-empty", "--n1", "2", "--n2", "3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn sweep_is_deterministic_across_threads() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.txt");
    fs::write(
        &grid,
        "# small grid\npath:3 complete:2\ncycle:4 path:2\nstar:2 empty:2\n",
    )
    .unwrap();
    let mut reports = Vec::new();
    for threads in ["1", "3"] {
        let out = dir.path().join(format!("report{threads}.jsonl"));
        let o = resolve(&[
            "sweep",
            "--grid",
            grid.to_str().unwrap(),
            "--claims",
            "all",
            "--threads",
            threads,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        assert!(o.stdout.is_empty());
        reports.push(fs::read(&out).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let text = String::from_utf8(reports.pop().unwrap()).unwrap();
    assert_eq!(text.lines().count(), 3 * 18);
}

#[test]
fn sweep_claim_subset_to_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.txt");
    fs::write(&grid, "path:2 complete:2\npath:3 complete:2\n").unwrap();
    let o = resolve(&["sweep", "--grid", grid.to_str().unwrap(), "--claims", "C12"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 2);
    assert!(rows
        .iter()
        .all(|r| r["pass"] == true && r["lhs"].as_i64().unwrap() <= 3));
}
