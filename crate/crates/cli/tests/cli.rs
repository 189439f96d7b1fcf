use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use faultrank_core::fixtures;
use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let ws = Self {
            dir: tempfile::tempdir().unwrap(),
        };
        ws.write("matrix.csv", fixtures::TARANTULA_MATRIX);
        ws.write("exposure.csv", fixtures::TARANTULA_EXPOSURE);
        ws.write("published.txt", fixtures::TARANTULA_PUBLISHED_ORDER);
        ws
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn write(&self, name: &str, body: &str) -> PathBuf {
        let path = self.path(name);
        std::fs::write(&path, body).unwrap();
        path
    }

    fn run(&self, args: &[&str]) -> Output {
        let args: Vec<String> = args
            .iter()
            .map(|a| match a.strip_prefix('@') {
                Some(name) => self.path(name).display().to_string(),
                None => a.to_string(),
            })
            .collect();
        Command::new(env!("CARGO_BIN_EXE_faultrank"))
            .args(&args)
            .env_remove("FAULTRANK_SEED")
            .output()
            .unwrap()
    }
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn exit_code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn missing_graph_is_an_input_error() {
    let ws = Workspace::new();
    let o = ws.run(&["rank", "--graph", "@absent.csv"]);
    assert_eq!(exit_code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
}

#[test]
fn unknown_fault_in_exposure_is_an_input_error() {
    let ws = Workspace::new();
    ws.write("bad.csv", "test,fault\nT1,F1\nT2,F99\n");
    let o = ws.run(&[
        "prioritize",
        "--graph",
        "@matrix.csv",
        "--exposure",
        "@bad.csv",
    ]);
    assert_eq!(exit_code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("F99"));
}

#[test]
fn order_file_must_be_a_permutation() {
    let ws = Workspace::new();
    ws.write("short.txt", "T1\nT2\nT1\n");
    let o = ws.run(&[
        "evaluate",
        "--graph",
        "@matrix.csv",
        "--exposure",
        "@exposure.csv",
        "--order-file",
        "@short.txt",
    ]);
    assert_eq!(exit_code(&o), 2);
}

#[test]
fn edgeless_graph_has_no_communities() {
    let ws = Workspace::new();
    ws.write("lonely.csv", "1\n2\n3\n");
    let o = ws.run(&["communities", "--graph", "@lonely.csv"]);
    assert_eq!(exit_code(&o), 2);
}

#[test]
fn bad_budget_and_k_are_rejected() {
    let ws = Workspace::new();
    let o = ws.run(&[
        "prioritize",
        "--graph",
        "@matrix.csv",
        "--exposure",
        "@exposure.csv",
        "--budget",
        "0",
    ]);
    assert_eq!(exit_code(&o), 2);
    let o = ws.run(&["rank", "--graph", "@matrix.csv", "--k", "0"]);
    assert_eq!(exit_code(&o), 2);
}

#[test]
fn half_budget_selects_eight_tests() {
    let ws = Workspace::new();
    let o = ws.run(&[
        "prioritize",
        "--graph",
        "@matrix.csv",
        "--exposure",
        "@exposure.csv",
        "--budget",
        "50",
    ]);
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(&lines[..3], ["T1", "T2", "T3"]);
}

#[test]
fn full_order_starts_with_the_leading_tests() {
    let ws = Workspace::new();
    let o = ws.run(&[
        "prioritize",
        "--graph",
        "@matrix.csv",
        "--exposure",
        "@exposure.csv",
    ]);
    let text = stdout(&o);
    let order: Vec<&str> = text.lines().collect();
    assert_eq!(order.len(), 16);
    assert_eq!(&order[..5], ["T1", "T2", "T3", "T4", "T9"]);
}

#[test]
fn rank_json_lists_every_fault() {
    let ws = Workspace::new();
    let v = json(&ws.run(&["rank", "--graph", "@matrix.csv", "--format", "json"]));
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 23);
    assert_eq!(entries[0]["fault"], 1);
    assert_eq!(v["preset"], "paper-mode");
}

#[test]
fn dense_ties_in_csv() {
    let ws = Workspace::new();
    let csv = stdout(&ws.run(&[
        "rank",
        "--graph",
        "@matrix.csv",
        "--ties",
        "dense",
        "--format",
        "csv",
    ]));
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "fault,indegree,betweenness,closeness,eigenvector,pagerank,hub,average"
    );
    let f3: Vec<&str> = lines.nth(2).unwrap().split(',').collect();
    assert_eq!(f3[0], "F3");
    let avg: f64 = f3[7].parse().unwrap();
    assert!((avg - 7.0 / 3.0).abs() < 1e-9);
}

#[test]
fn selected_metrics_only() {
    let ws = Workspace::new();
    let v = json(&ws.run(&[
        "rank",
        "--graph",
        "@matrix.csv",
        "--metrics",
        "indegree,pagerank",
        "--format",
        "json",
    ]));
    assert_eq!(v["metrics"], serde_json::json!(["indegree", "pagerank"]));
}

#[test]
fn stats_on_an_edge_list() {
    let ws = Workspace::new();
    ws.write("edges.csv", "1,2\n2,3\n3,1\n4\n");
    let v = json(&ws.run(&[
        "stats",
        "--graph",
        "@edges.csv",
        "--trials",
        "20",
        "--format",
        "json",
    ]));
    assert_eq!(v["stats"]["node_count"], 4);
    assert_eq!(v["stats"]["edge_count"], 3);
}

#[test]
fn evaluate_writes_the_curve() {
    let ws = Workspace::new();
    let o = ws.run(&[
        "evaluate",
        "--graph",
        "@matrix.csv",
        "--exposure",
        "@exposure.csv",
        "--order-file",
        "@published.txt",
        "--curve-out",
        "@curve.csv",
        "--trials",
        "50",
        "--format",
        "json",
    ]);
    let v = json(&o);
    let apfdd = v["apfdd"].as_f64().unwrap();
    assert!((apfdd - 55.93).abs() < 0.01, "{apfdd}");
    let curve = std::fs::read_to_string(ws.path("curve.csv")).unwrap();
    assert_eq!(curve.lines().count(), 18);
}

#[test]
fn out_flag_matches_stdout() {
    let ws = Workspace::new();
    let printed = stdout(&ws.run(&["communities", "--graph", "@matrix.csv"]));
    let o = ws.run(&[
        "communities",
        "--graph",
        "@matrix.csv",
        "--out",
        "@parts.txt",
    ]);
    assert!(stdout(&o).is_empty());
    assert_eq!(
        std::fs::read_to_string(ws.path("parts.txt")).unwrap(),
        printed
    );
}

#[test]
fn seed_comes_from_the_environment() {
    let ws = Workspace::new();
    let args = [
        "evaluate",
        "--graph",
        "@matrix.csv",
        "--exposure",
        "@exposure.csv",
        "--trials",
        "30",
    ];
    let flag = stdout(&ws.run(&[&args[..], &["--seed", "7"]].concat()));
    let exe = Path::new(env!("CARGO_BIN_EXE_faultrank"));
    let resolved: Vec<String> = args
        .iter()
        .map(|a| {
            a.strip_prefix('@')
                .map_or(a.to_string(), |n| ws.path(n).display().to_string())
        })
        .collect();
    let env = Command::new(exe)
        .args(&resolved)
        .env("FAULTRANK_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(stdout(&env), flag);
}

#[test]
fn repeated_runs_are_identical() {
    let ws = Workspace::new();
    let args = [
        "communities",
        "--graph",
        "@matrix.csv",
        "--seed",
        "3",
        "--format",
        "json",
    ];
    assert_eq!(stdout(&ws.run(&args)), stdout(&ws.run(&args)));
}

#[test]
fn demo_reports_every_check() {
    let ws = Workspace::new();
    let v = json(&ws.run(&[
        "demo",
        "--trials",
        "100",
        "--restarts",
        "5",
        "--format",
        "json",
    ]));
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 15);
    let status = |item: &str| {
        checks
            .iter()
            .find(|c| c["item"] == item)
            .map(|c| c["status"].as_str().unwrap().to_owned())
            .unwrap()
    };
    assert_eq!(status("faults"), "match");
    assert_eq!(status("dependency edges"), "diverges");
    assert_eq!(status("average ranks, dense ties"), "match");
    assert_eq!(status("APFDD, computed order vs random"), "directional");
}
