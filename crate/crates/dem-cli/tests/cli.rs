//! End-to-end checks of the `demtool` binary: output shapes, exit codes,
//! determinism of the reproduction suites.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn demtool(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_demtool"));
    cmd.args(args);
    cmd
}

fn run(args: &[&str]) -> Output {
    demtool(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = demtool(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    // A command that fails fast (e.g. on a usage error) may exit before
    // reading stdin; the resulting broken pipe is not a test failure.
    let _ = child.stdin.take().expect("stdin handle").write_all(input.as_bytes());
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn generate(family: &str) -> String {
    let out = run(&["gen", family]);
    assert!(out.status.success(), "gen {family} failed: {}", stderr(&out));
    stdout(&out)
}

#[test]
fn solves_a_generated_fan() {
    let fan = generate("kipas:8");
    let out = run_with_stdin(&["dem", "--basis"], &fan);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("value: 4"), "got: {text}");
    assert!(text.contains("method: exact"), "got: {text}");
    assert!(text.contains("basis: 1 3 5 7"), "got: {text}");
}

#[test]
fn greedy_flag_reports_its_method() {
    let out = run_with_stdin(&["dem", "--greedy"], &generate("cycle:8"));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("method: greedy"), "got: {text}");
    assert!(text.contains("subsets examined: 0"), "got: {text}");
}

#[test]
fn verify_splits_exit_codes_on_the_verdict() {
    let frame = generate("g6_prime");
    let bad = run_with_stdin(&["verify", "-M", "0,2,5"], &frame);
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.contains("verdict: false"), "got: {text}");
    assert!(text.contains("uncovered: 1 3"), "got: {text}");

    let good = run_with_stdin(&["verify", "-M", "0,1,2,3,4,5"], &frame);
    assert_eq!(good.status.code(), Some(0));
    assert!(stdout(&good).contains("verdict: true"));
}

#[test]
fn em_lists_every_edge_a_path_end_monitors() {
    let out = run_with_stdin(&["em", "-x", "0"], "3 2\n0 1\n1 2\n");
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0 1\n1 2\n");
}

#[test]
fn revalidate_rejects_a_set_that_misses_the_reduced_graph() {
    let k4 = generate("complete:4");
    let out = run_with_stdin(&["revalidate", "-M", "0", "-e", "2,3"], &k4);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("verdict: false"), "got: {text}");
    assert!(text.contains("uncovered: 1 2"), "got: {text}");

    let out = run_with_stdin(&["revalidate", "-M", "0,1", "-e", "2,3"], &k4);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
}

#[test]
fn restrict_reads_the_subgraph_from_a_file() {
    let dir = std::env::temp_dir();
    let ambient = dir.join("demtool-restrict-ambient.txt");
    let sub = dir.join("demtool-restrict-sub.txt");
    std::fs::write(&ambient, generate("complete:4")).unwrap();
    std::fs::write(&sub, "# spanning star\n0 1\n0 2\n0 3\n").unwrap();
    let out = run(&[
        "restrict",
        "-i",
        ambient.to_str().unwrap(),
        "--sub-edges",
        sub.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("value: 1"), "got: {text}");
    assert!(text.contains("basis: 0"), "got: {text}");
}

#[test]
fn gen_writes_named_files() {
    let path = std::env::temp_dir().join("demtool-gen-names.txt");
    let out = run(&["gen", "spider:2", "-o", path.to_str().unwrap(), "--names"]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# vertex 0: "), "got: {text}");
    assert!(text.contains("\n7 6\n"), "got: {text}");
}

#[test]
fn perturb_scans_edges_in_both_formats() {
    let pentagon = generate("cycle:5");
    let out = run_with_stdin(&["perturb", "--edges"], &pentagon);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6, "got: {text}");
    assert!(lines[0].starts_with("element\tkind\tdegrees"), "got: {text}");
    assert!(lines[1].ends_with("\t-"), "no -M, so no revalidation column value: {text}");

    let out = run_with_stdin(&["perturb", "--edges", "--format", "json"], &pentagon);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["records"].as_array().map(Vec::len), Some(5));
    assert_eq!(doc["records"][0]["delta"], serde_json::json!(-1));
}

#[test]
fn perturb_refuses_monitors_on_vertex_scans() {
    let out = run_with_stdin(&["perturb", "--vertices", "-M", "0"], &generate("cycle:5"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("edge scans"));
}

#[test]
fn malformed_graphs_are_usage_errors() {
    let out = run_with_stdin(&["dem"], "3 2\n0 1\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error:"), "got: {}", stderr(&out));

    let out = run_with_stdin(&["dem"], "2 1\n0 0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("loop"), "got: {}", stderr(&out));
}

#[test]
fn unknown_families_and_suites_are_usage_errors() {
    assert_eq!(run(&["gen", "nonesuch:3"]).status.code(), Some(2));
    assert_eq!(run(&["reproduce", "--suite", "nonesuch"]).status.code(), Some(2));
}

#[test]
fn missing_edges_are_usage_errors() {
    let out = run_with_stdin(&["revalidate", "-M", "0", "-e", "0,2"], "3 2\n0 1\n1 2\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not present"), "got: {}", stderr(&out));
}

#[test]
fn exhausted_budgets_exit_three() {
    let out = run_with_stdin(&["dem", "--budget", "1"], &generate("g8_star"));
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("budget"), "got: {}", stderr(&out));
}

#[test]
fn reproduce_output_is_byte_stable_across_runs_and_threads() {
    let first = run(&["reproduce", "--suite", "table1"]);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&["reproduce", "--suite", "table1"]);
    assert_eq!(stdout(&first), stdout(&second));

    let one = run(&["reproduce", "--suite", "restrict", "--threads", "1"]);
    let two = run(&["reproduce", "--suite", "restrict", "--threads", "2"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&two));
}

#[test]
fn reproduce_emits_parseable_json() {
    let out = run(&["reproduce", "--suite", "table1", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["suite"], serde_json::json!("table1"));
    assert_eq!(doc["pass"], serde_json::json!(true));
    assert_eq!(doc["cases"].as_array().map(Vec::len), Some(8));
    assert!(doc["cases"][0].get("wall_ms").is_none());

    let timed = run(&["reproduce", "--suite", "table1", "--format", "json", "--timings"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&timed)).expect("valid json");
    assert!(doc["cases"][0].get("wall_ms").is_some());
}
