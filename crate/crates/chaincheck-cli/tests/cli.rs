//! End-to-end tests against the compiled binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chaincheck"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let cases = [
        ("k4", "2-CONNECTED", 0),
        ("bowtie", "2-EDGE-CONNECTED BUT NOT 2-CONNECTED", 1),
        ("path3", "NOT 2-EDGE-CONNECTED", 2),
    ];
    for (fixture, verdict, code) in cases {
        let out = run(&["check", "--fixture", fixture]);
        assert_eq!(out.status.code(), Some(code), "{fixture}");
        assert!(
            stdout(&out).lines().next() == Some(verdict),
            "{fixture}: got {:?}",
            stdout(&out)
        );
    }
}

#[test]
fn check_reads_stdin_and_reports_disconnection() {
    let out = run_with_stdin(&["check", "-"], "4\n0 1\n2 3\n");
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).starts_with("NOT CONNECTED"));
}

#[test]
fn check_reads_dimacs() {
    let out = run_with_stdin(
        &["check", "-", "--format", "dimacs"],
        "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("2-CONNECTED"));
}

#[test]
fn parse_errors_exit_64_with_a_line_number() {
    let out = run_with_stdin(&["check", "-"], "3\n0 zebra\n");
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr(&out).contains("line 2"), "stderr: {}", stderr(&out));

    let out = run_with_stdin(
        &["check", "-", "--format", "dimacs"],
        "p edge 3 5\ne 1 2\n",
    );
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn missing_file_and_bad_root_exit_64() {
    let out = run(&["check", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(64));

    let out = run(&["check", "--fixture", "k4", "--root", "9"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr(&out).contains("out of range"));

    let out = run(&["check", "--fixture", "nonesuch"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr(&out).contains("unknown fixture"));
}

#[test]
fn json_report_round_trips_and_keeps_the_exit_code() {
    let out = run(&["check", "--fixture", "bowtie", "--json", "--chains"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["verdict"], "2-EDGE-CONNECTED BUT NOT 2-CONNECTED");
    assert_eq!(v["input"]["n"], 5);
    assert_eq!(v["cut_vertices"], serde_json::json!([2]));
    assert_eq!(v["chains"].as_array().unwrap().len(), 2);
    assert_eq!(v["chain_stats"]["cycles"], 2);
    assert!(v["timing"]["total_ms"].as_f64().unwrap() >= 0.0);

    // Without --chains the chain list stays out of the report.
    let out = run(&["check", "--fixture", "bowtie", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert!(v.get("chains").is_none());
}

#[test]
fn chains_subcommand_prints_the_walks() {
    let out = run(&["chains", "--fixture", "bowtie"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("chain 1 (cycle): 0 2 1 0"), "{text}");
    assert!(text.contains("chain 2 (cycle): 2 4 3 2"), "{text}");
    assert!(text.contains("all edges covered"), "{text}");

    let out = run(&["chains", "--fixture", "triangle_pendant"]);
    assert!(stdout(&out).contains("uncovered edges (1): 2-3"));
}

#[test]
fn chains_subcommand_rejects_undecomposable_input() {
    let out = run_with_stdin(&["chains", "-"], "2\n0 1\n");
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr(&out).contains("at least 3"));

    let out = run_with_stdin(&["chains", "-"], "4\n0 1\n2 3\n");
    assert_eq!(out.status.code(), Some(64));
    assert!(stderr(&out).contains("not connected"));
}

#[test]
fn components_lists_blocks_and_tree() {
    let out = run(&["components", "--fixture", "bowtie"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("blocks: 2"), "{text}");
    assert!(text.contains("block-cut tree: 3 nodes, 2 edges"), "{text}");
    assert!(text.contains("ear decomposition: valid ear_decomposition"), "{text}");

    let out = run(&["components", "--fixture", "star"]);
    let text = stdout(&out);
    assert!(text.contains("blocks: 4"), "{text}");
    assert!(text.contains("(bridge)"), "{text}");
}

#[test]
fn components_json_matches_the_report_schema() {
    let out = run(&["components", "--fixture", "triangle_pendant", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["blocks"].as_array().unwrap().len(), 2);
    assert_eq!(v["blocks"][1]["trivial"], true);
    assert_eq!(v["block_cut_tree"]["nodes"].as_array().unwrap().len(), 3);
    assert!(v.get("ear_decomposition").is_none());
}

#[test]
fn verify_exhaustive_counts_every_labeled_graph() {
    let out = run(&["verify", "--exhaustive", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "64 graphs, 0 mismatches");

    let out = run(&["verify", "--exhaustive", "--n", "7"]);
    assert_eq!(out.status.code(), Some(64), "enumeration cap");
}

#[test]
fn verify_random_sweep_is_clean() {
    let out = run(&["verify", "--count", "150", "--n", "10", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "150 graphs, 0 mismatches");
}

#[test]
fn verify_inject_fault_surfaces_a_counterexample() {
    let out = run(&["verify", "--exhaustive", "--n", "4", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("64 graphs, 1 mismatches"), "{text}");
    assert!(text.contains("first counterexample:"), "{text}");
    // The dump is a parseable edge list; the faulted instance is the
    // empty graph on 4 vertices.
    assert!(text.ends_with("4\n"), "{text}");
}

#[test]
fn bench_emits_csv_and_rejects_zero_repeat() {
    let out = run(&["bench", "--n", "2000", "--seed", "3", "--repeat", "2", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,median_ms,per_edge_ns"));
    let row = lines.next().expect("one data row");
    assert!(row.starts_with("2000,4000,"), "{row}");

    let out = run(&["bench", "--repeat", "0"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn bench_times_a_fixture() {
    let out = run(&["bench", "--fixture", "petersen", "--repeat", "3", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).expect("one data row");
    assert!(row.starts_with("10,15,"), "{row}");
    let per_edge: f64 = row.rsplit(',').next().unwrap().parse().unwrap();
    assert!(per_edge > 0.0, "timings are nonzero");
}
