use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliquegraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cli_stdin(args: &[&str], input: &str) -> Output {
    cli_stdin_env(args, input, &[])
}

fn cli_stdin_env(args: &[&str], input: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cliquegraph"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the binary may exit on bad arguments before reading stdin
    let written = child.stdin.take().unwrap().write_all(input.as_bytes());
    if let Err(e) = written {
        assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe, "{e}");
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "exit {:?}: {}",
        o.status.code(),
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn graph6(family: &[&str]) -> String {
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    stdout(&cli(&args)).trim().to_string()
}

#[test]
fn gen_emits_one_graph6_line() {
    let rook = stdout(&cli(&["gen", "rook", "5"]));
    assert_eq!(rook.lines().count(), 1);
    // graph6 order byte is n + 63
    assert_eq!(rook.as_bytes()[0], 25 + 63);
    let golay = graph6(&["golay"]);
    // n = 243 takes the long form: '~' then 18 bits in three bytes
    assert!(golay.starts_with("~?Br"), "{}", &golay[..4]);
    let oa = graph6(&["oa-block", "5", "3"]);
    assert_eq!(oa.as_bytes()[0], 25 + 63);
    assert_ne!(oa, rook.trim());
}

#[test]
fn analyze_rook_reports_transfer() {
    let g = graph6(&["rook", "5"]);
    let r = json(&cli_stdin(&["analyze", "-", "--omega", "5"], &g));
    assert_eq!(r["kind"], "analysis");
    assert_eq!(r["stats"]["n"], 25);
    assert_eq!(r["stats"]["k"], 8);
    assert_eq!(r["srg"]["params"]["lambda"], 3);
    let w = &r["omegas"][0];
    assert_eq!(w["omega"], 5);
    assert_eq!(w["clique_count"], 10);
    assert_eq!(w["clique_graph"]["shape"], "K_{5,5}");
    assert_eq!(w["transfer"]["holds"], true);
    assert_eq!(w["bounds"]["interlacing"]["holds"], true);
}

#[test]
fn analyze_triangular_gives_complete_graph() {
    let g = graph6(&["triangular", "6"]);
    let r = json(&cli_stdin(&["analyze", "-"], &g));
    assert_eq!(r["clique_number"], 5);
    assert_eq!(r["omegas"][0]["clique_graph"]["shape"], "K_6");
}

#[test]
fn analyze_cycle_reports_counterexample() {
    // C5 as graph6
    let r = json(&cli_stdin(&["analyze", "-", "--omega", "3"], "Dhc\n"));
    let w = &r["omegas"][0];
    assert_eq!(w["clique_regular"], false);
    assert!(!w["counterexample"].is_null());
    assert_eq!(w["clique_count"], 0);
}

#[test]
fn analyze_reads_file_and_writes_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("rook4.g6");
    let output = dir.path().join("report.json");
    std::fs::write(&input, graph6(&["rook", "4"]) + "\n").unwrap();
    let o = cli(&[
        "analyze",
        input.to_str().unwrap(),
        "--output",
        output.to_str().unwrap(),
    ]);
    assert!(stdout(&o).is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(r["stats"]["n"], 16);
}

#[test]
fn predict_table_rows() {
    let r = json(&cli(&["predict", "99", "14", "1", "2", "--omega", "3"]));
    assert_eq!(r["clique_graph_order"], 231);
    assert_eq!(r["clique_graph_degree"], 18);
    let top = &r["predicted_spectrum"][0];
    assert_eq!(top["value"], "18");

    let r = json(&cli(&["predict", "9", "4", "1", "2", "--omega", "3"]));
    assert_eq!(r["clique_graph_order"], 6);
    assert_eq!(r["clique_graph_degree"], 3);
}

#[test]
fn verify_named_theorems() {
    let r = json(&cli(&["verify", "three-graph-classification"]));
    assert_eq!(r["kind"], "verification");
    assert_eq!(r["pass"], true);
    let r = json(&cli(&["verify", "gq-duality", "--q", "2"]));
    assert_eq!(r["pass"], true);
    let text = stdout(&cli(&["verify", "rook", "--pretty"]));
    assert!(text.contains("PASS"), "{text}");
}

#[test]
fn output_is_deterministic_without_timestamp() {
    let g = graph6(&["gq-symplectic", "2"]);
    let a = stdout(&cli_stdin(&["analyze", "-"], &g));
    let b = stdout(&cli_stdin(&["analyze", "-"], &g));
    assert_eq!(a, b);
    assert!(!a.contains("timestamp"));
    let stamped = json(&cli_stdin(&["analyze", "-", "--timestamp"], &g));
    assert!(stamped["timestamp"].as_str().unwrap().starts_with("unix:"));
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["gen", "dodecahedron"]).status.code(), Some(2));
    assert_eq!(cli(&["gen", "oa-block", "6", "3"]).status.code(), Some(2));
    assert_eq!(
        cli_stdin(&["analyze", "-", "--tol", "2"], "Dhc\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cli(&["analyze", "/nonexistent/graph.g6"]).status.code(),
        Some(3)
    );

    let g = graph6(&["rook", "4"]);
    let limit = [("CLIQUEGRAPH_EXACT_LIMIT", "8")];
    let limited = cli_stdin_env(&["analyze", "-", "--exact"], &g, &limit);
    assert_eq!(limited.status.code(), Some(4));
}
