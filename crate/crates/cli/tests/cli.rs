//! Black-box tests driving the built binary: exit codes, report formats,
//! JSON round-trips, and the generate/analyze loop.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eccspectra"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_graph_h() {
    let out = run(&["analyze", data("h.edges").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("diameter 3"));
    assert!(text.contains("inertia: (2, 3, 0)"));
    assert!(text.contains("spectrum symmetric: false"));
    assert!(text.contains("irreducible: true"));
    assert!(text.contains("theorem analysis: skipped"));
}

#[test]
fn analyze_16_vertex_example() {
    let out = run(&["analyze", data("example16.edges").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("inertia: (2, 2, 12)"));
    assert!(text.contains("spectrum symmetric: true"));
    assert!(text.contains("predicted inertia: (2, 2, 12)"));
    assert!(text.contains("PASS inertia-prediction"));
}

#[test]
fn empty_file_is_a_parse_error_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.edges");
    std::fs::write(&path, "").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn missing_file_is_exit_2() {
    let out = run(&["analyze", "/nonexistent/zzz.edges"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_reports_round_trip_byte_identical() {
    for cmd in ["analyze", "blocks", "center", "spectrum", "partition", "ecc-matrix"] {
        let out = run(&[cmd, data("example16.edges").to_str().unwrap(), "--json"]);
        assert!(out.status.success(), "{cmd}");
        let text = stdout(&out);
        let line = text.trim_end();
        let value: serde_json::Value = serde_json::from_str(line).expect("valid json");
        assert_eq!(value["schema"], 1, "{cmd}");
        let reserialized = serde_json::to_string(&value).unwrap();
        assert_eq!(line, reserialized, "round trip for {cmd}");
    }
}

#[test]
fn verify_generated_cases_pass_in_order() {
    let out = run(&["verify", "--count", "6", "--seed", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    for (i, line) in lines[..6].iter().enumerate() {
        assert!(
            line.starts_with(&format!("case {i} seed {}", 11 + i as u64)),
            "line: {line}"
        );
        assert!(line.contains("PASS"));
    }
    assert_eq!(lines[6], "summary: 6/6 cases passed");
}

#[test]
fn verify_json_streams_one_object_per_case() {
    let out = run(&["verify", "--count", "4", "--seed", "3", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut count = 0;
    for (i, line) in text.lines().enumerate() {
        let v: serde_json::Value = serde_json::from_str(line).expect("json per line");
        assert_eq!(v["case"], i as u64);
        assert_eq!(v["pass"], true);
        assert_eq!(v["schema"], 1);
        count += 1;
    }
    assert_eq!(count, 4);
}

#[test]
fn verify_file_with_small_diameter_runs_base_checks_only() {
    let out = run(&["verify", data("h.edges").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("base checks only"));
    assert!(text.contains("summary: 1/1 cases passed"));
}

#[test]
fn generate_is_deterministic_and_reanalyzable() {
    let args = ["generate", "--seed", "42", "--parity", "even"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    assert!(a.starts_with("# eccspectra generate: seed=42"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    std::fs::write(&path, &a).unwrap();
    let out = run(&["analyze", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(v["results"]["class"], "class-b");
    let diam = v["results"]["diameter"].as_u64().unwrap();
    assert!(diam >= 4 && diam % 2 == 0);
}

#[test]
fn infeasible_generation_is_exit_3() {
    let out = run(&["generate", "--seed", "1", "--blocks", "1..1"]);
    assert_eq!(out.status.code(), Some(3));
    // A diameter no tree on three vertices can reach.
    let out = run(&[
        "generate",
        "--seed",
        "1",
        "--parts",
        "1..1",
        "--max-vertices",
        "3",
        "--min-diam",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn ecc_matrix_dump_matches_the_paper_matrix() {
    let out = run(&[
        "ecc-matrix",
        data("h.edges").to_str().unwrap(),
        "--dump-matrix",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "0 2 0 0 2\n2 0 0 0 2\n0 0 0 2 3\n0 0 2 0 0\n2 2 3 0 0\n"
    );
}

#[test]
fn tg_output_reparses_as_a_tree() {
    let out = run(&["tg", data("example16.edges").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("original labels 1 2 3 5 7 9 10 13 15"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tg.edges");
    std::fs::write(&path, &text).unwrap();
    let out = run(&["blocks", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim_end()).unwrap();
    assert_eq!(v["results"]["is_tree"], true);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&[
        "analyze",
        data("h.edges").to_str().unwrap(),
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(v["command"], "analyze");
}

#[test]
fn thread_cap_env_var_is_accepted() {
    let out = bin()
        .env("ECCSPECTRA_THREADS", "1")
        .args(["verify", "--count", "3", "--seed", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("summary: 3/3 cases passed"));
}
