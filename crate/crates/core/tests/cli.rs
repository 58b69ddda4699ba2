use std::path::Path;
use std::process::Command;

use blockstable::cli::run;
use blockstable::parse_graph;

const FIGURE: &str = "5 5\n1 2\n2 3\n3 4\n4 2\n2 5\n";

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn call(args: &[&str], stdin: &str) -> Output {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("blockstable").chain(args.iter().copied()),
        &mut input,
        &mut out,
        &mut err,
    );
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn figure_descriptor(dir: &Path) -> String {
    let out = call(&["explode", "--descriptor-only"], FIGURE);
    assert_eq!(out.code, 0, "{}", out.stderr);
    write(dir, "fig.json", &out.stdout)
}

#[test]
fn decode_figure_word() {
    let dir = tempfile::tempdir().unwrap();
    let desc = figure_descriptor(dir.path());
    let out = call(&["decode", "--descriptor", &desc, "--word", "2 2"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(parse_graph(&out.stdout).unwrap(), parse_graph(FIGURE).unwrap());
}

#[test]
fn encode_and_decode_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let desc = figure_descriptor(dir.path());
    for word in ["1 1", "2 2", "3 5", "5 4"] {
        let decoded = call(&["decode", "--descriptor", &desc, "--word", word], "");
        assert_eq!(decoded.code, 0);
        let encoded = call(&["encode", "--descriptor", &desc], &decoded.stdout);
        assert_eq!(encoded.code, 0, "{}", encoded.stderr);
        assert_eq!(encoded.stdout.trim(), word);
    }
}

#[test]
fn explode_prints_descriptor_and_skeleton() {
    let out = call(&["explode"], FIGURE);
    assert_eq!(out.code, 0);
    let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["descriptor"]["k"], 3);
    assert_eq!(value["skeleton_tree"].as_array().unwrap().len(), 3);
}

#[test]
fn decompose_prints_blocks() {
    let out = call(&["decompose"], FIGURE);
    assert_eq!(out.code, 0);
    let value: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(value["blocks"].as_array().unwrap().len(), 3);
    assert_eq!(value["cut_vertices"], serde_json::json!([2]));
}

#[test]
fn sampling_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let desc = figure_descriptor(dir.path());
    let a = call(&["sample", "--descriptor", &desc, "--seed", "7", "--count", "5"], "");
    let b = call(&["sample", "--descriptor", &desc, "--seed", "7", "--count", "5"], "");
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let graph = write(dir.path(), "g.txt", "6 3\n1 2\n2 3\n4 5\n");
    let c = call(&["sample", "--graph", &graph, "--seed", "7", "--count", "3"], "");
    assert_eq!(c.code, 0, "{}", c.stderr);
    assert_eq!(c.stdout.lines().filter(|l| l.starts_with("6 ")).count(), 3);
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let desc = figure_descriptor(dir.path());
    assert_eq!(call(&["sample", "--descriptor", &desc], "").code, 2);
    assert_eq!(call(&["frobnicate"], "").code, 2);
    assert_eq!(call(&[], "").code, 2);
    assert_eq!(call(&["--help"], "").code, 0);
}

#[test]
fn runtime_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let desc = figure_descriptor(dir.path());
    let out = call(&["decode", "--descriptor", &desc, "--word", "2 9"], "");
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error:"));
    assert_eq!(call(&["decode", "--descriptor", &desc, "--word", "2"], "").code, 1);
    assert_eq!(call(&["decompose"], "3 1\n1 1\n").code, 1);
    assert_eq!(call(&["explode"], "4 1\n1 2\n").code, 1);
}

#[test]
fn verify_small() {
    let out = call(&["verify", "--max-n", "4", "--jobs", "1"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stderr.contains(" 0 failed"));
    for line in out.stdout.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true);
    }
}

#[test]
fn experiment_writes_report_and_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "cfg.json",
        r#"{"experiment": "block_degree", "base": {"type": "path_graph", "n": 50},
            "replicates": 40, "seed": 3, "output": "out.csv"}"#,
    );
    let out = call(&["experiment", "--config", &cfg], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let csv = std::fs::read_to_string(dir.path().join("out.csv")).unwrap();
    assert!(csv.starts_with("statistic,"));
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("out.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["seed"], 3);
    assert_eq!(meta["replicates"], 40);

    // without an output path the CSV goes to stdout
    let cfg = write(
        dir.path(),
        "cfg2.json",
        r#"{"experiment": "block_degree", "base": {"type": "path_graph", "n": 50},
            "replicates": 40, "seed": 3}"#,
    );
    let out = call(&["experiment", "--config", &cfg], "");
    assert_eq!(out.stdout, csv);
}

#[test]
fn binary_runs() {
    let exe = env!("CARGO_BIN_EXE_blockstable");
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "fig.txt", FIGURE);
    let out = Command::new(exe).args(["decompose", "--graph", &graph]).output().unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["blocks"].as_array().unwrap().len(), 3);
    let out = Command::new(exe).args(["sample"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
