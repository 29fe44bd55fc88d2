use std::io::Write;
use std::process::Command;

use order_complement::cli::{run, EXIT_INPUT_ERROR, EXIT_OK};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("order-complement").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn machine(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "machine"]);
    let (code, out, err) = call(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(out.trim()).unwrap()
}

fn poset_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn info_examples() {
    let v = machine(&["info", "--gen", "chain:3"]);
    assert_eq!(v["chi"], "1");
    assert_eq!(v["reduced_chi"], "0");

    let v = machine(&["info", "--gen", "antichain:5"]);
    assert_eq!(v["chi"], "5");
    assert_eq!(v["reduced_chi"], "4");
    assert_eq!(v["maximum"], Value::Null);

    let v = machine(&["info", "--gen", "boolean:2"]);
    assert_eq!(v["chi"], "1");
    assert_eq!(v["det_complement"], "0");
    assert_eq!(v["chain_counts"], serde_json::json!(["4", "5", "2", "0"]));

    let (code, out, _) = call(&["info", "--gen", "boolean:2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("χ = 1"));
    assert!(out.contains("det Z̄ = 0"));
}

#[test]
fn matrices_examples() {
    let v = machine(&["matrices", "--gen", "antichain:2"]);
    assert_eq!(v["complement"], serde_json::json!(["0 1", "1 0"]));

    let v = machine(&["matrices", "--gen", "chain:2"]);
    assert_eq!(v["mobius"], serde_json::json!(["1 -1", "0 1"]));

    for gen in ["boolean:3", "divisor:30", "random:9", "antichain:4"] {
        let v = machine(&["matrices", "--gen", gen]);
        assert_eq!(v["mobius_sum"], v["chi"], "{gen}");
    }
}

#[test]
fn matrices_relabel_flag_gives_upper_unitriangular_zeta() {
    let f = poset_file(
        r#"{"names": ["c", "b", "a"], "mode": "covers", "pairs": [["a","b"], ["b","c"]]}"#,
    );
    let path = f.path().to_str().unwrap();
    let plain = machine(&["matrices", "--in", path]);
    assert_eq!(
        plain["zeta"],
        serde_json::json!(["1 0 0", "1 1 0", "1 1 1"])
    );
    let sorted = machine(&["matrices", "--in", path, "--relabel"]);
    assert_eq!(sorted["names"], serde_json::json!(["a", "b", "c"]));
    assert_eq!(
        sorted["zeta"],
        serde_json::json!(["1 1 1", "0 1 1", "0 0 1"])
    );
}

#[test]
fn charpoly_examples() {
    for (gen, display) in [
        ("antichain:2", "λ^2 - 1"),
        ("chain:4", "λ^4"),
        ("chain:1", "-λ"),
    ] {
        let v = machine(&["charpoly", "--gen", gen]);
        assert_eq!(v["equal"], true);
        assert_eq!(v["formula"]["display"], display);
        assert_eq!(v["berkowitz"]["display"], display);
    }
    let (_, out, _) = call(&["charpoly", "--gen", "antichain:2"]);
    assert!(out.contains("[-1, 0, 1]"));
    assert!(out.contains("equal: yes"));
}

#[test]
fn verify_examples() {
    for args in [
        vec!["verify", "--gen", "divisor:12"],
        vec!["verify", "--gen", "random:10", "--seed", "7"],
    ] {
        let (code, out, err) = call(&args);
        assert_eq!(code, EXIT_OK, "{out}{err}");
        assert!(out.contains(", 0 failed"));
    }
    let v = machine(&["verify", "--gen", "divisor:12"]);
    assert_eq!(v["poset"]["n"], 6);
    assert_eq!(v["summary"]["failed"], 0);
    assert!(v["identities"].as_array().unwrap().len() >= 10);
}

#[test]
fn cycle_file_is_an_input_error() {
    let f = poset_file(
        r#"{"names": ["a", "b"], "mode": "relations", "pairs": [["a","b"], ["b","a"]]}"#,
    );
    let (code, _, err) = call(&["verify", "--in", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT_ERROR);
    assert!(err.contains("cycle"), "{err}");
}

#[test]
fn malformed_file_reports_position() {
    let f = poset_file("{\"names\": [\"a\"],\n  \"mode\": covers}");
    let (code, _, err) = call(&["info", "--in", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT_ERROR);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["info"]).0, EXIT_INPUT_ERROR);
    assert_eq!(
        call(&["info", "--gen", "chain:2", "--in", "x.json"]).0,
        EXIT_INPUT_ERROR
    );
    assert_eq!(call(&["info", "--gen", "lattice:3"]).0, EXIT_INPUT_ERROR);
    assert_eq!(call(&["info", "--gen", "chain:x"]).0, EXIT_INPUT_ERROR);
    assert_eq!(
        call(&["info", "--in", "/nonexistent/poset.json"]).0,
        EXIT_INPUT_ERROR
    );
    assert_eq!(
        call(&["info", "--gen", "random:4", "--density", "2"]).0,
        EXIT_INPUT_ERROR
    );
    assert_eq!(
        call(&["sweep", "exhaustive", "--n", "6"]).0,
        EXIT_INPUT_ERROR
    );
    assert_eq!(
        call(&["sweep", "random", "--jobs", "0"]).0,
        EXIT_INPUT_ERROR
    );
}

#[test]
fn sweep_exhaustive_counts() {
    for (n, posets) in [("3", "19"), ("4", "219")] {
        let (code, out, _) = call(&["sweep", "exhaustive", "--n", n]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains(&format!("posets checked: {posets}")), "{out}");
        assert!(out.contains(", 0 failed)"), "{out}");
    }
    let (code, out, _) = call(&["sweep", "exhaustive", "--n", "3", "--format", "machine"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 20);
    let summary: Value = serde_json::from_str(lines[19]).unwrap();
    assert_eq!(summary["sweep"]["posets"], 19);
    assert_eq!(summary["sweep"]["failed"], 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_order-complement");
    let ok = Command::new(bin)
        .args(["verify", "--gen", "chain:4"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin)
        .args(["verify", "--gen", "nope"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_INPUT_ERROR));
    let usage = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_INPUT_ERROR));
}
