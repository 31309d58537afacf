use std::process::Command;

use folcan::cli::run;
use folcan::io::HilbertFunctionDocument;
use serde_json::Value;

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn parse(stdout: &str) -> Value {
    serde_json::from_str(stdout).expect("stdout is JSON")
}

#[test]
fn enumerate_headline_query() {
    let args = [
        "folcan",
        "enumerate",
        "--k1",
        "1",
        "--k2",
        "0",
        "--s",
        "2",
        "--chi",
        "1",
        "--cap",
        "2",
        "--max-cusps",
        "1",
    ];
    let out = run(args);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let doc = parse(&out.stdout);
    assert_eq!(doc["count"], 2);
    let functions = doc["functions"].as_array().unwrap();
    for f in functions {
        let h: HilbertFunctionDocument = serde_json::from_value(f["canonical"].clone()).unwrap();
        let h = h.function().unwrap();
        assert!(h.second_difference_check());
        let window = f["integrality_window"].as_u64().unwrap();
        let values = f["values"].as_array().unwrap();
        assert_eq!(values.len() as u64, 2 * window + 1);
        for (m, v) in values.iter().enumerate() {
            assert_eq!(v.as_str().unwrap(), h.value(m as u64).to_string());
        }
    }
    let labels: Vec<&str> = functions[1]["witness_labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(labels.contains(&"{T2,T2}") && labels.contains(&"{DH}"));
}

#[test]
fn enumerate_independent_of_workers_and_repeatable() {
    let base = [
        "folcan",
        "enumerate",
        "--k1",
        "1",
        "--k2",
        "0",
        "--s",
        "2",
        "--chi",
        "0,1,2",
        "--cap",
        "4",
        "--max-cusps",
        "2",
    ];
    let reference = run(base).stdout;
    for workers in ["1", "2", "4"] {
        let mut args = base.to_vec();
        args.extend(["--workers", workers]);
        assert_eq!(run(args).stdout, reference);
    }
}

#[test]
fn enumerate_csv() {
    let out = run([
        "folcan",
        "--format",
        "csv",
        "enumerate",
        "--k1",
        "2",
        "--k2",
        "2",
        "--s",
        "1",
        "--chi",
        "1",
    ]);
    assert_eq!(out.status, 0);
    assert_eq!(
        out.stdout,
        "index,k1,k2,chi,period,correction,witnesses\n0,2,2,1,1,0,\"{}\"\n"
    );
}

#[test]
fn example_ruled_report() {
    let out = run([
        "folcan", "example", "ruled", "--k", "2", "--g", "2", "--q", "2",
    ]);
    assert_eq!(out.status, 0);
    let doc = parse(&out.stdout);
    assert_eq!(doc["kf2"], "8");
    assert_eq!(doc["kf_dot_kx"], "12");
    assert_eq!(doc["fiber_genus"], 2);
}

#[test]
fn example_sweeps() {
    let out = run([
        "folcan", "--format", "csv", "example", "ruled", "--k", "2", "--g", "2", "--q", "0",
        "--sweep", "q=0..10",
    ]);
    assert_eq!(out.status, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "g,k,q,kf2,kf_dot_kx,kx2,fiber_genus");
    for line in &lines[1..] {
        assert_eq!(line.split(',').nth(3), Some("8"));
    }
    let out = run([
        "folcan", "example", "abelian", "--d", "3", "--n", "0", "--sweep", "n=0..3",
    ]);
    let docs = parse(&out.stdout);
    let genera: Vec<i64> = docs
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["fiber_genus"].as_i64().unwrap())
        .collect();
    assert_eq!(genera, [4, 7, 16, 31]);
    assert!(docs.as_array().unwrap().iter().all(|d| d["kf2"] == "36"));
}

#[test]
fn example_rejects_bad_parameters() {
    let out = run([
        "folcan", "example", "ruled", "--k", "3", "--g", "2", "--q", "0",
    ]);
    assert_eq!(out.status, 2);
    assert_eq!(parse(&out.stderr)["error"]["code"], "InvalidInput");
}

#[test]
fn hilbert_single_row_and_table() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(
        &dir,
        "empty-basket.json",
        r#"{"k1": "2", "k2": "2", "chi": 3, "basket": []}"#,
    );
    let out = run([
        "folcan",
        "--format",
        "csv",
        "hilbert",
        "--numerics",
        &empty,
        "--mmax",
        "0",
    ]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "m,P\n0,3\n");

    let t2 = write(
        &dir,
        "t2.json",
        r#"{"k1": "1", "k2": "0", "chi": 1, "basket": [{"kind": "TerminalCyclic", "n": 2}, {"kind": "TerminalCyclic", "n": 2}]}"#,
    );
    let out = run(["folcan", "hilbert", "--numerics", &t2, "--mmax", "4"]);
    let doc = parse(&out.stdout);
    let values: Vec<&str> = doc["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["P"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "1", "3", "5", "9"]);
    assert_eq!(doc["integral"], true);
    assert_eq!(
        doc["hilbert_function"]["correction"],
        serde_json::json!(["0", "-1/2"])
    );

    let one = write(
        &dir,
        "one.json",
        r#"{"k1": "1", "k2": "0", "chi": 1, "basket": [{"kind": "TerminalCyclic", "n": 2}]}"#,
    );
    let out = run([
        "folcan",
        "--format",
        "csv",
        "hilbert",
        "--numerics",
        &one,
        "--mmax",
        "1",
    ]);
    assert_eq!(out.stdout, "m,P\n0,1\n1,5/4\n");
}

#[test]
fn intersect_with_resolution() {
    let dir = tempfile::tempdir().unwrap();
    let model = write(
        &dir,
        "a2.json",
        r#"{
          "basis_labels": ["L", "E1", "E2"],
          "pairing": [["0", "1", "0"], ["1", "-2", "1"], ["0", "1", "-2"]],
          "resolution": {"exceptional_indices": [1, 2], "strict_transforms": {"L": ["1", "0", "0"]}}
        }"#,
    );
    let out = run(["folcan", "intersect", "--model", &model]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let doc = parse(&out.stdout);
    assert_eq!(
        doc["resolution"]["pullback_coefficients"]["L"],
        serde_json::json!(["2/3", "1/3"])
    );
    assert_eq!(doc["resolution"]["weil_pairings"][0]["value"], "2/3");

    let out = run(["folcan", "--format", "csv", "intersect", "--model", &model]);
    assert_eq!(out.stdout, "table,a,b,value\nweil,L,L,2/3\n");
}

#[test]
fn validation_and_io_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        &dir,
        "bad.json",
        r#"{"basis_labels": ["E"], "pairing": [["0"]], "resolution": {"exceptional_indices": [0]}}"#,
    );
    let out = run(["folcan", "intersect", "--model", &bad]);
    assert_eq!(out.status, 2);
    let err = parse(&out.stderr);
    assert_eq!(err["error"]["code"], "NotNegativeDefinite");
    assert!(err["error"]["context"]["path"]
        .as_str()
        .unwrap()
        .ends_with("bad.json"));

    let missing = dir.path().join("nope.json");
    let out = run(["folcan", "intersect", "--model", missing.to_str().unwrap()]);
    assert_eq!(out.status, 1);
    assert_eq!(parse(&out.stderr)["error"]["code"], "Io");

    let garbled = write(
        &dir,
        "garbled.json",
        r#"{"k1": "1/0", "k2": "0", "chi": 1}"#,
    );
    let out = run(["folcan", "hilbert", "--numerics", &garbled, "--mmax", "3"]);
    assert_eq!(out.status, 1);
    assert_eq!(parse(&out.stderr)["error"]["code"], "ParseDocument");

    let bad_override = write(
        &dir,
        "override.json",
        r#"{"k1": "1", "k2": "0", "chi": 1, "basket": [{"kind": "TerminalCyclic", "n": 3, "override": ["0", "1/3", "0"]}]}"#,
    );
    let out = run([
        "folcan",
        "hilbert",
        "--numerics",
        &bad_override,
        "--mmax",
        "3",
    ]);
    assert_eq!(out.status, 2);
    assert_eq!(parse(&out.stderr)["error"]["code"], "InvalidOverride");
}

#[test]
fn bounds_report() {
    let out = run([
        "folcan", "bounds", "--k1", "1", "--k2", "0", "--s", "2", "--kx2", "-4",
    ]);
    let doc = parse(&out.stdout);
    assert_eq!(doc["kx2_upper"], "0");
    assert_eq!(doc["kx2_lower_exclusive"], "-64");
    assert_eq!(doc["printed_lower_exclusive"], "-32");
    assert_eq!(doc["d_squared"], "60");
    assert_eq!(doc["d_dot_kx"], "-4");
    assert_eq!(doc["kx2_admissible"], true);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run([
        "folcan",
        "--out",
        path.to_str().unwrap(),
        "example",
        "abelian",
        "--d",
        "2",
        "--n",
        "1",
    ]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc["fiber_genus"], 5);
    assert_eq!(doc["A.F"], "8");
}

#[test]
fn binary_exit_statuses() {
    let bin = env!("CARGO_BIN_EXE_folcan");
    let ok = Command::new(bin)
        .args(["bounds", "--k1", "8", "--k2", "8", "--s", "1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        parse(std::str::from_utf8(&ok.stdout).unwrap())["kx2_lower_exclusive"],
        "-192"
    );

    let invalid = Command::new(bin)
        .args(["bounds", "--k1", "0", "--k2", "8", "--s", "1"])
        .output()
        .unwrap();
    assert_eq!(invalid.status.code(), Some(2));
    let err = parse(std::str::from_utf8(&invalid.stderr).unwrap());
    assert_eq!(err["error"]["code"], "NonPositiveVolume");

    let usage = Command::new(bin)
        .args(["bounds", "--k1", "+1", "--k2", "0", "--s", "1"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(1));
}
