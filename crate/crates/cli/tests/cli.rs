//! End-to-end tests of the `semichain` binary: envelope shape, golden
//! values for every subcommand, exit codes, and `--strict`.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semichain"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON envelope")
}

#[test]
fn envelope_has_fixed_fields() {
    let v = run_json(&["length", "--family", "I:2", "--method", "formula"]);
    assert_eq!(v["command"], "length");
    assert_eq!(v["inputs"]["family"], "I:2");
    assert!(v["diagnostics"].is_array());
    assert!(v["timingMillis"].is_u64());
    assert_eq!(v["result"]["length"], "6");
    assert_eq!(v["result"]["method"], "formula");
}

#[test]
fn length_golden_values() {
    let null = run_json(&["length", "--family", "null:7", "--method", "oracle"]);
    assert_eq!(null["result"]["length"], "6");
    assert_eq!(
        null["result"]["certificate"]["subsets"]
            .as_array()
            .unwrap()
            .len(),
        7
    );

    let brandt = run_json(&["length", "--family", "brandt:c2,2", "--method", "decompose"]);
    assert_eq!(brandt["result"]["length"], "7");

    // formula and oracle agree on l*(I_2) = 5
    let star_formula = run_json(&["length", "--family", "I:2", "--inverse", "--method", "formula"]);
    assert_eq!(star_formula["result"]["length"], "5");
    let star_oracle = run_json(&["length", "--family", "I:2", "--inverse", "--method", "oracle"]);
    assert_eq!(star_oracle["result"]["length"], "5");
    assert_eq!(star_oracle["result"]["kind"], "inverseSubsemigroup");

    let big = run_json(&["length", "--family", "I:9", "--method", "formula"]);
    assert_eq!(big["result"]["length"], "8296060");
}

#[test]
fn length_from_table_file() {
    // the two-element semilattice {0, 1} under multiplication
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "2\n0 0\n0 1").unwrap();
    let path = file.path().to_str().unwrap();
    let v = run_json(&["length", "--file", path, "--method", "oracle"]);
    assert_eq!(v["result"]["length"], "1");
    assert_eq!(v["result"]["size"], 2);
}

#[test]
fn league_search_and_bounds() {
    let v = run_json(&["league", "--n", "5", "--k", "3"]);
    assert_eq!(v["result"]["optimum"], 28);
    assert_eq!(v["result"]["status"], "exact");
    assert_eq!(v["result"]["witness"]["content"], 28);

    let b = run_json(&["league", "--n", "7", "--k", "3", "--bounds"]);
    assert_eq!(b["result"]["bound"], "620");
    assert_eq!(b["result"]["lb1"], "620");

    let i = run_json(&["league", "--n", "6", "--k", "4", "--interval"]);
    assert_eq!(i["result"]["optimum"], 30);
}

#[test]
fn league_budget_exhaustion_is_diagnosed_not_fatal() {
    let out = run(&["league", "--n", "7", "--k", "4", "--budget-ms", "0"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["status"], "lowerBoundOnly");
    assert!(!v["diagnostics"].as_array().unwrap().is_empty());
}

#[test]
fn table_golden_cells_and_diagnostics() {
    let t3 = run_json(&["table", "--id", "3"]);
    assert!(t3["diagnostics"].as_array().unwrap().is_empty());
    let rows = t3["result"]["rows"].as_array().unwrap();
    let popi = rows.iter().find(|r| r[0] == "l(POPI_n)").unwrap();
    assert_eq!(popi[9], "109987");

    // table 4 must carry the discrepancy records (e.g. I_3 formula 16 vs
    // printed 15) as diagnostics
    let t4 = run_json(&["table", "--id", "4"]);
    let diags = t4["diagnostics"].as_array().unwrap();
    assert!(diags
        .iter()
        .any(|d| d["row"] == "l*(I_n)"
            && d["column"] == "n=3"
            && d["computed"] == "16"
            && d["printed"] == "15"));

    let t5 = run_json(&["table", "--id", "5"]);
    assert_eq!(t5["result"]["rows"][0][5], "3323778");

    // table 2 in full is quick; cell (7, k=4) reads "exact,bound"
    let t2 = run_json(&["table", "--id", "2"]);
    let rows = t2["result"]["rows"].as_array().unwrap();
    let n7 = rows.iter().find(|r| r[0] == "7").unwrap();
    assert_eq!(n7[4], "150,150");
}

#[test]
fn strict_turns_diagnostics_into_failure() {
    let out = run(&["--strict", "table", "--id", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["--strict", "table", "--id", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn tsv_format_prints_plain_rows() {
    let out = run(&["table", "--id", "5", "--format", "tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.contains("33022614177128")));
    assert!(!text.contains('{'));
}

#[test]
fn gls_and_tn_golden_values() {
    let g = run_json(&["gls", "--n", "3", "--q", "2"]);
    assert_eq!(g["result"]["glOrder"], "168");
    assert_eq!(g["result"]["glsOrder"], "512");
    assert_eq!(g["result"]["bound"]["raw"], "39/4");
    assert_eq!(g["result"]["bound"]["clamped"], "9");
    let cq = g["result"]["cq"]["value"].as_f64().unwrap();
    assert!((cq - 0.288788095).abs() < 1e-8);

    let t = run_json(&["tn", "--n", "5"]);
    assert_eq!(t["result"]["chainBound"], "329");

    let t4 = run_json(&["tn", "--n", "4"]);
    assert_eq!(t4["result"]["nullOrder"], "18");
    assert_eq!(t4["result"]["generatorCountBound"], "18");
    // bounds mode uses the construction lower bounds instead of searches
    let b4 = run_json(&["tn", "--n", "4", "--bounds"]);
    assert_eq!(b4["result"]["chainBound"], "23");
    assert_eq!(b4["result"]["mode"], "bounds");
}

#[test]
fn exit_codes() {
    // 2: unparseable family
    assert_eq!(run(&["length", "--family", "bogus:3"]).status.code(), Some(2));
    // 2: validation failure
    assert_eq!(run(&["league", "--n", "3", "--k", "9"]).status.code(), Some(2));
    // 2: l* of a non-inverse semigroup
    assert_eq!(
        run(&["length", "--family", "null:4", "--inverse", "--method", "oracle"])
            .status
            .code(),
        Some(2)
    );
    // 3: oracle budget exceeded
    assert_eq!(
        run(&[
            "length",
            "--family",
            "T:3",
            "--method",
            "oracle",
            "--max-subsemigroups",
            "5",
        ])
        .status
        .code(),
        Some(3)
    );
}
