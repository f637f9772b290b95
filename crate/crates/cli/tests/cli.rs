use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use chainpoly::parse_poset;
use serde_json::Value;

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data_dir() -> PathBuf {
    manifest_dir().join("tests/data")
}

fn chainpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chainpoly"))
        .args(args)
        .current_dir(data_dir())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 stderr")
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, actual: &str) {
    let path = manifest_dir().join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

fn reserialize(text: &str) -> String {
    let v: Value = serde_json::from_str(text).expect("valid JSON");
    let mut s = serde_json::to_string_pretty(&v).unwrap();
    s.push('\n');
    s
}

#[test]
fn zigzag_3_table() {
    let o = chainpoly(&["zigzag", "3", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    check_golden("zigzag_3.txt", &out);
    let row = out.lines().find(|l| l.starts_with("3 ")).expect("row for n=3");
    let cells: Vec<&str> = row.split("  ").map(str::trim).filter(|c| !c.is_empty()).collect();
    assert_eq!(cells[..4], ["3", "1 + t", "yes", "yes"]);
}

#[test]
fn zigzag_range_table() {
    let o = chainpoly(&["zigzag", "1..4", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    check_golden("zigzag_1_4.txt", &stdout(&o));
}

#[test]
fn zigzag_range_json() {
    let o = chainpoly(&["zigzag", "1..4", "--json", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    check_golden("zigzag_1_4.json", &text);
    assert_eq!(reserialize(&text), text);

    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["version"], env!("CARGO_PKG_VERSION"));
    let items = doc["items"].as_array().unwrap();
    assert_eq!(items.len(), 4);
    let p2: &[i64] = &[1, 0, 0];
    let p3: &[i64] = &[1, 1, 0, 0];
    let p4: &[i64] = &[1, 3, 1, 0, 0];
    for (item, want) in items[1..].iter().zip([p2, p3, p4]) {
        for key in ["delta", "delta_lattice", "delta_omega", "delta_descents"] {
            let got: Vec<i64> = item[key].as_array().unwrap().iter().map(|v| v.as_i64().unwrap()).collect();
            assert_eq!(got, want, "{key} of {}", item["poset"]);
        }
    }
}

#[test]
fn timings_stay_integral() {
    let o = chainpoly(&["zigzag", "2..3", "--json"]);
    let text = stdout(&o);
    assert_eq!(reserialize(&text), text);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let micros = &doc["items"][0]["methods"]["omega"]["micros"];
    assert!(micros.is_u64(), "{micros}");
    fn no_floats(v: &Value) -> bool {
        match v {
            Value::Number(n) => !n.is_f64(),
            Value::Array(a) => a.iter().all(no_floats),
            Value::Object(m) => m.values().all(no_floats),
            _ => true,
        }
    }
    assert!(no_floats(&doc));
}

fn euler_numbers(n: usize) -> Vec<u128> {
    // boustrophedon (Seidel) triangle
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for _ in 1..=n {
        let mut next = vec![0u128];
        for &x in row.iter().rev() {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        out.push(*next.last().unwrap());
        row = next;
    }
    out
}

#[test]
fn big_integers_are_strings() {
    let o = chainpoly(&["zigzag", "22", "--methods=omega", "--json", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(reserialize(&text), text);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let sum = &doc["items"][0]["coefficient_sum"];
    let e22 = euler_numbers(22)[22];
    assert!(e22 > (1u128 << 53));
    assert_eq!(sum, &Value::String(e22.to_string()));
    for c in doc["items"][0]["delta"].as_array().unwrap() {
        match c {
            Value::Number(n) => assert!(n.as_u64().unwrap() < 1 << 53),
            Value::String(s) => assert!(s.parse::<u128>().unwrap() >= 1 << 53),
            other => panic!("unexpected coefficient {other}"),
        }
    }
}

#[test]
fn zigzag_zero_is_a_usage_error() {
    let o = chainpoly(&["zigzag", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("at least 1"));
    assert_eq!(chainpoly(&["zigzag", "5..2"]).status.code(), Some(2));
    assert_eq!(chainpoly(&["zigzag", "3", "--methods="]).status.code(), Some(2));
}

#[test]
fn budget_exceedance_exits_2() {
    let o = chainpoly(&["zigzag", "6", "--budget-extensions", "10", "--no-timings"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("descents skipped"));
    assert!(stdout(&o).contains("skipped") || stdout(&o).contains("incomplete"));

    // a chain is not a fence, so there is no transfer-matrix fallback
    let o = chainpoly(&["poset", "chain3.poset", "delta", "--budget-omega", "1", "--budget-lattice-dim", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("over budget"));

    // narrowing the methods removes the skip
    let o = chainpoly(&["zigzag", "6", "--budget-extensions", "10", "--methods=lattice,omega"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn poset_verify_json() {
    let o = chainpoly(&["poset", "z3.poset", "verify", "--json", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    check_golden("poset_z3_verify.json", &text);
    assert_eq!(reserialize(&text), text);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let report = &doc["items"][0];
    assert_eq!(report["identities_ok"], true);
    assert_eq!(report["delta"], serde_json::json!([1, 1, 0, 0]));
    // brute force is used wherever the budget allows
    assert_eq!(report["methods"]["lattice"]["path"], "brute-force");
    assert_eq!(report["methods"]["omega"]["path"], "brute-force");
    let gasharov = &doc["items"][1];
    assert_eq!(gasharov["kind"], "gasharov");
    assert_eq!(gasharov["rank"], 1);
    assert_eq!(gasharov["w"], serde_json::json!([1, 1, 0, 0]));
}

#[test]
fn poset_verify_table() {
    let o = chainpoly(&["poset", "z3.poset", "verify", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("1 + t"));
    assert!(out.contains("result: pass"));
    let full = stdout(&chainpoly(&["poset", "z3.poset", "delta", "--full", "--no-timings"]));
    assert!(full.contains("(1, 1, 0, 0)"), "{full}");
}

#[test]
fn cycle_is_reported_with_line() {
    let o = chainpoly(&["poset", "cycle.poset", "chains"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    let err = stderr(&o);
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("0 -> 1 -> 2 -> 0"), "{err}");
}

#[test]
fn syntax_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.poset");
    std::fs::write(&path, "3\n0 1\n# fine\n1 x\n").unwrap();
    let o = chainpoly(&["poset", path.to_str().unwrap(), "rank"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));

    let o = chainpoly(&["poset", "no-such-file.poset", "rank"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn chain_has_one_extension() {
    let o = chainpoly(&["poset", "chain3.poset", "extensions"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "linear extensions (1):\n  0 1 2\n");

    let doc: Value = serde_json::from_str(&stdout(&chainpoly(&["poset", "chain3.poset", "extensions", "--json"]))).unwrap();
    assert_eq!(doc["items"][0]["count"], 1);
}

#[test]
fn redundant_covers_warn_and_continue() {
    let o = chainpoly(&["poset", "redundant.poset", "rank"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("dropped redundant cover 0 2"));
    assert_eq!(stdout(&o), "graded, rank 3\nrho: 0 1 2 3\n");
}

#[test]
fn chains_and_rank_output() {
    let o = chainpoly(&["poset", "z3.poset", "chains"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("chains (5):\n"), "{out}");
    assert!(out.contains("maximal chains (2):\n  0 < 1\n  2 < 1\n"), "{out}");

    let doc: Value = serde_json::from_str(&stdout(&chainpoly(&["poset", "z3.poset", "rank", "--json"]))).unwrap();
    assert_eq!(doc["items"][0]["rho"], serde_json::json!([0, 1, 0]));
}

#[test]
fn selftest_is_deterministic() {
    let args = ["selftest", "--seed", "7", "--count", "10", "--json"];
    let a = chainpoly(&args);
    let b = chainpoly(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    check_golden("selftest_seed7.json", &text);
    assert_eq!(reserialize(&text), text);
}

#[test]
fn selftest_default_passes() {
    let o = chainpoly(&["selftest", "--seed", "42", "--count", "50", "--max-size", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).ends_with("result: pass\n"));
}

#[test]
fn selftest_zero_count_is_vacuous() {
    let o = chainpoly(&["selftest", "--count", "0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["pass"], true);
    assert!(doc["items"].as_array().unwrap().iter().all(|s| s["checked"] == 0));
}

#[test]
fn injected_fault_reports_a_reproducer() {
    let o = chainpoly(&["selftest", "--count", "5", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    let (_, repro) = err.split_once("reproducer poset:\n").expect("reproducer printed");
    let parsed = parse_poset(repro).expect("reproducer parses");
    assert!(parsed.poset.size() >= 1);
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let status = chainpoly_cli::run(["chainpoly", "zigzag", "1..4", "--no-timings"], &mut out, &mut err);
    assert_eq!(status, 0);
    let golden = std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/zigzag_1_4.txt")).unwrap();
    assert_eq!(out, golden);
    assert!(err.is_empty());
}
