use std::process::{Command, Output};

use lucasforge::Poly2;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lucasforge"))
        .args(args)
        .env_remove("LUCASFORGE_MAX_INDEX")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Vec<Value> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice::<Value>(&out.stdout)
        .unwrap()
        .as_array()
        .unwrap()
        .clone()
}

#[test]
fn super_fib_prints_integer() {
    let out = run(&["super", "--fib", "2", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "24\n");
}

#[test]
fn lucas_atom_six() {
    assert_eq!(stdout(&run(&["lucas", "atom", "6"])), "s^2 + 3*t\n");
}

#[test]
fn scalar_commands() {
    let cases: &[(&[&str], &str)] = &[
        (&["fib", "10"], "55"),
        (&["fibocatalan", "4"], "364"),
        (&["catalan", "5", "--classical"], "42"),
        (&["super", "--classical", "2", "2"], "6"),
        (&["gencat", "--fib", "1", "4"], "91"),
        (&["ratcat", "--classical", "2", "3"], "2"),
        (&["lucanomial", "4", "2"], "s^4 + 3*s^2*t + 2*t^2"),
        (&["lucas", "factorial", "3"], "s^3 + s*t"),
    ];
    for (args, expected) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out).trim_end(), *expected, "{args:?}");
    }
}

#[test]
fn verify_main_fib_json_all_pass() {
    let records = json(&["verify", "main-fib", "--n", "1..50"]);
    assert_eq!(records.len(), 50);
    for r in &records {
        assert_eq!(r["op"], "main-fib");
        assert_eq!(r["verdict"], true);
        assert_eq!(r["expected"], true);
        assert_eq!(r["result"], r["rhs"]);
    }
    assert_eq!(records[1]["params"]["n"], 2);
    assert_eq!(records[1]["result"], "5");
}

#[test]
fn expected_negative_exits_zero() {
    let out = run(&["verify", "corollary-classical", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("non-integer 10/4"));
}

#[test]
fn polynomial_output_round_trips() {
    let commands: &[&[&str]] = &[
        &["lucas", "poly", "17"],
        &["lucas", "factorial", "6", "-k", "2"],
        &["lucanomial", "12", "5"],
        &["catalan", "6"],
        &["super", "--lucas", "3", "4"],
        &["super", "--lucas", "2", "3", "-k", "3"],
        &["gencat", "--lucas", "2", "5"],
        &["ratcat", "--lucas", "3", "5"],
        &["verify", "main-lucas", "--n", "1..4"],
        &["verify", "special-lucas-m1", "--n", "0..4"],
    ];
    for args in commands {
        for r in json(args) {
            for field in ["result", "rhs"] {
                if let Some(text) = r.get(field).and_then(Value::as_str) {
                    let p: Poly2 = text
                        .parse()
                        .unwrap_or_else(|e| panic!("{args:?} {field}: {e}"));
                    assert_eq!(p.to_string(), text);
                }
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "suite",
        "--family",
        "super-lucas",
        "--family",
        "von-szily",
        "--parallelism",
        "4",
        "--format",
        "csv",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_projection() {
    let out = run(&["verify", "lemma-fib", "--n", "1..2", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "\"op\",\"params\",\"result\",\"rhs\",\"verdict\",\"expected\""
    );
    assert_eq!(lines[1], "\"lemma-fib\",\"n=1\",-1,-1,\"true\",\"true\"");
    assert_eq!(lines.len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["super", "1", "2"][..],
        &["verify", "no-such-family"],
        &["verify", "main-fib", "--m", "1..2"],
        &["verify", "main-fib", "--n", "5..2"],
        &["search", "nope", "alt"],
        &["search", "mikic_catalan_F", "(-1)^(k^3)"],
        &["ratcat", "--lucas", "2", "4"],
        &["super", "--classical", "1", "2", "-k", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn max_index_flag_beats_environment() {
    let bin = env!("CARGO_BIN_EXE_lucasforge");
    let env_only = Command::new(bin)
        .args(["lucas", "poly", "7"])
        .env("LUCASFORGE_MAX_INDEX", "5")
        .output()
        .unwrap();
    assert_eq!(env_only.status.code(), Some(2));
    let flag = Command::new(bin)
        .args(["lucas", "poly", "7", "--max-index", "10"])
        .env("LUCASFORGE_MAX_INDEX", "5")
        .output()
        .unwrap();
    assert_eq!(stdout(&flag), "s^6 + 5*s^4*t + 6*s^2*t^2 + t^3\n");
}

#[test]
fn valuation_check_agrees() {
    let records = json(&["valuation", "--num", "4", "--den", "2,4", "--check"]);
    let summary = records.last().unwrap();
    assert_eq!(summary["result"], "not a polynomial");
    assert_eq!(summary["verdict"], true);
    assert_eq!(records[0]["params"]["d"], 2);
    assert_eq!(records[0]["result"], "short");

    let records = json(&[
        "valuation",
        "--num",
        "6,6",
        "--den",
        "3,3,6",
        "-k",
        "2",
        "--check",
    ]);
    let summary = records.last().unwrap();
    assert_eq!(summary["result"], "polynomial");
    assert_eq!(summary["verdict"], true);
}

#[test]
fn search_records_residuals() {
    let records = json(&["search", "von_szily_F", "(-1)^k", "--m", "1", "--n", "1"]);
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["result"], "-2");
    assert_eq!(records[0]["verdict"], false);
    assert_eq!(records[0]["op"], "search:von_szily_F:alt");
}
