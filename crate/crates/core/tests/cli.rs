use std::io::Write;
use std::process::{Command, Output, Stdio};

use fheavy::io::decode_graph6;
use serde_json::Value;

fn fheavy(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fheavy"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

// C5, K4.
const C5: &str = "Dhc";
const K4: &str = "C~";
// 2-connected, {claw, deer, hourglass}-f-heavy, not Hamiltonian.
const DEER_HOURGLASS_GAP: &str = "H@HIcYQ";

#[test]
fn check_fan_on_c5_fails_with_pair() {
    let o = fheavy(&["check", "-", "--condition", "fan"], &format!("{C5}\n"));
    assert_eq!(o.status.code(), Some(1));
    let lines = json_lines(&o);
    assert_eq!(lines[0]["verdict"], false);
    assert_eq!(lines[0]["witness"][0]["kind"], "light_pair");
    assert_eq!(lines[0]["witness"][0]["pair"], serde_json::json!([0, 2]));
    assert_eq!(lines[1]["summary"]["false"], 1);
}

#[test]
fn check_thm5_on_k4_and_c5_passes() {
    let o = fheavy(&["check", "-", "--condition", "thm5"], &format!("{K4}\n{C5}\n"));
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2]["summary"], serde_json::json!({"records": 2, "true": 2, "false": 0, "error": 0}));
}

#[test]
fn check_reads_edge_lists_and_prints_tables() {
    let o = fheavy(&["check", "-", "--condition", "hamiltonian", "--format", "table"], "3 3\n0 1\n1 2\n2 0\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 true"), "{}", stdout(&o));
}

#[test]
fn malformed_line_reports_its_number_and_exits_2() {
    let dir = std::env::temp_dir().join(format!("fheavy-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.g6");
    std::fs::write(&path, format!("{C5}\n{K4}\nD!!\n")).unwrap();
    let o = fheavy(&["check", path.to_str().unwrap(), "--condition", "fan"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    // the good graphs are still reported
    assert_eq!(json_lines(&o).len(), 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn unknown_pattern_is_a_usage_error() {
    let o = fheavy(&["check", "-", "--condition", "f-heavy", "--patterns", "claw,banana"], &format!("{C5}\n"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn witness_rejects_odd_orders() {
    let o = fheavy(&["witness", "--n", "15"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
}

#[test]
fn witness_graph6_decodes() {
    let o = fheavy(&["witness", "--n", "16"], "");
    assert_eq!(o.status.code(), Some(0));
    let g = decode_graph6(stdout(&o).trim()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (16, 61));
}

#[test]
fn witness_report_surfaces_discrepancies() {
    let o = fheavy(&["witness", "--n", "18", "--emit", "report"], "");
    assert_eq!(o.status.code(), Some(0));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["hamiltonian"]["verified"], true);
    assert_eq!(r["fan_condition"]["verified"], false);
    assert_eq!(r["thm4_condition"]["verified"], false);
    assert_eq!(r["claw_free"]["verified"], true);
    let t5 = &r["thm5_condition"];
    assert_eq!(t5["claimed"], true);
    assert_eq!(t5["discrepancy"], t5["verified"] == false);
}

#[test]
fn verify_empty_corpus() {
    let o = fheavy(&["verify", "--corpus", "-", "--theorem", "thm5"], "");
    assert_eq!(o.status.code(), Some(0));
    let s: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(s["corpus_size"], 0);
    assert_eq!(s["counterexamples"], serde_json::json!([]));
}

#[test]
fn verify_builtin_corpus() {
    let o = fheavy(&["verify", "--corpus", "builtin:7", "--theorem", "thm5", "--workers", "2"], "");
    assert_eq!(o.status.code(), Some(0));
    let s: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(s["corpus_size"], 1 + 3 + 10 + 56 + 468);
    assert!(s["hypothesis_holds"].as_u64().unwrap() > 0);
    assert_eq!(s["hypothesis_holds"], s["hamiltonian"]);
}

#[test]
fn verify_gates_separable_graphs() {
    // Petersen fails the hypothesis; the path is not 2-connected.
    let input = "IheA@GUAo\nBW\n";
    let s: Value = serde_json::from_str(&stdout(&fheavy(&["verify", "--corpus", "-", "--theorem", "thm1"], input))).unwrap();
    assert_eq!((s["corpus_size"].as_u64(), s["gated"].as_u64(), s["hypothesis_holds"].as_u64()), (Some(2), Some(1), Some(0)));
}

#[test]
fn gap_graph_does_not_meet_thm5() {
    let o = fheavy(&["check", "-", "--condition", "thm5"], &format!("{DEER_HOURGLASS_GAP}\n"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn hunt_finds_the_deer_hourglass_gap_and_it_rechecks() {
    let corpus = format!("{C5}\n{K4}\n{DEER_HOURGLASS_GAP}\n");
    let o = fheavy(&["hunt", "--r", "deer", "--s", "hourglass", "--corpus", "-"], &corpus);
    assert_eq!(o.status.code(), Some(1));
    let h: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(h["counterexample"]["index"], 2);
    let g6 = h["counterexample"]["graph6"].as_str().unwrap();

    let input = format!("{g6}\n");
    let heavy = fheavy(&["check", "-", "--condition", "f-heavy", "--patterns", "claw,deer,hourglass"], &input);
    assert_eq!(heavy.status.code(), Some(0));
    let ham = fheavy(&["check", "-", "--condition", "hamiltonian"], &input);
    assert_eq!(ham.status.code(), Some(1));
}

#[test]
fn hunt_p7_deer_finds_nothing_up_to_8() {
    let o = fheavy(&["hunt", "--r", "p7", "--s", "deer", "--corpus", "builtin:8"], "");
    assert_eq!(o.status.code(), Some(0));
    let h: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(h["counterexample"], Value::Null);
    assert_eq!(h["examined"], 1 + 3 + 10 + 56 + 468 + 7123);
}
