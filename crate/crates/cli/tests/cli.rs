use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_brace-forge"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const T2: &str = "brace T2\norder 2\nadd\n0 1\n1 0\ncirc\n0 1\n1 0\nend\n";

fn r4() -> String {
    stdout(&run(&["corpus", "radical", "--modulus", "8", "--generator", "2"], ""))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn validate_reports_order() {
    let o = run(&["validate"], T2);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "OK order=2\n");
}

#[test]
fn validate_rejects_broken_axioms_with_exit_one() {
    let bad = "brace X\norder 2\nadd\n0 1\n1 0\ncirc\n0 1\n1 1\nend\n";
    let o = run(&["validate"], bad);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("INVALID X"));
}

#[test]
fn syntax_errors_exit_two() {
    let o = run(&["validate"], "brace X\norder 2\nadd\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    assert_eq!(run(&["no-such-command"], "").status.code(), Some(2));
}

#[test]
fn semiprime_verdict_and_witness() {
    let o = run(&["semiprime"], &r4());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NOT SEMIPRIME witness {0,2}\n");
    let a5 = stdout(&run(&["corpus", "group", "--group", "A5", "--variant", "almost-trivial"], ""));
    let o = run(&["semiprime", "--method", "exhaustive"], &a5);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "SEMIPRIME\n");
}

#[test]
fn ideals_and_quotient() {
    let o = run(&["ideals"], &r4());
    assert_eq!(stdout(&o), "# R8g2: 3 ideals\n{0}\n{0,2}\n{0,1,2,3}\n");
    let o = run(&["quotient", "--ideal", "0,2"], &r4());
    assert_eq!(o.status.code(), Some(0));
    let q = stdout(&o);
    assert!(q.contains("order 2\n"));
    assert_eq!(stdout(&run(&["validate"], &q)), "OK order=2\n");
    assert_eq!(run(&["quotient", "--ideal", "0,1"], &r4()).status.code(), Some(2));
}

#[test]
fn products_validate() {
    let input = format!("{T2}{T2}");
    let w = stdout(&run(&["product", "wreath"], &input));
    assert_eq!(stdout(&run(&["validate"], &w)), "OK order=8\n");
    let d = stdout(&run(&["product", "semidirect", "--sigma", "0 1;0 1"], &input));
    assert_eq!(stdout(&run(&["validate"], &d)), "OK order=4\n");
    assert_eq!(run(&["product", "semidirect", "--sigma", "0 1;1 0"], &input).status.code(), Some(2));
    assert_eq!(run(&["product", "wreath"], T2).status.code(), Some(2));
}

#[test]
fn ybe_check() {
    let o = run(&["ybe", "--check"], &r4());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("solution R8g2\norder 4\nleft\n"));
    assert!(text.contains("# braid OK\n# nondegenerate OK\n"));
}

#[test]
fn corpus_enumerate_round_trips() {
    let o = run(&["corpus", "enumerate", "--group", "S3", "--max-order", "8"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = stdout(&run(&["validate"], &stdout(&o)));
    assert_eq!(v.lines().count(), 8);
    assert!(v.lines().all(|l| l == "OK order=6"));
}

#[test]
fn sweeps_report_cases() {
    let dir = scratch("sweeps");
    let dump = dir.to_str().unwrap();
    let o = run(&["verify", "lemma31", "--max-order", "4", "--max-base", "16", "--dump-dir", dump], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("CASE lemma31 #0 ") && l.ends_with(" PASS")));
    assert!(text.trim_end().ends_with(", 0 counterexamples"));

    let o = run(&["--jobs", "1", "search", "q34", "--max-order", "4", "--max-h", "2", "--quiet", "--dump-dir", dump], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains("CASE"));
    assert!(text.contains("remains open"));
    assert!(text.ends_with("q34: 25 cases, 0 counterexamples\n"));
}

#[test]
fn replay_runs_a_case_file() {
    let dir = scratch("replay");
    let path = dir.join("lemma32-0.case");
    std::fs::write(&path, format!("#! case lemma32-converse\n{}{T2}", r4())).unwrap();
    let o = run(&["replay", path.to_str().unwrap()], "");
    assert_eq!(stdout(&o), "PASS\n");
    assert_eq!(o.status.code(), Some(0));
}
