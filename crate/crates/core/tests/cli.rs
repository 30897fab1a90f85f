use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn freebraid(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_freebraid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn full_twist_compiles_to_empty_word() {
    let gen = freebraid(&["gen", "--full-twist", "1", "--n", "4"], "");
    assert_eq!(gen.code, 0, "{}", gen.stderr);
    let out = freebraid(&["compile", "-", "--check-closed"], &gen.stdout);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "\n");
}

#[test]
fn classify_marks_second_letter_bad() {
    let out = freebraid(&["classify", "--n", "4", "a134 a123"], "");
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[1], "1\ta134\tgood{4}");
    assert_eq!(lines[2], "2\ta123\tbad");
    assert_eq!(lines[3], "realisable: no");
}

#[test]
fn tetrahedron_sides_are_equal() {
    let out = freebraid(
        &[
            "equal",
            "--n",
            "4",
            "--depth",
            "1000",
            "--max-len",
            "8",
            "a123 a124 a134 a234",
            "a234 a134 a124 a123",
        ],
        "",
    );
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("Equal"), "{}", out.stdout);
}

#[test]
fn equal_reports_parity_mismatch() {
    let out = freebraid(
        &[
            "equal",
            "--n",
            "4",
            "--depth",
            "10",
            "--max-len",
            "4",
            "a123",
            "-",
        ],
        "a124",
    );
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("Distinct"));
}

#[test]
fn stable_projection_pipes_into_classify() {
    let proj = freebraid(
        &["project", "--stable", "--n", "5", "-"],
        "a123 a145 a234 a123 a345 a125 a124",
    );
    assert_eq!(proj.code, 0);
    let out = freebraid(&["classify", "--n", "5", "-"], &proj.stdout);
    assert!(out.stdout.ends_with("realisable: yes\n"), "{}", out.stdout);
}

#[test]
fn generator_compiles_reconstructs_and_classifies() {
    let gen = freebraid(&["gen", "--braid", "1,3", "--n", "4"], "");
    assert_eq!(gen.code, 0);
    let word = freebraid(&["compile", "-"], &gen.stdout);
    assert_eq!(word.code, 0, "{}", word.stderr);
    let class = freebraid(&["classify", "--n", "4", "-"], &word.stdout);
    assert!(class.stdout.ends_with("realisable: yes\n"));
    let rec = freebraid(
        &["reconstruct", "--axis", "4", "--n", "4", "-"],
        &word.stdout,
    );
    assert_eq!(rec.code, 0);
    assert!(rec.stdout.contains("permutation ()"));
    assert!(rec.stdout.contains("1\t-\t0\t1\n"), "{}", rec.stdout);
}

#[test]
fn events_and_embedding() {
    let gen = freebraid(&["gen", "--braid", "1,2", "--n", "4"], "");
    let events = freebraid(&["compile", "-", "--events"], &gen.stdout);
    assert_eq!(events.code, 0);
    assert!(events.stdout.lines().next().unwrap().starts_with("move "));
    let dir = std::env::temp_dir().join(format!("freebraid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a12.json");
    std::fs::write(&path, &gen.stdout).unwrap();
    let path = path.to_str().unwrap();
    let emb = freebraid(&["gen", "--embed", path, "--n", "4"], "");
    assert_eq!(emb.code, 0, "{}", emb.stderr);
    assert!(emb.stdout.starts_with("{\"n\":5"));
    assert_eq!(freebraid(&["gen", "--embed", path, "--n", "5"], "").code, 2);
    assert_eq!(freebraid(&["compile", path, "--n", "6"], "").code, 2);
}

#[test]
fn parity_lists_odd_generators() {
    let out = freebraid(&["parity", "--n", "4", "a123 a124 a123"], "");
    assert_eq!(out.stdout, "a124\n");
}

#[test]
fn census_exit_codes() {
    let sq = freebraid(
        &["census", "--lemma", "square", "--n", "4", "--summary-only"],
        "",
    );
    assert_eq!(sq.code, 0);
    assert!(sq.stdout.contains("0 violations"));
    let cm = freebraid(&["census", "--lemma", "commute", "--n", "5"], "");
    assert_eq!(cm.code, 0);
    assert_eq!(
        freebraid(&["census", "--lemma", "tetra", "--n", "5"], "").code,
        2
    );
}

#[test]
fn domain_errors_exit_one() {
    let open = r#"{"n":4,"initial":[["0","1"],["-1","0"],["0","-1"],["1","0"]],
        "moves":[{"type":"line","strand":4,"to":["1/2","1/2"]}],"closed":false}"#;
    assert_eq!(freebraid(&["compile", "-"], open).code, 0);
    assert_eq!(freebraid(&["compile", "-", "--check-closed"], open).code, 1);
    let through = r#"{"n":4,"initial":[["0","1"],["-1","0"],["0","-1"],["1","0"]],
        "moves":[{"type":"line","strand":4,"to":["-2","0"]}],"closed":false}"#;
    let out = freebraid(&["compile", "-"], through);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("genericity"), "{}", out.stderr);
    // the second letter is bad
    assert_eq!(
        freebraid(&["reconstruct", "--axis", "4", "--n", "4", "a134 a123"], "").code,
        1
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(freebraid(&["classify", "--n", "4", "a125"], "").code, 2);
    assert_eq!(freebraid(&["classify", "a123"], "").code, 2);
    assert_eq!(freebraid(&["compile", "-"], "not json").code, 2);
    assert_eq!(freebraid(&["gen", "--n", "4"], "").code, 2);
    assert_eq!(freebraid(&["frobnicate"], "").code, 2);
    assert_eq!(freebraid(&["--help"], "").code, 0);
}

#[test]
fn selftest_passes() {
    let out = freebraid(&["selftest"], "");
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(!out.stdout.contains("FAIL"));
}
