use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn transloc(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_transloc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // the process may exit before reading its input
    let _ = child.stdin.take().unwrap().write_all(stdin);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn swap_positions_with_dp() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("t.txt");
    fs::write(&text, "abba").unwrap();
    let o = transloc(
        &["--pattern", "ab", "--text", text.to_str().unwrap(), "--delta", "1", "--variant", "c", "--engine", "dp"],
        b"",
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0\n2\n");
}

#[test]
fn reads_text_from_stdin() {
    let o = transloc(&["-p", "gtgaccgtccag", "-t", "-", "-d", "2", "--variant", "b", "--engine", "align"], b"ggatcccagcgt\n");
    assert_eq!(stdout(&o), "1\n");
    let o = transloc(&["-p", "ab", "-t", "-", "--variant", "d", "--json"], b"abba");
    assert_eq!(
        stdout(&o),
        "{\"position\":0,\"count\":1,\"costs\":[0]}\n{\"position\":2,\"count\":1,\"costs\":[1]}\n"
    );
}

#[test]
fn pattern_file_and_case_folding() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("p.fasta");
    fs::write(&p, ">pat\nAB\n").unwrap();
    let o = transloc(&["--pattern-file", p.to_str().unwrap(), "-t", "-", "--fold-case"], b"xBAx");
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn exit_codes() {
    let o = transloc(&["-p", "zz", "-t", "-", "--fail-on-nomatch"], b"abba");
    assert_eq!(o.status.code(), Some(1));
    let o = transloc(&["-p", "zz", "-t", "-"], b"abba");
    assert_eq!(o.status.code(), Some(0));
    let o = transloc(&["-p", "abcde", "-t", "-"], b"abba");
    assert_eq!(o.status.code(), Some(2));
    let o = transloc(&["-p", "ab", "-t", "/nonexistent/file"], b"");
    assert_eq!(o.status.code(), Some(2));
    let o = transloc(&["-p", "ab", "-t", "-", "--format", "fasta"], b"abba");
    assert_eq!(o.status.code(), Some(2));
    let o = transloc(&["-p", "ab", "-t", "-", "--variant", "e"], b"abba");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oversized_delta_is_clamped_with_warning() {
    let o = transloc(&["-p", "abc", "-t", "-", "-d", "5", "--variant", "d"], b"bca");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0\t1\t1\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn dump_dawg_lists_states() {
    let o = transloc(&["dump-dawg", "-p", "aba"], b"");
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn bench_writes_csv() {
    let o = transloc(&["bench", "-n", "300", "-m", "3,5", "--trials", "2", "--seed", "7"], b"");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("engine,sigma,n,m,delta,trial,counter_name,value\n"));
    assert_eq!(text.lines().count(), 1 + 2 * 2 * 8);
    let again = transloc(&["bench", "-n", "300", "-m", "3,5", "--trials", "2", "--seed", "7"], b"");
    assert_eq!(stdout(&again), text);
}
