use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use orthocat::format::parse_automaton;
use orthocat::witnesses::{witness_a, witness_b};

fn orthocat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthocat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("orthocat-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

const A_AB: &str = "alphabet a b c
states 4
start 0
accepting 1 2
0 a 1
0 b 3
0 c 3
1 a 3
1 b 2
1 c 3
2 a 3
2 b 3
2 c 3
3 a 3
3 b 3
3 c 3
";

const C_BC: &str = "alphabet a b c
states 4
start 0
accepting 1 2
0 a 3
0 b 1
0 c 2
1 a 3
1 b 3
1 c 2
2 a 3
2 b 3
2 c 3
3 a 3
3 b 3
3 c 3
";

#[test]
fn verify_reports_prediction() {
    let out = orthocat(&["verify", "3", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("m,n,predicted,constructed,minimized,orthogonal,elapsed_ms\n"));
    assert!(text.lines().nth(1).unwrap().starts_with("3,3,10,"));
    assert_eq!(orthocat(&["verify", "2", "3"]).status.code(), Some(2));
}

#[test]
fn sweep_writes_csv() {
    let dir = scratch("sweep");
    let csv = dir.join("sweep.csv");
    let out = orthocat(&["sweep", "4", "5", "-o", csv.to_str().unwrap(), "-j", "2"]);
    assert!(out.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "m,n,predicted,constructed,minimized,orthogonal,elapsed_ms"
    );
    assert_eq!(lines.len(), 1 + 2 * 3);
    assert!(lines[1].starts_with("3,3,10,"));
    assert!(lines[6].starts_with("4,5,"));
    assert_eq!(
        orthocat(&["sweep", "11", "4", "-o", csv.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn ortho_exit_codes() {
    let dir = scratch("ortho");
    let a = dir.join("a.dfa");
    let b = dir.join("b.dfa");
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    assert!(orthocat(&["witness", "a", "4", "-o", a]).status.success());
    assert!(orthocat(&["witness", "b", "5", "-o", b]).status.success());
    let out = orthocat(&["ortho", a, b]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "orthogonal");

    let x = write(&dir, "x.dfa", A_AB);
    let y = write(&dir, "y.dfa", C_BC);
    let out = orthocat(&["ortho", &x, &y]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("word: abc"));
    assert!(text.contains("split 1: a | bc"));
    assert!(text.contains("split 2: ab | c"));

    let broken = write(
        &dir,
        "broken.dfa",
        "alphabet a\nstates 2\nstart 0\naccepting 1\n0 a 1\n",
    );
    let out = orthocat(&["ortho", &broken, &x]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let missing = dir.join("missing.dfa");
    assert_eq!(
        orthocat(&["ortho", missing.to_str().unwrap(), &x])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn witness_files_parse_back() {
    let out = orthocat(&["witness", "a", "5"]);
    assert!(out.status.success());
    assert_eq!(
        parse_automaton(&stdout(&out)).unwrap(),
        witness_a(5).unwrap()
    );
    let out = orthocat(&["witness", "b", "6"]);
    assert_eq!(
        parse_automaton(&stdout(&out)).unwrap(),
        witness_b(6).unwrap()
    );
    assert_eq!(orthocat(&["witness", "a", "2"]).status.code(), Some(2));
}

#[test]
fn cat_min_and_eq() {
    let dir = scratch("cat");
    let a = dir.join("a.dfa");
    let b = dir.join("b.dfa");
    let c = dir.join("c.dfa");
    let (a, b, c) = (
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        c.to_str().unwrap(),
    );
    orthocat(&["witness", "a", "3", "-o", a]);
    orthocat(&["witness", "b", "4", "-o", b]);
    let out = orthocat(&["cat", "--orthogonal", a, b, "-o", c]);
    assert!(out.status.success());
    let cat = parse_automaton(&fs::read_to_string(c).unwrap()).unwrap();
    assert_eq!(cat.state_count(), 20);
    assert_eq!(cat.minimize(), cat);

    let x = write(&dir, "x.dfa", A_AB);
    let y = write(&dir, "y.dfa", C_BC);
    assert_eq!(
        orthocat(&["cat", "--orthogonal", &x, &y]).status.code(),
        Some(2)
    );
    assert!(orthocat(&["cat", &x, &y]).status.success());

    let min = orthocat(&["min", c]);
    assert!(min.status.success());
    assert_eq!(parse_automaton(&stdout(&min)).unwrap(), cat);

    assert_eq!(orthocat(&["eq", a, a]).status.code(), Some(0));
    let out = orthocat(&["eq", a, c]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("distinguishing word:"));
}

#[test]
fn random_is_seeded() {
    let first = stdout(&orthocat(&["random", "5", "2", "--seed", "7"]));
    let second = stdout(&orthocat(&["random", "5", "2", "--seed", "7"]));
    assert_eq!(first, second);
    let d = parse_automaton(&first).unwrap();
    assert_eq!(d.state_count(), 5);
    assert_eq!(d.alphabet().len(), 2);
}

#[test]
fn nfa_bound_is_tight() {
    let out = orthocat(&["nfa-bound", "3", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("nfa states: 7"));
    assert!(text.contains("fooling set lower bound: 7"));
}
