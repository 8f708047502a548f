use std::io::Write;
use std::process::{Command, Output};

fn domgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domgame")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = domgame(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn value_of_a_star_prints_the_dyadic() {
    let out = domgame(&["value", "star(center=A,a=1,b=1,c=0)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next(), Some("1/2"));
}

#[test]
fn winner_on_paths() {
    let out = domgame(&["winner", "--first", "alice", "path(n=8,colors=C*8)"]);
    assert_eq!(stdout(&out).trim(), "Bob");
    let out = domgame(&["winner", "--first", "alice", "path(n=7,colors=C*7)"]);
    assert_eq!(stdout(&out).trim(), "Alice");
}

#[test]
fn outcome_of_a_mixed_complete_graph() {
    let out = domgame(&["outcome", "complete(colors=AC)"]);
    assert_eq!(stdout(&out).trim(), "FirstPlayerWins");
}

#[test]
fn value_json_has_the_documented_fields() {
    let v = json(&["value", "kst(S=AA,T=AAA)"]);
    for field in [
        "input",
        "value",
        "named",
        "outcome",
        "winner_first_alice",
        "winner_first_bob",
        "closed_form",
        "oracle_checked",
        "agree",
    ] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
    assert_eq!(v["value"], "3");
    assert_eq!(v["closed_form"]["status"], "value");
    assert_eq!(v["oracle_checked"], true);
    assert_eq!(v["agree"], true);
}

#[test]
fn open_bipartite_colorings_are_reported() {
    let v = json(&["value", "kst(S=AA,T=ACC)"]);
    assert_eq!(v["closed_form"]["status"], "not_covered");
    assert_eq!(v["closed_form"]["code"], "OPEN_BIPARTITE");
    assert_eq!(v["agree"], serde_json::Value::Null);
}

#[test]
fn predominated_part_gives_the_half_open_game() {
    let v = json(&["value", "--predominate", "t0,t1,t2", "kst(S=AA,T=AAA)"]);
    assert_eq!(v["value"], "2");
    assert_eq!(v["closed_form"], serde_json::Value::Null);
    let out = domgame(&["value", "--predominate", "zz", "kst(S=AA,T=AAA)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn edge_lists_inline_and_from_files() {
    let v = json(&["value", "v 1 A; v 2 B"]);
    assert_eq!(v["value"], "0");
    let mut file = tempfile();
    writeln!(file.1, "# K_2\nv x A\nv y A\ne x y").unwrap();
    let v = json(&["value", file.0.to_str().unwrap()]);
    assert_eq!(v["value"], "1");
}

fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    let path = std::env::temp_dir().join(format!("domgame-cli-test-{}.txt", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}

#[test]
fn sum_adds_components() {
    let v = json(&["sum", "star(center=C,a=0,b=0,c=3)", "complete(colors=CC)"]);
    assert_eq!(v["value"], "0");
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert_eq!(v["outcome"], "SecondPlayerWins");
}

#[test]
fn exit_codes() {
    assert_eq!(domgame(&["value", "star(center=Q)"]).status.code(), Some(2));
    let out = domgame(&["value", "path(n=30,colors=C*30)"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-vertices"));
    assert_eq!(domgame(&["value", "--max-vertices", "5", "path(n=6,colors=C*6)"]).status.code(), Some(3));
    assert_eq!(domgame(&["verify", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn large_families_use_the_closed_form_alone() {
    let v = json(&["value", "star(center=C,a=20,b=0,c=10)"]);
    assert_eq!(v["value"], "^[19]*");
    assert_eq!(v["oracle_checked"], false);
}

#[test]
fn verify_runs_a_suite() {
    let out = domgame(&["verify", "nimbers"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS nimbers"));
    let v = json(&["verify", "laws", "--samples", "10"]);
    assert_eq!(v[0]["passed"], 10);
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&domgame(&["value", "star(center=A,a=0,b=3,c=0)"]));
    let v = json(&["value", "star(center=A,a=0,b=3,c=0)"]);
    for field in ["value", "named", "outcome", "winner_first_alice", "winner_first_bob"] {
        assert!(text.contains(v[field].as_str().unwrap()), "{field}");
    }
}
