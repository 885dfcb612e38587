use std::path::PathBuf;
use std::process::{Command, Output};

fn monster(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monster"))
        .args(args)
        .env_remove("MONSTER_TRUNCATION_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn level_three_words_match_golden_file() {
    let golden = include_str!("golden/chain_level3_words.txt");
    let out = monster(&["chain", "--level", "3", "--words", "--format", "ascii"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), golden);
}

#[test]
fn binomial_subcommand() {
    let out = monster(&["binomials", "--chart", "212"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert_eq!(text.lines().last(), Some("3x1(212)x2(21)+2x1(2)"));
    assert_eq!(stdout(&monster(&["binomials", "--chart", ""])), "x1x2\n");
    assert_eq!(stdout(&monster(&["binomials", "--all", "--level", "3"])).lines().count(), 15);
    let bad = monster(&["binomials", "--chart", "2a1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("invalid chart string"));
}

#[test]
fn chain_formats() {
    let zero = stdout(&monster(&["chain", "--level", "0"]));
    assert_eq!(zero.matches("N(").count(), 1);
    assert!(zero.contains("left") && zero.contains("right"));

    let json = stdout(&monster(&["chain", "--level", "3", "--multiplicities", "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let m: Vec<u64> = value["twigs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["multiplicity"].as_u64().unwrap())
        .collect();
    assert_eq!(m, [1, 4, 3, 5, 2, 5, 3, 4, 1]);

    let dot = stdout(&monster(&["chain", "--level", "1", "--format", "dot"]));
    assert!(dot.starts_with("graph chain_1 {"));
    assert_eq!(dot.matches(" -- ").count(), 3);

    assert_eq!(monster(&["chain", "--level", "3", "--format", "svg"]).status.code(), Some(2));
}

#[test]
fn code_words_and_node_words() {
    let text = stdout(&monster(&["codewords", "--level", "3"]));
    assert_eq!(text, "RRR\nRRV3\nRV2R\nRV2V2\nRV2V3\ncount=5 (F_5)\n");

    let text = stdout(&monster(&["nodeword", "21221", "--trace"]));
    assert_eq!(text.lines().last(), Some("RV2V3V3V5"));
    assert!(text.contains("N(2122)"));
    let text = stdout(&monster(&["nodeword", "222122112"]));
    assert_eq!(text.lines().last(), Some("RRRV4V5V5V7V7V9"));
    let dot = stdout(&monster(&["nodeword", "212", "--trace", "--format", "dot"]));
    assert!(dot.starts_with("digraph trace {"));
    assert_eq!(monster(&["nodeword", "123"]).status.code(), Some(2));
}

#[test]
fn prolong_cusp() {
    let out = monster(&["prolong", &data("cusp.curve"), "--levels", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let third = text.lines().find(|l| l.starts_with("x2(1) = ")).unwrap();
    assert_eq!(third, "x2(1) = (3/2)*s + O(s^4)");

    let two = stdout(&monster(&["prolong", &data("cusp.curve"), "--levels", "2"]));
    assert!(two.contains("C(1) -> C(12): critical"));
    assert!(two.contains("x1(12) = (4/3)*s"));
}

#[test]
fn prolong_errors() {
    let out = monster(&["prolong", &data("empty.curve")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no assignments"));

    let out = monster(&["prolong", &data("bad.curve")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.curve:2:11:"));

    assert_eq!(monster(&["prolong", &data("missing.curve")]).status.code(), Some(2));
}

#[test]
fn truncation_override() {
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_monster"))
            .args(["prolong", &data("cusp.curve"), "--levels", "1"])
            .env("MONSTER_TRUNCATION_ORDER", value)
            .output()
            .unwrap()
    };
    let out = run("10");
    assert!(stdout(&out).contains("x2(1) = (3/2)*s + O(s^8)"));
    assert!(stdout(&run("3")).contains("x2(1) = O(s^1)"));
    let out = run("1");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("truncation order too short"));
    assert_eq!(run("2").status.code(), Some(2));
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn verify_levels() {
    let out = monster(&["verify", "--level", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 24);
    assert!(!text.contains("FAIL"));
    for k in 1..=8 {
        let k = k.to_string();
        assert!(monster(&["verify", "--level", &k]).status.success(), "level {k}");
    }
    assert_eq!(monster(&["verify", "--level", "0"]).status.code(), Some(2));
}
