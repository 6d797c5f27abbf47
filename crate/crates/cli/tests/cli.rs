use assert_cmd::Command;
use stated_skein::hh0::{HH0Certificate, Verdict};
use stated_skein::oq::OqElement;
use stated_skein::parse::parse_oq;

fn skein() -> Command {
    Command::cargo_bin("skein").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = skein().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

#[test]
fn nf_of_ba() {
    assert_eq!(stdout(&["nf", "ba"]).trim(), "q^2*ab");
}

#[test]
fn jw_one_is_a_strand() {
    let out = stdout(&["jw", "1"]);
    assert_eq!(out.lines().count(), 1);
    assert!(out.trim().ends_with(" 1"), "{out}");
}

#[test]
fn jw_fails_past_n_at_a_root_of_unity() {
    skein().args(["jw", "3", "--ring", "cyclo:24"]).assert().code(2);
    skein().args(["jw", "2", "--ring", "cyclo:24"]).assert().success();
}

#[test]
fn parse_errors_point_at_the_column() {
    let out = skein().args(["nf", "ab +* c"]).assert().code(2).get_output().stderr.clone();
    let err = String::from_utf8(out).unwrap();
    assert!(err.contains("column 5"), "{err}");
    assert!(err.contains("    ^"), "{err}");
}

#[test]
fn bad_ring_is_rejected() {
    skein().args(["nf", "a", "--ring", "cyclo:0"]).assert().failure();
    skein().args(["nf", "a", "--ring", "cyclo"]).assert().failure();
}

#[test]
fn json_round_trip() {
    let dir = std::env::temp_dir().join(format!("skein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for s in ["ba", "dcba - q^(-1/2)*d^2", "3 - (q-q^(-1))*bc"] {
        let p = dir.join("x.json");
        skein().args(["nf", s, "--json", p.to_str().unwrap()]).assert().success();
        let back: OqElement = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
        assert_eq!(back, parse_oq(s).unwrap());
        // and the printed form parses back too
        assert_eq!(parse_oq(stdout(&["nf", s]).trim()).unwrap(), back);
    }
    let p = dir.join("c.json");
    skein().args(["hh0", "(q^2-1)*ab", "--json", p.to_str().unwrap()]).assert().success();
    let cert: HH0Certificate = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(cert.verdict, Verdict::Zero);
    assert!(cert.verify());
}

#[test]
fn cut_an_arc() {
    let out = stdout(&["cut", r#"{"word":[],"left":"+","right":"-"}"#, "0"]);
    assert_eq!(out.trim(), "b⊗d + a⊗b");
}

#[test]
fn hopf_ops() {
    assert_eq!(stdout(&["hopf", "counit", "ad"]).trim(), "1");
    assert_eq!(stdout(&["hopf", "antipode", "b"]).trim(), "(-q^2)*b");
}

#[test]
fn verify_exit_codes() {
    let out = stdout(&["verify", "frobenius", "--N", "3"]);
    assert!(out.starts_with("PASS frobenius"), "{out}");
    skein().args(["verify", "hp", "--ring", "cyclo:12"]).assert().success();
    // x_{N-2} dies at m = 16, so the literal statement fails there
    skein().args(["verify", "hp", "--ring", "cyclo:16"]).assert().code(1);
    skein().args(["verify", "no-such-check"]).assert().code(2);
}

#[test]
fn verify_all_reports_in_name_order() {
    let out = skein().args(["verify", "all", "--kmax", "2"]).assert().get_output().stdout.clone();
    let names: Vec<String> = String::from_utf8(out)
        .unwrap()
        .lines()
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 15);
}
