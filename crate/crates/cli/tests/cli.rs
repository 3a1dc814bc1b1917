use std::path::PathBuf;

use oposet_cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use orthoposet::models::{benzene, example1, fig3};
use orthoposet::serialize_poset;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn oposet(args: &[&str]) -> Outcome {
    oposet_stdin(args, "")
}

fn oposet_stdin(args: &[&str], input: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("oposet").chain(args.iter().copied());
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write_fixture(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn check_fig2_strong_skew() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_fixture(&dir, "fig2.oposet", &serialize_poset(&example1(4).unwrap()));
    let r = oposet(&["check", p.to_str().unwrap(), "--property", "strong-somp"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("PASS strong_skew_omp [antichains]"));
    let r = oposet(&[
        "check",
        p.to_str().unwrap(),
        "--property",
        "strong-somp",
        "--mode",
        "subsets",
    ]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("[subsets]"));
}

#[test]
fn check_failure_exits_one() {
    let r = oposet_stdin(&["check", "-", "--property", "somp"], &serialize_poset(&benzene()));
    assert_eq!(r.code, EXIT_FAILED);
    assert!(r.out.contains("FAIL skew_omp"));
    assert!(r.out.contains("witness (a, b)"));
}

#[test]
fn check_identity_selection_and_require() {
    let text = serialize_poset(&fig3());
    let r = oposet_stdin(
        &["check", "-", "--property", "boolean", "--identity", "2", "--json"],
        &text,
    );
    assert_eq!(r.code, EXIT_FAILED);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["checks"][0]["mode"], "identity 2");
    let r = oposet_stdin(&["check", "-", "--require", "!lattice & orthomodular | lemma1"], &text);
    assert!(r.code == EXIT_OK || r.code == EXIT_FAILED);
    assert!(r.out.contains("require"));
    let r = oposet_stdin(&["check", "-", "--identity", "5"], &text);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn verify_theorem1_informational_json() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_fixture(&dir, "benzene.oposet", &serialize_poset(&benzene()));
    let r = oposet(&[
        "verify",
        p.to_str().unwrap(),
        "--suite",
        "thm1",
        "--informational",
        "--json",
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("outside hypothesis"));
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["laws"][0]["law_id"], "thm1");
    assert_eq!(v["laws"][0]["applicable"], false);
    assert_eq!(v["laws"][0]["witnesses"][0]["elements"], serde_json::json!(["a", "b"]));
}

#[test]
fn verify_all_suites_on_fig2() {
    let r = oposet_stdin(&["verify", "-"], &serialize_poset(&example1(4).unwrap()));
    // the literal reading of the Pixley cone identity fails everywhere
    assert_eq!(r.code, EXIT_FAILED);
    assert!(r.out.contains("FAIL prop3 [literal]"));
    assert!(r.out.contains("PASS prop3 [min-both-sides]"));
    assert!(r.out.contains("PASS thm1"));
    assert!(r.out.contains("PASS lemma_strong_join"));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let r = oposet_stdin(&["verify", "-", "--suite", "prop9"], &serialize_poset(&benzene()));
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("unknown suite"));
}

#[test]
fn ops_tsv_and_json() {
    let text = serialize_poset(&benzene());
    let r = oposet_stdin(&["ops", "-", "--op", "c"], &text);
    assert_eq!(r.code, EXIT_OK);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines[0], "x\ty\tc(x,y)");
    assert_eq!(lines.len(), 1 + 36);
    assert!(lines.contains(&"a\tb\t{1}"));
    let r = oposet_stdin(&["ops", "-", "--op", "T", "--json"], &text);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 216);
    let r = oposet_stdin(&["ops", "-", "--op", "Q"], &text);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn gen_and_dot() {
    let r = oposet(&["gen", "example1", "4"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("poset example1-4\n"));
    let r = oposet_stdin(&["dot", "-"], &r.out);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out.lines().filter(|l| l.contains("->")).count(), 20);
    assert_eq!(oposet(&["gen", "powerset", "2"]).code, EXIT_OK);
    assert_eq!(oposet(&["gen", "powerset", "0"]).code, EXIT_USAGE);
    assert_eq!(oposet(&["gen", "example1"]).code, EXIT_USAGE);
    assert_eq!(oposet(&["gen", "cube"]).code, EXIT_USAGE);
}

#[test]
fn search_finds_or_reports_none() {
    let r = oposet(&["search", "--max-size", "8", "--require", "strong-somp & !orthomodular"]);
    assert_eq!(r.code, EXIT_FAILED);
    assert_eq!(r.out, "none found\n");
    let r = oposet(&["search", "--max-size", "10", "--require", "strong-somp & !orthomodular"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("poset ortho10-"));
    let r = oposet(&["search", "--max-size", "6", "--limit", "1"]);
    assert_eq!(r.out.matches("poset ").count(), 1);
    assert_eq!(oposet(&["search", "--max-size", "14"]).code, EXIT_USAGE);
    assert_eq!(oposet(&["search", "--require", "lattice &"]).code, EXIT_USAGE);
}

#[test]
fn input_errors_exit_two() {
    let r = oposet(&["check", "/nonexistent/x.oposet"]);
    assert_eq!(r.code, EXIT_USAGE);
    let r = oposet_stdin(
        &["check", "-"],
        "poset p\nelements: a a'\ncovers: a < a'\ninvolution: a = a'\nend\n",
    );
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("not a complementation"), "{}", r.err);
    assert_eq!(oposet(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(oposet(&["check", "-", "--property", "nope"]).code, EXIT_USAGE);
    assert_eq!(oposet(&["--help"]).code, EXIT_OK);
}

#[test]
fn json_is_deterministic() {
    let text = serialize_poset(&example1(4).unwrap());
    let a = oposet_stdin(&["check", "-", "--json", "--all-witnesses"], &text);
    let b = oposet_stdin(&["check", "-", "--json", "--all-witnesses"], &text);
    assert_eq!(a.out, b.out);
    let a = oposet_stdin(&["verify", "-", "--json", "--informational"], &text);
    let b = oposet_stdin(&["verify", "-", "--json", "--informational"], &text);
    assert_eq!(a.out, b.out);
}
