use std::fs;
use std::path::Path;
use std::process::Command;

use qdesign_core::io::{format_design, format_large_set, paper_large_set};
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn qdesign(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_qdesign")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exited"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verifies_the_builtin() {
    let r = qdesign(&["verify", "--builtin", "ls2-3-238"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("verdict: large set"));
    assert_eq!(r.stdout.matches("coverage=21..21").count(), 3);
}

#[test]
fn verify_json_report() {
    let r = qdesign(&["verify", "--builtin", "ls2-3-238", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["orbits_covered"], 381);
    assert_eq!(v["designs"][0]["coverage_histogram"]["21"], 10795);
}

#[test]
fn files_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    let ls = paper_large_set().unwrap();
    let full = dir.path().join("ls.txt");
    fs::write(&full, format_large_set(&ls)).unwrap();
    assert_eq!(qdesign(&["verify", "--large-set", path_str(&full)]).code, 0);

    let one = dir.path().join("d.txt");
    fs::write(&one, format_design(&ls.designs()[0])).unwrap();
    let r = qdesign(&["verify", "--design", path_str(&one)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("verdict: design\n"));

    let text = format_design(&ls.designs()[0]);
    let damaged: Vec<&str> = text.lines().take(text.lines().count() - 1).collect();
    let cut = dir.path().join("cut.txt");
    fs::write(&cut, damaged.join("\n") + "\n").unwrap();
    let r = qdesign(&["verify", "--design", path_str(&cut)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("verdict: not a design"));

    let two = dir.path().join("two.txt");
    let sections: Vec<String> = ls.designs()[..2].iter().map(format_design).collect();
    fs::write(&two, sections.join("---\n")).unwrap();
    let r = qdesign(&["verify", "--large-set", path_str(&two)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("complete: false"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "design 2 8 3 21 2 group=singer-paper\n[1,2,x]\n").unwrap();
    let r = qdesign(&["verify", "--design", path_str(&bad)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);

    let rank = dir.path().join("rank.txt");
    fs::write(&rank, "design 2 8 3 21 2 group=singer-paper\n[1,2,3]\n").unwrap();
    assert_eq!(qdesign(&["verify", "--design", path_str(&rank)]).code, 2);

    let missing = dir.path().join("missing.txt");
    assert_eq!(qdesign(&["verify", "--design", path_str(&missing)]).code, 2);
    assert_eq!(qdesign(&["verify", "--builtin", "nope"]).code, 2);
    assert_eq!(qdesign(&["verify"]).code, 2);
}

#[test]
fn km_matrices() {
    let r = qdesign(&["km", "--t", "2", "--k", "3", "--n", "8", "--lambda", "21", "--group", "singer-paper"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("km rows=43 cols=381 lambda=21"));

    let r = qdesign(&["km", "--t", "1", "--k", "2", "--n", "4"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("rows: 15\ncols: 35\n"));

    let dir = TempDir::new().unwrap();
    let gen = dir.path().join("gen.txt");
    fs::write(&gen, "generator n=8 q=2\n2 4 8 16 32 64 128 29\n").unwrap();
    let out = dir.path().join("km.txt");
    let r = qdesign(&["km", "--t", "2", "--k", "3", "--n", "8", "--group", path_str(&gen), "--out", path_str(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(fs::read_to_string(&out).unwrap().starts_with("km rows=43 cols=381"));
    assert!(!r.stdout.contains("km rows="));
}

#[test]
fn km_rejects_bad_dimensions() {
    assert_eq!(qdesign(&["km", "--t", "3", "--k", "3", "--n", "8"]).code, 2);
    assert_eq!(qdesign(&["km", "--t", "1", "--k", "5", "--n", "4"]).code, 2);
    assert_eq!(qdesign(&["km", "--t", "1", "--k", "2", "--n", "4", "--group", "singer-paper"]).code, 2);
}

#[test]
fn search_b_writes_a_parallelism() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("par.txt");
    let r = qdesign(&["search", "--algo", "b", "--t", "1", "--k", "2", "--n", "4", "--q", "2", "--N", "7", "--group", "trivial", "--out", path_str(&out)]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("result: found (algorithm B)"));
    let r = qdesign(&["verify", "--large-set", path_str(&out)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("LS_2[7](1,2,4)"));
}

#[test]
fn search_rejects_inadmissible_counts() {
    let r = qdesign(&["search", "--algo", "a", "--t", "2", "--k", "3", "--n", "8", "--N", "2", "--group", "singer-paper"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not admissible"));
    let r = qdesign(&["search", "--algo", "a", "--t", "2", "--k", "3", "--n", "8", "--N", "3", "--lambda", "20", "--group", "singer-paper"]);
    assert_eq!(r.code, 2);
}

#[test]
fn search_budget_is_inconclusive() {
    let r = qdesign(&["search", "--algo", "a", "--t", "2", "--k", "3", "--n", "8", "--N", "3", "--group", "singer-paper", "--budget", "1", "--format", "json"]);
    assert_eq!(r.code, 4, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["result"], "failed");
    assert_eq!(v["failure"]["iteration"], 1);
}

#[test]
fn dual_of_the_builtin() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("dual.txt");
    let r = qdesign(&["dual", "--builtin", "ls2-3-238", "--out", path_str(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("465"));
    assert!(r.stdout.contains("2-(8,5,21;2)"));
    assert!(r.stdout.contains("verdict: large set"));

    let back = dir.path().join("back.txt");
    let r = qdesign(&["dual", "--large-set", path_str(&out), "--out", path_str(&back)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(fs::read_to_string(&back).unwrap(), format_large_set(&paper_large_set().unwrap()));
}

#[test]
fn dual_refuses_a_non_design() {
    let dir = TempDir::new().unwrap();
    let ls = paper_large_set().unwrap();
    let text = format_design(&ls.designs()[0]);
    let damaged: Vec<&str> = text.lines().take(text.lines().count() - 1).collect();
    let cut = dir.path().join("cut.txt");
    fs::write(&cut, damaged.join("\n") + "\n").unwrap();
    let out = dir.path().join("dual.txt");
    let r = qdesign(&["dual", "--design", path_str(&cut), "--out", path_str(&out)]);
    assert_eq!(r.code, 1);
    assert!(!out.exists());
}

#[test]
fn params_reports() {
    let r = qdesign(&["params", "--t", "2", "--k", "3", "--n", "8", "--N", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("lambda: 21"));
    let r = qdesign(&["params", "--t", "2", "--k", "3", "--n", "8", "--N", "2", "--format", "json"]);
    assert_eq!(r.code, 1);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["admissible"], false);
    assert_eq!(qdesign(&["params", "--t", "2", "--k", "9", "--n", "8", "--N", "3"]).code, 2);
    assert_eq!(qdesign(&["params", "--t", "3", "--k", "3", "--n", "8", "--N", "3"]).code, 1);
}
