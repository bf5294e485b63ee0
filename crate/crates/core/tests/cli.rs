//! The command-line interface: documented examples, exit codes and file
//! round trips. Commands run in-process through `cli::run`; one test goes
//! through the built binary.

mod common;

use std::path::{Path, PathBuf};

use common::*;
use nomination::cli::{run, EXIT_FAILURE, EXIT_MALFORMED, EXIT_NO, EXIT_YES};
use nomination::io::{instance_to_json, parse_election, parse_instance};
use nomination::reductions::{Cnf, MmcInstance};
use serde_json::Value;
use tempfile::TempDir;

const E1: &str = r#"{
  "candidates": ["a", "b", "c"],
  "voters": [["a", "b", "c"], ["c", "a", "b"], ["b", "c", "a"]]
}"#;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cli(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("nomination").chain(args.iter().copied()), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let r = cli(&all);
    (r.code, serde_json::from_str(&r.out).unwrap_or_else(|e| panic!("{e}: {}", r.out)))
}

fn file(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn out_path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

#[test]
fn winners_of_the_three_cycle() {
    let dir = TempDir::new().unwrap();
    let e1 = file(&dir, "e1.json", E1);
    for rule in ["copeland:0", "maximin", "llull", "copeland:1/3"] {
        let (code, report) = json(&["winners", &e1, "--rule", rule]);
        assert_eq!(code, EXIT_YES);
        assert_eq!(report["winners"], serde_json::json!(["a", "b", "c"]), "{rule}");
        for c in ["a", "b", "c"] {
            assert_eq!(report["scores"][c], "1", "{rule}");
        }
    }
    let text = cli(&["winners", &e1, "--rule", "maximin"]).out;
    assert!(text.starts_with("winners: a b c\n"), "{text}");
}

#[test]
fn copeland_scores_print_as_fractions() {
    let dir = TempDir::new().unwrap();
    // a and b tie (one voter each); both beat c.
    let e = file(&dir, "e.json", r#"{"candidates": ["a", "b", "c"], "voters": [["a", "b", "c"], ["b", "a", "c"]]}"#);
    let (_, report) = json(&["winners", &e, "--rule", "copeland:1/2"]);
    assert_eq!(report["scores"]["a"], "3/2");
    assert_eq!(report["scores"]["c"], "0");
    assert_eq!(report["winners"], serde_json::json!(["a", "b"]));
}

#[test]
fn single_candidate_wins() {
    let dir = TempDir::new().unwrap();
    let e = file(&dir, "one.json", r#"{"candidates": ["z"], "voters": [["z"]], "distinguished": 0}"#);
    for rule in ["maximin", "copeland:0"] {
        let (code, report) = json(&["winners", &e, "--rule", rule]);
        assert_eq!(code, EXIT_YES);
        assert_eq!(report["winners"], serde_json::json!(["z"]));
        let (code, report) = json(&["solve", &e, "--rule", rule]);
        assert_eq!(code, EXIT_YES);
        assert_eq!(report["decision"], "yes");
        assert_eq!(report["witness"], serde_json::json!(["z"]));
    }
}

#[test]
fn parse_errors_point_at_the_input() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.json", "{\"candidates\": [\"a\", \"b\"],\n\"voters\": [[\"a\", \"a\"]]}");
    let r = cli(&["winners", &bad, "--rule", "maximin"]);
    assert_eq!(r.code, EXIT_MALFORMED);
    assert!(r.err.contains("voter 0"), "{}", r.err);
    let broken = file(&dir, "broken.json", "{\"candidates\": [\"a\"],\n\"voters\": [[\"a\"],]}");
    let r = cli(&["winners", &broken, "--rule", "maximin"]);
    assert_eq!(r.code, EXIT_MALFORMED);
    assert!(r.err.contains("line 2"), "{}", r.err);
    assert_eq!(cli(&["winners", &broken, "--rule", "copeland:0.5"]).code, EXIT_MALFORMED);
}

#[test]
fn two_voter_maximin_solvers_agree() {
    let dir = TempDir::new().unwrap();
    let mut r = rng(5);
    let mut yes = 0;
    for i in 0..40 {
        let inst = random_instance(&mut r, 2, 5, 3, 10);
        let f = file(&dir, &format!("i{i}.json"), &instance_to_json(&inst, None));
        let (c1, brute) = json(&["solve", &f, "--rule", "maximin", "--algorithm", "brute"]);
        let (c2, fast) = json(&["solve", &f, "--rule", "maximin", "--algorithm", "maximin2v"]);
        assert_eq!(c1, c2);
        assert_eq!(brute["decision"], fast["decision"]);
        assert_eq!(brute["witness"], fast["witness"], "instance {i}");
        yes += (c1 == EXIT_YES) as usize;
    }
    assert!(yes > 0 && yes < 40);
}

#[test]
fn budget_and_preconditions_exit_two() {
    let dir = TempDir::new().unwrap();
    let mut r = rng(6);
    let inst = random_instance(&mut r, 4, 8, 3, 24);
    assert!(inst.num_nominations() > 10);
    let f = file(&dir, "big.json", &instance_to_json(&inst, None));
    let (code, report) = json(&["solve", &f, "--rule", "copeland:0", "--algorithm", "brute", "--budget", "10"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(report["error"].as_str().unwrap().contains("exceeds"));
    // Four voters do not fit the two-voter solver; Copeland does not fit the Maximin ones.
    assert_eq!(cli(&["solve", &f, "--rule", "maximin", "--algorithm", "maximin2v"]).code, EXIT_FAILURE);
    assert_eq!(cli(&["solve", &f, "--rule", "copeland:0", "--algorithm", "maximin-fpt"]).code, EXIT_FAILURE);
}

#[test]
fn flat_generation_round_trips() {
    let dir = TempDir::new().unwrap();
    let out = out_path(&dir, "flat.json");
    assert_eq!(cli(&["gen", "flat", "--q", "2", "--out", &out]).code, EXIT_YES);
    let text = std::fs::read_to_string(&out).unwrap();
    let (e, meta) = parse_election(&text).unwrap();
    assert_eq!(e.num_candidates(), 9);
    assert_eq!(nomination::io::election_to_json(&e, meta.as_ref()), text);
    let (_, report) = json(&["winners", &out, "--rule", "copeland:0"]);
    let scores: Vec<&Value> = report["scores"].as_object().unwrap().values().collect();
    assert_eq!(scores.len(), 9);
    assert!(scores.iter().all(|s| *s == "4"));
    assert_eq!(cli(&["gen", "flat", "--q", "99"]).code, EXIT_FAILURE);
}

#[test]
fn sat_reduction_then_solve() {
    let dir = TempDir::new().unwrap();
    let cnf = Cnf::new(2, vec![[1, 2, -1], [-2, 1, 2]]).unwrap();
    let src = file(&dir, "f.cnf", &cnf.to_dimacs());
    for (from, voters) in [("3sat4v", 4), ("3sat5v", 5)] {
        let out = out_path(&dir, &format!("{from}.json"));
        let (code, report) = json(&["gen", "reduce", "--from", from, "--in", &src, "--out", &out]);
        assert_eq!(code, EXIT_YES);
        assert_eq!(report["stats"]["voters"], voters);
        let text = std::fs::read_to_string(&out).unwrap();
        let (inst, meta) = parse_instance(&text).unwrap();
        let meta = meta.unwrap();
        assert_eq!(meta.generator, from);
        assert_eq!(meta.source_sha256.as_deref().map(str::len), Some(64));
        assert_eq!(instance_to_json(&inst, Some(&meta)), text);
        assert_eq!(cli(&["solve", &out, "--rule", "maximin"]).code, EXIT_YES);
    }
    let trivial = file(&dir, "t.cnf", "p cnf 3 1\n1 2 3 0\n");
    let r = cli(&["gen", "reduce", "--from", "3sat4v", "--in", &trivial]);
    assert_eq!(r.code, EXIT_FAILURE);
    assert!(r.err.contains("trivial"), "{}", r.err);
}

#[test]
fn clique_reduction_rejects_alpha_one() {
    let dir = TempDir::new().unwrap();
    let g = file(&dir, "g.txt", "class a1 a2\nclass b1 b2\na1 b1\na2 b2\n");
    assert_eq!(cli(&["gen", "reduce", "--from", "mcq", "--in", &g, "--alpha", "1/1"]).code, EXIT_FAILURE);
    let out = out_path(&dir, "mcq.json");
    assert_eq!(cli(&["gen", "reduce", "--from", "mcq", "--in", &g, "--alpha", "1/2", "--out", &out]).code, EXIT_YES);
    assert_eq!(cli(&["solve", &out, "--rule", "copeland:1/2"]).code, EXIT_YES);
    assert_eq!(cli(&["gen", "reduce", "--from", "3col2v", "--in", &g, "--alpha", "1/2"]).code, EXIT_FAILURE);
}

#[test]
fn coloring_reductions_to_stdout() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.txt", "a b\na c\na d\nb c\nb d\nc d\n");
    for (from, rule) in [("3col2v", "copeland:0"), ("3col4v", "llull")] {
        let r = cli(&["gen", "reduce", "--from", from, "--in", &k4]);
        assert_eq!(r.code, EXIT_YES);
        let f = file(&dir, &format!("{from}.json"), &r.out);
        assert_eq!(cli(&["solve", &f, "--rule", rule]).code, EXIT_FAILURE, "{from} over the default budget");
        assert_eq!(cli(&["solve", &f, "--rule", rule, "--budget", "4294967296"]).code, EXIT_NO, "{from}");
    }
}

#[test]
fn room_matching_pipeline() {
    let dir = TempDir::new().unwrap();
    let m = MmcInstance::new(&["s1", "s2"], &["c1"], &["r1", "r2"], &[("s1", "r1"), ("s2", "r1"), ("c1", "r1"), ("c1", "r2")])
        .unwrap();
    let src = file(&dir, "m.json", &m.to_json());
    // Not in normal form: the three-voter generator refuses it.
    assert_eq!(cli(&["gen", "reduce", "--from", "mmc3v", "--in", &src]).code, EXIT_FAILURE);
    let norm = out_path(&dir, "norm.json");
    assert_eq!(cli(&["gen", "reduce", "--from", "mmc-normalize", "--in", &src, "--out", &norm]).code, EXIT_YES);
    let normalized = MmcInstance::from_json(&std::fs::read_to_string(&norm).unwrap()).unwrap();
    assert!(normalized.is_normal_form());
    let two = file(
        &dir,
        "two.json",
        &MmcInstance::new(&[], &["c1", "c2"], &["r1", "r2"], &[("c1", "r1"), ("c1", "r2"), ("c2", "r1"), ("c2", "r2")])
            .unwrap()
            .to_json(),
    );
    let out = out_path(&dir, "three.json");
    let (code, report) = json(&["gen", "reduce", "--from", "mmc3v", "--in", &two, "--out", &out]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(report["stats"]["parties"], 81);
    assert_eq!(cli(&["solve", &out, "--rule", "copeland:0"]).code, EXIT_YES);
}

#[test]
fn verify_contract() {
    let dir = TempDir::new().unwrap();
    let inst = file(
        &dir,
        "inst.json",
        r#"{"candidates": ["p", "x1", "x2", "y"],
            "voters": [["p", "x1", "y", "x2"], ["x1", "p", "y", "x2"]],
            "parties": [["p"], ["x1", "x2"], ["y"]], "distinguished": 0}"#,
    );
    let w = out_path(&dir, "w.json");
    assert_eq!(cli(&["solve", &inst, "--rule", "llull", "--witness-out", &w]).code, EXIT_YES);
    assert_eq!(cli(&["verify", &inst, &w, "--rule", "llull"]).code, EXIT_YES);
    let swapped = file(&dir, "swapped.json", r#"{"nomination": ["p", "x1", "y"]}"#);
    assert_eq!(cli(&["verify", &inst, &swapped, "--rule", "llull"]).code, EXIT_NO);
    let missing = file(&dir, "missing.json", r#"{"nomination": ["p", "x2"]}"#);
    assert_eq!(cli(&["verify", &inst, &missing, "--rule", "llull"]).code, EXIT_MALFORMED);
    let garbage = file(&dir, "garbage.json", "[1, 2");
    assert_eq!(cli(&["verify", &inst, &garbage, "--rule", "llull"]).code, EXIT_MALFORMED);
}

#[test]
fn any_witness_mode_still_verifies() {
    let dir = TempDir::new().unwrap();
    let mut r = rng(8);
    for i in 0..20 {
        let inst = random_instance(&mut r, 3, 5, 3, 10);
        let f = file(&dir, &format!("i{i}.json"), &instance_to_json(&inst, None));
        let w = out_path(&dir, &format!("w{i}.json"));
        let code = cli(&["--threads", "2", "solve", &f, "--rule", "copeland:1/2", "--any-witness", "--witness-out", &w]).code;
        if code == EXIT_YES {
            assert_eq!(cli(&["verify", &f, &w, "--rule", "copeland:1/2"]).code, EXIT_YES);
        } else {
            assert_eq!(code, EXIT_NO);
            assert!(!Path::new(&w).exists());
        }
    }
}

#[test]
fn binary_forwards_exit_codes() {
    let bin = PathBuf::from(env!("CARGO_BIN_EXE_nomination"));
    let dir = TempDir::new().unwrap();
    let e1 = file(&dir, "e1.json", E1);
    let out = std::process::Command::new(&bin).args(["winners", &e1, "--rule", "maximin"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("winners: a b c"));
    let st = std::process::Command::new(&bin).args(["solve", "/nonexistent.json", "--rule", "maximin"]).output().unwrap();
    assert_eq!(st.status.code(), Some(EXIT_MALFORMED));
}
