//! End-to-end tests against the built binary: output shapes, exit codes,
//! and the stability guarantees of the export format.

use serde_json::Value;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_msaft"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("terminated by signal"),
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
    )
}

#[test]
fn count_all_methods_agree_at_n5() {
    let (code, stdout, _) = run(&["count", "--n", "5", "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "bruteforce: 57\nwalks: 57\nlgv: 57\nclosed: 57\n");
}

#[test]
fn count_json_uses_decimal_strings() {
    let (code, stdout, _) = run(&["count", "--n", "10", "--method", "closed", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["n"], 10);
    assert_eq!(v["counts"]["closed"], "161052");
}

#[test]
fn explicit_out_of_bound_method_aborts_with_3() {
    let (code, _, stderr) = run(&["count", "--n", "12", "--method", "bruteforce"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("--force"));
}

#[test]
fn count_all_mode_skips_out_of_bound_methods() {
    let (code, stdout, _) = run(&["count", "--n", "12", "--method", "all"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("bruteforce: skipped"));
    assert!(stdout.contains("walks: skipped"));
    assert!(stdout.contains("lgv: 3173090"));
    assert!(stdout.contains("closed: 3173090"));
}

#[test]
fn export_n3_is_byte_exact() {
    let (code, stdout, _) = run(&["export", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"n\":3,\"count\":1,\"class_count\":1,\"msafts\":[[[0,0],[0,1],[1,1],[0,2],[1,2],[2,2]]]}\n"
    );
}

#[test]
fn export_n4_schema_and_determinism() {
    let (code, first, _) = run(&["export", "--n", "4"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&first).expect("valid json");
    assert_eq!(v["n"], 4);
    assert_eq!(v["count"], 9);
    assert_eq!(v["class_count"], 3);
    let msafts = v["msafts"].as_array().expect("array of sets");
    assert_eq!(msafts.len(), 9);
    for m in msafts {
        let pairs = m.as_array().expect("array of secants");
        assert_eq!(pairs.len(), 8);
        for p in pairs {
            let p = p.as_array().expect("secant is a pair");
            assert_eq!(p.len(), 2);
        }
    }

    let (_, second, _) = run(&["export", "--n", "4"]);
    assert_eq!(first, second, "export output is byte-stable");
}

#[test]
fn export_n5_class_count() {
    let (code, stdout, _) = run(&["export", "--n", "5"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["count"], 57);
    assert_eq!(v["class_count"], 12);
}

#[test]
fn one_indexed_flag_never_changes_json() {
    let (_, plain, _) = run(&["export", "--n", "4"]);
    let (_, shifted, _) = run(&["export", "--n", "4", "--one-indexed"]);
    assert_eq!(plain, shifted);
}

#[test]
fn enumerate_text_lists_one_set_per_line() {
    let (code, stdout, _) = run(&["enumerate", "--n", "4"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 9);
    assert!(lines[0].starts_with("{0,0}"));

    let (_, shifted, _) = run(&["enumerate", "--n", "4", "--one-indexed"]);
    assert!(shifted.lines().next().unwrap().starts_with("{1,1}"));
    assert!(!shifted.contains('0'), "one-indexed text never shows vertex 0");
}

#[test]
fn enumerate_rejects_counting_methods() {
    let (code, _, stderr) = run(&["enumerate", "--n", "4", "--method", "lgv"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("walks or bruteforce"));
}

#[test]
fn dot_output_draws_loops_and_secants() {
    let (code, stdout, _) = run(&["export", "--n", "3", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("graph msaft_0 {"));
    assert!(stdout.contains("  v0 -- v0;"));
    assert!(stdout.contains("  v1 -- v2;"));
}

#[test]
fn triples_text_golden_n4() {
    let (code, stdout, _) = run(&["triples", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{0,0} {2,2} {1,3}\n{1,1} {0,2} {3,3}\n");
}

#[test]
fn leading_is_empty_below_the_first_minor() {
    let (code, stdout, _) = run(&["leading", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
}

#[test]
fn minors_text_shows_the_interval_and_polynomial() {
    let (code, stdout, _) = run(&["minors", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 15);
    assert!(stdout.contains("rows {0,1,2} cols {2,3,4}: s[2,2]*s[1,3]*s[0,4]"));
}

#[test]
fn groebner_check_certifies_small_n() {
    let (code, stdout, _) = run(&["groebner-check", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("all S-pairs reduce to zero"));

    let (code, stdout, _) = run(&["groebner-check", "--n", "5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("all S-pairs reduce to zero"));

    let (code, stdout, _) = run(&["groebner-check", "--n", "5", "--no-coprime-skip"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("skipped (coprime leading monomials): 0"));
    assert!(stdout.contains("all S-pairs reduce to zero"));
}

#[test]
fn groebner_check_refuses_large_n_without_force() {
    let (code, _, stderr) = run(&["groebner-check", "--n", "7"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("--force"));
}

#[test]
fn identities_suite_passes_to_300() {
    let (code, stdout, _) = run(&["identities", "--max-n", "300"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 7);
    assert!(stdout.lines().all(|l| l.contains("holds for n = 1..=300")));
}

#[test]
fn verify_all_passes_at_small_n() {
    for n in ["4", "5"] {
        let (code, stdout, _) = run(&["verify-all", "--n", n]);
        assert_eq!(code, 0, "verify-all --n {n}:\n{stdout}");
        assert!(stdout.lines().any(|l| l.starts_with("ok   ")));
        assert!(!stdout.contains("FAIL"));
    }
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["count", "--n", "2"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["triples", "--n", "4", "--format", "dot"]);
    assert_eq!(code, 2);
}
