//! End-to-end tests of the `achroma` binary: file formats, exit codes, and
//! the JSON-supersets-text contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_achroma"))
}

fn write_file(test: &str, name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("achroma-cli-{}-{test}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join(name);
    std::fs::write(&path, content).expect("write fixture");
    path
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = cmd.output().expect("binary runs");
    (
        status.code().expect("exit code"),
        String::from_utf8(stdout).expect("utf-8 stdout"),
        String::from_utf8(stderr).expect("utf-8 stderr"),
    )
}

const K5_NEGATIVE: &str = "sg 5\n0 1 -\n0 2 -\n0 3 -\n0 4 -\n1 2 -\n1 3 -\n1 4 -\n2 3 -\n2 4 -\n3 4 -\n";

#[test]
fn psi_of_negative_k5_is_two() {
    let file = write_file("psi", "k5.sg", K5_NEGATIVE);
    let (code, out, _) = run(bin().arg("psi").arg(&file));
    assert_eq!(code, 0);
    assert!(out.contains("psi = 2"), "missing value in {out}");
    assert!(out.contains("witness:"));
}

#[test]
fn json_report_is_a_superset_of_the_text_report() {
    let file = write_file("json", "k5.sg", K5_NEGATIVE);
    let (code, text, _) = run(bin().arg("psi").arg(&file));
    assert_eq!(code, 0);
    let (code, json, _) = run(bin().args(["--json", "psi"]).arg(&file));
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(value["values"]["psi"], 2);
    assert_eq!(value["values"]["order"], 5);
    // Every chain line and witness entry of the text output appears in json.
    for line in text.lines() {
        if let Some(entry) = line.strip_prefix("  ") {
            assert!(
                value["chain"].as_array().unwrap().iter().any(|c| c == entry),
                "chain line '{entry}' missing from json"
            );
        }
    }
    assert!(json.contains("0:1+"));
}

#[test]
fn equiv_accepts_any_two_tree_signatures() {
    let a = write_file("equiv-yes", "a.sg", "sg 4\n0 1 +\n1 2 +\n2 3 +\n");
    let b = write_file("equiv-yes", "b.sg", "sg 4\n0 1 -\n1 2 -\n2 3 +\n");
    let (code, out, _) = run(bin().arg("equiv").arg(&a).arg(&b));
    assert_eq!(code, 0);
    assert!(out.contains("equivalent: yes"));
}

#[test]
fn equiv_rejects_different_balance_classes() {
    let a = write_file("equiv-no", "bal.sg", "sg 3\n0 1 +\n0 2 +\n1 2 +\n");
    let b = write_file("equiv-no", "unbal.sg", "sg 3\n0 1 -\n0 2 +\n1 2 +\n");
    let (code, out, _) = run(bin().arg("equiv").arg(&a).arg(&b));
    assert_eq!(code, 1);
    assert!(out.contains("equivalent: no"));
}

#[test]
fn verify_distinguishes_complete_from_merely_proper() {
    let g = write_file("verify", "k5.sg", K5_NEGATIVE);
    let complete = write_file("verify", "complete.col", "col 2\n0 +1\n1 +1\n2 +1\n3 +1\n4 +1\n");
    let (code, out, _) = run(bin().arg("verify").arg(&g).arg(&complete));
    assert_eq!(code, 0);
    assert!(out.contains("complete: yes"));

    // Proper at k = 4 but magnitude 2 shows up on no edge type pair (2, 2).
    let proper = write_file("verify", "proper.col", "col 4\n0 +1\n1 +1\n2 +1\n3 +1\n4 +2\n");
    let (code, out, _) = run(bin().arg("verify").arg(&g).arg(&proper));
    assert_eq!(code, 1);
    assert!(out.contains("proper: yes"));
    assert!(out.contains("complete: no"));
}

#[test]
fn verify_handles_inferred_colourings_behind_the_flag() {
    let g = write_file("verify-inf", "k5.sg", K5_NEGATIVE);
    let col = write_file("verify-inf", "c.col", "col 2\n0 1+\n1 1+\n2 1+\n3 1+\n4 1+\n");
    let (code, out, _) = run(bin().args(["verify", "--inferred"]).arg(&g).arg(&col));
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("complete: yes"));
    // Without the flag the style mismatch is a usage error.
    let (code, _, err) = run(bin().arg("verify").arg(&g).arg(&col));
    assert_eq!(code, 2);
    assert!(err.contains("--inferred"));
}

#[test]
fn reduce_lists_the_realized_types() {
    let g = write_file("reduce", "k5.sg", K5_NEGATIVE);
    let col = write_file("reduce", "c.col", "col 2\n0 +1\n1 +1\n2 +1\n3 +1\n4 +1\n");
    let (code, out, _) = run(bin().arg("reduce").arg(&g).arg(&col));
    assert_eq!(code, 0);
    assert!(out.contains("classes = 1"));
    assert!(out.contains("type (1, 1, -) realized by 10 edge(s)"));
}

#[test]
fn witness_extraction_respects_the_size_bound() {
    let g = write_file("witness", "k5.sg", K5_NEGATIVE);
    let col = write_file("witness", "c.col", "col 2\n0 +1\n1 +1\n2 +1\n3 +1\n4 +1\n");
    let (code, out, _) = run(bin().arg("witness").arg(&g).arg(&col));
    assert_eq!(code, 0);
    assert!(out.contains("kept = 2"));
    assert!(out.contains("bound = 2"));
    assert!(out.contains("complete: yes"));
}

#[test]
fn gen_output_round_trips_and_matches_its_claim() {
    let (code, out, _) = run(bin().args(["gen", "remove-vertex", "4"]));
    assert_eq!(code, 0);
    assert!(out.contains("# claimed psi 4"));
    let file = write_file("gen", "fam.sg", &out);
    let (code, out, _) = run(bin().arg("psi").arg(&file));
    assert_eq!(code, 0);
    assert!(out.contains("psi = 4"));
}

#[test]
fn unknown_family_and_subcommand_are_usage_errors() {
    let (code, _, err) = run(bin().args(["gen", "bogus", "3"]));
    assert_eq!(code, 2);
    assert!(err.contains("known families"));
    let (code, _, _) = run(bin().arg("frobnicate"));
    assert_eq!(code, 2);
}

#[test]
fn malformed_graph_files_are_parse_errors() {
    let file = write_file("parse", "loop.sg", "sg 2\n0 0 +\n");
    let (code, _, err) = run(bin().arg("psi").arg(&file));
    assert_eq!(code, 2);
    assert!(err.contains("line 2"));
}

#[test]
fn exhausted_node_budget_exits_three() {
    let file = write_file("budget", "k5.sg", K5_NEGATIVE);
    let (code, _, err) = run(bin().args(["--node-budget", "3", "psi"]).arg(&file));
    assert_eq!(code, 3);
    assert!(err.contains("exhausted"));
}

#[test]
fn formula_values_match_the_library() {
    let (code, out, _) = run(bin().args(["formula", "path", "10"]));
    assert_eq!(code, 0);
    assert!(out.contains("psi = 6"));
    let expected = achroma::formulas::psi_cycle(9, achroma::graph::Parity::Odd).unwrap();
    let (code, out, _) = run(bin().args(["formula", "cycle", "9", "unbalanced"]));
    assert_eq!(code, 0);
    assert!(out.contains(&format!("psi = {expected}")));
    let (code, out, _) = run(bin().args(["formula", "clique", "6", "negative"]));
    assert_eq!(code, 0);
    assert!(out.contains("psi = 2"));
    let (code, _, _) = run(bin().args(["formula", "donut", "9"]));
    assert_eq!(code, 2);
}

#[test]
fn check_passes_quickly_at_small_scale() {
    let (code, out, _) = run(bin().args(["check", "--trials", "10", "--max-n", "4"]));
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("harness: seed 42 max-n 4 trials 10"));
    assert!(out.contains("ok"));
    assert!(!out.contains("VIOLATED"));
}

#[test]
fn check_reports_are_byte_identical_for_a_fixed_seed() {
    let args = ["--json", "check", "--trials", "6", "--max-n", "4", "--seed", "7"];
    let (c1, out1, _) = run(bin().args(args));
    let (c2, out2, _) = run(bin().args(args).args(["--workers", "3"]));
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert_eq!(out1, out2);
}

#[test]
fn check_with_a_tiny_budget_exits_three() {
    let (code, out, _) = run(bin().args(["check", "--trials", "5", "--node-budget", "4"]));
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("stopped: resource exhausted"));
}
