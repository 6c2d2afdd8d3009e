//! End-to-end tests of the `polybern` binary: output shapes, formats,
//! determinism, and exit codes.

use std::process::{Command, Output};

fn run_with(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut command = Command::new(env!("CARGO_BIN_EXE_polybern"));
    command.args(args).env_remove("POLYB_THREADS");
    for (name, value) in envs {
        command.env(name, value);
    }
    command.output().expect("binary should run")
}

fn run(args: &[&str]) -> Output {
    run_with(args, &[])
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

fn code_of(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn value_prints_integers_without_denominator() {
    let out = run(&["value", "B", "--k=-2", "--n=2"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "14\n");
}

#[test]
fn value_classical_bernoulli_row() {
    let expected = ["1", "1/2", "1/6", "0", "-1/30"];
    for (n, want) in expected.iter().enumerate() {
        let n_arg = format!("--n={n}");
        let out = run(&["value", "B", "--k=1", &n_arg]);
        assert_eq!(stdout_of(&out).trim(), *want, "n={n}");
    }
    let out = run(&["value", "C", "--k=1", "--n=1"]);
    assert_eq!(stdout_of(&out).trim(), "-1/2");
}

#[test]
fn value_huge_lower_index_modulo_5() {
    let out = run(&["value", "B", "--k=-1", "--n=1000000000000000000", "--mod", "5"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn value_rejects_negative_lower_index() {
    let out = run(&["value", "B", "--k=1", "--n=-1"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn value_exact_cap_is_configurable() {
    let out = run(&["value", "B", "--k=0", "--n=201"]);
    assert_eq!(code_of(&out), 2);
    let out = run(&["value", "B", "--k=0", "--n=201", "--max-exact-n=201"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn value_modular_needs_nonpositive_upper_index() {
    let out = run(&["value", "B", "--k=1", "--n=2", "--mod", "7"]);
    assert_eq!(code_of(&out), 2);
    let out = run(&["value", "C", "--k=0", "--n=2", "--mod", "7"]);
    assert_eq!(code_of(&out), 2);
    // k = 0 is fine for kind B: the constant row 1.
    let out = run(&["value", "B", "--k=0", "--n=2", "--mod", "7"]);
    assert_eq!(stdout_of(&out), "1\n");
}

#[test]
fn table_is_deterministic_and_row_major() {
    let args = ["table", "B", "--kmin=-2", "--kmax=0", "--nmin=0", "--nmax=3"];
    let first = run(&args);
    assert_eq!(code_of(&first), 0);
    let text = stdout_of(&first);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "B(-2, 0) = 1");
    assert_eq!(lines[3], "B(-2, 3) = 46");
    assert_eq!(lines[11], "B(0, 3) = 1");
    let second = run(&args);
    assert_eq!(stdout_of(&second), text);
}

#[test]
fn table_tsv_has_header_and_strict_rationals() {
    let out = run(&[
        "table", "B", "--kmin=1", "--kmax=1", "--nmin=0", "--nmax=2", "--format=tsv",
    ]);
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "record\tkind\tk\tn\tvalue");
    assert_eq!(lines[1], "table-cell\tB\t1\t0\t1/1");
    assert_eq!(lines[3], "table-cell\tB\t1\t2\t1/6");
}

#[test]
fn series_matches_value_route() {
    let out = run(&["series", "B", "--k=1", "--order=4"]);
    let text = stdout_of(&out);
    assert!(text.lines().next_back().unwrap().ends_with("= -1/30"), "{text}");

    let out = run(&["series", "C", "--k=-2", "--order=3", "--format=jsonl"]);
    for (n, line) in stdout_of(&out).lines().enumerate() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["record"], "table-cell");
        assert_eq!(record["k"], "-2");
        assert_eq!(record["n"], n.to_string());
        // C^(-2)_n = 2^(n+1) - 1.
        assert_eq!(record["value"], format!("{}/1", (1u64 << (n + 1)) - 1));
    }
}

#[test]
fn verify_passes_and_rejects_by_exit_code() {
    let out = run(&["verify", "T3.5", "--p=7"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).contains("T3.5 PASS"));

    let out = run(&["verify", "T3.5", "--p=5"]);
    assert_eq!(code_of(&out), 2);

    let out = run(&["verify", "T9.9", "--p=7"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn verify_residue_reports_are_filtered_by_theorem() {
    let out = run(&["verify", "T3.1", "--p=5", "--kmax=4"]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|line| line.starts_with("T3.1 PASS")));
}

#[test]
fn verify_two_congruence_enumerates_admissible_pairs() {
    let out = run(&["verify", "T3.4", "--p=5"]);
    assert_eq!(code_of(&out), 0);
    // kmax defaults to 2(p-1) = 8: residues 0 and 1 mod 4 give 8 pairs.
    assert_eq!(stdout_of(&out).lines().count(), 8);
}

#[test]
fn verify_periodicity_guards_map_to_exit_2() {
    let out = run(&["verify", "T2.1", "--mod=8", "--k=3"]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).starts_with("T2.1 PASS"));

    let out = run(&["verify", "T2.1", "--mod=8", "--k=3", "--n=1"]);
    assert_eq!(code_of(&out), 2);

    let out = run(&["verify", "T2.1", "--mod=5", "--k=2", "--n=1", "--m=2"]);
    assert_eq!(code_of(&out), 2);

    let out = run(&["verify", "T2.4", "--mod=9", "--k=0"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn verify_all_smoke_and_thread_determinism() {
    let sequential = run(&["verify", "all", "--pmax=7"]);
    assert_eq!(code_of(&sequential), 0);
    let text = stdout_of(&sequential);
    assert!(!text.contains("FAIL"));
    assert!(text.lines().count() > 100);

    let parallel = run_with(&["verify", "all", "--pmax=7"], &[("POLYB_THREADS", "4")]);
    assert_eq!(code_of(&parallel), 0);
    assert_eq!(stdout_of(&parallel), text);
}

#[test]
fn verify_all_requires_pmax() {
    let out = run(&["verify", "all"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn invalid_thread_env_is_a_usage_error() {
    let out = run_with(&["verify", "all", "--pmax=5"], &[("POLYB_THREADS", "zero")]);
    assert_eq!(code_of(&out), 2);
    let out = run_with(&["verify", "all", "--pmax=5"], &[("POLYB_THREADS", "0")]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn lonesum_count_brute_and_verify() {
    let out = run(&["lonesum", "brute", "--k=2", "--n=2"]);
    assert_eq!(stdout_of(&out), "14\n");

    let out = run(&["lonesum", "count", "--k=3", "--n=3"]);
    assert_eq!(stdout_of(&out), "230\n");

    let out = run(&["lonesum", "count", "--k=1", "--n=1000000000000000000", "--mod", "5"]);
    assert_eq!(stdout_of(&out), "1\n");

    let out = run(&["lonesum", "verify", "--k=2", "--n=1", "--mod", "5"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out).lines().count(), 3);

    let out = run(&["lonesum", "brute", "--k=5", "--n=5"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn jsonl_value_keeps_unit_denominator() {
    let out = run(&["value", "B", "--k=-2", "--n=2", "--format=jsonl"]);
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record["record"], "value");
    assert_eq!(record["kind"], "B");
    assert_eq!(record["value"], "14/1");
    assert!(record.get("mod").is_none());

    let out = run(&["value", "B", "--k=-2", "--n=2", "--mod", "5", "--format=jsonl"]);
    let record: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(record["mod"], "5");
    assert_eq!(record["value"], "4");
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(code_of(&out), 2);
}
