//! End-to-end checks of the binary: golden-file byte identity for the table
//! commands, exit codes, and the simulation row format.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfchain"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn golden(name: &str) -> String {
    let path = format!("{}/../core/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn matrix_commands_match_goldens() {
    let (stdout, _, code) = run(&["matrix", "--algebra", "sym_h", "--n", "4", "--a", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("rock_n4_matrix.tsv"));
    let (stdout, _, code) = run(&["matrix", "--algebra", "sym_schur", "--n", "3", "--a", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("schur_n3_matrix.tsv"));
}

#[test]
fn eigenbasis_commands_match_goldens() {
    let (stdout, _, code) =
        run(&["eigenbasis", "--algebra", "qsym_F", "--n", "4", "--a", "2", "--side", "right"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("descent_n4_right.tsv"));
    let (stdout, _, code) =
        run(&["eigenbasis", "--algebra", "qsym_F", "--n", "4", "--a", "2", "--side", "left"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("descent_n4_left.tsv"));
    let (stdout, _, code) =
        run(&["eigenbasis", "--algebra", "sym_h", "--n", "4", "--a", "2", "--side", "right"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("rock_n4_right.tsv"));
    let (stdout, _, code) =
        run(&["named", "--algebra", "sym_h", "--n", "4", "--a", "2", "--side", "left"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden("rock_n4_left.tsv"));
}

#[test]
fn invalid_bases_and_arguments_exit_two() {
    let (_, stderr, code) = run(&["matrix", "--algebra", "sym_p", "--n", "3", "--a", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("primitive"), "diagnostic: {stderr}");
    let (_, stderr, code) = run(&["matrix", "--algebra", "nope", "--n", "3", "--a", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown algebra"), "{stderr}");
    let (_, _, code) = run(&["matrix", "--algebra", "shuffle", "--n", "3", "--a", "2"]);
    assert_eq!(code, 2); // plain degree on shuffle: disconnected state space
    let (_, stderr, code) = run(&["matrix", "--algebra", "qsym_F", "--n", "14", "--a", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cap"), "{stderr}");
}

#[test]
fn basis_cap_is_overridable() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfchain"))
        .args(["matrix", "--algebra", "sym_h", "--n", "6", "--a", "2"])
        .env("HOPFCHAIN_MAX_BASIS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn simulate_row_shape_and_determinism() {
    let args = [
        "simulate", "--chain", "riffle", "--n", "6", "--a", "2", "--m", "3", "--trials",
        "5000", "--seed", "42", "--stat", "descents",
    ];
    let (out1, _, code) = run(&args);
    assert_eq!(code, 0);
    let (out2, _, _) = run(&args);
    assert_eq!(out1, out2);
    let lines: Vec<&str> = out1.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("statistic\t"));
    let fields: Vec<&str> = lines[1].split('\t').collect();
    assert_eq!(fields.len(), 7);
    assert_eq!(fields[1], "3");
    assert_eq!(fields[2], "5000");
    assert_eq!(fields[4], "35/16"); // (1 − 2^{-3})·5/2
}

#[test]
fn verify_subcommand_passes() {
    let (stdout, _, code) = run(&["verify", "--suite", "all", "--max-degree", "3"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.lines().last().unwrap().starts_with("total"));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn absorption_and_lump_check() {
    let (stdout, _, code) = run(&[
        "absorption", "--algebra", "graphs", "--n", "3", "--a", "2", "--start", "n=3; 1-2,2-3",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.trim().ends_with("1/4"), "{stdout}");
    let (stdout, _, code) = run(&["lump-check", "--n", "3", "--a", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("dynkin\tpass"));
}
