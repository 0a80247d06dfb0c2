//! End-to-end checks of the `listaccess` binary: worked-example totals,
//! artifact round trips, and the documented exit codes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut command = Command::new(env!("CARGO_BIN_EXE_listaccess"));
    command.env_remove("LISTACCESS_ORACLE_MAX_N");
    command
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn write_seq(dir: &TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, content).unwrap();
    path
}

fn run_policy(alg: &str, seq_path: &Path, extra: &[&str]) -> Output {
    bin()
        .args(["run", "--alg", alg, "--seq"])
        .arg(seq_path)
        .args(["--list", "123"])
        .args(extra)
        .output()
        .unwrap()
}

#[test]
fn mtf_worked_example_totals_thirteen() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", "23132\n");
    let output = run_policy("mtf", &seq, &[]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let stdout = stdout_of(&output);
    assert!(stdout.contains("total cost: 13"), "stdout: {stdout}");
    assert!(stdout.contains("moves: 5"), "stdout: {stdout}");
}

#[test]
fn imtf_worked_example_totals_eleven() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", "32132\n");
    let output = run_policy("imtf", &seq, &["--trace"]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let stdout = stdout_of(&output);
    assert!(stdout.contains("total cost: 11"), "stdout: {stdout}");
    assert!(stdout.contains("moves: 0"), "stdout: {stdout}");
    assert!(stdout.contains("trace: 3 2 1 3 2"), "stdout: {stdout}");
}

#[test]
fn partial_model_charges_one_less_per_access() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", "32132\n");
    let output = run_policy("imtf", &seq, &["--model", "partial"]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    assert!(stdout_of(&output).contains("total cost: 6"));
}

#[test]
fn static_policy_never_moves() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", "32132\n");
    let output = run_policy("static", &seq, &[]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let stdout = stdout_of(&output);
    assert!(stdout.contains("total cost: 11"), "stdout: {stdout}");
    assert!(stdout.contains("moves: 0"), "stdout: {stdout}");
}

#[test]
fn run_skips_out_of_alphabet_characters_with_a_warning() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", "231\u{e9}32\n");
    let output = run_policy("mtf", &seq, &[]);
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    assert!(stdout_of(&output).contains("total cost: 13"));
    assert!(stderr_of(&output).contains("skipped 1"));
}

#[test]
fn list_can_come_from_a_file() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", "32132\n");
    let list = write_seq(&dir, "list.txt", "123\n");
    let output = bin()
        .args(["run", "--alg", "imtf", "--seq"])
        .arg(&seq)
        .arg("--list-file")
        .arg(&list)
        .output()
        .unwrap();
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    assert!(stdout_of(&output).contains("total cost: 11"));
}

#[test]
fn gen_writes_a_deterministic_binary_sequence() {
    let dir = TempDir::new().unwrap();
    let out_a = dir.path().join("a.txt");
    let out_b = dir.path().join("b.txt");
    for out in [&out_a, &out_b] {
        let output = bin()
            .args([
                "gen", "--family", "numeric", "--base", "2", "--n", "50", "--seed", "7", "--out",
            ])
            .arg(out)
            .output()
            .unwrap();
        assert!(output.status.success(), "stderr: {}", stderr_of(&output));
        assert!(stdout_of(&output).contains("50 requests"));
    }

    let text_a = fs::read_to_string(&out_a).unwrap();
    assert_eq!(text_a, fs::read_to_string(&out_b).unwrap());
    let body = text_a.trim_end();
    assert_eq!(body.len(), 50);
    assert!(body.chars().all(|c| c == '0' || c == '1'));
}

#[test]
fn gen_without_n_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let output = bin()
        .args(["gen", "--family", "alpha", "--out"])
        .arg(dir.path().join("x.txt"))
        .output()
        .unwrap();
    assert_eq!(
        output.status.code(),
        Some(2),
        "stderr: {}",
        stderr_of(&output)
    );
}

#[test]
fn unsupported_base_is_rejected() {
    let dir = TempDir::new().unwrap();
    let output = bin()
        .args([
            "gen", "--family", "numeric", "--base", "3", "--n", "5", "--out",
        ])
        .arg(dir.path().join("x.txt"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("not a supported base"));
}

#[test]
fn compare_prints_the_worked_pair_gain() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", "32132\n");
    let output = bin()
        .args(["compare", "--seq"])
        .arg(&seq)
        .args(["--list", "123"])
        .output()
        .unwrap();
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let stdout = stdout_of(&output);
    assert!(stdout.contains("g = 26.67%"), "stdout: {stdout}");
}

#[test]
fn compare_writes_csv_and_chart_artifacts() {
    let dir = TempDir::new().unwrap();
    let spec = write_seq(&dir, "spec.txt", "alpha 100 1\nnumeric 2 50 7\n");
    let csv = dir.path().join("out.csv");
    let chart = dir.path().join("out.svg");
    let output = bin()
        .args(["compare", "--spec"])
        .arg(&spec)
        .arg("--out-csv")
        .arg(&csv)
        .arg("--out-chart")
        .arg(&chart)
        .args(["--chart-kind", "bar", "--series", "g"])
        .output()
        .unwrap();
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));

    let csv_text = fs::read_to_string(&csv).unwrap();
    let mut lines = csv_text.lines();
    assert_eq!(lines.next(), Some("N,L,C_MTF,C_IMTF,g_percent"));
    assert_eq!(lines.count(), 2);
    let chart_text = fs::read_to_string(&chart).unwrap();
    assert!(chart_text.starts_with("<svg"));
}

#[test]
fn compare_without_a_workload_is_a_usage_error() {
    let output = bin().arg("compare").output().unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn chart_renders_a_results_csv() {
    let dir = TempDir::new().unwrap();
    let csv = write_seq(
        &dir,
        "rows.csv",
        "N,L,C_MTF,C_IMTF,g_percent\n5,3,15,11,26.67\n10,3,25,20,20.00\n",
    );
    let out = dir.path().join("chart.svg");
    let output = bin()
        .args(["chart", "--csv"])
        .arg(&csv)
        .arg("--out")
        .arg(&out)
        .args(["--series", "c_mtf,c_imtf"])
        .output()
        .unwrap();
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("<polyline").count(), 2);
}

#[test]
fn oracle_reports_all_three_totals() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", "33\n");
    let output = bin()
        .args(["oracle", "--seq"])
        .arg(&seq)
        .args(["--list", "123"])
        .output()
        .unwrap();
    assert!(output.status.success(), "stderr: {}", stderr_of(&output));
    let stdout = stdout_of(&output);
    assert!(stdout.contains("oracle: total 4"), "stdout: {stdout}");
    assert!(stdout.contains("mtf: total"), "stdout: {stdout}");
    assert!(stdout.contains("imtf: total"), "stdout: {stdout}");
}

#[test]
fn oracle_rejects_sequences_beyond_its_limit() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", &"1".repeat(30));
    let output = bin()
        .args(["oracle", "--seq"])
        .arg(&seq)
        .args(["--list", "123"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("exceed the exhaustive search limit"));
}

#[test]
fn oracle_limit_is_overridable_via_environment() {
    let dir = TempDir::new().unwrap();
    let seq = write_seq(&dir, "seq.txt", "33132\n");
    let output = bin()
        .env("LISTACCESS_ORACLE_MAX_N", "3")
        .args(["oracle", "--seq"])
        .arg(&seq)
        .args(["--list", "123"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("limit of 3"));
}
