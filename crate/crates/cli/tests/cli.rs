//! End-to-end tests driving the compiled binary: exit codes, report schema,
//! text/JSON agreement, determinism, and input-error reporting.

use std::process::{Command, Output};

use serde_json::{json, Value};

fn ordsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn report_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON: {e}\n{}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn psi_preset_reports_honest_values() {
    let out = ordsum(&[
        "psi",
        "--group",
        "P:smallgroup_72_3",
        "--pi",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = report_of(&out);
    assert_eq!(report["command"], "psi");
    let r = &report["results"][0];
    assert_eq!(r["psi_pi"], 153);
    assert_eq!(r["benchmark"], 387);
    assert_eq!(r["equality"], false);
    assert_eq!(report["checks"]["benchmark_inequality"], "pass");
    assert_eq!(report["checks"]["dual_route_agreement"], "pass");
}

#[test]
fn psi_defaults_to_all_primes_of_the_order() {
    let out = ordsum(&["psi", "--group", "Q8", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let r = &report_of(&out)["results"][0];
    assert_eq!(r["pi"], json!([2]));
    assert_eq!(r["psi_pi"], 27);
    assert_eq!(r["benchmark"], 43);
}

#[test]
fn zero_order_spec_is_an_input_error() {
    let out = ordsum(&["psi", "--group", "C:0"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("C:0"), "{}", stderr_of(&out));
}

#[test]
fn non_prime_pi_token_is_an_input_error() {
    let out = ordsum(&["psi", "--group", "C:6", "--pi", "2,4"]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr_of(&out);
    assert!(err.contains("2,4"), "{err}");
}

#[test]
fn malformed_spec_and_unknown_names_are_input_errors() {
    let out = ordsum(&["spectrum", "--group", "C:abc"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("C:abc"), "{}", stderr_of(&out));

    let out = ordsum(&["spectrum", "--group", "P:nope"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("nope"), "{}", stderr_of(&out));

    let out = ordsum(&["verify", "--corpus", "nope"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("nope"), "{}", stderr_of(&out));
}

#[test]
fn spectrum_text_and_json_agree() {
    let text = ordsum(&["spectrum", "--group", "Q8"]);
    assert_eq!(exit_code(&text), 0);
    let body = String::from_utf8_lossy(&text.stdout).into_owned();
    assert!(body.contains("psi = 27"), "{body}");
    assert!(body.contains("psi(C_8) = 43"), "{body}");

    let out = ordsum(&["spectrum", "--group", "Q8", "--format", "json"]);
    let r = &report_of(&out)["results"][0];
    assert_eq!(r["psi"], 27);
    assert_eq!(r["benchmark"], 43);
    assert_eq!(r["spectrum"], json!([[1, 1], [2, 1], [4, 6]]));
}

#[test]
fn partition_command_emits_a_valid_certificate() {
    let out = ordsum(&[
        "partition",
        "--group",
        "P:smallgroup_72_3",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report = report_of(&out);
    assert_eq!(report["checks"]["partition_feasible"], "pass");
    assert_eq!(report["checks"]["certificate_valid"], "pass");
    assert_eq!(report["checks"]["psi_ties"], "pass");
    let cert = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r.get("bijection").is_some())
        .expect("certificate in results");
    assert_eq!(cert["order"], 72);
    assert_eq!(cert["bijection"].as_array().unwrap().len(), 72);
}

#[test]
fn frobenius_rows_carry_subgroup_verdicts() {
    let out = ordsum(&["frobenius", "--group", "A:4", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report = report_of(&out);
    assert_eq!(report["checks"]["counts_positive_multiples"], "pass");
    assert_eq!(report["checks"]["exact_implies_normal_subgroup"], "pass");
    let rows = report["results"].as_array().unwrap();
    let d4 = rows.iter().find(|r| r["divisor"] == 4).unwrap();
    assert_eq!(d4["count"], 4);
    assert_eq!(d4["exact"], true);
    assert_eq!(d4["subgroup"], true);
    assert_eq!(d4["normal"], true);
    let d6 = rows.iter().find(|r| r["divisor"] == 6).unwrap();
    assert_eq!(d6["count"], 12);
    assert_eq!(d6["exact"], false);
}

#[test]
fn verify_passes_on_the_default_corpus() {
    let out = ordsum(&["verify", "--corpus", "default", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report = report_of(&out);
    assert_eq!(report["checks"]["theorems_hold"], "pass");
    assert_eq!(report["inputs"]["pi_policy"], "subsets");
    assert_eq!(report["results"].as_array().unwrap().len(), 40);
}

#[test]
fn verify_primes_policy_also_passes() {
    let out = ordsum(&[
        "verify",
        "--corpus",
        "default",
        "--pi-policy",
        "primes",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(report_of(&out)["checks"]["theorems_hold"], "pass");
}

#[test]
fn question_search_is_clean() {
    let out = ordsum(&["question", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report = report_of(&out);
    assert_eq!(report["checks"]["no_counterexample"], "pass");
    let verdicts = report["results"].as_array().unwrap();
    assert!(verdicts.iter().all(|v| v["counterexample"] == false));
    let s3 = verdicts
        .iter()
        .find(|v| v["label"] == "S3" && v["prime"] == 2)
        .unwrap();
    assert_eq!(s3["sylow_cyclic"], true);
    assert_eq!(s3["solution_set_size"], 3);
    assert_eq!(s3["is_subgroup"], true);
}

#[test]
fn ratios_are_sorted_ascending_and_need_one_prime() {
    let out = ordsum(&["ratios", "--pi", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report = report_of(&out);
    assert_eq!(report["checks"]["ratios_at_most_one"], "pass");
    let entries = report["results"].as_array().unwrap();
    assert_eq!(entries[0]["label"], "S6");
    assert_eq!(entries[0]["ratio"], json!({"numer": 35, "denom": 171}));
    assert_eq!(entries.last().unwrap()["ratio"], json!({"numer": 1, "denom": 1}));

    let out = ordsum(&["ratios", "--pi", "2,3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("2,3"), "{}", stderr_of(&out));
}

#[test]
fn example_reports_the_reference_deviation_and_exits_one() {
    let out = ordsum(&["example", "--format", "json"]);
    assert_eq!(exit_code(&out), 1);
    let report = report_of(&out);
    assert_eq!(report["checks"]["spectrum_reference"], "pass");
    assert_eq!(report["checks"]["psi_2_reference"], "fail");
    assert_eq!(report["checks"]["psi_3_reference"], "pass");
    assert_eq!(report["checks"]["cyclic_benchmarks_reference"], "pass");
    assert_eq!(report["checks"]["partition_certificate_valid"], "pass");
    assert_eq!(report["checks"]["equality_detection_consistent"], "pass");

    let text = ordsum(&["example"]);
    assert_eq!(exit_code(&text), 1);
    let body = String::from_utf8_lossy(&text.stdout).into_owned();
    assert!(body.contains("DEVIATION"), "{body}");
    assert!(body.contains("153") && body.contains("387"), "{body}");
}

#[test]
fn out_file_matches_json_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = ordsum(&[
        "spectrum",
        "--group",
        "D:4",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let file = std::fs::read(&path).unwrap();
    assert_eq!(file, out.stdout);

    // --out also works alongside text output.
    let text = ordsum(&["spectrum", "--group", "D:4", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&text), 0);
    assert_eq!(std::fs::read(&path).unwrap(), file);
}

#[test]
fn generator_files_build_groups_and_respect_the_cap() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.gens");
    std::fs::write(&path, "3\n(1 2)\n(1 2 3)\n").unwrap();
    let spec = format!("G:{}", path.display());

    let out = ordsum(&["spectrum", "--group", &spec, "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let r = &report_of(&out)["results"][0];
    assert_eq!(r["order"], 6);
    assert_eq!(r["psi"], 13);

    let capped = ordsum(&["spectrum", "--group", &spec, "--cap", "2"]);
    assert_eq!(exit_code(&capped), 2);
}

#[test]
fn closed_pipe_exits_quietly() {
    use std::io::Read;
    use std::process::Stdio;

    // The verify report is far larger than a pipe buffer; reading a little
    // and closing the pipe must not crash the binary or dirty stderr.
    let mut child = Command::new(env!("CARGO_BIN_EXE_ordsum"))
        .args(["verify", "--corpus", "default", "--format", "json"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    let mut stdout = child.stdout.take().expect("stdout piped");
    let mut prefix = [0u8; 1024];
    stdout.read_exact(&mut prefix).expect("some output");
    drop(stdout);
    let out = child.wait_with_output().expect("binary finishes");
    assert!(out.status.success(), "{:?}", out.status);
    assert!(
        out.stderr.is_empty(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    for args in [
        vec!["verify", "--corpus", "default", "--format", "json"],
        vec!["example", "--format", "json"],
        vec!["partition", "--group", "S:4", "--format", "json"],
    ] {
        let a = ordsum(&args);
        let b = ordsum(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
