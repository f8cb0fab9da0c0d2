//! Behavior tests for the `padebary` binary: file formats, stdout lines,
//! exit codes, and determinism of the emitted reports.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_padebary");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .output()
        .expect("the padebary binary should be runnable")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn assert_success(out: &Output, what: &str) {
    assert!(
        out.status.success(),
        "{what} failed (status {:?}):\n{}",
        out.status.code(),
        stderr_of(out)
    );
}

fn assert_input_error(out: &Output, what: &str) {
    assert_eq!(out.status.code(), Some(3), "{what}: {}", stderr_of(out));
    assert!(!stderr_of(out).trim().is_empty(), "{what}: silent failure");
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("padebary-cli-tests").join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

fn path_str(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

/// Real parts of a generated series file, asserting all imaginary parts
/// are zero.
fn real_coeffs(path: &Path) -> Vec<f64> {
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v["coeffs"]
        .as_array()
        .expect("coeffs array")
        .iter()
        .map(|pair| {
            let pair = pair.as_array().expect("[re, im] pair");
            assert_eq!(pair[1].as_f64(), Some(0.0), "imaginary part");
            pair[0].as_f64().expect("real part")
        })
        .collect()
}

/// Parses `expand` output: one `re im` pair per line, imaginary parts zero.
fn expand_values(out: &Output) -> Vec<f64> {
    stdout_of(out)
        .lines()
        .map(|l| {
            let mut parts = l.split_whitespace();
            let re: f64 = parts.next().expect("re column").parse().expect("re value");
            let im: f64 = parts.next().expect("im column").parse().expect("im value");
            assert_eq!(im, 0.0, "imaginary part in expansion");
            re
        })
        .collect()
}

fn contact_order(stdout: &str) -> usize {
    stdout
        .lines()
        .find_map(|l| l.strip_prefix("contact order:"))
        .unwrap_or_else(|| panic!("missing contact order line in:\n{stdout}"))
        .trim()
        .parse()
        .expect("contact order number")
}

/// Comma list of the first five positive odd multiples of `step`, with
/// alternating signs — the node families of the tangent experiment.
fn odd_multiples(step: f64) -> String {
    [1.0, -1.0, 3.0, -3.0, 5.0]
        .iter()
        .map(|&k| format!("{:.17}", k * step))
        .collect::<Vec<_>>()
        .join(",")
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_success(&out, "--help");
    let text = stdout_of(&out);
    for sub in ["gen", "approx", "eval", "expand", "perturb", "reproduce"] {
        assert!(text.contains(sub), "--help does not mention {sub}");
    }
}

#[test]
fn gen_writes_known_coefficients() {
    let dir = scratch("gen");

    let tan = dir.join("tan.json");
    let out = run(&["gen", "--function", "tan-over-t", "--omega", "4", "--order", "12", "--out", &path_str(&tan)]);
    assert_success(&out, "gen tan-over-t");
    assert!(stdout_of(&out).contains("(order 12)"));
    let c = real_coeffs(&tan);
    assert_eq!(c.len(), 13);
    assert_eq!(c[0], 1.0);
    assert_eq!(c[1], 0.0);
    assert!((c[2] - 16.0 / 3.0).abs() <= 1e-12, "c_2 = {}", c[2]);
    assert_eq!(c[3], 0.0);

    let exp = dir.join("exp.json");
    assert_success(&run(&["gen", "--function", "exp", "--order", "4", "--out", &path_str(&exp)]), "gen exp");
    let c = real_coeffs(&exp);
    for (i, want) in [1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0].iter().enumerate() {
        assert!((c[i] - want).abs() <= 1e-15, "exp c_{i} = {}", c[i]);
    }

    let geo = dir.join("geo.json");
    assert_success(
        &run(&["gen", "--function", "geometric", "--ratio", "2", "--order", "3", "--out", &path_str(&geo)]),
        "gen geometric",
    );
    assert_eq!(real_coeffs(&geo), vec![1.0, 2.0, 4.0, 8.0]);
}

#[test]
fn gen_rejects_bad_requests() {
    let dir = scratch("gen-bad");
    let out = path_str(&dir.join("unused.json"));
    assert_input_error(&run(&["gen", "--function", "quintic", "--order", "4", "--out", &out]), "unknown function");
    let no_order = run(&["gen", "--function", "exp", "--out", &out]);
    assert_input_error(&no_order, "missing --order");
    assert!(stderr_of(&no_order).contains("--order"), "diagnostic names the flag");
}

#[test]
fn gen_file_roundtrip_is_identity() {
    let dir = scratch("gen-roundtrip");
    let first = dir.join("exp.json");
    let second = dir.join("copy.json");
    assert_success(&run(&["gen", "--function", "exp", "--order", "6", "--out", &path_str(&first)]), "gen exp");
    assert_success(
        &run(&["gen", "--function", "file", "--file", &path_str(&first), "--out", &path_str(&second)]),
        "gen file",
    );
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap(),
        "reading a series file back and rewriting it should be the identity"
    );
}

#[test]
fn approx_pade_matches_hand_computed_quotient() {
    let dir = scratch("approx-pade");
    let series = path_str(&dir.join("exp.json"));
    let approx = path_str(&dir.join("pade11.json"));
    assert_success(&run(&["gen", "--function", "exp", "--order", "8", "--out", &series]), "gen exp");

    let out = run(&["approx", "--kind", "pade", "--series", &series, "--p", "1", "--q", "1", "--out", &approx]);
    assert_success(&out, "approx pade 1,1");
    // (1 + t/2) / (1 - t/2) matches 1 + t + t^2/2 and then misses 1/6.
    assert_eq!(contact_order(&stdout_of(&out)), 3);

    let v: Value = serde_json::from_str(&std::fs::read_to_string(&approx).unwrap()).unwrap();
    // Records are tagged by representation; both two-sided and prescribed
    // denominator constructions write a polynomial quotient.
    assert_eq!(v["kind"].as_str(), Some("rational"), "tagged record kind");

    let expand = run(&["expand", "--approx", &approx, "--order", "3"]);
    assert_success(&expand, "expand pade 1,1");
    let d = expand_values(&expand);
    for (i, want) in [1.0, 1.0, 0.5, 0.25].iter().enumerate() {
        assert!((d[i] - want).abs() <= 1e-12, "d_{i} = {}", d[i]);
    }
}

#[test]
fn expand_order_zero_prints_one_line() {
    let dir = scratch("expand-zero");
    let series = path_str(&dir.join("exp.json"));
    let approx = path_str(&dir.join("a.json"));
    assert_success(&run(&["gen", "--function", "exp", "--order", "4", "--out", &series]), "gen exp");
    assert_success(
        &run(&["approx", "--kind", "pade", "--series", &series, "--p", "1", "--q", "1", "--out", &approx]),
        "approx",
    );
    let out = run(&["expand", "--approx", &approx, "--order", "0"]);
    assert_success(&out, "expand order 0");
    assert_eq!(expand_values(&out), vec![1.0]);
}

#[test]
fn approx_barycentric_tangent_experiment_nodes() {
    let dir = scratch("approx-bary");
    let series = path_str(&dir.join("tan.json"));
    let approx = path_str(&dir.join("bary.json"));
    assert_success(
        &run(&["gen", "--function", "tan-over-t", "--omega", "4", "--order", "10", "--out", &series]),
        "gen tan-over-t",
    );
    let poles = odd_multiples(std::f64::consts::PI / 8.0);
    let zeros = odd_multiples(std::f64::consts::PI / 4.0);
    let out = run(&[
        "approx", "--kind", "bpa1", "--series", &series, "--poles", &poles, "--zeros", &zeros,
        "--out", &approx,
    ]);
    assert_success(&out, "approx bpa1");
    assert!(contact_order(&stdout_of(&out)) >= 9, "contact with tan(4t)/(4t)");

    // The written record evaluates on a grid, deterministically.
    let csv1 = path_str(&dir.join("sweep1.csv"));
    let csv2 = path_str(&dir.join("sweep2.csv"));
    for csv in [&csv1, &csv2] {
        let out = run(&[
            "eval", "--approx", &approx, "--grid", "-1.5:1.5:601", "--ref", "tan-over-t:4",
            "--out", csv,
        ]);
        assert_success(&out, "eval");
        assert!(stdout_of(&out).contains("(601 rows)"));
    }
    let bytes1 = std::fs::read(&csv1).unwrap();
    assert_eq!(bytes1, std::fs::read(&csv2).unwrap(), "eval output differs between runs");

    let text = String::from_utf8(bytes1).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,ref_re,ref_im,val_re,val_im,abs_err,is_pole"));
    assert_eq!(lines.count(), 601);
}

#[test]
fn approx_recovers_worked_simple_pole_sum_inline() {
    let dir = scratch("approx-pfpa");
    let approx = path_str(&dir.join("pf.json"));
    let out = run(&["approx", "--kind", "pfpa", "--series", "[5,8,14,26]", "--k", "1", "--out", &approx]);
    assert_success(&out, "approx pfpa inline");
    assert_eq!(contact_order(&stdout_of(&out)), 4, "all four coefficients reproduced");

    let expand = run(&["expand", "--approx", &approx, "--order", "3"]);
    assert_success(&expand, "expand pfpa");
    let d = expand_values(&expand);
    for (i, want) in [5.0, 8.0, 14.0, 26.0].iter().enumerate() {
        assert!((d[i] - want).abs() <= 1e-9, "d_{i} = {}", d[i]);
    }
}

#[test]
fn approx_validates_flags_before_computing() {
    let dir = scratch("approx-flags");
    let series = path_str(&dir.join("exp.json"));
    let sink = path_str(&dir.join("unused.json"));
    assert_success(&run(&["gen", "--function", "exp", "--order", "8", "--out", &series]), "gen exp");

    let missing_p = run(&["approx", "--kind", "pade", "--series", &series, "--q", "1", "--out", &sink]);
    assert_input_error(&missing_p, "pade without --p");
    assert!(stderr_of(&missing_p).contains("--p"));

    let missing_weights = run(&[
        "approx", "--kind", "bpta1", "--series", &series, "--poles", "1,2", "--zeros", "1,2",
        "--out", &sink,
    ]);
    assert_input_error(&missing_weights, "bpta1 without --weights");
    assert!(stderr_of(&missing_weights).contains("--weights"));

    let grade_clash = run(&[
        "approx", "--kind", "bpa1", "--series", &series, "--poles", "1,2", "--zeros", "1,2,3",
        "--p", "3", "--out", &sink,
    ]);
    assert_input_error(&grade_clash, "--p disagreeing with the node family");
    assert!(stderr_of(&grade_clash).contains("disagrees"));
}

#[test]
fn eval_constant_reference_reports_zero_error() {
    let dir = scratch("eval-constant");
    let approx = path_str(&dir.join("seven.json"));
    let csv = path_str(&dir.join("sweep.csv"));
    assert_success(
        &run(&["approx", "--kind", "pade", "--series", "[7]", "--p", "0", "--q", "0", "--out", &approx]),
        "approx constant",
    );
    let out = run(&["eval", "--approx", &approx, "--grid", "-1:1:5", "--ref", "constant:7", "--out", &csv]);
    assert_success(&out, "eval constant");
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    for row in rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[5].parse::<f64>().unwrap(), 0.0, "abs_err in {row}");
        assert_eq!(fields[6], "0", "pole flag in {row}");
    }
}

#[test]
fn eval_rejects_degenerate_grids() {
    let dir = scratch("eval-bad");
    let approx = path_str(&dir.join("seven.json"));
    let csv = path_str(&dir.join("unused.csv"));
    assert_success(
        &run(&["approx", "--kind", "pade", "--series", "[7]", "--p", "0", "--q", "0", "--out", &approx]),
        "approx constant",
    );
    assert_input_error(
        &run(&["eval", "--approx", &approx, "--grid", "-1:1:1", "--ref", "constant:7", "--out", &csv]),
        "single-point grid",
    );
    assert_input_error(
        &run(&["eval", "--approx", &approx, "--grid", "garbage", "--ref", "constant:7", "--out", &csv]),
        "malformed grid",
    );
}

#[test]
fn perturb_with_zero_eps_ignores_the_seed() {
    let dir = scratch("perturb-zero");
    let csv = path_str(&dir.join("perturb.csv"));
    let out = run(&["perturb", "--eps", "0", "--seeds", "5..7", "--out", &csv]);
    assert_success(&out, "perturb eps 0");

    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<Vec<&str>> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    let seed_rows: Vec<&Vec<&str>> = rows.iter().filter(|r| r[0] != "median").collect();
    assert_eq!(seed_rows.len(), 3, "seeds 5, 6, 7");
    for row in &seed_rows {
        assert_eq!(row[6], "ok");
        assert_eq!(row[5], "1", "contact flag");
        // eps = 0 leaves the series untouched, so every seed rebuilds the
        // same approximants and reports the same error spans.
        assert_eq!(row[1..5], seed_rows[0][1..5], "spans differ between seeds");
    }
}
