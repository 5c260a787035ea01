use std::path::PathBuf;
use std::process::Command;

use asai_periods::cli::{run, DecisionDocument};

fn instance(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("instances")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_asai-periods"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write_temp(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn decide_sigma_steinberg_cites_theorem_b() {
    let (code, out, _) = cli(&["decide", "-i", &instance("sigma_e_steinberg_f.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("dim Hom_H(Π, 1)   = 0"));
    assert!(out.contains("dim Hom_H′(Π′, 1) = 1"));
    assert!(out.contains("Theorem B"));
    assert!(out.contains("Main Theorem"));
}

#[test]
fn json_report_round_trips() {
    let (code, out, _) = cli(&["decide", "-i", &instance("cubic_steinberg.json"), "--json"]);
    assert_eq!(code, 0);
    let doc: DecisionDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.report.dim_hprime, 1);
    let again = serde_json::to_string_pretty(&doc).unwrap();
    assert_eq!(again.trim(), out.trim());
}

#[test]
fn validation_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [
        ("not_json.json", "{"),
        ("bad_kind.json", r#"{"field": {"p": 5}, "algebra": {"shape": "split3"}, "components": [{"kind": "cuspidal"}]}"#),
        ("composite.json", r#"{"field": {"p": 15}, "algebra": {"shape": "split3"}, "components": []}"#),
        ("arity.json", r#"{"field": {"p": 5}, "algebra": {"shape": "split3"}, "components": [{"kind": "sigma"}]}"#),
        ("reducible.json", r#"{"field": {"p": 5}, "algebra": {"shape": "split3"}, "components": [
            {"kind": "principal_series", "alpha": {"u": "sqrt(5)^-1"}, "beta": {"u": "sqrt(5)"}},
            {"kind": "sigma"}, {"kind": "sigma"}]}"#),
    ] {
        let (code, _, err) = cli(&["decide", "-i", &write_temp(&dir, name, body)]);
        assert_eq!(code, 2, "{name}: {err}");
    }
    let (code, _, err) = cli(&["decide", "-i", &instance("central_violation.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("central character condition"));
    let (code, _, _) = cli(&["decide", "-i", "/nonexistent/instance.json"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn unsupported_inputs_exit_3_and_name_the_datum() {
    let (code, _, err) = cli(&["decide", "-i", &instance("supercuspidal_no_sign.json")]);
    assert_eq!(code, 3);
    assert!(err.contains("eps_sign"), "{err}");
    let dir = tempfile::tempdir().unwrap();
    for (name, body, needle) in [
        ("wild.json", r#"{"field": {"p": 5}, "algebra": {"shape": "split3"}, "components": [
            {"kind": "sigma", "chi": {"k": 2, "conductor": 3}}, {"kind": "sigma"}, {"kind": "sigma"}]}"#, "wild"),
        ("psi.json", r#"{"field": {"p": 5}, "algebra": {"shape": "split3"}, "components": [
            {"kind": "sigma"}, {"kind": "sigma"}, {"kind": "sigma"}], "psi_level": 2}"#, "level"),
        ("p2.json", r#"{"field": {"p": 2}, "algebra": {"shape": "split3"}, "components": [
            {"kind": "sigma"}, {"kind": "sigma"}, {"kind": "sigma"}]}"#, "characteristic 2"),
        ("split_sc.json", r#"{"field": {"p": 5}, "algebra": {"shape": "split3"}, "components": [
            {"kind": "supercuspidal", "label": "x", "dim": 2, "det": {"k": 0}, "eps_sign": 1},
            {"kind": "steinberg"}, {"kind": "steinberg"}]}"#, "asai_eps_sign"),
    ] {
        let (code, _, err) = cli(&["decide", "-i", &write_temp(&dir, name, body)]);
        assert_eq!(code, 3, "{name}: {err}");
        assert!(err.contains(needle), "{name}: {err}");
    }
}

#[test]
fn supplied_signs_decide_supercuspidal_inputs() {
    let (code, out, _) = cli(&["decide", "-i", &instance("supercuspidal_with_signs.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("dim Hom_H(Π, 1)   = 0"));
    let dir = tempfile::tempdir().unwrap();
    let body = r#"{"field": {"p": 5}, "algebra": {"shape": "split3"}, "components": [
        {"kind": "supercuspidal", "label": "x", "dim": 2, "det": {"k": 0}, "eps_sign": 1},
        {"kind": "steinberg"}, {"kind": "steinberg"}], "asai_eps_sign": -1}"#;
    let (code, out, _) = cli(&["decide", "-i", &write_temp(&dir, "sc.json", body)]);
    assert_eq!(code, 0);
    assert!(out.contains("dim Hom_H′(Π′, 1) = 1"));
}

#[test]
fn contradicting_supplied_sign_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let body = r#"{"field": {"p": 5}, "algebra": {"shape": "quad_times_f", "extension": "unramified"},
        "components": [{"kind": "sigma"}, {"kind": "steinberg"}], "asai_eps_sign": 1}"#;
    let (code, _, err) = cli(&["decide", "-i", &write_temp(&dir, "x.json", body)]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn enumerate_check_reports_counts() {
    let (code, out, _) = cli(&["enumerate", "--q", "5", "--check", "--max-report", "2"]);
    assert_eq!(code, 0);
    let line = out.lines().find(|l| l.starts_with("dichotomy holds")).unwrap();
    let counts = line.trim_start_matches("dichotomy holds: ");
    let (a, b) = counts.split_once('/').unwrap();
    assert_eq!(a, b);
    let (code, _, _) = cli(&["enumerate", "--q", "6"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["enumerate", "--q", "5", "--shapes", "hexagonal"]);
    assert_eq!(code, 2);
}

#[test]
fn enumerate_output_is_deterministic() {
    let a = cli(&["enumerate", "--q", "3", "--shapes", "quad,cubic", "--max-report", "400"]);
    let b = cli(&["enumerate", "--q", "3", "--shapes", "quad,cubic", "--max-report", "400"]);
    assert_eq!(a, b);
}

#[test]
fn zeta_reconstructs_and_compares() {
    let (code, out, _) = cli(&["zeta", "--satake", "1,1", "--q", "3", "--terms", "40"]);
    assert_eq!(code, 0);
    assert!(out.contains("reciprocal roots match"));
    assert!(out.contains("pole order at s = 0: 3"));
    let (code, _, _) = cli(&["zeta", "--satake", "1", "--q", "3"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["zeta", "--satake", "1,1", "--q", "3", "--terms", "5"]);
    assert_eq!(code, 2);
}

#[test]
fn epsilon_targets() {
    let (code, out, _) = cli(&["epsilon", "-i", &instance("sigma_e_steinberg_f.json"), "--target", "as"]);
    assert_eq!(code, 0);
    assert!(out.contains("ε(As(Π))·ω_A(−1) = -1"), "{out}");
    let (code, out, _) = cli(&["epsilon", "-i", &instance("split_sigma.json"), "--target", "component"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let path = instance("steinberg_e_steinberg_f.json");
    let code = run(["asai-periods", "decide", "-i", &path], &mut out, &mut err);
    assert_eq!(code, 0);
    let (_, bin_out, _) = cli(&["decide", "-i", &path]);
    assert_eq!(String::from_utf8(out).unwrap(), bin_out);
}
