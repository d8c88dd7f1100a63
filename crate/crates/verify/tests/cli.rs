use std::process::{Command, Output};

fn ospkernel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ospkernel"))
        .args(args)
        .env_remove("OSPKERNEL_SEED")
        .output()
        .expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn normalize_ef() {
    let o = ospkernel(&["normalize", "e*f"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "- f*e + (r-s)^-1*w - (r-s)^-1*wp\n");
}

#[test]
fn normalize_zero_power() {
    let o = ospkernel(&["normalize", "f^0"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn mul_matches_normalize() {
    let a = ospkernel(&["mul", "e", "f^2"]);
    let b = ospkernel(&["normalize", "e*f^2"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn commute_reports_both_brackets() {
    let o = ospkernel(&["commute", "e", "f"]);
    let out = stdout(&o);
    assert!(out.contains("commutator: "));
    assert!(out.contains("anticommutator: (r-s)^-1*w - (r-s)^-1*wp"));
}

#[test]
fn center_check_distinguishes_scasimir_and_casimir() {
    assert_eq!(stdout(&ospkernel(&["center-check", "sc"])), "central: no\nsupercentral: yes\n");
    assert_eq!(stdout(&ospkernel(&["center-check", "C"])), "central: yes\nsupercentral: no\n");
    assert_eq!(
        stdout(&ospkernel(&["center-check", "--spec", "ell3", "f^6"])),
        "central: yes\nsupercentral: no\n"
    );
    assert_eq!(stdout(&ospkernel(&["center-check", "f^6"])), "central: no\nsupercentral: no\n");
}

#[test]
fn verify_single_identity_exits_zero() {
    let o = ospkernel(&["verify", "prop2.3", "--m", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("pass"));
}

#[test]
fn documented_discrepancy_is_not_a_failure() {
    let o = ospkernel(&["verify", "dickson-casimir"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("documented-discrepancy"));
}

#[test]
fn verify_json_output_parses() {
    let o = ospkernel(&["verify", "eq5.1", "--spec", "ell4", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["name"], "eq5.1");
    assert_eq!(v[0]["status"], "pass");
}

#[test]
fn root_identity_without_spec_is_an_error() {
    let o = ospkernel(&["verify", "eq5.2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--spec"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ospkernel(&["bogus"]).status.code(), Some(2));
    assert_eq!(ospkernel(&["verify", "no-such-identity"]).status.code(), Some(2));
    assert_eq!(ospkernel(&["normalize", "e*"]).status.code(), Some(2));
    assert_eq!(ospkernel(&["specialize", "--ell", "5", "e"]).status.code(), Some(2));
}

#[test]
fn specialize_prints_assignment_and_value() {
    let o = ospkernel(&["specialize", "--ell", "3", "q"]);
    assert_eq!(stdout(&o), "24:0:4 (X -> zeta24^0, Y -> zeta24^4; l = 3, l' = 6, L = 6)\n- zeta24^4\n");
}

#[test]
fn report_writes_markdown() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"identities": ["eq2.4", "thm3.3-central"], "specializations": ["ell4"]}"#).unwrap();
    let out = dir.path().join("r.md");
    let o = ospkernel(&[
        "report",
        "--format",
        "md",
        "--out",
        out.to_str().unwrap(),
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let md = std::fs::read_to_string(out).unwrap();
    assert!(md.contains("eq2.4"));
    assert!(md.contains("thm3.3-central"));
}

#[test]
fn list_names_every_identity() {
    let out = stdout(&ospkernel(&["list"]));
    for name in ["eq2.4", "lemma3.1", "eq5.7", "dickson-t-casimir"] {
        assert!(out.lines().any(|l| l.starts_with(name)), "{name}");
    }
}
