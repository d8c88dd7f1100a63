use ospkernel::registry::ParamMap;
use ospkernel::report::{to_json, IdentityReport, Status};
use ospkernel::{find_specialization, lookup, verify_all, verify_identity, Config, RunOptions, Specialization, VerifyError};
use serde_json::json;

fn only(names: &[&str], specs: &[&str]) -> Config {
    Config {
        identities: Some(names.iter().map(|s| s.to_string()).collect()),
        specializations: specs.iter().map(|s| s.to_string()).collect(),
        ..Config::default()
    }
}

fn status_of(reports: &[IdentityReport], name: &str) -> Vec<Status> {
    reports.iter().filter(|r| r.name == name).map(|r| r.status).collect()
}

#[test]
fn specialization_search_at_conductor_24() {
    let pick = |ell| find_specialization(ell, 24).unwrap();
    let s3 = pick(3);
    assert_eq!((s3.a, s3.b), (0, 4));
    assert_eq!((s3.orders.ell_prime, s3.orders.big_l), (6, 6));
    let s4 = pick(4);
    assert_eq!((s4.a, s4.b), (0, 3));
    assert_eq!((s4.orders.ell_prime, s4.orders.big_l), (4, 4));
    let s6 = pick(6);
    assert_eq!((s6.a, s6.b), (0, 2));
    assert_eq!((s6.orders.ell_prime, s6.orders.big_l), (3, 6));
    assert!(s6.orders.twice_odd());
    assert!(matches!(find_specialization(5, 24), Err(VerifyError::NoValidAssignment { .. })));
}

#[test]
fn specialization_ids_parse() {
    let a: Specialization = "ell4".parse().unwrap();
    let b: Specialization = "24:0:3".parse().unwrap();
    let c: Specialization = "ell4@24".parse().unwrap();
    assert_eq!(a.id(), b.id());
    assert_eq!(b.id(), c.id());
    for bad in ["ell", "24:1", "x:y:z", "ellx"] {
        assert!(bad.parse::<Specialization>().is_err(), "{bad}");
    }
}

#[test]
fn config_parsing() {
    let c = Config::from_json(r#"{"bounds": {"lemma31_max": 2}, "seed": 7}"#).unwrap();
    assert_eq!(c.bounds.lemma31_max, 2);
    assert_eq!(c.bounds.prop23_max_m, 8);
    assert_eq!(c.specializations, vec!["ell3", "ell4", "ell6"]);
    assert!(Config::from_json(r#"{"bogus": 1}"#).is_err());
    assert!(Config::from_json(r#"{"bounds": {"nope": 1}}"#).is_err());
}

#[test]
fn bounds_shrink_the_grid() {
    let mut c = only(&["lemma3.1"], &[]);
    c.bounds.lemma31_max = 2;
    let reports = verify_all(&c, RunOptions::default()).unwrap();
    assert_eq!(reports.len(), 9);
    assert!(reports.iter().all(|r| r.status == Status::Pass));
}

#[test]
fn generic_statuses() {
    let names = [
        "eq2.1",
        "eq2.4",
        "prop2.1",
        "prop2.3-commutation",
        "alpha-symmetry",
        "thm3.1-center",
        "dickson-casimir",
        "i-twist",
    ];
    let reports = verify_all(&only(&names, &[]), RunOptions::default()).unwrap();
    for n in &names[..6] {
        assert!(status_of(&reports, n).iter().all(|s| *s == Status::Pass), "{n}");
    }
    let dc = reports.iter().find(|r| r.name == "dickson-casimir").unwrap();
    assert_eq!(dc.status, Status::DocumentedDiscrepancy);
    assert_eq!(dc.variant.as_deref(), Some("C + 2 in place of C"));
    assert!(dc.witness.is_some());
    let twist: Vec<(i64, Status)> = reports
        .iter()
        .filter(|r| r.name == "i-twist")
        .map(|r| (r.params["m"].as_i64().unwrap(), r.status))
        .collect();
    for (m, s) in twist {
        let expect = if m % 4 == 1 { Status::Pass } else { Status::DocumentedDiscrepancy };
        assert_eq!(s, expect, "m={m}");
    }
}

#[test]
fn root_statuses() {
    let names = ["eq5.1", "eq5.1-chain", "eq5.2", "eq5.3", "eq5.5", "thm3.3-unit-cartan", "thm3.4-basis"];
    let reports = verify_all(&only(&names, &["ell3", "ell4", "ell6"]), RunOptions::default()).unwrap();
    assert_eq!(status_of(&reports, "eq5.1"), vec![Status::Pass; 3]);
    assert_eq!(status_of(&reports, "eq5.1-chain"), vec![Status::Pass; 3]);
    assert_eq!(status_of(&reports, "eq5.2"), vec![Status::DocumentedDiscrepancy; 2]);
    assert_eq!(status_of(&reports, "eq5.3"), vec![Status::DocumentedDiscrepancy]);
    let e55 = reports.iter().find(|r| r.name == "eq5.5").unwrap();
    assert!(e55.variant.as_deref().unwrap().contains("(L-2)/4"));
    assert!(reports.iter().all(|r| r.status != Status::Fail));
    let ell_of = |r: &IdentityReport| r.params["ell"].as_i64().unwrap();
    assert!(reports.iter().filter(|r| r.name == "eq5.2").all(|r| ell_of(r) != 6));
    assert!(reports.iter().filter(|r| r.name == "eq5.3").all(|r| ell_of(r) == 6));
}

#[test]
fn verify_identity_filters_by_params() {
    let mut given = ParamMap::new();
    given.insert("m".into(), json!(3));
    let r = verify_identity("eq2.5", &given, None, &Config::default(), RunOptions::default()).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].params["m"], json!(3));
    assert!(matches!(
        verify_identity("eq5.3", &ParamMap::new(), None, &Config::default(), RunOptions::default()),
        Err(VerifyError::SpecializationRequired(_))
    ));
    let s4 = find_specialization(4, 24).unwrap();
    assert!(matches!(
        verify_identity("eq5.3", &ParamMap::new(), Some(s4), &Config::default(), RunOptions::default()),
        Err(VerifyError::NotApplicable { .. })
    ));
}

#[test]
fn alias_resolves() {
    assert_eq!(lookup("thm5.1-odd-case").unwrap().name, "eq5.2");
    assert!(lookup("nope").is_err());
}

#[test]
fn reports_are_deterministic_and_sorted() {
    let c = only(&["eq2.5", "prop2.3", "thm3.3-central", "prop2.4-independence"], &["ell4", "ell3"]);
    let a = to_json(&verify_all(&c, RunOptions::default()).unwrap());
    let b = to_json(&verify_all(&c, RunOptions::default()).unwrap());
    assert_eq!(a, b);
    let parsed: Vec<IdentityReport> = serde_json::from_str(&a).unwrap();
    let ms: Vec<i64> = parsed
        .iter()
        .filter(|r| r.name == "eq2.5")
        .map(|r| r.params["m"].as_i64().unwrap())
        .collect();
    assert_eq!(ms, (1..=10).collect::<Vec<_>>());
    assert!(parsed.iter().all(|r| r.elapsed_ms.is_none()));
    let names: Vec<&str> = parsed.iter().map(|r| r.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn unknown_identity_in_config_is_rejected() {
    assert!(verify_all(&only(&["nope"], &[]), RunOptions::default()).is_err());
}
