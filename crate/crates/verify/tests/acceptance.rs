//! Acceptance suite: one line per criterion.
//!
//! Criteria listed in `KNOWN_RED` are reported as FAIL with their analysis
//! and do not change the exit status; any other failure does.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ospkernel::report::{IdentityReport, Status};
use ospkernel::{verify_all, Config, RunOptions};
use ospkernel_core::algebra::{Algebra, Params};
use ospkernel_core::parser::{parse_element, render};
use ospkernel_core::sampling::{self, MonomialBounds};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const KNOWN_RED: &[(u32, &str)] = &[(
    7,
    "D_2(b^-1 v c~, -1) equals C + 2, not C, for C = (rs)^(-1/2) (w w')^(-1) c~^2. \
     Since D_2(u, -1) = u^2 + 2 and (b^-1 v c~)^2 = C, the equality D_2 = C would force 2 = 0. \
     D_2m = T_m(C + 2, 1) holds for m <= 5; closed form, recursion and all series checks pass.",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(names: &[&str]) -> Vec<IdentityReport> {
    let config = Config {
        identities: Some(names.iter().map(|s| s.to_string()).collect()),
        ..Config::default()
    };
    verify_all(&config, RunOptions::default()).expect("registry run")
}

/// All reports pass; documented discrepancies count as failures when
/// `strict`.
fn judge(reports: &[IdentityReport], strict: bool) -> Outcome {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| r.status == Status::Fail || (strict && r.status == Status::DocumentedDiscrepancy))
        .map(|r| match &r.variant {
            Some(v) => format!("{} [as stated fails; holds with {v}]", r.label()),
            None => format!("{} [{}]", r.label(), r.status.as_str()),
        })
        .collect();
    let discrepancies = reports.iter().filter(|r| r.status == Status::DocumentedDiscrepancy).count();
    Outcome {
        pass: bad.is_empty() && !reports.is_empty(),
        detail: if bad.is_empty() {
            format!("{} checks, {} documented discrepancies", reports.len(), discrepancies)
        } else {
            bad.join("; ")
        },
    }
}

fn registry_criterion(names: &[&str], strict: bool) -> Outcome {
    judge(&run(names), strict)
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ospkernel"))
        .args(args)
        .output()
        .expect("spawn cli");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn parser_and_cli() -> Outcome {
    let mut problems = Vec::new();

    let alg = Algebra::new(Params::generic());
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut round_trips = 0;
    for i in 0..200 {
        let x = sampling::element(&mut rng, 4, &MonomialBounds::default(), sampling::scalar);
        match parse_element(&render(&x), &alg) {
            Ok(y) if y == x => round_trips += 1,
            _ => problems.push(format!("round trip failed on sample {i}")),
        }
    }

    let (code, out) = cli(&["normalize", "e*f"]);
    if code != 0 || out != "- f*e + (r-s)^-1*w - (r-s)^-1*wp\n" {
        problems.push(format!("normalize e*f gave {out:?} (exit {code})"));
    }

    let dir = tempfile::tempdir().expect("tempdir");
    let paths = [dir.path().join("a.json"), dir.path().join("b.json")];
    for p in &paths {
        let (code, _) = cli(&["verify-all", "--out", p.to_str().unwrap()]);
        if code != 0 {
            problems.push(format!("verify-all exited {code}"));
        }
    }
    let a = std::fs::read(&paths[0]).unwrap_or_default();
    let b = std::fs::read(&paths[1]).unwrap_or_default();
    if a.is_empty() || a != b {
        problems.push("verify-all JSON differs between runs".into());
    } else if serde_json::from_slice::<Vec<IdentityReport>>(&a).is_err() {
        problems.push("verify-all JSON does not parse".into());
    }

    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("{round_trips} round trips, canonical e*f, verify-all exit 0, identical JSON ({} bytes)", a.len())
        } else {
            problems.join("; ")
        },
    }
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    check: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "defining relations and module relations",
        budget: Duration::from_secs(5),
        check: || registry_criterion(&["eq2.1", "eq2.2", "eq2.3", "eq2.4", "rep-relations"], true),
    },
    Criterion {
        id: 2,
        title: "power reordering, m = 1..10",
        budget: Duration::from_secs(10),
        check: || registry_criterion(&["eq2.5", "eq2.6"], true),
    },
    Criterion {
        id: 3,
        title: "product formula m = 1..8 and sign lemma t <= 100",
        budget: Duration::from_secs(30),
        check: || registry_criterion(&["prop2.3", "prop2.3-sign"], true),
    },
    Criterion {
        id: 4,
        title: "module homomorphism and basis independence",
        budget: Duration::from_secs(60),
        check: || registry_criterion(&["prop2.4-homomorphism", "prop2.4-independence"], true),
    },
    Criterion {
        id: 5,
        title: "closed reordering of e^p f^q, p, q <= 5",
        budget: Duration::from_secs(60),
        check: || registry_criterion(&["lemma3.1"], true),
    },
    Criterion {
        id: 6,
        title: "leading-term multiplicativity",
        budget: Duration::from_secs(60),
        check: || {
            let reports = run(&["thm3.2-leading"]);
            let mut o = judge(&reports, true);
            if reports.len() != 4 {
                o.pass = false;
                o.detail = format!("expected generic + 3 specializations, got {}", reports.len());
            }
            o
        },
    },
    Criterion {
        id: 7,
        title: "Dickson suite",
        budget: Duration::from_secs(30),
        check: || {
            registry_criterion(
                &[
                    "dickson-closed-rec",
                    "lemma4.2-genfunc",
                    "t-series",
                    "r-series",
                    "dickson-casimir",
                    "dickson-t-casimir",
                ],
                true,
            )
        },
    },
    Criterion {
        id: 8,
        title: "root-of-unity centrality",
        budget: Duration::from_secs(60),
        check: || registry_criterion(&["thm3.3-central", "eq2.5-root"], true),
    },
    Criterion {
        id: 9,
        title: "root-of-unity Casimir identities",
        budget: Duration::from_secs(300),
        check: || {
            let reports = run(&["eq5.1", "eq5.2", "eq5.3", "eq5.4", "eq5.5", "eq5.6", "eq5.7"]);
            let mut o = judge(&reports, false);
            let undocumented = reports
                .iter()
                .any(|r| r.status == Status::DocumentedDiscrepancy && r.variant.is_none());
            if undocumented || reports.len() != 10 {
                o.pass = false;
                o.detail = format!("{} reports; undocumented discrepancy: {undocumented}", reports.len());
            }
            o
        },
    },
    Criterion {
        id: 10,
        title: "parser and CLI",
        budget: Duration::from_secs(60),
        check: parser_and_cli,
    },
];

fn main() -> ExitCode {
    let mut unexpected = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let mut o = (c.check)();
        let elapsed = start.elapsed();
        if elapsed > c.budget {
            o.pass = false;
            o.detail = format!("{} (over budget of {:?})", o.detail, c.budget);
        }
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {:<50} {:>7.2}s  {}", c.id, c.title, elapsed.as_secs_f64(), o.detail);
        if !o.pass {
            match KNOWN_RED.iter().find(|(id, _)| *id == c.id) {
                Some((_, why)) => println!("             known red: {why}"),
                None => unexpected += 1,
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
