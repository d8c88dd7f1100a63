use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The identity fails as printed and a named variant holds.
    DocumentedDiscrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DocumentedDiscrepancy => "documented-discrepancy",
        }
    }

    pub fn is_failure(self) -> bool {
        self == Status::Fail
    }
}

/// Outcome of one identity check. `witness` is the as-printed difference
/// (or a failure description) and is absent exactly when the status is
/// `pass`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// The variant that holds, for documented discrepancies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

fn cmp_value(a: &Value, b: &Value) -> Ordering {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => match (x.as_i64(), y.as_i64()) {
            (Some(x), Some(y)) => x.cmp(&y),
            _ => x.to_string().cmp(&y.to_string()),
        },
        (Value::String(x), Value::String(y)) => x.cmp(y),
        _ => a.to_string().cmp(&b.to_string()),
    }
}

impl IdentityReport {
    /// Name, then parameters key by key with numbers compared numerically.
    pub fn sort_cmp(&self, other: &Self) -> Ordering {
        self.name.cmp(&other.name).then_with(|| {
            let mut a = self.params.iter();
            let mut b = other.params.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((ka, va)), Some((kb, vb))) => {
                        let o = ka.cmp(kb).then_with(|| cmp_value(va, vb));
                        if o != Ordering::Equal {
                            return o;
                        }
                    }
                }
            }
        })
    }

    /// `name{k=v,…}`.
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            return self.name.clone();
        }
        let ps: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                v => format!("{k}={v}"),
            })
            .collect();
        format!("{}{{{}}}", self.name, ps.join(","))
    }

    /// One summary line.
    pub fn line(&self) -> String {
        let mut s = format!("{:<24} {}", self.status.as_str(), self.label());
        if let Some(v) = &self.variant {
            let _ = write!(s, "  [holds with: {v}]");
        }
        if let Some(n) = &self.note {
            let _ = write!(s, "  ({n})");
        }
        s
    }
}

/// Orders reports by identity name, then parameters.
pub fn sort_reports(reports: &mut [IdentityReport]) {
    reports.sort_by(|a, b| a.sort_cmp(b));
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub documented_discrepancy: usize,
}

pub fn summarize(reports: &[IdentityReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::DocumentedDiscrepancy => s.documented_discrepancy += 1,
        }
    }
    s
}

pub fn to_json(reports: &[IdentityReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

pub fn to_markdown(reports: &[IdentityReport]) -> String {
    let sum = summarize(reports);
    let mut s = String::from("# Verification report\n\n");
    let _ = writeln!(
        s,
        "{} pass, {} documented discrepancies, {} fail.\n",
        sum.pass, sum.documented_discrepancy, sum.fail
    );
    s.push_str("| identity | parameters | status | variant | note |\n");
    s.push_str("|---|---|---|---|---|\n");
    for r in reports {
        let params = r.label().strip_prefix(&r.name).unwrap_or("").to_string();
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} |",
            r.name,
            params.trim_start_matches('{').trim_end_matches('}'),
            r.status.as_str(),
            r.variant.as_deref().unwrap_or(""),
            r.note.as_deref().unwrap_or("").replace('|', "\\|"),
        );
    }
    let with_witness: Vec<_> = reports.iter().filter(|r| r.witness.is_some()).collect();
    if !with_witness.is_empty() {
        s.push_str("\n## Witnesses\n");
        for r in with_witness {
            let _ = writeln!(
                s,
                "\n### {}\n\n```json\n{}\n```",
                r.label(),
                serde_json::to_string_pretty(r.witness.as_ref().unwrap()).expect("json")
            );
        }
    }
    s
}
