//! Building blocks shared by the identity checks.

use ospkernel_core::algebra::{Algebra, AlgebraElement};
use ospkernel_core::Field;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::Status;

/// Whether one formulation of an identity holds, with a witness when not.
#[derive(Clone, Debug)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<Value>,
    pub note: Option<String>,
}

impl Check {
    pub fn pass() -> Self {
        Check {
            holds: true,
            witness: None,
            note: None,
        }
    }

    pub fn fail(witness: Value) -> Self {
        Check {
            holds: false,
            witness: Some(witness),
            note: None,
        }
    }

    pub fn from_bool(holds: bool, witness: impl FnOnce() -> Value) -> Self {
        if holds {
            Self::pass()
        } else {
            Self::fail(witness())
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// All checks hold; otherwise the first failure, labelled.
    pub fn all<I: IntoIterator<Item = (String, Check)>>(checks: I) -> Self {
        for (label, c) in checks {
            if !c.holds {
                return Check::fail(json!({ "step": label, "witness": c.witness }));
            }
        }
        Check::pass()
    }
}

pub fn element_json<K: Field + Serialize>(x: &AlgebraElement<K>) -> Value {
    serde_json::to_value(x).expect("elements serialize")
}

/// `lhs = rhs`, with `lhs - rhs` as witness.
pub fn equal<K: Field + Serialize>(lhs: &AlgebraElement<K>, rhs: &AlgebraElement<K>) -> Check {
    let d = lhs - rhs;
    Check::from_bool(d.is_zero(), || json!({ "difference": element_json(&d) }))
}

/// `x = 0`.
pub fn vanishes<K: Field + Serialize>(x: &AlgebraElement<K>) -> Check {
    Check::from_bool(x.is_zero(), || json!({ "difference": element_json(x) }))
}

/// Central or supercentral.
pub fn in_supercenter<K: Field>(alg: &Algebra<K>, x: &AlgebraElement<K>) -> bool {
    alg.is_central(x) || alg.is_supercentral(x)
}

/// `lhs = rhs` and each side lies in the center or the supercenter.
pub fn central_equal<K: Field + Serialize>(
    alg: &Algebra<K>,
    lhs: &AlgebraElement<K>,
    rhs: &AlgebraElement<K>,
) -> Check {
    let eq = equal(lhs, rhs);
    if !eq.holds {
        return eq;
    }
    let (l, r) = (in_supercenter(alg, lhs), in_supercenter(alg, rhs));
    Check::from_bool(l && r, || json!({ "lhs_in_supercenter": l, "rhs_in_supercenter": r }))
}

/// Final status of a check with as-printed form and ordered fallbacks.
pub struct Resolution {
    pub status: Status,
    pub witness: Option<Value>,
    pub variant: Option<String>,
    pub note: Option<String>,
}

pub type Variant<'a> = (&'a str, Box<dyn FnOnce() -> Check + 'a>);

/// Tries the printed form first, then each variant in order. A variant
/// that holds turns the result into a documented discrepancy; the witness
/// is always the printed form's.
pub fn resolve(as_printed: Check, variants: Vec<Variant<'_>>) -> Resolution {
    if as_printed.holds {
        return Resolution {
            status: Status::Pass,
            witness: None,
            variant: None,
            note: as_printed.note,
        };
    }
    for (name, run) in variants {
        let c = run();
        if c.holds {
            return Resolution {
                status: Status::DocumentedDiscrepancy,
                witness: as_printed.witness,
                variant: Some(name.to_string()),
                note: as_printed.note.or(c.note),
            };
        }
    }
    Resolution {
        status: Status::Fail,
        witness: as_printed.witness,
        variant: None,
        note: as_printed.note,
    }
}
