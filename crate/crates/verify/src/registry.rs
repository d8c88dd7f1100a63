//! The table of checkable identities and their parameter grids.

use std::collections::BTreeMap;

use ospkernel_core::algebra::Generator;
use serde_json::{json, Value};

use crate::check::{Check, Resolution};
use crate::config::Bounds;
use crate::error::{Result, VerifyError};
use crate::generic::{self as g, generic_algebra};
use crate::report::IdentityReport;
use crate::roots::{self as rt, RootContext};
use crate::specialization::{Orders, Specialization};

pub type ParamMap = BTreeMap<String, Value>;

/// Where an identity is evaluated.
#[derive(Clone, Copy, Debug)]
pub enum Scope {
    /// Generic parameters only.
    Generic,
    /// Root-of-unity specializations satisfying the predicate.
    Root(fn(&Orders) -> bool),
    /// Once at generic parameters and once per applicable specialization.
    Both,
}

type Runner = fn(&Env<'_>, &ParamMap) -> Result<Resolution>;

pub struct Entry {
    pub name: &'static str,
    pub summary: &'static str,
    pub scope: Scope,
    grid: fn(&Bounds) -> Vec<ParamMap>,
    run: Runner,
}

impl std::fmt::Debug for Entry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Entry").field("name", &self.name).finish()
    }
}

impl Entry {
    pub fn grid(&self, b: &Bounds) -> Vec<ParamMap> {
        (self.grid)(b)
    }

    pub fn applies_to(&self, o: &Orders) -> bool {
        match self.scope {
            Scope::Generic => false,
            Scope::Root(p) => p(o),
            Scope::Both => true,
        }
    }

    pub fn needs_spec(&self) -> bool {
        matches!(self.scope, Scope::Root(_))
    }
}

/// Evaluation context for one invocation.
pub struct Env<'a> {
    pub root: Option<&'a RootContext>,
    pub bounds: &'a Bounds,
    pub seed: u64,
}

impl Env<'_> {
    fn root(&self, name: &str) -> Result<&RootContext> {
        self.root.ok_or_else(|| VerifyError::SpecializationRequired(name.to_string()))
    }
}

fn none(_: &Bounds) -> Vec<ParamMap> {
    vec![ParamMap::new()]
}

fn one(key: &str, v: Value) -> ParamMap {
    ParamMap::from([(key.to_string(), v)])
}

fn range(key: &'static str, lo: u32, hi: u32) -> Vec<ParamMap> {
    (lo..=hi).map(|m| one(key, json!(m))).collect()
}

fn get_u32(name: &str, p: &ParamMap, key: &'static str) -> Result<u32> {
    p.get(key)
        .and_then(Value::as_u64)
        .and_then(|v| u32::try_from(v).ok())
        .ok_or(VerifyError::MissingParam {
            name: name.to_string(),
            param: key,
        })
}

fn get_str<'p>(name: &str, p: &'p ParamMap, key: &'static str) -> Result<&'p str> {
    p.get(key).and_then(Value::as_str).ok_or(VerifyError::MissingParam {
        name: name.to_string(),
        param: key,
    })
}

fn unknown_value(name: &str, key: &str, v: &str) -> VerifyError {
    VerifyError::NotApplicable {
        name: name.to_string(),
        reason: format!("unknown {key} `{v}`"),
    }
}

fn plain(c: Check) -> Result<Resolution> {
    Ok(crate::check::resolve(c, Vec::new()))
}

fn not_twice_odd(o: &Orders) -> bool {
    !o.twice_odd()
}

fn twice_odd(o: &Orders) -> bool {
    o.twice_odd()
}

fn even_ell(o: &Orders) -> bool {
    o.ell.is_multiple_of(2)
}

fn any_root(_: &Orders) -> bool {
    true
}

macro_rules! entry {
    ($name:expr, $summary:expr, $scope:expr, $grid:expr, $run:expr) => {
        Entry {
            name: $name,
            summary: $summary,
            scope: $scope,
            grid: $grid,
            run: $run,
        }
    };
}

/// All registered identities, sorted by name.
pub static REGISTRY: &[Entry] = &[
    entry!("alpha-symmetry", "alpha_m(i) is invariant under w <-> wp, r <-> s", Scope::Generic, none, |_, _| {
        plain(g::alpha_symmetry(&generic_algebra(), 5, 5))
    }),
    entry!("dickson-casimir", "D_2(b^-1 v sc, -1) = C", Scope::Generic, none, |_, _| {
        Ok(g::dickson_casimir(&generic_algebra()))
    }),
    entry!(
        "dickson-closed-rec",
        "closed-form Dickson polynomials agree with the recursion",
        Scope::Generic,
        |_| g::DICKSON_PARAMETERS.iter().map(|a| one("a", json!(a))).collect(),
        |env, p| {
            let name = "dickson-closed-rec";
            let a = get_str(name, p, "a")?;
            let v = g::dickson_parameter(a).ok_or_else(|| unknown_value(name, "a", a))?;
            plain(g::dickson_closed_rec(&v, env.bounds.dickson_max_n))
        }
    ),
    entry!(
        "dickson-even-odd",
        "D_2m(u,-1) = T_m(C,1) and D_2m+1(u,-1) = (u - u^-1) R_m(C,1) in the Laurent ring",
        Scope::Generic,
        none,
        |env, _| plain(g::dickson_even_odd(env.bounds.dickson_max_m))
    ),
    entry!(
        "dickson-laurent",
        "D_n(u - u^-1, -1) = u^n + (-u^-1)^n",
        Scope::Generic,
        none,
        |env, _| plain(g::dickson_laurent(env.bounds.dickson_max_n))
    ),
    entry!(
        "dickson-t-casimir",
        "D_2m(b^-1 v sc, -1) = T_m(C, 1)",
        Scope::Generic,
        |b| range("m", 1, b.casimir_t_max_m),
        |_, p| Ok(g::dickson_t_casimir(&generic_algebra(), get_u32("dickson-t-casimir", p, "m")?))
    ),
    entry!("eq2.1", "Cartan generators commute and are invertible", Scope::Generic, none, |_, _| {
        plain(g::eq2_1(&generic_algebra()))
    }),
    entry!("eq2.2", "w e w^-1 = q e, wp e wp^-1 = q^-1 e", Scope::Generic, none, |_, _| {
        plain(g::conjugation(&generic_algebra(), Generator::E))
    }),
    entry!("eq2.3", "w f w^-1 = q^-1 f, wp f wp^-1 = q f", Scope::Generic, none, |_, _| {
        plain(g::conjugation(&generic_algebra(), Generator::F))
    }),
    entry!("eq2.4", "ef + fe = (w - wp)/(r - s)", Scope::Generic, none, |_, _| {
        plain(g::eq2_4(&generic_algebra()))
    }),
    entry!(
        "eq2.5",
        "e f^m = (-1)^m f^m e + f^(m-1) alpha-term",
        Scope::Generic,
        |b| range("m", 1, b.lemma22_max_m),
        |_, p| plain(g::lemma22(&generic_algebra(), get_u32("eq2.5", p, "m")?, true))
    ),
    entry!(
        "eq2.5-root",
        "f^L e = e f^L and e^L f = f e^L",
        Scope::Root(any_root),
        none,
        |env, _| plain(rt::power_commutation(env.root("eq2.5-root")?))
    ),
    entry!(
        "eq2.6",
        "f e^m = (-1)^m e^m f + e^(m-1) alpha-term",
        Scope::Generic,
        |b| range("m", 1, b.lemma22_max_m),
        |_, p| plain(g::lemma22(&generic_algebra(), get_u32("eq2.6", p, "m")?, false))
    ),
    entry!(
        "eq5.1",
        "product over l' factors = eps(l')(-eta)^l' f^l' e^l'",
        Scope::Root(any_root),
        none,
        |env, _| plain(rt::eq5_1(env.root("eq5.1")?))
    ),
    entry!(
        "eq5.1-chain",
        "stepwise factorisation of the product at m = l'",
        Scope::Root(any_root),
        none,
        |env, _| plain(rt::eq5_1_chain(env.root("eq5.1-chain")?))
    ),
    entry!(
        "eq5.1-dickson",
        "D_l'(b^-1 v sc, -1) in terms of Cartan powers and f^l' e^l'",
        Scope::Root(any_root),
        none,
        |env, _| plain(rt::eq5_1_dickson(env.root("eq5.1-dickson")?))
    ),
    entry!(
        "eq5.2",
        "(-1)^(L/2) T_(L/2)(C,1) relation, l not twice odd",
        Scope::Root(not_twice_odd),
        none,
        |env, _| Ok(rt::eq5_2(env.root("eq5.2")?))
    ),
    entry!(
        "eq5.3",
        "W R_((L-2)/4)(C,1) relation, l twice odd",
        Scope::Root(twice_odd),
        none,
        |env, _| Ok(rt::eq5_3(env.root("eq5.3")?))
    ),
    entry!(
        "eq5.4",
        "eq5.3 multiplied by w^(L/2)",
        Scope::Root(twice_odd),
        none,
        |env, _| Ok(rt::eq5_4(env.root("eq5.4")?))
    ),
    entry!(
        "eq5.5",
        "eq5.3 multiplied by wp^(-L/2)",
        Scope::Root(twice_odd),
        none,
        |env, _| Ok(rt::eq5_5(env.root("eq5.5")?))
    ),
    entry!(
        "eq5.6",
        "T_(L/2)(C,1) with f^(L/2) e^(L/2) correction",
        Scope::Root(twice_odd),
        none,
        |env, _| Ok(rt::eq5_6(env.root("eq5.6")?))
    ),
    entry!(
        "eq5.7",
        "T_(L/2)(C,1) with Scasimir correction",
        Scope::Root(twice_odd),
        none,
        |env, _| Ok(rt::eq5_7(env.root("eq5.7")?))
    ),
    entry!(
        "i-twist",
        "D_m(iu, -1) = i T_m(u, 1) and T_m(iu, 1) = i D_m(u, -1)",
        Scope::Generic,
        |b| range("m", 0, b.dickson_max_m),
        |_, p| Ok(g::i_twist(get_u32("i-twist", p, "m")?))
    ),
    entry!("lemma3.1", "closed-form e^p f^q agrees with naive rewriting", Scope::Generic,
        |b| {
            let mut v = Vec::new();
            for p in 0..=b.lemma31_max {
                for q in 0..=b.lemma31_max {
                    v.push(ParamMap::from([("p".to_string(), json!(p)), ("q".to_string(), json!(q))]));
                }
            }
            v
        },
        |_, ps| plain(g::lemma3_1(get_u32("lemma3.1", ps, "p")?, get_u32("lemma3.1", ps, "q")?))
    ),
    entry!(
        "lemma4.2-genfunc",
        "sum D_m(u,a) z^m = (2 - uz)/(1 - uz + a z^2)",
        Scope::Generic,
        |_| ["1", "-1"].iter().map(|a| one("a", json!(a))).collect(),
        |env, p| {
            let name = "lemma4.2-genfunc";
            let a = get_str(name, p, "a")?;
            let v = g::dickson_parameter(a).ok_or_else(|| unknown_value(name, "a", a))?;
            plain(g::lemma4_2_genfunc(&v, env.bounds.series_order))
        }
    ),
    entry!("prop2.1", "the Scasimir supercommutes with every generator", Scope::Generic, none, |_, _| {
        plain(g::prop2_1(&generic_algebra()))
    }),
    entry!(
        "prop2.3",
        "product formula: prod (sc - q'^n r^1/2 w + q'^-n s^1/2 wp) = eps(m)(-eta)^m f^m e^m",
        Scope::Generic,
        |b| range("m", 1, b.prop23_max_m),
        |_, p| plain(g::prop2_3(&generic_algebra(), get_u32("prop2.3", p, "m")?))
    ),
    entry!(
        "prop2.3-commutation",
        "f w = -q' w f, f wp = -q'^-1 wp f, f sc = -sc f",
        Scope::Generic,
        none,
        |_, _| plain(g::prop2_3_commutation(&generic_algebra()))
    ),
    entry!(
        "prop2.3-sign",
        "(-1)^t eps(t) eps(t+1) = 1",
        Scope::Generic,
        none,
        |env, _| plain(g::prop2_3_sign(env.bounds.sign_max_t))
    ),
    entry!(
        "prop2.4-homomorphism",
        "the module action respects products",
        Scope::Generic,
        none,
        |env, _| plain(g::prop2_4_homomorphism(env.bounds.rep_samples, env.seed))
    ),
    entry!(
        "prop2.4-independence",
        "PBW monomials act on 1 as distinct basis monomials",
        Scope::Generic,
        none,
        |_, _| plain(g::prop2_4_independence())
    ),
    entry!("r-series", "sum R_m(C,1) z^m = (1 + z)/(1 - Cz + z^2)", Scope::Generic, none, |env, _| {
        plain(g::r_series(env.bounds.series_order))
    }),
    entry!(
        "rep-relations",
        "module operators satisfy the defining relations",
        Scope::Generic,
        none,
        |env, _| plain(g::rep_relations(env.bounds.rep_monomials, env.seed))
    ),
    entry!("t-series", "sum T_m(C,1) z^m = (2 - Cz)/(1 - Cz + z^2)", Scope::Generic, none, |env, _| {
        plain(g::t_series(env.bounds.series_order))
    }),
    entry!(
        "thm3.1-center",
        "w wp, sc^2 and C are central",
        Scope::Generic,
        |_| g::GENERIC_CENTRAL.iter().map(|e| one("element", json!(e))).collect(),
        |_, p| {
            let name = "thm3.1-center";
            let e = get_str(name, p, "element")?;
            g::generic_central(&generic_algebra(), e)
                .ok_or_else(|| unknown_value(name, "element", e))
                .and_then(plain)
        }
    ),
    entry!(
        "thm3.2-leading",
        "leading monomial of a product is the sum of leading monomials",
        Scope::Both,
        none,
        |env, _| {
            let (samples, seed) = (env.bounds.leading_samples, env.seed);
            plain(match env.root {
                Some(ctx) => rt::leading_terms_at(ctx, samples, seed),
                None => g::leading_terms(&generic_algebra(), samples, seed, g::monomial_coeff),
            })
        }
    ),
    entry!(
        "thm3.3-central",
        "e^L, f^L, w^+-l, wp^+-l, w wp, sc^2 are central",
        Scope::Root(any_root),
        |_| rt::ROOT_CENTRAL.iter().map(|e| one("element", json!(e))).collect(),
        |env, p| {
            let name = "thm3.3-central";
            let e = get_str(name, p, "element")?;
            rt::root_central(env.root(name)?, e)
                .ok_or_else(|| unknown_value(name, "element", e))
                .and_then(plain)
        }
    ),
    entry!(
        "thm3.3-unit-cartan",
        "w^+-1, wp^+-1 are central",
        Scope::Root(any_root),
        none,
        |env, _| Ok(rt::unit_cartan(env.root("thm3.3-unit-cartan")?))
    ),
    entry!(
        "thm3.4-basis",
        "w^(1/2) sc and wp^(1/2) sc are central for even l",
        Scope::Root(even_ell),
        |_| ["w^(1/2)*sc", "wp^(1/2)*sc"].iter().map(|e| one("element", json!(e))).collect(),
        |env, p| {
            let name = "thm3.4-basis";
            let ctx = env.root(name)?;
            match get_str(name, p, "element")? {
                "w^(1/2)*sc" => Ok(rt::basis_centrality(ctx, false)),
                "wp^(1/2)*sc" => Ok(rt::basis_centrality(ctx, true)),
                e => Err(unknown_value(name, "element", e)),
            }
        }
    ),
];

/// Alternative names accepted on the command line.
const ALIASES: &[(&str, &str)] = &[("thm5.1-odd-case", "eq5.2")];

pub fn lookup(name: &str) -> Result<&'static Entry> {
    let canonical = ALIASES.iter().find(|(a, _)| *a == name).map_or(name, |(_, c)| c);
    REGISTRY
        .iter()
        .find(|e| e.name == canonical)
        .ok_or_else(|| VerifyError::UnknownIdentity(name.to_string()))
}

/// One scheduled check.
#[derive(Clone, Debug)]
pub struct Invocation {
    pub entry: &'static Entry,
    pub params: ParamMap,
    pub spec: Option<Specialization>,
}

impl Invocation {
    /// Report parameters, including the specialization id.
    pub fn report_params(&self) -> ParamMap {
        let mut p = self.params.clone();
        if let Some(s) = &self.spec {
            p.insert("spec".into(), json!(s.id()));
            p.insert("ell".into(), json!(s.orders.ell));
        }
        p
    }
}

/// Runs one invocation against a prepared context.
pub fn run(inv: &Invocation, root: Option<&RootContext>, bounds: &Bounds, seed: u64) -> Result<IdentityReport> {
    let entry = inv.entry;
    if entry.needs_spec() && inv.spec.is_none() {
        return Err(VerifyError::SpecializationRequired(entry.name.to_string()));
    }
    if let Some(s) = &inv.spec {
        if !entry.applies_to(&s.orders) {
            return Err(VerifyError::NotApplicable {
                name: entry.name.to_string(),
                reason: match entry.scope {
                    Scope::Generic => "evaluated at generic parameters only".to_string(),
                    _ => format!("hypotheses on l fail at l = {}", s.orders.ell),
                },
            });
        }
    }
    let env = Env { root, bounds, seed };
    let res = (entry.run)(&env, &inv.params)?;
    Ok(IdentityReport {
        name: entry.name.to_string(),
        params: inv.report_params(),
        status: res.status,
        witness: res.witness,
        variant: res.variant,
        note: res.note,
        elapsed_ms: None,
    })
}

/// Every invocation for the given bounds and specializations.
pub fn plan(bounds: &Bounds, specs: &[Specialization], only: Option<&[String]>) -> Result<Vec<Invocation>> {
    let selected: Vec<&'static Entry> = match only {
        Some(names) => names.iter().map(|n| lookup(n)).collect::<Result<_>>()?,
        None => REGISTRY.iter().collect(),
    };
    let mut out = Vec::new();
    for entry in selected {
        let grid = entry.grid(bounds);
        if matches!(entry.scope, Scope::Generic | Scope::Both) {
            out.extend(grid.iter().map(|p| Invocation {
                entry,
                params: p.clone(),
                spec: None,
            }));
        }
        for s in specs.iter().filter(|s| entry.applies_to(&s.orders)) {
            out.extend(grid.iter().map(|p| Invocation {
                entry,
                params: p.clone(),
                spec: Some(*s),
            }));
        }
    }
    Ok(out)
}

/// Invocations for one identity, restricted to the given parameters. With
/// no grid point matching, the parameters are used as given.
pub fn plan_one(name: &str, given: &ParamMap, spec: Option<Specialization>, bounds: &Bounds) -> Result<Vec<Invocation>> {
    let entry = lookup(name)?;
    if entry.needs_spec() && spec.is_none() {
        return Err(VerifyError::SpecializationRequired(entry.name.to_string()));
    }
    let grid = entry.grid(bounds);
    let matching: Vec<ParamMap> = grid
        .iter()
        .filter(|p| given.iter().all(|(k, v)| p.get(k) == Some(v)))
        .cloned()
        .collect();
    let params = if matching.is_empty() { vec![given.clone()] } else { matching };
    Ok(params
        .into_iter()
        .map(|params| Invocation { entry, params, spec })
        .collect())
}
