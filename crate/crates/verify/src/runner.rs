//! Parallel execution of planned invocations.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use crate::config::{Bounds, Config};
use crate::error::Result;
use crate::registry::{self, Invocation};
use crate::report::{sort_reports, IdentityReport, Status};
use crate::roots::RootContext;
use crate::specialization::Specialization;

/// Options that do not affect check outcomes.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Record wall-clock time per check. Makes reports nondeterministic.
    pub timings: bool,
}

fn contexts(invs: &[Invocation]) -> BTreeMap<String, RootContext> {
    let mut out = BTreeMap::new();
    for s in invs.iter().filter_map(|i| i.spec) {
        out.entry(s.id()).or_insert_with(|| RootContext::new(s));
    }
    out
}

/// Runs invocations concurrently; errors become failing reports. Output is
/// sorted by name, then parameters.
pub fn run_all(invs: &[Invocation], bounds: &Bounds, seed: u64, opts: RunOptions) -> Vec<IdentityReport> {
    let ctxs = contexts(invs);
    let mut reports: Vec<IdentityReport> = invs
        .par_iter()
        .map(|inv| {
            let start = Instant::now();
            let root = inv.spec.map(|s| &ctxs[&s.id()]);
            let mut r = registry::run(inv, root, bounds, seed).unwrap_or_else(|e| IdentityReport {
                name: inv.entry.name.to_string(),
                params: inv.report_params(),
                status: Status::Fail,
                witness: Some(json!({ "error": e.to_string() })),
                variant: None,
                note: None,
                elapsed_ms: None,
            });
            if opts.timings {
                r.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            r
        })
        .collect();
    sort_reports(&mut reports);
    reports
}

/// The full registry under a configuration.
pub fn verify_all(config: &Config, opts: RunOptions) -> Result<Vec<IdentityReport>> {
    let specs = config.specializations()?;
    let invs = registry::plan(&config.bounds, &specs, config.identities.as_deref())?;
    Ok(run_all(&invs, &config.bounds, config.effective_seed()?, opts))
}

/// One identity, optionally restricted by parameters; errors propagate.
pub fn verify_identity(
    name: &str,
    params: &registry::ParamMap,
    spec: Option<Specialization>,
    config: &Config,
    opts: RunOptions,
) -> Result<Vec<IdentityReport>> {
    let invs = registry::plan_one(name, params, spec, &config.bounds)?;
    let seed = config.effective_seed()?;
    let ctx = spec.map(RootContext::new);
    let mut out = invs
        .iter()
        .map(|inv| {
            let start = Instant::now();
            let mut r = registry::run(inv, ctx.as_ref(), &config.bounds, seed)?;
            if opts.timings {
                r.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    sort_reports(&mut out);
    Ok(out)
}
