//! Run configuration, read from JSON.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifyError};
use crate::specialization::Specialization;

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const SEED_ENV: &str = "OSPKERNEL_SEED";

/// Parameter ranges and sample sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Bounds {
    pub lemma22_max_m: u32,
    pub prop23_max_m: u32,
    pub sign_max_t: u32,
    pub lemma31_max: u32,
    pub dickson_max_n: u32,
    pub series_order: usize,
    pub dickson_max_m: u32,
    pub casimir_t_max_m: u32,
    pub rep_samples: usize,
    pub rep_monomials: usize,
    pub leading_samples: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            lemma22_max_m: 10,
            prop23_max_m: 8,
            sign_max_t: 100,
            lemma31_max: 5,
            dickson_max_n: 20,
            series_order: 20,
            dickson_max_m: 8,
            casimir_t_max_m: 5,
            rep_samples: 200,
            rep_monomials: 100,
            leading_samples: 200,
        }
    }
}

/// `{specializations, bounds, identities, seed}`; every field optional.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Specialization ids: `ell3`, `ell3@24` or `24:0:4`.
    pub specializations: Vec<String>,
    pub bounds: Bounds,
    /// Restrict the run to these identities.
    pub identities: Option<Vec<String>>,
    pub seed: Option<u64>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            specializations: vec!["ell3".into(), "ell4".into(), "ell6".into()],
            bounds: Bounds::default(),
            identities: None,
            seed: None,
        }
    }
}

impl Config {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| VerifyError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn specializations(&self) -> Result<Vec<Specialization>> {
        self.specializations.iter().map(|s| s.parse()).collect()
    }

    /// The environment variable, then the config, then the default.
    pub fn effective_seed(&self) -> Result<u64> {
        match std::env::var(SEED_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| VerifyError::Config(format!("{SEED_ENV} must be an unsigned integer, got `{v}`"))),
            Err(_) => Ok(self.seed.unwrap_or(DEFAULT_SEED)),
        }
    }
}
