//! Root-of-unity parameter assignments `X ↦ ζ_n^a`, `Y ↦ ζ_n^b`, so that
//! `q^{1/2} = ζ_n^{a-b}`.

use std::fmt;
use std::str::FromStr;

use ospkernel_core::algebra::{Algebra, Params};
use ospkernel_core::scalars::cyclo_order;
use ospkernel_core::{CycloNumber, RootOfUnityAlgebra};
use serde::{Deserialize, Serialize};

use crate::error::{Result, VerifyError};

pub const DEFAULT_CONDUCTOR: u32 = 24;

/// `ℓ = ord(q)`, `ℓ' = ord(-q)`, `L` the smallest even multiple of `ℓ'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orders {
    pub ell: u32,
    pub ell_prime: u32,
    pub big_l: u32,
}

impl Orders {
    /// Whether `ℓ` is twice an odd integer.
    pub fn twice_odd(&self) -> bool {
        self.ell.is_multiple_of(2) && (self.ell / 2) % 2 == 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Specialization {
    pub conductor: u32,
    pub a: u32,
    pub b: u32,
    pub orders: Orders,
}

fn zeta(n: u32, k: i64) -> CycloNumber {
    CycloNumber::zeta_pow(n, k)
}

/// Orders of `q = ζ_n^{2(a-b)}` and `q' = -q`.
pub fn derive_orders(conductor: u32, a: u32, b: u32) -> Result<Orders> {
    let q = zeta(conductor, 2 * (i64::from(a) - i64::from(b)));
    let ell = cyclo_order(&q).ok_or(VerifyError::NotRootOfUnity)?;
    let ell_prime = cyclo_order(&-q).ok_or(VerifyError::NotRootOfUnity)?;
    let big_l = if ell_prime % 2 == 0 { ell_prime } else { 2 * ell_prime };
    let o = Orders { ell, ell_prime, big_l };
    // Restatement: L is the smallest even multiple of ℓ, and ℓ' is L/2
    // exactly when ℓ is twice an odd integer.
    debug_assert_eq!(big_l, if ell % 2 == 0 { ell } else { 2 * ell });
    debug_assert_eq!(ell_prime, if o.twice_odd() { big_l / 2 } else { big_l });
    Ok(o)
}

impl Specialization {
    /// Fails when `r = s` under the assignment or `q` is not a root of unity.
    pub fn new(conductor: u32, a: u32, b: u32) -> Result<Self> {
        if conductor == 0 || a >= conductor || b >= conductor {
            return Err(VerifyError::BadSpecId(format!("{conductor}:{a}:{b}")));
        }
        if (4 * u64::from(a)) % u64::from(conductor) == (4 * u64::from(b)) % u64::from(conductor) {
            return Err(ospkernel_core::Error::InvalidParams("r = s under this assignment".into()).into());
        }
        Ok(Specialization {
            conductor,
            a,
            b,
            orders: derive_orders(conductor, a, b)?,
        })
    }

    /// Canonical id `n:a:b`.
    pub fn id(&self) -> String {
        format!("{}:{}:{}", self.conductor, self.a, self.b)
    }

    pub fn params(&self) -> Params<CycloNumber> {
        Params::roots_of_unity(self.conductor, i64::from(self.a), i64::from(self.b))
            .expect("validated at construction")
    }

    pub fn algebra(&self) -> RootOfUnityAlgebra {
        Algebra::new(self.params())
    }
}

/// First `(a, b)` in lexicographic order with `ord(q) = ell` and `r ≠ s`.
pub fn find_specialization(ell: u32, conductor: u32) -> Result<Specialization> {
    for a in 0..conductor {
        for b in 0..conductor {
            if (4 * a) % conductor == (4 * b) % conductor {
                continue;
            }
            let q = zeta(conductor, 2 * (i64::from(a) - i64::from(b)));
            if cyclo_order(&q) == Some(ell) {
                return Specialization::new(conductor, a, b);
            }
        }
    }
    Err(VerifyError::NoValidAssignment { ell, conductor })
}

impl FromStr for Specialization {
    type Err = VerifyError;

    /// Accepts `ell3`, `ell3@24` or `24:0:4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || VerifyError::BadSpecId(s.to_string());
        if let Some(rest) = s.strip_prefix("ell") {
            let (ell, n) = match rest.split_once('@') {
                Some((e, n)) => (e, n.parse().map_err(|_| bad())?),
                None => (rest, DEFAULT_CONDUCTOR),
            };
            return find_specialization(ell.parse().map_err(|_| bad())?, n);
        }
        let parts: Vec<u32> = s
            .split(':')
            .map(|p| p.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match parts[..] {
            [n, a, b] => Specialization::new(n, a, b),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = self.orders;
        write!(
            f,
            "{} (X -> zeta{n}^{a}, Y -> zeta{n}^{b}; l = {}, l' = {}, L = {})",
            self.id(),
            o.ell,
            o.ell_prime,
            o.big_l,
            n = self.conductor,
            a = self.a,
            b = self.b
        )
    }
}
