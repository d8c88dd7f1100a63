//! Cyclotomic fields Q(ζ_n), elements reduced modulo Φ_n.
//!
//! Operands with different conductors are lifted to the lcm conductor
//! through `ζ_n = ζ_m^{m/n}`. Constants use conductor 1.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::upoly::UPoly;
use crate::ring::{parse_rational, Field, Rational, Ring};

static PHI_CACHE: Lazy<Mutex<HashMap<u32, Arc<UPoly>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The `n`-th cyclotomic polynomial.
pub(crate) fn phi(n: u32) -> Arc<UPoly> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(p) = PHI_CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = UPoly::monomial(Rational::one(), n as usize).sub(&UPoly::constant(Rational::one()));
    for d in divisors(n) {
        if d < n {
            p = p.exact_div(&phi(d)).expect("cyclotomic factor divides x^n - 1");
        }
    }
    let p = Arc::new(p);
    PHI_CACHE.lock().unwrap().insert(n, p.clone());
    p
}

/// Euler's totient, i.e. `[Q(ζ_n) : Q]`.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// An element of Q(ζ_n), stored as a polynomial in ζ_n of degree < φ(n).
#[derive(Clone)]
pub struct CycloNumber {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycloNumber {
    fn reduced(conductor: u32, p: UPoly) -> Self {
        let m = phi(conductor);
        let r = if p.0.len() > m.0.len() - 1 { p.divrem(&m).1 } else { p };
        let mut coeffs = r.0;
        coeffs.resize(m.0.len() - 1, Rational::zero());
        CycloNumber { conductor, coeffs }
    }

    /// Builds from coefficients in powers of ζ_n; any length is accepted.
    pub fn from_coeffs(conductor: u32, coeffs: Vec<Rational>) -> Self {
        Self::reduced(conductor, UPoly(coeffs).trimmed())
    }

    pub fn constant(conductor: u32, c: Rational) -> Self {
        Self::reduced(conductor, UPoly::constant(c))
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        Self::reduced(n, UPoly::monomial(Rational::one(), e))
    }

    pub fn zeta(n: u32) -> Self {
        Self::zeta_pow(n, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn poly(&self) -> UPoly {
        UPoly(self.coeffs.clone()).trimmed()
    }

    /// Re-expresses in Q(ζ_m); `conductor` must divide `m`.
    pub fn lift(&self, m: u32) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m.is_multiple_of(self.conductor), "conductor must divide target");
        let step = (m / self.conductor) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Self::reduced(m, UPoly(v).trimmed())
    }

    fn common(&self, o: &Self) -> (Self, Self) {
        if self.conductor == o.conductor {
            return (self.clone(), o.clone());
        }
        let m = self.conductor.lcm(&o.conductor);
        (self.lift(m), o.lift(m))
    }

    /// Rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Smallest `k ≥ 1` with `z^k = 1`, searched up to `2n`.
    pub fn order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let bound = 2 * self.conductor.max(1);
        let one = Self::one();
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc == one {
                return Some(k);
            }
            acc = acc * self.clone();
        }
        None
    }

    fn render(&self) -> String {
        let mut s = String::new();
        let name = format!("zeta{}", self.conductor);
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let var = match k {
                0 => String::new(),
                1 => name.clone(),
                _ => format!("{name}^{k}"),
            };
            if var.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&var);
            } else {
                s.push_str(&format!("{a}*{var}"));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

/// Order of a cyclotomic number as a root of unity.
pub fn cyclo_order(z: &CycloNumber) -> Option<u32> {
    z.order()
}

impl PartialEq for CycloNumber {
    fn eq(&self, o: &Self) -> bool {
        let (a, b) = self.common(o);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber({})", self.render())
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Zero for CycloNumber {
    fn zero() -> Self {
        Self::constant(1, Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for CycloNumber {
    fn one() -> Self {
        Self::constant(1, Rational::one())
    }
}

impl Add for CycloNumber {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (a, b) = self.common(&o);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycloNumber {
            conductor: a.conductor,
            coeffs,
        }
    }
}

impl Sub for CycloNumber {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for CycloNumber {
    type Output = Self;
    fn neg(self) -> Self {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for CycloNumber {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if let Some(c) = o.as_rational() {
            return CycloNumber {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
            };
        }
        if let Some(c) = self.as_rational() {
            return CycloNumber {
                conductor: o.conductor,
                coeffs: o.coeffs.iter().map(|x| x * &c).collect(),
            };
        }
        let (a, b) = self.common(&o);
        Self::reduced(a.conductor, a.poly().mul(&b.poly()))
    }
}

impl Ring for CycloNumber {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(1, q.clone())
    }

    fn looks_negative(&self) -> bool {
        self.coeffs
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_negative())
    }
}

impl Field for CycloNumber {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(c) = self.as_rational() {
            return Some(Self::constant(self.conductor, c.recip()));
        }
        let m = phi(self.conductor);
        let inv = self.poly().inverse_mod(&m)?;
        Some(Self::reduced(self.conductor, inv))
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloJson {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = CycloJson::deserialize(d)?;
        if j.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| parse_rational(c).ok_or_else(|| D::Error::custom("bad rational")))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() != totient(j.conductor) as usize {
            return Err(D::Error::custom("coefficient count must equal the totient"));
        }
        Ok(Self::from_coeffs(j.conductor, coeffs))
    }
}
