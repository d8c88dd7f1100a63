//! The module `B = K[X, Y, Z^{±1}, W^{±1}]` on which `e, f, ω, ω'` act by
//! the operators `E, F, Ω, Ω'`. Used as an independent check of the
//! multiplication kernel.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::algebra::{AlgebraElement, Params, PbwMonomial};
use crate::central::signed_geometric;
use crate::error::{Error, Result};
use crate::ring::Field;

/// Exponents of `X^a Y^b Z^c W^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BMonomial {
    pub a: u32,
    pub b: u32,
    pub c: i32,
    pub d: i32,
}

impl BMonomial {
    pub const ONE: BMonomial = BMonomial { a: 0, b: 0, c: 0, d: 0 };

    pub fn new(a: u32, b: u32, c: i32, d: i32) -> Self {
        BMonomial { a, b, c, d }
    }
}

impl fmt::Display for BMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^{} Y^{} Z^{} W^{}", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, PartialEq)]
pub struct BPolynomial<K> {
    terms: BTreeMap<BMonomial, K>,
}

impl<K: Field> BPolynomial<K> {
    pub fn zero() -> Self {
        BPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BMonomial::ONE, K::one())
    }

    pub fn monomial(m: BMonomial, c: K) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (BMonomial, K)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: BMonomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BMonomial, &K)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())))
    }

    fn map_terms<F: Fn(&BMonomial, &K, &mut Self)>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            f(m, c, &mut out);
        }
        out
    }
}

impl<K: Field> Add for BPolynomial<K> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<K: Field> Sub for BPolynomial<K> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        for (m, c) in o.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<K: Field> fmt::Debug for BPolynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(m, c)| (m.to_string(), c))).finish()
    }
}

/// The operators `E, F, Ω^{±1}, Ω'^{±1}` for fixed parameters.
#[derive(Clone, Debug)]
pub struct RepOracle<K> {
    params: Params<K>,
}

impl<K: Field> RepOracle<K> {
    pub fn new(params: Params<K>) -> Self {
        RepOracle { params }
    }

    pub fn params(&self) -> &Params<K> {
        &self.params
    }

    fn q_pow(&self, k: i64) -> K {
        self.params.q_half_pow(2 * k)
    }

    /// `F(X^a Y^b Z^c W^d) = X^{a+1} Y^b Z^c W^d`.
    pub fn act_f(&self, p: &BPolynomial<K>) -> BPolynomial<K> {
        p.map_terms(|m, c, out| out.add_term(BMonomial { a: m.a + 1, ..*m }, c.clone()))
    }

    /// `E(X^a Y^b Z^c W^d) = (r-s)^{-1} X^{a-1} Y^b (q^b G_-(a) Z - q^{-b} G_+(a) W) Z^c W^d
    /// + (-1)^a X^a Y^{b+1} Z^c W^d`, where `G_∓(a) = (q^{∓a} + (-1)^{a-1}) / (q^{∓1} + 1)`.
    pub fn act_e(&self, p: &BPolynomial<K>) -> BPolynomial<K> {
        let pr = &self.params;
        p.map_terms(|m, c, out| {
            if m.a > 0 {
                let b = i64::from(m.b);
                let g_minus = signed_geometric(&pr.q_inv, m.a);
                let g_plus = signed_geometric(&pr.q, m.a);
                let base = c.clone() * pr.inv_r_minus_s.clone();
                out.add_term(
                    BMonomial::new(m.a - 1, m.b, m.c + 1, m.d),
                    base.clone() * self.q_pow(b) * g_minus,
                );
                out.add_term(
                    BMonomial::new(m.a - 1, m.b, m.c, m.d + 1),
                    -(base * self.q_pow(-b) * g_plus),
                );
            }
            let sign = if m.a % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(BMonomial { b: m.b + 1, ..*m }, sign);
        })
    }

    /// `Ω^k`: multiplies by `q^{k(b-a)}` and shifts the `Z` exponent by `k`.
    pub fn act_omega_pow(&self, k: i32, p: &BPolynomial<K>) -> BPolynomial<K> {
        p.map_terms(|m, c, out| {
            let e = i64::from(k) * (i64::from(m.b) - i64::from(m.a));
            out.add_term(BMonomial { c: m.c + k, ..*m }, c.clone() * self.q_pow(e));
        })
    }

    /// `Ω'^k`: multiplies by `q^{k(a-b)}` and shifts the `W` exponent by `k`.
    pub fn act_omega_prime_pow(&self, k: i32, p: &BPolynomial<K>) -> BPolynomial<K> {
        p.map_terms(|m, c, out| {
            let e = i64::from(k) * (i64::from(m.a) - i64::from(m.b));
            out.add_term(BMonomial { d: m.d + k, ..*m }, c.clone() * self.q_pow(e));
        })
    }

    pub fn act_omega(&self, p: &BPolynomial<K>) -> BPolynomial<K> {
        self.act_omega_pow(1, p)
    }

    pub fn act_omega_inv(&self, p: &BPolynomial<K>) -> BPolynomial<K> {
        self.act_omega_pow(-1, p)
    }

    pub fn act_omega_prime(&self, p: &BPolynomial<K>) -> BPolynomial<K> {
        self.act_omega_prime_pow(1, p)
    }

    pub fn act_omega_prime_inv(&self, p: &BPolynomial<K>) -> BPolynomial<K> {
        self.act_omega_prime_pow(-1, p)
    }

    /// `f^a e^b ω^c ω'^d` acts as `F^a E^b Ω^c Ω'^d`.
    pub fn act_monomial(&self, m: &PbwMonomial, p: &BPolynomial<K>) -> Result<BPolynomial<K>> {
        if m.has_half_exponent() {
            return Err(Error::HalfIntegerExponent);
        }
        let mut out = self.act_omega_prime_pow(m.wp2 / 2, p);
        out = self.act_omega_pow(m.w2 / 2, &out);
        for _ in 0..m.e {
            out = self.act_e(&out);
        }
        for _ in 0..m.f {
            out = self.act_f(&out);
        }
        Ok(out)
    }

    pub fn act_element(&self, x: &AlgebraElement<K>, p: &BPolynomial<K>) -> Result<BPolynomial<K>> {
        let mut out = BPolynomial::zero();
        for (m, c) in x.iter() {
            out = out + self.act_monomial(m, p)?.scale(c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator;
    use crate::ring::{rat, Rational};

    fn oracle() -> RepOracle<Rational> {
        RepOracle::new(Params::rational(rat(2), rat(3)).unwrap())
    }

    #[test]
    fn small_actions() {
        let o = oracle();
        let one = BPolynomial::one();
        assert_eq!(o.act_f(&one), BPolynomial::monomial(BMonomial::new(1, 0, 0, 0), rat(1)));
        assert_eq!(o.act_omega(&one), BPolynomial::monomial(BMonomial::new(0, 0, 1, 0), rat(1)));
        assert_eq!(o.act_e(&one), BPolynomial::monomial(BMonomial::new(0, 1, 0, 0), rat(1)));
    }

    #[test]
    fn pbw_monomials_hit_basis() {
        let o = oracle();
        let m = PbwMonomial::new(2, 3, -2, 4);
        let got = o.act_monomial(&m, &BPolynomial::one()).unwrap();
        assert_eq!(got, BPolynomial::monomial(BMonomial::new(2, 3, -1, 2), rat(1)));
    }

    #[test]
    fn half_exponents_rejected() {
        let o = oracle();
        let x = AlgebraElement::generator(Generator::WHalf);
        assert_eq!(o.act_element(&x, &BPolynomial::one()), Err(Error::HalfIntegerExponent));
    }

    #[test]
    fn anticommutator_relation() {
        let o = oracle();
        let p = BPolynomial::from_terms([
            (BMonomial::new(3, 1, -1, 2), rat(5)),
            (BMonomial::new(0, 2, 0, -3), rat(-2)),
        ]);
        let lhs = o.act_e(&o.act_f(&p)) + o.act_f(&o.act_e(&p));
        let rhs = (o.act_omega(&p) - o.act_omega_prime(&p)).scale(&o.params().inv_r_minus_s);
        assert_eq!(lhs, rhs);
    }
}
