use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::{Generator, Parity, PbwMonomial};
use crate::error::{Error, Result};
use crate::ring::{Field, Ring};
use crate::scalars::Scalar;

/// A finite linear combination of PBW monomials. No stored coefficient is
/// zero, so equality of elements is equality of term maps.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement<K> {
    terms: BTreeMap<PbwMonomial, K>,
}

impl<K: Ring> Default for AlgebraElement<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ring> AlgebraElement<K> {
    pub fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(K::one())
    }

    pub fn scalar(c: K) -> Self {
        Self::term(PbwMonomial::ONE, c)
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        Self::term(m, K::one())
    }

    pub fn term(m: PbwMonomial, c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgebraElement { terms }
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(g.monomial())
    }

    pub fn from_terms<I: IntoIterator<Item = (PbwMonomial, K)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in it {
            out.add_term(m, c);
        }
        out
    }

    /// Adds `c·m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: PbwMonomial, c: K) {
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

    pub fn coeff(&self, m: &PbwMonomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    /// Terms in descending monomial order.
    pub fn iter(&self) -> impl Iterator<Item = (&PbwMonomial, &K)> {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &PbwMonomial> {
        self.terms.keys().rev()
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())))
    }

    /// The maximal term in the `(f, w2, wp2, e)` lexicographic order.
    pub fn leading(&self) -> Result<(PbwMonomial, K)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (*m, c.clone()))
            .ok_or(Error::ZeroElement)
    }

    /// The zero element counts as even.
    pub fn degree(&self) -> Parity {
        let mut seen = [false, false];
        for m in self.terms.keys() {
            seen[m.parity() as usize] = true;
        }
        match seen {
            [_, false] => Parity::Even,
            [false, true] => Parity::Odd,
            [true, true] => Parity::Mixed,
        }
    }

    pub fn is_cartan(&self) -> bool {
        self.terms.keys().all(|m| m.is_cartan())
    }

    /// The coefficient when the element is a multiple of `1`.
    pub fn as_scalar(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => self.terms.get(&PbwMonomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Splits into `(even part, odd part)`.
    pub fn split_parity(&self) -> (Self, Self) {
        let mut even = Self::zero();
        let mut odd = Self::zero();
        for (m, c) in &self.terms {
            let dst = if m.parity() == 0 { &mut even } else { &mut odd };
            dst.terms.insert(*m, c.clone());
        }
        (even, odd)
    }

    pub fn try_map<L: Ring, F: FnMut(&K) -> Result<L>>(&self, mut f: F) -> Result<AlgebraElement<L>> {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    pub fn map<L: Ring, F: FnMut(&K) -> L>(&self, mut f: F) -> AlgebraElement<L> {
        AlgebraElement::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Exchanges `ω` and `ω'` exponents in every monomial.
    pub fn swap_cartan(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (PbwMonomial::new(m.f, m.e, m.wp2, m.w2), c.clone())),
        )
    }
}

impl AlgebraElement<Scalar> {
    /// Evaluates every coefficient under `X ↦ x`, `Y ↦ y`.
    pub fn specialize<K: Field>(&self, x: &K, y: &K) -> Result<AlgebraElement<K>> {
        self.try_map(|c| c.specialize(x, y))
    }
}

impl<K: Ring> Add for AlgebraElement<K> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<K: Ring> Add<&AlgebraElement<K>> for &AlgebraElement<K> {
    type Output = AlgebraElement<K>;
    fn add(self, o: &AlgebraElement<K>) -> AlgebraElement<K> {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<K: Ring> Sub for AlgebraElement<K> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        for (m, c) in o.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<K: Ring> Sub<&AlgebraElement<K>> for &AlgebraElement<K> {
    type Output = AlgebraElement<K>;
    fn sub(self, o: &AlgebraElement<K>) -> AlgebraElement<K> {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<K: Ring> Neg for AlgebraElement<K> {
    type Output = Self;
    fn neg(self) -> Self {
        AlgebraElement {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<K: Ring> fmt::Debug for AlgebraElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter().map(|(m, c)| (m.to_string(), c))).finish()
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson<K> {
    f: u32,
    e: u32,
    w2: i32,
    wp2: i32,
    coeff: K,
}

#[derive(Serialize, Deserialize)]
struct ElementJson<K> {
    terms: Vec<TermJson<K>>,
}

impl<K: Ring + Serialize> Serialize for AlgebraElement<K> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            terms: self
                .iter()
                .map(|(m, c)| TermJson {
                    f: m.f,
                    e: m.e,
                    w2: m.w2,
                    wp2: m.wp2,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, K: Ring + Deserialize<'de>> Deserialize<'de> for AlgebraElement<K> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ElementJson::<K>::deserialize(d)?;
        let mut out = Self::zero();
        for t in j.terms {
            let m = PbwMonomial::new(t.f, t.e, t.w2, t.wp2);
            if out.terms.contains_key(&m) {
                return Err(D::Error::custom(format!("duplicate monomial {m}")));
            }
            out.add_term(m, t.coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Rational};

    type El = AlgebraElement<Rational>;

    #[test]
    fn degree_classification() {
        let fe = El::monomial(PbwMonomial::new(1, 1, 0, 0));
        let e = El::generator(Generator::E);
        assert_eq!(fe.degree(), Parity::Even);
        assert_eq!(e.degree(), Parity::Odd);
        assert_eq!((fe + e).degree(), Parity::Mixed);
    }

    #[test]
    fn leading_terms() {
        let f = El::generator(Generator::F);
        let f2 = El::monomial(PbwMonomial::new(2, 0, 0, 0));
        assert_eq!((&f2 + &f).leading().unwrap().0, PbwMonomial::new(2, 0, 0, 0));
        let x = El::term(PbwMonomial::new(1, 1, 2, 0), rat(3)) - El::monomial(PbwMonomial::new(1, 0, 0, 2));
        assert_eq!(x.leading().unwrap(), (PbwMonomial::new(1, 1, 2, 0), rat(3)));
        assert_eq!(El::zero().leading(), Err(Error::ZeroElement));
    }

    #[test]
    fn cancellation() {
        let e = El::generator(Generator::E);
        assert!((&e - &e).is_zero());
    }
}
