//! Sparse Laurent polynomials in the quarter-power variables `X = r^{1/4}`,
//! `Y = s^{1/4}` with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::ring::{Field, Rational};

/// Exponent pair `(X^x, Y^y)`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exp2 {
    pub x: i32,
    pub y: i32,
}

impl Exp2 {
    pub const ZERO: Exp2 = Exp2 { x: 0, y: 0 };

    pub fn new(x: i32, y: i32) -> Self {
        Exp2 { x, y }
    }

    fn degree(&self) -> i64 {
        self.x as i64 + self.y as i64
    }
}

impl Ord for Exp2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Exp2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Exp2, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, x: i32, y: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: vec![(Exp2::new(x, y), c)],
            }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp2, Rational)>>(it: I) -> Self {
        let mut map: BTreeMap<Exp2, Rational> = BTreeMap::new();
        for (e, c) in it {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Exp2, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Exp2::ZERO && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Exp2::ZERO)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Graded-lex maximal term.
    pub fn leading(&self) -> Option<&(Exp2, Rational)> {
        self.terms.last()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading().map(|t| t.1.clone()).unwrap_or_else(Rational::zero)
    }

    /// Componentwise minimum exponents; `(0, 0)` for the zero polynomial.
    pub fn min_exps(&self) -> (i32, i32) {
        let mut it = self.terms.iter();
        match it.next() {
            None => (0, 0),
            Some((e, _)) => it.fold((e.x, e.y), |(mx, my), (e, _)| (mx.min(e.x), my.min(e.y))),
        }
    }

    pub fn max_exps(&self) -> (i32, i32) {
        let mut it = self.terms.iter();
        match it.next() {
            None => (0, 0),
            Some((e, _)) => it.fold((e.x, e.y), |(mx, my), (e, _)| (mx.max(e.x), my.max(e.y))),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        let (x, y) = self.min_exps();
        x >= 0 && y >= 0
    }

    /// Multiplies by `X^dx Y^dy`. Order is preserved by a uniform shift.
    pub fn shift(&self, dx: i32, dy: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exp2::new(e.x + dx, e.y + dy), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &o.terms[j];
            match ea.cmp(eb) {
                Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((*ea, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(o.terms[j..].iter().cloned());
        LaurentPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.is_monomial() {
            let (e, c) = &o.terms[0];
            return self.shift(e.x, e.y).scale(c);
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return o.shift(e.x, e.y).scale(c);
        }
        let mut map: BTreeMap<Exp2, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = Exp2::new(ea.x + eb.x, ea.y + eb.y);
                let t = ca * cb;
                match map.get_mut(&e) {
                    Some(v) => *v += t,
                    None => {
                        map.insert(e, t);
                    }
                }
            }
        }
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `X ↦ x`, `Y ↦ y` in a field; `None` when a negative power
    /// of a zero value is needed.
    pub fn eval<K: Field>(&self, x: &K, y: &K) -> Option<K> {
        if self.is_zero() {
            return Some(K::zero());
        }
        let mut acc = K::zero();
        let x_inv = x.inv();
        let y_inv = y.inv();
        let pw = |base: &K, inv: &Option<K>, k: i32| -> Option<K> {
            if k >= 0 {
                Some(base.powu(k as u32))
            } else {
                inv.as_ref().map(|i| i.powu((-k) as u32))
            }
        };
        for (e, c) in &self.terms {
            let t = K::from_rational(c) * pw(x, &x_inv, e.x)? * pw(y, &y_inv, e.y)?;
            acc = acc + t;
        }
        Some(acc)
    }

    /// Sign of the graded-lex leading coefficient.
    pub fn leading_is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn xy(c: i64, x: i32, y: i32) -> LaurentPoly {
        LaurentPoly::monomial(rat(c), x, y)
    }

    #[test]
    fn eta_expands_to_four_terms() {
        // (X^2 + Y^2)(X^4 - Y^4)
        let a = xy(1, 2, 0).add(&xy(1, 0, 2));
        let b = xy(1, 4, 0).sub(&xy(1, 0, 4));
        let eta = a.mul(&b);
        let expected = LaurentPoly::from_terms([
            (Exp2::new(6, 0), rat(1)),
            (Exp2::new(4, 2), rat(1)),
            (Exp2::new(2, 4), rat(-1)),
            (Exp2::new(0, 6), rat(-1)),
        ]);
        assert_eq!(eta, expected);
        assert_eq!(eta.len(), 4);
    }

    #[test]
    fn graded_lex_order() {
        let mut v = vec![Exp2::new(0, 3), Exp2::new(2, 0), Exp2::new(1, 1), Exp2::new(-1, 0)];
        v.sort();
        assert_eq!(
            v,
            vec![Exp2::new(-1, 0), Exp2::new(1, 1), Exp2::new(2, 0), Exp2::new(0, 3)]
        );
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = xy(1, 1, 0).add(&xy(1, 0, 1));
        let b = a.sub(&xy(1, 0, 1));
        assert_eq!(b, xy(1, 1, 0));
        assert!(a.sub(&a).is_zero());
    }
}
