use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::element::AlgebraElement;
use super::monomial::{Generator, PbwMonomial};
use super::params::Params;
use crate::error::{Error, Result};
use crate::ring::Field;

/// How `e^p f^q` blocks are brought to normal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Repeated single swaps `ef = -fe + (ω - ω')/(r - s)`.
    #[default]
    Naive,
    /// The closed expansion in terms of `Z(ω, ω'; p, q; t)`.
    ClosedForm,
}

type Block<K> = Arc<AlgebraElement<K>>;

/// The algebra over a fixed parameter choice. Multiplication memoizes the
/// normal forms of `e^p f^q`; caches never change results.
pub struct Algebra<K> {
    params: Params<K>,
    strategy: Strategy,
    blocks: Mutex<HashMap<(u32, u32), Block<K>>>,
    q_half_pows: Mutex<HashMap<i64, K>>,
}

impl<K: Field> Algebra<K> {
    pub fn new(params: Params<K>) -> Self {
        Self::with_strategy(params, Strategy::Naive)
    }

    pub fn with_strategy(params: Params<K>, strategy: Strategy) -> Self {
        Algebra {
            params,
            strategy,
            blocks: Mutex::new(HashMap::new()),
            q_half_pows: Mutex::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> &Params<K> {
        &self.params
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn one(&self) -> AlgebraElement<K> {
        AlgebraElement::one()
    }

    pub fn gen(&self, g: Generator) -> AlgebraElement<K> {
        AlgebraElement::generator(g)
    }

    pub fn scalar(&self, c: K) -> AlgebraElement<K> {
        AlgebraElement::scalar(c)
    }

    pub fn e(&self) -> AlgebraElement<K> {
        self.gen(Generator::E)
    }

    pub fn f(&self) -> AlgebraElement<K> {
        self.gen(Generator::F)
    }

    pub fn w(&self) -> AlgebraElement<K> {
        self.gen(Generator::W)
    }

    pub fn wp(&self) -> AlgebraElement<K> {
        self.gen(Generator::Wp)
    }

    /// `ω^{w2/2} ω'^{wp2/2}`.
    pub fn cartan(&self, w2: i32, wp2: i32) -> AlgebraElement<K> {
        AlgebraElement::monomial(PbwMonomial::cartan(w2, wp2))
    }

    /// `q^{k/2}`, cached.
    pub fn q_half_pow(&self, k: i64) -> K {
        if k == 0 {
            return K::one();
        }
        if let Some(v) = self.q_half_pows.lock().unwrap().get(&k) {
            return v.clone();
        }
        let v = self.params.q_half_pow(k);
        self.q_half_pows.lock().unwrap().insert(k, v.clone());
        v
    }

    /// Normal form of `e^p f^q`.
    pub fn block(&self, p: u32, q: u32) -> Block<K> {
        if let Some(b) = self.blocks.lock().unwrap().get(&(p, q)) {
            return b.clone();
        }
        let value = if p == 0 || q == 0 {
            AlgebraElement::monomial(PbwMonomial::new(q, p, 0, 0))
        } else {
            match self.strategy {
                Strategy::Naive => self.naive_block(p, q),
                Strategy::ClosedForm => crate::central::closed_block(self, p, q),
            }
        };
        let value = Arc::new(value);
        self.blocks.lock().unwrap().insert((p, q), value.clone());
        value
    }

    fn naive_block(&self, p: u32, q: u32) -> AlgebraElement<K> {
        if p == 1 {
            // e f^q = -f (e f^{q-1}) + (r-s)^{-1} (ω - ω') f^{q-1}
            let prev = self.block(1, q - 1);
            let mut out = AlgebraElement::zero();
            for (m, c) in prev.iter() {
                out.add_term(PbwMonomial::new(m.f + 1, m.e, m.w2, m.wp2), -c.clone());
            }
            let k = (q - 1) as i64;
            let inv = &self.params.inv_r_minus_s;
            out.add_term(
                PbwMonomial::new(q - 1, 0, 2, 0),
                inv.clone() * self.q_half_pow(-2 * k),
            );
            out.add_term(
                PbwMonomial::new(q - 1, 0, 0, 2),
                -(inv.clone() * self.q_half_pow(2 * k)),
            );
            return out;
        }
        let prev = self.block(p - 1, q);
        let mut out = AlgebraElement::zero();
        for (m, c) in prev.iter() {
            self.e_times_monomial(m, c, &mut out);
        }
        out
    }

    /// Accumulates `c · e · m` into `out`.
    fn e_times_monomial(&self, m: &PbwMonomial, c: &K, out: &mut AlgebraElement<K>) {
        if m.f == 0 {
            out.add_term(PbwMonomial::new(0, m.e + 1, m.w2, m.wp2), c.clone());
            return;
        }
        let ef = self.block(1, m.f);
        for (t, d) in ef.iter() {
            // t = f^i e^j K3; K3 moves past e^{m.e}
            let factor = self.q_half_pow(((t.w2 - t.wp2) as i64) * m.e as i64);
            out.add_term(
                PbwMonomial::new(t.f, t.e + m.e, t.w2 + m.w2, t.wp2 + m.wp2),
                c.clone() * d.clone() * factor,
            );
        }
    }

    /// Accumulates `c · m1 · m2` into `out`.
    fn mul_monomials(&self, m1: &PbwMonomial, m2: &PbwMonomial, c: K, out: &mut AlgebraElement<K>) {
        // ω^{w2/2} ω'^{wp2/2} f^a e^b = q^{(w2-wp2)(b-a)/2} f^a e^b ω^{w2/2} ω'^{wp2/2}
        let swap = self.q_half_pow(((m1.w2 - m1.wp2) as i64) * (m2.e as i64 - m2.f as i64));
        let c = c * swap;
        let (w2, wp2) = (m1.w2 + m2.w2, m1.wp2 + m2.wp2);
        if m1.e == 0 || m2.f == 0 {
            out.add_term(PbwMonomial::new(m1.f + m2.f, m1.e + m2.e, w2, wp2), c);
            return;
        }
        let block = self.block(m1.e, m2.f);
        for (t, d) in block.iter() {
            let factor = self.q_half_pow(((t.w2 - t.wp2) as i64) * m2.e as i64);
            out.add_term(
                PbwMonomial::new(m1.f + t.f, t.e + m2.e, t.w2 + w2, t.wp2 + wp2),
                c.clone() * d.clone() * factor,
            );
        }
    }

    pub fn mul(&self, x: &AlgebraElement<K>, y: &AlgebraElement<K>) -> AlgebraElement<K> {
        let mut out = AlgebraElement::zero();
        for (m1, c1) in x.iter() {
            for (m2, c2) in y.iter() {
                self.mul_monomials(m1, m2, c1.clone() * c2.clone(), &mut out);
            }
        }
        out
    }

    /// Left-to-right product; the empty product is `1`.
    pub fn product<'a, I>(&self, factors: I) -> AlgebraElement<K>
    where
        I: IntoIterator<Item = &'a AlgebraElement<K>>,
    {
        factors
            .into_iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &AlgebraElement<K>, n: u32) -> AlgebraElement<K> {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Inverse of `c · ω^{a/2} ω'^{b/2}`; `None` for anything else.
    pub fn inverse(&self, x: &AlgebraElement<K>) -> Option<AlgebraElement<K>> {
        if x.len() != 1 {
            return None;
        }
        let (m, c) = x.leading().ok()?;
        if !m.is_cartan() {
            return None;
        }
        Some(AlgebraElement::term(PbwMonomial::cartan(-m.w2, -m.wp2), c.inv()?))
    }

    /// `x^n` for any integer `n`, negative powers requiring [`Self::inverse`].
    pub fn powi(&self, x: &AlgebraElement<K>, n: i64) -> Result<AlgebraElement<K>> {
        if n >= 0 {
            return Ok(self.pow(x, n as u32));
        }
        let inv = self
            .inverse(x)
            .ok_or_else(|| Error::NegativePower(format!("{n}")))?;
        Ok(self.pow(&inv, (-n) as u32))
    }

    pub fn commutator(&self, x: &AlgebraElement<K>, y: &AlgebraElement<K>) -> AlgebraElement<K> {
        self.mul(x, y) - self.mul(y, x)
    }

    pub fn anticommutator(&self, x: &AlgebraElement<K>, y: &AlgebraElement<K>) -> AlgebraElement<K> {
        self.mul(x, y) + self.mul(y, x)
    }

    /// `xy - (-1)^{|x||y|} yx` for homogeneous operands.
    pub fn super_commutator(
        &self,
        x: &AlgebraElement<K>,
        y: &AlgebraElement<K>,
    ) -> Result<AlgebraElement<K>> {
        let a = x.degree().bit().ok_or(Error::NonHomogeneous)?;
        let b = y.degree().bit().ok_or(Error::NonHomogeneous)?;
        Ok(if a * b == 1 {
            self.anticommutator(x, y)
        } else {
            self.commutator(x, y)
        })
    }

    /// Commutes with `e`, `f`, `ω`, `ω'`.
    pub fn is_central(&self, x: &AlgebraElement<K>) -> bool {
        [Generator::W, Generator::Wp, Generator::E, Generator::F]
            .into_iter()
            .all(|g| self.commutator(x, &self.gen(g)).is_zero())
    }

    /// Commutes with `ω`, `ω'` and anticommutes with `e`, `f`.
    pub fn is_supercentral(&self, x: &AlgebraElement<K>) -> bool {
        [Generator::W, Generator::Wp]
            .into_iter()
            .all(|g| self.commutator(x, &self.gen(g)).is_zero())
            && [Generator::E, Generator::F]
                .into_iter()
                .all(|g| self.anticommutator(x, &self.gen(g)).is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Rational};
    use crate::scalars::Scalar;
    use num_traits::One;

    fn rational_algebra() -> Algebra<Rational> {
        Algebra::new(Params::new(rat(2), rat(3)).unwrap())
    }

    #[test]
    fn ef_relation() {
        let a = rational_algebra();
        let p = a.params().clone();
        let ef = a.mul(&a.e(), &a.f());
        let expected = AlgebraElement::term(PbwMonomial::new(1, 1, 0, 0), -Rational::one())
            + a.w().scale(&p.inv_r_minus_s)
            - a.wp().scale(&p.inv_r_minus_s);
        assert_eq!(ef, expected);
    }

    #[test]
    fn cartan_conjugation() {
        let a = Algebra::new(Params::<Scalar>::generic());
        let q = a.params().q.clone();
        let we = a.mul(&a.w(), &a.e());
        assert_eq!(we, a.mul(&a.e(), &a.w()).scale(&q));
        let wf = a.mul(&a.w(), &a.f());
        assert_eq!(wf, a.mul(&a.f(), &a.w()).scale(&a.params().q_inv));
        assert!(a.commutator(&a.w(), &a.wp()).is_zero());
    }

    #[test]
    fn associativity_on_small_words() {
        let a = rational_algebra();
        let x = a.mul(&a.e(), &a.e()) + a.f();
        let y = a.mul(&a.f(), &a.w()) + a.cartan(1, -1);
        let z = a.mul(&a.e(), &a.wp()) + a.mul(&a.f(), &a.f());
        assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }

    #[test]
    fn super_commutator_signs() {
        let a = rational_algebra();
        let e = a.e();
        assert_eq!(a.super_commutator(&e, &e).unwrap(), a.mul(&e, &e).scale(&rat(2)));
        let mixed = &e + &a.mul(&a.f(), &e);
        assert_eq!(a.super_commutator(&mixed, &e), Err(Error::NonHomogeneous));
    }

    #[test]
    fn inverses() {
        let a = rational_algebra();
        let w = a.w();
        assert_eq!(a.mul(&w, &a.powi(&w, -1).unwrap()), a.one());
        assert!(a.powi(&a.e(), -1).is_err());
    }
}
