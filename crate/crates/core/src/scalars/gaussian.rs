//! Adjoining `i` with `i^2 = -1` to a coefficient field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{Field, Rational, Ring};

/// `re + im·i` over `K`. A field whenever `-1` is not a square in `K`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian<K> {
    pub re: K,
    pub im: K,
}

impl<K: Ring> Gaussian<K> {
    pub fn new(re: K, im: K) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: K) -> Self {
        Gaussian { re, im: K::zero() }
    }

    pub fn i() -> Self {
        Gaussian {
            re: K::zero(),
            im: K::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Gaussian {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl<K: Ring + fmt::Display> fmt::Display for Gaussian<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})*i", self.im),
            (false, false) => write!(f, "({}) + ({})*i", self.re, self.im),
        }
    }
}

impl<K: Ring> fmt::Debug for Gaussian<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gaussian({:?}, {:?})", self.re, self.im)
    }
}

impl<K: Ring> Zero for Gaussian<K> {
    fn zero() -> Self {
        Self::real(K::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<K: Ring> One for Gaussian<K> {
    fn one() -> Self {
        Self::real(K::one())
    }
}

impl<K: Ring> Add for Gaussian<K> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Gaussian::new(self.re + o.re, self.im + o.im)
    }
}

impl<K: Ring> Sub for Gaussian<K> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Gaussian::new(self.re - o.re, self.im - o.im)
    }
}

impl<K: Ring> Neg for Gaussian<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian::new(-self.re, -self.im)
    }
}

impl<K: Ring> Mul for Gaussian<K> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.im.is_zero() {
            return Gaussian::new(self.re.clone() * o.re, self.re * o.im);
        }
        if o.im.is_zero() {
            return Gaussian::new(self.re * o.re.clone(), self.im * o.re);
        }
        let re = self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone();
        let im = self.re * o.im + self.im * o.re;
        Gaussian::new(re, im)
    }
}

impl<K: Ring> Ring for Gaussian<K> {
    fn from_rational(q: &Rational) -> Self {
        Self::real(K::from_rational(q))
    }

    fn looks_negative(&self) -> bool {
        if self.re.is_zero() {
            self.im.looks_negative()
        } else {
            self.re.looks_negative()
        }
    }
}

impl<K: Field> Field for Gaussian<K> {
    fn inv(&self) -> Option<Self> {
        let norm = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        let n_inv = norm.inv()?;
        Some(Gaussian::new(
            self.re.clone() * n_inv.clone(),
            -self.im.clone() * n_inv,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    type G = Gaussian<Rational>;

    #[test]
    fn unit_squares_to_minus_one() {
        assert_eq!(G::i() * G::i(), G::from_i64(-1));
        assert_eq!(G::i().powu(4), G::one());
    }

    #[test]
    fn inverse() {
        let z = G::new(rat(3), rat(4));
        assert_eq!(z.clone() * z.inv().unwrap(), G::one());
        assert_eq!(z.clone() * z.conj(), G::from_i64(25));
    }
}
