//! Seeded random generation of scalars, algebra elements and module
//! vectors for randomized checks.

use num_traits::Zero;
use rand::Rng;

use crate::algebra::{AlgebraElement, PbwMonomial};
use crate::rep_oracle::{BMonomial, BPolynomial};
use crate::ring::{rat2, Field, Rational, Ring};
use crate::scalars::{LaurentPoly, Scalar};

/// A nonzero rational with small numerator and denominator.
pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let n = rng.gen_range(-6..=6);
        if n != 0 {
            return rat2(n, rng.gen_range(1..=4));
        }
    }
}

fn laurent<R: Rng + ?Sized>(rng: &mut R, max_terms: usize, lo: i32, hi: i32) -> LaurentPoly {
    let n = rng.gen_range(1..=max_terms);
    LaurentPoly::from_terms((0..n).map(|_| {
        let x = rng.gen_range(lo..=hi);
        let y = rng.gen_range(lo..=hi);
        (crate::scalars::Exp2 { x, y }, rational(rng))
    }))
}

/// A nonzero element of `Q(X, Y)`; about a third have a nontrivial
/// denominator.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let num = laurent(rng, 3, -2, 2);
        let s = if rng.gen_ratio(1, 3) {
            let den = laurent(rng, 2, 0, 2);
            if den.is_zero() {
                continue;
            }
            Scalar::new(num, den).expect("nonzero denominator")
        } else {
            Scalar::from_poly(num)
        };
        if !s.is_zero() {
            return s;
        }
    }
}

/// Bounds for random PBW monomials.
#[derive(Clone, Copy, Debug)]
pub struct MonomialBounds {
    /// Maximum `f` and `e` exponent.
    pub max_fe: u32,
    /// Maximum absolute doubled Cartan exponent.
    pub max_cartan2: i32,
    /// Allow odd doubled Cartan exponents.
    pub half: bool,
}

impl Default for MonomialBounds {
    fn default() -> Self {
        MonomialBounds {
            max_fe: 3,
            max_cartan2: 4,
            half: true,
        }
    }
}

pub fn monomial<R: Rng + ?Sized>(rng: &mut R, b: &MonomialBounds) -> PbwMonomial {
    let cartan = |rng: &mut R| {
        let v = rng.gen_range(-b.max_cartan2..=b.max_cartan2);
        if b.half || v % 2 == 0 {
            v
        } else {
            v - v.signum()
        }
    };
    let w2 = cartan(rng);
    let wp2 = cartan(rng);
    PbwMonomial::new(rng.gen_range(0..=b.max_fe), rng.gen_range(0..=b.max_fe), w2, wp2)
}

/// Up to `max_terms` random terms with coefficients from `coeff`.
pub fn element<K, R, C>(rng: &mut R, max_terms: usize, b: &MonomialBounds, mut coeff: C) -> AlgebraElement<K>
where
    K: Ring,
    R: Rng + ?Sized,
    C: FnMut(&mut R) -> K,
{
    let n = rng.gen_range(1..=max_terms);
    AlgebraElement::from_terms((0..n).map(|_| (monomial(rng, b), coeff(rng))).collect::<Vec<_>>())
}

/// Like [`element`] but never zero.
pub fn nonzero_element<K, R, C>(rng: &mut R, max_terms: usize, b: &MonomialBounds, mut coeff: C) -> AlgebraElement<K>
where
    K: Ring,
    R: Rng + ?Sized,
    C: FnMut(&mut R) -> K,
{
    loop {
        let x = element(rng, max_terms, b, &mut coeff);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A module vector with at most 5 terms, `X, Y` exponents in `[0, 4]` and
/// `Z, W` exponents in `[-3, 3]`.
pub fn bpolynomial<K, R, C>(rng: &mut R, mut coeff: C) -> BPolynomial<K>
where
    K: Field,
    R: Rng + ?Sized,
    C: FnMut(&mut R) -> K,
{
    let n = rng.gen_range(1..=5);
    BPolynomial::from_terms(
        (0..n)
            .map(|_| (bmonomial(rng), coeff(rng)))
            .collect::<Vec<_>>(),
    )
}

pub fn bmonomial<R: Rng + ?Sized>(rng: &mut R) -> BMonomial {
    BMonomial::new(
        rng.gen_range(0..=4),
        rng.gen_range(0..=4),
        rng.gen_range(-3..=3),
        rng.gen_range(-3..=3),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn deterministic_and_bounded() {
        let b = MonomialBounds {
            max_fe: 2,
            max_cartan2: 3,
            half: false,
        };
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x: AlgebraElement<Rational> = element(&mut r1, 4, &b, rational);
            let y: AlgebraElement<Rational> = element(&mut r2, 4, &b, rational);
            assert_eq!(x, y);
            assert!(x.monomials().all(|m| m.f <= 2 && m.e <= 2 && !m.has_half_exponent()));
        }
        for _ in 0..20 {
            assert!(!scalar(&mut r1).is_zero());
        }
    }
}
