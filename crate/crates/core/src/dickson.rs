//! Dickson polynomials of the first kind, the `T` and `R` families, and
//! truncated generating-function checks.
//!
//! `D_0 = 2`, `D_1 = u`, `D_{m+2} = u D_{m+1} - a D_m`;
//! `Σ D_m z^m = (2 - uz) / (1 - uz + a z^2)`;
//! `Σ T_m(C) z^m = (2 - Cz) / (1 - Cz + z^2)`;
//! `Σ R_m(C) z^m = (1 + z) / (1 - Cz + z^2)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, AlgebraElement};
use crate::central::reduced_scasimir;
use crate::ring::{Field, Rational, Ring};
use crate::scalars::Gaussian;

/// Laurent polynomial in one variable with coefficients in `R`.
#[derive(Clone, PartialEq)]
pub struct UPolynomial<R> {
    coeffs: BTreeMap<i32, R>,
}

impl<R: Ring> UPolynomial<R> {
    pub fn monomial(c: R, k: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        UPolynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_coeffs<I: IntoIterator<Item = (i32, R)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, k: i32, c: R) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
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

    pub fn coeff(&self, k: i32) -> R {
        self.coeffs.get(&k).cloned().unwrap_or_else(R::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &R)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn is_polynomial(&self) -> bool {
        self.low_degree().is_none_or(|k| k >= 0)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(k, a)| (*k, a.clone() * c.clone())))
    }

    pub fn map<S: Ring, F: Fn(&R) -> S>(&self, f: F) -> UPolynomial<S> {
        UPolynomial::from_coeffs(self.coeffs.iter().map(|(k, c)| (*k, f(c))))
    }

    /// Substitutes a ring element for the variable; only nonnegative
    /// exponents are allowed. Horner evaluation with injected operations.
    pub fn eval_with<T, M, A, C>(&self, x: &T, mul: M, add: A, embed: C) -> T
    where
        M: Fn(&T, &T) -> T,
        A: Fn(T, T) -> T,
        C: Fn(&R) -> T,
    {
        assert!(self.is_polynomial(), "cannot substitute into negative powers");
        let deg = self.degree().unwrap_or(0);
        let mut acc = embed(&self.coeff(deg));
        for k in (0..deg).rev() {
            acc = add(mul(&acc, x), embed(&self.coeff(k)));
        }
        acc
    }

    /// Composition `p(s(u))` for a Laurent `s`; `p` must be a polynomial.
    pub fn compose(&self, s: &Self) -> Self {
        self.eval_with(s, |a, b| a.clone() * b.clone(), |a, b| a + b, |c| {
            Self::constant(c.clone())
        })
    }

    /// `u ↦ c·u`.
    pub fn rescale_var(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(k, a)| {
            let f = if *k >= 0 {
                c.powu(*k as u32)
            } else {
                panic!("rescaling needs nonnegative exponents")
            };
            (*k, a.clone() * f)
        }))
    }
}

impl<R: Ring> fmt::Debug for UPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter()).finish()
    }
}

impl<R: Ring> Zero for UPolynomial<R> {
    fn zero() -> Self {
        UPolynomial {
            coeffs: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for UPolynomial<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Add for UPolynomial<R> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (k, c) in o.coeffs {
            self.add_term(k, c);
        }
        self
    }
}

impl<R: Ring> Sub for UPolynomial<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring> Neg for UPolynomial<R> {
    type Output = Self;
    fn neg(self) -> Self {
        UPolynomial {
            coeffs: self.coeffs.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<R: Ring> Mul for UPolynomial<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &o.coeffs {
                out.add_term(i + j, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<R: Ring> Ring for UPolynomial<R> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }
}

/// Power series in `z` truncated after `z^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeriesTrunc<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeriesTrunc<R> {
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        PowerSeriesTrunc { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order);
        let c = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Self::new(self.order, c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.order, o.order);
        let n = self.order;
        let mut c = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(n + 1 - i).enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(n, c)
    }

    /// Inverse of a series with constant term `1`; `None` otherwise.
    pub fn inverse_unit(&self) -> Option<Self> {
        if self.coeffs[0] != R::one() {
            return None;
        }
        let n = self.order;
        let mut b = vec![R::zero(); n + 1];
        b[0] = R::one();
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * b[k - j].clone();
            }
            b[k] = -acc;
        }
        Some(Self::new(n, b))
    }
}

/// `m/(m-i) · C(m-i, i)` as an integer.
fn dickson_coeff(m: u32, i: u32) -> BigInt {
    let mut binom = BigInt::one();
    for k in 0..i {
        binom = binom * BigInt::from(m - i - k) / BigInt::from(k + 1);
    }
    binom * BigInt::from(m) / BigInt::from(m - i)
}

/// `D_n(u, a)` from the explicit sum.
pub fn dickson_closed<R: Ring>(n: u32, a: &R) -> UPolynomial<R> {
    if n == 0 {
        return UPolynomial::constant(R::from_i64(2));
    }
    let neg_a = -a.clone();
    UPolynomial::from_coeffs((0..=n / 2).map(|i| {
        let c = R::from_rational(&Rational::from_integer(dickson_coeff(n, i)));
        ((n - 2 * i) as i32, c * neg_a.powu(i))
    }))
}

/// `D_n(u, a)` from the three-term recursion.
pub fn dickson_rec<R: Ring>(n: u32, a: &R) -> UPolynomial<R> {
    dickson_rec_all(n, a).pop().expect("nonempty")
}

/// `[D_0, …, D_n]`.
pub fn dickson_rec_all<R: Ring>(n: u32, a: &R) -> Vec<UPolynomial<R>> {
    let u = UPolynomial::<R>::var();
    let mut out = vec![UPolynomial::constant(R::from_i64(2))];
    if n >= 1 {
        out.push(u.clone());
    }
    for m in 2..=n as usize {
        let next = u.clone() * out[m - 1].clone() - out[m - 2].scale(a);
        out.push(next);
    }
    out
}

/// `[T_0, …, T_n]` as polynomials in `C`.
pub fn t_polys<R: Ring>(n: u32) -> Vec<UPolynomial<R>> {
    three_term(n, R::from_i64(2), UPolynomial::var())
}

/// `[R_0, …, R_n]` as polynomials in `C`.
pub fn r_polys<R: Ring>(n: u32) -> Vec<UPolynomial<R>> {
    three_term(n, R::one(), UPolynomial::var() + UPolynomial::one())
}

pub fn t_poly<R: Ring>(m: u32) -> UPolynomial<R> {
    t_polys(m).pop().expect("nonempty")
}

pub fn r_poly<R: Ring>(m: u32) -> UPolynomial<R> {
    r_polys(m).pop().expect("nonempty")
}

/// `P_0 = c0`, `P_1 = p1`, `P_{m+2} = C P_{m+1} - P_m`.
fn three_term<R: Ring>(n: u32, c0: R, p1: UPolynomial<R>) -> Vec<UPolynomial<R>> {
    let c = UPolynomial::<R>::var();
    let mut out = vec![UPolynomial::constant(c0)];
    if n >= 1 {
        out.push(p1);
    }
    for m in 2..=n as usize {
        let next = c.clone() * out[m - 1].clone() - out[m - 2].clone();
        out.push(next);
    }
    out
}

/// Truncation of `num / den` with `den(0) = 1`, coefficients in `R`.
pub fn rational_series<R: Ring>(num: &[R], den: &[R], order: usize) -> PowerSeriesTrunc<R> {
    let n = PowerSeriesTrunc::new(order, num.to_vec());
    let d = PowerSeriesTrunc::new(order, den.to_vec());
    n.mul(&d.inverse_unit().expect("denominator has constant term 1"))
}

/// Truncated `(2 - uz) / (1 - uz + a z^2)` compared with `Σ_{m ≤ N} D_m z^m`.
pub fn gen_func_check_d<R: Ring>(a: &R, order: usize) -> bool {
    let u = UPolynomial::<R>::var();
    let two = UPolynomial::constant(R::from_i64(2));
    let series = rational_series(
        &[two, -u.clone()],
        &[UPolynomial::one(), -u, UPolynomial::constant(a.clone())],
        order,
    );
    let d = dickson_rec_all(order as u32, a);
    series.coeffs().iter().zip(&d).all(|(s, p)| s == p)
}

/// Truncated `(2 - Cz) / (1 - Cz + z^2)` compared with `T_m`.
pub fn t_series_check<R: Ring>(order: usize) -> bool {
    let c = UPolynomial::<R>::var();
    let series = rational_series(
        &[UPolynomial::constant(R::from_i64(2)), -c.clone()],
        &[UPolynomial::one(), -c, UPolynomial::one()],
        order,
    );
    series.coeffs() == t_polys::<R>(order as u32).as_slice()
}

/// Truncated `(1 + z) / (1 - Cz + z^2)` compared with `R_m`.
pub fn r_series_check<R: Ring>(order: usize) -> bool {
    let c = UPolynomial::<R>::var();
    let series = rational_series(
        &[UPolynomial::one(), UPolynomial::one()],
        &[UPolynomial::one(), -c, UPolynomial::one()],
        order,
    );
    series.coeffs() == r_polys::<R>(order as u32).as_slice()
}

/// `u - u^{-1}` in the Laurent ring.
pub fn u_minus_inv<R: Ring>() -> UPolynomial<R> {
    UPolynomial::var() - UPolynomial::monomial(R::one(), -1)
}

/// `u^n + (-u^{-1})^n`.
pub fn u_sum_power<R: Ring>(n: u32) -> UPolynomial<R> {
    let sign = if n.is_multiple_of(2) { R::one() } else { -R::one() };
    UPolynomial::monomial(R::one(), n as i32) + UPolynomial::monomial(sign, -(n as i32))
}

/// `D_n(u - u^{-1}, -1) = u^n + (-u^{-1})^n`.
pub fn dickson_laurent_check<R: Ring>(n: u32) -> bool {
    let d = dickson_rec(n, &-R::one());
    d.compose(&u_minus_inv()) == u_sum_power(n)
}

/// `D_{2m}(u - u^{-1}, -1) = T_m(u^2 + u^{-2})` and
/// `D_{2m+1}(u - u^{-1}, -1) = (u - u^{-1}) R_m(u^2 + u^{-2})`.
pub fn dickson_even_odd_check<R: Ring>(m: u32) -> (bool, bool) {
    let w = u_minus_inv::<R>();
    let c = UPolynomial::monomial(R::one(), 2) + UPolynomial::monomial(R::one(), -2);
    let minus_one = -R::one();
    let even = dickson_rec(2 * m, &minus_one).compose(&w) == t_poly::<R>(m).compose(&c);
    let odd = dickson_rec(2 * m + 1, &minus_one).compose(&w) == w.clone() * r_poly::<R>(m).compose(&c);
    (even, odd)
}

/// Substitutes an algebra element into a polynomial with scalar
/// coefficients.
pub fn eval_in_algebra<K: Field>(
    p: &UPolynomial<K>,
    alg: &Algebra<K>,
    x: &AlgebraElement<K>,
) -> AlgebraElement<K> {
    let Some(deg) = p.degree() else {
        return AlgebraElement::zero();
    };
    assert!(p.is_polynomial(), "cannot substitute into negative powers");
    let mut acc = AlgebraElement::scalar(p.coeff(deg));
    for k in (0..deg).rev() {
        acc = alg.mul(&acc, x) + AlgebraElement::scalar(p.coeff(k));
    }
    acc
}

/// `D_n(b^{-1} v c̃, -1)` in the algebra.
pub fn dickson_of_scasimir<K: Field>(alg: &Algebra<K>, n: u32) -> AlgebraElement<K> {
    let w = reduced_scasimir(alg);
    eval_in_algebra(&dickson_rec(n, &-K::one()), alg, &w)
}

/// Outcome of comparing `D_m(iu, -1)` with `i^k T_m(u, 1)` (and the
/// companion `T_m(iu, 1)` against `i^k D_m(u, -1)`), where `T_m(·, 1)` is
/// `D_m(·, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ITwist {
    pub m: u32,
    /// Factor `i` as printed.
    pub factor_i: bool,
    /// Factor `i^m`.
    pub factor_i_pow_m: bool,
    pub companion_factor_i: bool,
    pub companion_factor_i_pow_m: bool,
}

/// Checks both `i`-twist relations over `Q(i)[u]`.
pub fn i_twist_check(m: u32) -> ITwist {
    type G = Gaussian<Rational>;
    let i = G::i();
    let im = i.powu(m);
    let d_minus = dickson_rec(m, &-G::one());
    let d_plus = dickson_rec(m, &G::one());
    let lhs = d_minus.rescale_var(&i);
    let lhs2 = d_plus.rescale_var(&i);
    ITwist {
        m,
        factor_i: lhs == d_plus.scale(&i),
        factor_i_pow_m: lhs == d_plus.scale(&im),
        companion_factor_i: lhs2 == d_minus.scale(&i),
        companion_factor_i_pow_m: lhs2 == d_minus.scale(&im),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    type P = UPolynomial<Rational>;

    fn poly(v: &[(i32, i64)]) -> P {
        P::from_coeffs(v.iter().map(|&(k, c)| (k, rat(c))))
    }

    #[test]
    fn small_dickson_values() {
        let a = rat(7);
        assert_eq!(dickson_closed(0, &a), poly(&[(0, 2)]));
        assert_eq!(dickson_closed(1, &a), poly(&[(1, 1)]));
        assert_eq!(dickson_closed(3, &a), poly(&[(3, 1), (1, -21)]));
        assert_eq!(dickson_rec(2, &a), poly(&[(2, 1), (0, -14)]));
        assert_eq!(dickson_rec(4, &rat(-1)), poly(&[(4, 1), (2, 4), (0, 2)]));
    }

    #[test]
    fn closed_equals_recursion() {
        for a in [rat(1), rat(-1), rat(3)] {
            for n in 0..=20 {
                assert_eq!(dickson_closed(n, &a), dickson_rec(n, &a), "n={n}");
            }
        }
    }

    #[test]
    fn chebyshev_fixed_point() {
        for n in 0..=20 {
            let d = dickson_rec(n, &rat(1));
            let v = d.eval_with(&rat(2), |a, b| a * b, |a, b| a + b, |c| c.clone());
            assert_eq!(v, rat(2));
        }
    }

    #[test]
    fn generating_functions() {
        assert!(gen_func_check_d(&rat(-1), 20));
        assert!(gen_func_check_d(&rat(1), 20));
        assert!(gen_func_check_d(&rat(1), 0));
        assert!(t_series_check::<Rational>(20));
        assert!(r_series_check::<Rational>(20));
        assert_eq!(t_poly::<Rational>(1), poly(&[(1, 1)]));
        assert_eq!(r_poly::<Rational>(1), poly(&[(1, 1), (0, 1)]));
        assert_eq!(r_poly::<Rational>(2), poly(&[(2, 1), (1, 1), (0, -1)]));
    }

    #[test]
    fn laurent_identities() {
        for n in 0..=20 {
            assert!(dickson_laurent_check::<Rational>(n));
        }
        for m in 0..=8 {
            assert_eq!(dickson_even_odd_check::<Rational>(m), (true, true));
        }
    }

    #[test]
    fn twist_factor_is_power() {
        let t0 = i_twist_check(0);
        assert!(t0.factor_i_pow_m && !t0.factor_i);
        let t1 = i_twist_check(1);
        assert!(t1.factor_i && t1.factor_i_pow_m);
        for m in 2..=8 {
            let t = i_twist_check(m);
            assert!(t.factor_i_pow_m && t.companion_factor_i_pow_m, "m={m}");
            assert_eq!(t.factor_i, m % 4 == 1, "m={m}");
        }
    }
}
