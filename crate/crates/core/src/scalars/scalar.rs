//! Rational functions in `X = r^{1/4}`, `Y = s^{1/4}`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::{exact_div, gcd};
use super::laurent::{Exp2, LaurentPoly};
use crate::error::{Error, Result};
use crate::ring::{parse_rational, Field, Rational, Ring};

/// An element of Q(X, Y) in canonical form.
///
/// The denominator is a polynomial divisible by neither `X` nor `Y`, with
/// graded-lex leading coefficient 1 and no common factor with the
/// numerator. Monomial factors live in the (Laurent) numerator. Canonical
/// form makes structural equality field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    /// Builds `num / den` and canonicalizes.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidScalar);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn monomial(c: Rational, x: i32, y: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, x, y))
    }

    /// `X^i Y^j`.
    pub fn xy(i: i32, j: i32) -> Self {
        Self::monomial(Rational::one(), i, j)
    }

    pub fn x() -> Self {
        Self::xy(1, 0)
    }

    pub fn y() -> Self {
        Self::xy(0, 1)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Recomputes the canonical form from scratch.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (dx, dy) = den.min_exps();
        let mut num = num.shift(-dx, -dy);
        let mut den = den.shift(-dx, -dy);
        if den.is_constant() {
            let c = den.leading_coeff();
            return Self::from_poly(num.scale(&c.recip()));
        }
        let g = gcd_laurent(&num, &den);
        if !g.is_one() {
            num = div_laurent(&num, &g);
            den = exact_div(&den, &g).expect("gcd divides denominator");
        }
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { num, den }
    }

    pub fn inv_checked(&self) -> Result<Self> {
        self.inv().ok_or(Error::InvalidScalar)
    }

    /// Evaluates under `X ↦ x`, `Y ↦ y`.
    pub fn specialize<K: Field>(&self, x: &K, y: &K) -> Result<K> {
        let n = self.num.eval(x, y).ok_or(Error::VanishingDenominator)?;
        let d = self.den.eval(x, y).ok_or(Error::VanishingDenominator)?;
        if d.is_zero() {
            return Err(Error::VanishingDenominator);
        }
        Ok(n * d.inv().expect("nonzero"))
    }

    /// Rational value when the scalar is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            if self.den.is_one() {
                return Self::from_poly(n);
            }
            return Self::canonical(n, self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            if n.is_zero() {
                return Self::zero();
            }
            return Scalar {
                num: n,
                den: self.den.mul(&o.den),
            };
        }
        let b1 = exact_div(&self.den, &g).expect("gcd divides");
        let d1 = exact_div(&o.den, &g).expect("gcd divides");
        let t = self.num.mul(&d1).add(&o.num.mul(&b1));
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = gcd_laurent(&t, &g);
        let num = div_laurent(&t, &g2);
        let den = b1.mul(&exact_div(&o.den, &g2).expect("gcd divides"));
        if den.is_constant() {
            return Self::from_poly(num.scale(&den.leading_coeff().recip()));
        }
        Scalar { num, den }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        let g1 = gcd_laurent(&self.num, &o.den);
        let g2 = gcd_laurent(&o.num, &self.den);
        let a = div_laurent(&self.num, &g1);
        let c = div_laurent(&o.num, &g2);
        let b = exact_div(&self.den, &g2).expect("gcd divides");
        let d = exact_div(&o.den, &g1).expect("gcd divides");
        let den = b.mul(&d);
        if den.is_constant() {
            return Self::from_poly(a.mul(&c).scale(&den.leading_coeff().recip()));
        }
        Scalar {
            num: a.mul(&c),
            den,
        }
    }

    /// Text form in `r`, `s`, `sqrt_r`, `sqrt_s` (and `X`, `Y` for odd
    /// quarter powers), readable by the expression parser.
    pub fn render(&self) -> String {
        let num = if self.num.is_monomial() {
            render_monomial(&self.num.terms()[0].0, &self.num.terms()[0].1)
        } else {
            format!("({})", render_poly(&self.num))
        };
        if self.den.is_one() {
            return num;
        }
        let den = format!("({})^-1", render_poly(&self.den));
        if self.num.is_one() {
            den
        } else {
            format!("{num}*{den}")
        }
    }
}

/// Gcd of a Laurent numerator with a canonical denominator.
fn gcd_laurent(num: &LaurentPoly, den: &LaurentPoly) -> LaurentPoly {
    if den.is_one() || num.is_monomial() {
        return LaurentPoly::one();
    }
    let (mx, my) = num.min_exps();
    gcd(&num.shift(-mx, -my), den)
}

fn div_laurent(num: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if g.is_one() {
        return num.clone();
    }
    let (mx, my) = num.min_exps();
    exact_div(&num.shift(-mx, -my), g)
        .expect("gcd divides numerator")
        .shift(mx, my)
}

fn var_power(out: &mut Vec<String>, e: i32, quarter: &str, half: &str, whole: &str) {
    if e == 0 {
        return;
    }
    let (name, k) = if e % 4 == 0 {
        (whole, e / 4)
    } else if e % 2 == 0 {
        (half, e / 2)
    } else {
        (quarter, e)
    };
    if k == 1 {
        out.push(name.to_string());
    } else {
        out.push(format!("{name}^{k}"));
    }
}

fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Monomial with signed coefficient, e.g. `-3/2*r*sqrt_s^-1`.
fn render_monomial(e: &Exp2, c: &Rational) -> String {
    let mut parts = Vec::new();
    var_power(&mut parts, e.x, "X", "sqrt_r", "r");
    var_power(&mut parts, e.y, "Y", "sqrt_s", "s");
    let vars = parts.join("*");
    if vars.is_empty() {
        return render_rational(c);
    }
    if c.is_one() {
        vars
    } else if (-c).is_one() {
        format!("-{vars}")
    } else {
        format!("{}*{vars}", render_rational(c))
    }
}

/// Polynomial without spaces, terms in descending graded-lex order.
fn render_poly(p: &LaurentPoly) -> String {
    let mut s = String::new();
    for (i, (e, c)) in p.terms().iter().rev().enumerate() {
        if i > 0 && !c.is_negative() {
            s.push('+');
        }
        s.push_str(&render_monomial(e, c));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.render())
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        self.add_ref(&o)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_ref(o)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        self.add_ref(&-o)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.add_ref(&-o.clone())
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.mul_ref(&o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_ref(o)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Ring for Scalar {
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(q.clone()))
    }

    fn looks_negative(&self) -> bool {
        self.num.leading_is_negative()
    }

    fn powu(&self, n: u32) -> Self {
        if self.num.is_monomial() && self.den.is_one() {
            let (e, c) = &self.num.terms()[0];
            let n32 = n as i32;
            return Self::monomial(num_traits::pow(c.clone(), n as usize), e.x * n32, e.y * n32);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::canonical(self.den.clone(), self.num.clone()))
    }
}

type JsonTerm = (i32, i32, String);

#[derive(Serialize, Deserialize)]
struct ScalarJson {
    num: Vec<JsonTerm>,
    den: Vec<JsonTerm>,
}

fn poly_to_json(p: &LaurentPoly) -> Vec<JsonTerm> {
    p.terms()
        .iter()
        .map(|(e, c)| (e.x, e.y, c.to_string()))
        .collect()
}

fn poly_from_json(v: &[JsonTerm]) -> Option<LaurentPoly> {
    let mut terms = Vec::with_capacity(v.len());
    for (x, y, c) in v {
        terms.push((Exp2::new(*x, *y), parse_rational(c)?));
    }
    Some(LaurentPoly::from_terms(terms))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarJson {
            num: poly_to_json(&self.num),
            den: poly_to_json(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ScalarJson::deserialize(d)?;
        let num = poly_from_json(&j.num).ok_or_else(|| D::Error::custom("bad rational"))?;
        let den = poly_from_json(&j.den).ok_or_else(|| D::Error::custom("bad rational"))?;
        Scalar::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat2};

    fn r() -> Scalar {
        Scalar::xy(4, 0)
    }

    fn s() -> Scalar {
        Scalar::xy(0, 4)
    }

    #[test]
    fn inverse_of_difference() {
        let d = r() - s();
        assert_eq!(d.clone() * d.inv().unwrap(), Scalar::one());
        assert_eq!(Scalar::zero().inv(), None);
    }

    #[test]
    fn canonical_denominator() {
        // (X^2 - Y^2) / (2 X^3 - 2 X Y^2) = 1 / (2X)
        let num = LaurentPoly::monomial(rat(1), 2, 0).sub(&LaurentPoly::monomial(rat(1), 0, 2));
        let den = LaurentPoly::monomial(rat(2), 3, 0).sub(&LaurentPoly::monomial(rat(2), 1, 2));
        let a = Scalar::new(num, den).unwrap();
        assert_eq!(a, Scalar::monomial(rat2(1, 2), -1, 0));
        assert!(a.is_polynomial());
        assert_eq!(a.canonicalize(), a);
    }

    #[test]
    fn sums_over_common_factors() {
        let d = r() - s();
        let e = Scalar::xy(2, 0) + Scalar::xy(0, 2);
        let a = d.inv().unwrap();
        let b = (d.clone() * e.clone()).inv().unwrap();
        let sum = a.clone() + b.clone();
        let expected = (e.clone() + Scalar::one()) * (d * e).inv().unwrap();
        assert_eq!(sum, expected);
        assert!((sum - expected).is_zero());
    }

    #[test]
    fn render_forms() {
        let d = r() - s();
        assert_eq!(d.render(), "(r-s)");
        assert_eq!(d.inv().unwrap().render(), "(r-s)^-1");
        assert_eq!(Scalar::monomial(rat2(-3, 2), 2, -4).render(), "-3/2*sqrt_r*s^-1");
        assert_eq!(Scalar::xy(1, 3).render(), "X*Y^3");
    }

    #[test]
    fn json_round_trip() {
        let a = (r() + Scalar::from_i64(3)) * (r() - s()).inv().unwrap();
        let j = serde_json::to_string(&a).unwrap();
        let b: Scalar = serde_json::from_str(&j).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<Scalar>(r#"{"num":[[0,0,"1"]],"den":[]}"#).is_err());
    }

    #[test]
    fn specialize_rationals() {
        let a = (r() + s()) * (r() - s()).inv().unwrap();
        let v: Rational = a.specialize(&rat(2), &rat(1)).unwrap();
        assert_eq!(v, rat2(17, 15));
        let one = rat(1);
        assert!(matches!(
            a.specialize(&one, &one),
            Err(Error::VanishingDenominator)
        ));
    }
}
