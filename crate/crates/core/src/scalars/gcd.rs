//! Greatest common divisors and exact division in Q[X, Y].
//!
//! Polynomials are viewed recursively as elements of Q[X][Y]; the gcd is
//! content times the primitive part of a primitive pseudo-remainder
//! sequence. Inputs must have non-negative exponents.

use num_traits::{One, Zero};

use super::laurent::{Exp2, LaurentPoly};
use super::upoly::UPoly;
use crate::ring::Rational;

type Rec = Vec<UPoly>;

fn to_rec(p: &LaurentPoly) -> Rec {
    debug_assert!(p.is_polynomial());
    let (mx, my) = p.max_exps();
    if p.is_zero() {
        return Vec::new();
    }
    let mut rec = vec![UPoly(vec![Rational::zero(); mx as usize + 1]); my as usize + 1];
    for (e, c) in p.terms() {
        rec[e.y as usize].0[e.x as usize] = c.clone();
    }
    rec.into_iter().map(UPoly::trimmed).collect::<Vec<_>>()
}

fn from_rec(r: &[UPoly]) -> LaurentPoly {
    LaurentPoly::from_terms(r.iter().enumerate().flat_map(|(j, u)| {
        u.0.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (Exp2::new(i as i32, j as i32), c.clone()))
    }))
}

fn trim(mut r: Rec) -> Rec {
    while r.last().is_some_and(|u| u.is_zero()) {
        r.pop();
    }
    r
}

fn content(r: &[UPoly]) -> UPoly {
    let mut g = UPoly::zero();
    for u in r {
        if u.is_zero() {
            continue;
        }
        g = if g.is_zero() { u.monic() } else { g.gcd(u) };
        if g.deg() == Some(0) {
            break;
        }
    }
    g
}

fn div_by_upoly(r: &[UPoly], c: &UPoly) -> Rec {
    r.iter()
        .map(|u| u.exact_div(c).expect("content divides every coefficient"))
        .collect()
}

fn primitive(r: Rec) -> Rec {
    let c = content(&r);
    if c.is_zero() || c.deg() == Some(0) {
        r
    } else {
        div_by_upoly(&r, &c)
    }
}

/// Pseudo-remainder of `a` by `b` (both nonzero) w.r.t. Y.
fn prem(a: &[UPoly], b: &[UPoly]) -> Rec {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Rec = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let k = dr - db;
        for u in r.iter_mut() {
            *u = u.mul(lb);
        }
        for (j, bj) in b.iter().enumerate() {
            let t = bj.mul(&lr);
            r[j + k] = r[j + k].sub(&t);
        }
        debug_assert!(r[dr].is_zero());
        r = trim(r);
    }
    r
}

/// Exact quotient `a / b` in Q[X, Y], or `None` if `b` does not divide `a`.
pub(crate) fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    assert!(!b.is_zero(), "exact division by zero");
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    if b.is_monomial() {
        let (e, c) = &b.terms()[0];
        let q = a.shift(-e.x, -e.y).scale(&c.recip());
        return q.is_polynomial().then_some(q);
    }
    let (ax, ay) = a.max_exps();
    let (bx, by) = b.max_exps();
    if bx > ax || by > ay {
        return None;
    }
    let bb = to_rec(b);
    let db = bb.len() - 1;
    let lb = &bb[db];
    let mut r = to_rec(a);
    let mut q: Rec = vec![UPoly::zero(); r.len().saturating_sub(db).max(1)];
    while !r.is_empty() {
        if r.len() - 1 < db {
            return None;
        }
        let k = r.len() - 1 - db;
        let c = r[r.len() - 1].exact_div(lb)?;
        for (j, bj) in bb.iter().enumerate() {
            r[j + k] = r[j + k].sub(&bj.mul(&c));
        }
        q[k] = q[k].add(&c);
        r = trim(r);
    }
    Some(from_rec(&trim(q)))
}

fn normalize(p: LaurentPoly) -> LaurentPoly {
    let lc = p.leading_coeff();
    if lc.is_zero() || lc.is_one() {
        p
    } else {
        p.scale(&lc.recip())
    }
}

/// Gcd of two polynomials, normalized to graded-lex leading coefficient 1.
pub(crate) fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize(b.clone());
    }
    if b.is_zero() {
        return normalize(a.clone());
    }
    let (ax, ay) = a.min_exps();
    let (bx, by) = b.min_exps();
    let (gx, gy) = (ax.min(bx), ay.min(by));
    let mono = LaurentPoly::monomial(Rational::one(), gx, gy);
    let a = a.shift(-ax, -ay);
    let b = b.shift(-bx, -by);
    if a.is_constant() || b.is_constant() || coprime_by_specialization(&a, &b) {
        return mono;
    }
    let core = if let Some(_q) = exact_div(&a, &b) {
        b
    } else if let Some(_q) = exact_div(&b, &a) {
        a
    } else {
        prs_gcd(&a, &b)
    };
    normalize(core.mul(&mono))
}

/// The Mersenne prime `2^61 - 1`.
const PRIME: u64 = (1 << 61) - 1;
const SAMPLE_POINTS: [u64; 4] = [2, 3, 5, 7];

fn mul_mod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(PRIME)) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, PRIME - 2)
}

fn rational_mod(c: &Rational) -> Option<u64> {
    let p = num_bigint::BigInt::from(PRIME);
    let reduce = |v: &num_bigint::BigInt| -> u64 {
        let r = ((v % &p) + &p) % &p;
        u64::try_from(r).expect("reduced below the prime")
    };
    let d = reduce(c.denom());
    (d != 0).then(|| mul_mod(reduce(c.numer()), inv_mod(d)))
}

fn trim_mod(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Degree of the gcd over `F_p` of two nonzero dense polynomials.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    while !b.is_empty() {
        let lb_inv = inv_mod(*b.last().expect("nonzero"));
        while a.len() >= b.len() {
            let k = a.len() - b.len();
            let f = mul_mod(*a.last().expect("nonzero"), lb_inv);
            for (j, bj) in b.iter().enumerate() {
                a[j + k] = (a[j + k] + PRIME - mul_mod(f, *bj)) % PRIME;
            }
            a = trim_mod(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// `p(X, t)` (or `p(t, Y)` when `in_y`) reduced mod the prime.
fn specialize_mod(p: &LaurentPoly, t: u64, in_y: bool) -> Option<Vec<u64>> {
    let (mx, my) = p.max_exps();
    let mut v = vec![0u64; if in_y { my } else { mx } as usize + 1];
    for (e, c) in p.terms() {
        let (keep, drop) = if in_y { (e.y, e.x) } else { (e.x, e.y) };
        let term = mul_mod(rational_mod(c)?, pow_mod(t, drop as u64));
        v[keep as usize] = (v[keep as usize] + term) % PRIME;
    }
    Some(trim_mod(v))
}

/// Sufficient test for `gcd(a, b) = 1` in `Q[X, Y]`. When `a(X, t)` keeps
/// its `X`-degree mod `p`, `deg_X gcd(a, b)` is at most the degree of the
/// gcd of the reductions; degree zero in both variables forces a constant.
fn coprime_by_specialization(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    [false, true].into_iter().all(|in_y| {
        let full = |p: &LaurentPoly| {
            let (mx, my) = p.max_exps();
            (if in_y { my } else { mx }) as usize
        };
        let (da, db) = (full(a), full(b));
        if da == 0 || db == 0 {
            return true;
        }
        SAMPLE_POINTS.iter().any(|&t| {
            let (Some(sa), Some(sb)) = (specialize_mod(a, t, in_y), specialize_mod(b, t, in_y)) else {
                return false;
            };
            let kept = sa.len() == da + 1 || sb.len() == db + 1;
            kept && !sa.is_empty() && !sb.is_empty() && gcd_degree_mod(sa, sb) == 0
        })
    })
}

fn prs_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let ra = to_rec(a);
    let rb = to_rec(b);
    let ca = content(&ra);
    let cb = content(&rb);
    let cont = ca.gcd(&cb);
    let mut p = primitive(div_by_upoly(&ra, &ca));
    let mut q = primitive(div_by_upoly(&rb, &cb));
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    while q.len() > 1 {
        let r = prem(&p, &q);
        if r.is_empty() {
            break;
        }
        p = q;
        q = primitive(r);
    }
    let g = if q.len() == 1 {
        // q is a nonzero element of Q[X] that is primitive, i.e. a unit.
        vec![UPoly::constant(Rational::one())]
    } else {
        q
    };
    let g: Rec = g.iter().map(|u| u.mul(&cont)).collect();
    from_rec(&g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn m(c: i64, x: i32, y: i32) -> LaurentPoly {
        LaurentPoly::monomial(rat(c), x, y)
    }

    #[test]
    fn gcd_of_products() {
        let f1 = m(1, 4, 0).sub(&m(1, 0, 4)); // r - s
        let f2 = m(1, 1, 0).add(&m(2, 0, 1)).add(&m(1, 0, 0));
        let f3 = m(3, 2, 1).sub(&m(1, 0, 3));
        let a = f1.mul(&f2).mul(&f2);
        let b = f1.mul(&f2).mul(&f3);
        let g = gcd(&a, &b);
        assert_eq!(g, normalize(f1.mul(&f2)));
    }

    #[test]
    fn coprime_and_monomial_parts() {
        let a = m(1, 1, 0).add(&m(1, 0, 1)).mul(&m(1, 2, 1));
        let b = m(1, 1, 0).sub(&m(1, 0, 1)).mul(&m(1, 1, 3));
        assert_eq!(gcd(&a, &b), m(1, 1, 1));
    }

    #[test]
    fn exact_division() {
        let a = m(1, 4, 0).sub(&m(1, 0, 4));
        let b = m(1, 1, 0).sub(&m(1, 0, 1));
        let q = exact_div(&a, &b).unwrap();
        assert_eq!(q.mul(&b), a);
        assert!(exact_div(&b, &a).is_none());
        assert!(exact_div(&a.add(&m(1, 0, 0)), &b).is_none());
    }
}
