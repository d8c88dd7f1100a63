//! Distinguished central and supercentral elements and the closed formulas
//! built from them.
//!
//! Conventions: `b = r^{1/4} ω^{1/2}`, `v = s^{-1/4} ω'^{-1/2}`, `q' = -q`,
//! `t = r^{-1/2} s^{1/2}`.

use crate::algebra::{Algebra, AlgebraElement, PbwMonomial};
use crate::error::{Error, Result};
use crate::ring::Field;

type El<K> = AlgebraElement<K>;

/// `c̃ = r^{1/2} ω - s^{1/2} ω' - η f e`.
pub fn scasimir<K: Field>(alg: &Algebra<K>) -> El<K> {
    let p = alg.params();
    El::from_terms([
        (PbwMonomial::cartan(2, 0), p.sqrt_r.clone()),
        (PbwMonomial::cartan(0, 2), -p.sqrt_s.clone()),
        (PbwMonomial::new(1, 1, 0, 0), -p.eta.clone()),
    ])
}

/// `b = r^{1/4} ω^{1/2}`.
pub fn b_elem<K: Field>(alg: &Algebra<K>) -> El<K> {
    El::term(PbwMonomial::cartan(1, 0), alg.params().x.clone())
}

/// `v = s^{-1/4} ω'^{-1/2}`.
pub fn v_elem<K: Field>(alg: &Algebra<K>) -> El<K> {
    El::term(PbwMonomial::cartan(0, -1), alg.params().y_pow(-1))
}

/// `b^{-1} v c̃ = (rs)^{-1/4} (ωω')^{-1/2} c̃`, the element written
/// `u - u^{-1}`.
pub fn reduced_scasimir<K: Field>(alg: &Algebra<K>) -> El<K> {
    let p = alg.params();
    let k = El::term(PbwMonomial::cartan(-1, -1), (p.x.clone() * p.y.clone()).inv().expect("nonzero"));
    alg.mul(&k, &scasimir(alg))
}

/// `C = (rs)^{-1/2} (ωω')^{-1} c̃^2`.
pub fn casimir<K: Field>(alg: &Algebra<K>) -> El<K> {
    let c = scasimir(alg);
    let p = alg.params();
    let k = El::term(PbwMonomial::cartan(-2, -2), (p.sqrt_r.clone() * p.sqrt_s.clone()).inv().expect("nonzero"));
    alg.mul(&k, &alg.mul(&c, &c))
}

/// `C + 2 = D_2(b^{-1} v c̃, -1)`.
pub fn casimir_shifted<K: Field>(alg: &Algebra<K>) -> El<K> {
    casimir(alg) + El::scalar(K::from_i64(2))
}

/// `ε(m)`: `1` for `m ≡ 0, 1`, `-1` for `m ≡ 2, 3 (mod 4)`.
pub fn epsilon(m: u64) -> i64 {
    if m % 4 < 2 {
        1
    } else {
        -1
    }
}

/// `(t^m + (-1)^{m-1}) / (t + 1)` expanded as `Σ_{k<m} (-1)^{m-1-k} t^k`.
pub(crate) fn signed_geometric<K: Field>(t: &K, m: u32) -> K {
    let mut acc = K::zero();
    let mut pw = K::one();
    for k in 0..m {
        let term = if (m - 1 - k).is_multiple_of(2) { pw.clone() } else { -pw.clone() };
        acc = acc + term;
        pw = pw * t.clone();
    }
    acc
}

/// `t = r^{-1/2} s^{1/2}`.
pub fn t_param<K: Field>(alg: &Algebra<K>) -> K {
    let p = alg.params();
    p.sqrt_s.clone() * p.sqrt_r.inv().expect("nonzero")
}

/// `Q_-(m) = (t^m + (-1)^{m-1}) / (t + 1)`.
pub fn q_minus<K: Field>(alg: &Algebra<K>, m: u32) -> K {
    signed_geometric(&t_param(alg), m)
}

/// `Q_+(m)`, the image of `Q_-(m)` under `r ↔ s`.
pub fn q_plus<K: Field>(alg: &Algebra<K>, m: u32) -> K {
    signed_geometric(&t_param(alg).inv().expect("nonzero"), m)
}

/// `α_m(i) = (ω t^i Q_-(m) - ω' t^{-i} Q_+(m)) / (r - s)`.
pub fn alpha<K: Field>(alg: &Algebra<K>, m: u32, i: u32) -> El<K> {
    let p = alg.params();
    let t = t_param(alg);
    let ti = t.powu(i);
    let a = ti.clone() * q_minus(alg, m) * p.inv_r_minus_s.clone();
    let b = ti.inv().expect("nonzero") * q_plus(alg, m) * p.inv_r_minus_s.clone();
    El::from_terms([(PbwMonomial::cartan(2, 0), a), (PbwMonomial::cartan(0, 2), -b)])
}

/// `Z(ω, ω'; p, q; t)`: signed sum over `0 ≤ i_1 ≤ … ≤ i_t ≤ min(p,q) - t`
/// of `α_{max-t+1}(i_1) ⋯ α_{max}(i_t)`.
pub fn big_z<K: Field>(alg: &Algebra<K>, p: u32, q: u32, t: u32) -> Result<El<K>> {
    let (lo, hi) = (p.min(q), p.max(q));
    if t > lo {
        return Err(Error::IndexOutOfRange { t, bound: lo });
    }
    if t == 0 {
        return Ok(alg.one());
    }
    let top = lo - t;
    // alphas[k][i] = α_{hi-t+1+k}(i)
    let alphas: Vec<Vec<El<K>>> = (0..t)
        .map(|k| (0..=top).map(|i| alpha(alg, hi - t + 1 + k, i)).collect())
        .collect();
    let mut out = El::zero();
    let mut stack: Vec<(u32, u32, u32, El<K>)> = vec![(0, 0, 0, alg.one())];
    // (depth, minimum index, running index sum, prefix product)
    while let Some((depth, start, sum, prefix)) = stack.pop() {
        if depth == t {
            let exp = (t * top) as i64 - sum as i64;
            let term = if exp.rem_euclid(2) == 0 { prefix } else { -prefix };
            out = out + term;
            continue;
        }
        for i in start..=top {
            let next = alg.mul(&prefix, &alphas[depth as usize][i as usize]);
            stack.push((depth + 1, i, sum + i, next));
        }
    }
    Ok(out)
}

/// `e^p f^q` in normal form via
/// `Σ_t (-1)^{(p-t)(q-t)} f^{q-t} Z(ω, ω'; p, q; t) e^{p-t}`, the Cartan
/// part of each summand commuted rightward past `e^{p-t}`.
pub fn reorder_ep_fq<K: Field>(alg: &Algebra<K>, p: u32, q: u32) -> El<K> {
    let mut out = El::zero();
    for t in 0..=p.min(q) {
        let z = big_z(alg, p, q, t).expect("t within range");
        let sign_neg = ((p - t) * (q - t)) % 2 == 1;
        for (m, c) in z.iter() {
            let shift = alg.q_half_pow(((m.w2 - m.wp2) as i64) * (p - t) as i64);
            let c = c.clone() * shift;
            out.add_term(
                PbwMonomial::new(q - t, p - t, m.w2, m.wp2),
                if sign_neg { -c } else { c },
            );
        }
    }
    out
}

pub(crate) fn closed_block<K: Field>(alg: &Algebra<K>, p: u32, q: u32) -> El<K> {
    reorder_ep_fq(alg, p, q)
}

fn geometric<K: Field>(x: &K, m: u32) -> K {
    let mut acc = K::zero();
    let mut pw = K::one();
    for _ in 0..m {
        acc = acc + pw.clone();
        pw = pw * x.clone();
    }
    acc
}

/// Both sides of `f^m e + (-1)^{m-1} e f^m
/// = f^{m-1} ((q'^{-m}-1)/(q'^{-1}-1) ω - (q'^m-1)/(q'-1) ω') / (r - s)`.
pub fn lemma22_left<K: Field>(alg: &Algebra<K>, m: u32) -> (El<K>, El<K>) {
    assert!(m >= 1);
    let p = alg.params();
    let fm = alg.pow(&alg.f(), m);
    let e = alg.e();
    let sign = if (m - 1).is_multiple_of(2) { K::one() } else { -K::one() };
    let lhs = alg.mul(&fm, &e) + alg.mul(&e, &fm).scale(&sign);
    let qp = p.qp();
    let a = geometric(&qp.inv().expect("nonzero"), m);
    let b = geometric(&qp, m);
    let rhs = El::from_terms([
        (PbwMonomial::new(m - 1, 0, 2, 0), a * p.inv_r_minus_s.clone()),
        (PbwMonomial::new(m - 1, 0, 0, 2), -(b * p.inv_r_minus_s.clone())),
    ]);
    (lhs, rhs)
}

/// Both sides of `e^m f + (-1)^{m-1} f e^m
/// = e^{m-1} ((q'^m-1)/(q'-1) ω - (q'^{-m}-1)/(q'^{-1}-1) ω') / (r - s)`.
pub fn lemma22_right<K: Field>(alg: &Algebra<K>, m: u32) -> (El<K>, El<K>) {
    assert!(m >= 1);
    let p = alg.params();
    let em = alg.pow(&alg.e(), m);
    let f = alg.f();
    let sign = if (m - 1).is_multiple_of(2) { K::one() } else { -K::one() };
    let lhs = alg.mul(&em, &f) + alg.mul(&f, &em).scale(&sign);
    let qp = p.qp();
    let a = geometric(&qp, m);
    let b = geometric(&qp.inv().expect("nonzero"), m);
    let rhs = El::from_terms([
        (PbwMonomial::new(0, m - 1, 2, 0), a * p.inv_r_minus_s.clone()),
        (PbwMonomial::new(0, m - 1, 0, 2), -(b * p.inv_r_minus_s.clone())),
    ]);
    (lhs, rhs)
}

/// The factor `c̃ - q'^n r^{1/2} ω + q'^{-n} s^{1/2} ω'`.
pub fn prod_factor<K: Field>(alg: &Algebra<K>, n: u32) -> El<K> {
    let p = alg.params();
    let qp = p.qp();
    let qn = qp.powu(n);
    let qn_inv = qn.inv().expect("nonzero");
    scasimir(alg)
        - El::from_terms([
            (PbwMonomial::cartan(2, 0), qn * p.sqrt_r.clone()),
            (PbwMonomial::cartan(0, 2), -(qn_inv * p.sqrt_s.clone())),
        ])
}

/// Both sides of `Π_{n=0}^{m-1} (c̃ - q'^n r^{1/2} ω + q'^{-n} s^{1/2} ω')
/// = ε(m) (-η)^m f^m e^m`, the product taken left to right.
pub fn prod_formula<K: Field>(alg: &Algebra<K>, m: u32) -> (El<K>, El<K>) {
    let factors: Vec<El<K>> = (0..m).map(|n| prod_factor(alg, n)).collect();
    let lhs = alg.product(&factors);
    (lhs, prod_formula_rhs(alg, m))
}

/// `ε(m) (-η)^m f^m e^m`.
pub fn prod_formula_rhs<K: Field>(alg: &Algebra<K>, m: u32) -> El<K> {
    let p = alg.params();
    let c = K::from_i64(epsilon(m as u64)) * (-p.eta.clone()).powu(m);
    El::term(PbwMonomial::new(m, m, 0, 0), c)
}

/// `e^L`.
pub fn big_e<K: Field>(l: u32) -> El<K> {
    El::monomial(PbwMonomial::new(0, l, 0, 0))
}

/// `f^L`.
pub fn big_f<K: Field>(l: u32) -> El<K> {
    El::monomial(PbwMonomial::new(l, 0, 0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Params, Strategy};
    use crate::ring::{rat, Rational, Ring};
    use crate::scalars::Scalar;
    use num_traits::{One, Zero};

    fn generic() -> Algebra<Scalar> {
        Algebra::new(Params::generic())
    }

    #[test]
    fn scasimir_is_supercentral() {
        let a = generic();
        let c = scasimir(&a);
        assert_eq!(c.len(), 3);
        assert!(a.is_supercentral(&c));
        assert!(!a.is_central(&c));
        assert!(a.is_central(&casimir(&a)));
    }

    #[test]
    fn epsilon_values_and_sign_lemma() {
        assert_eq!([epsilon(0), epsilon(1), epsilon(2), epsilon(3)], [1, 1, -1, -1]);
        for t in 1..=100u64 {
            let sign = if t % 2 == 0 { 1 } else { -1 };
            assert_eq!(sign * epsilon(t) * epsilon(t + 1), 1);
        }
    }

    #[test]
    fn q_minus_small_values() {
        let a = generic();
        let t = t_param(&a);
        assert!(q_minus(&a, 0).is_zero());
        assert_eq!(q_minus(&a, 1), Scalar::one());
        assert_eq!(q_minus(&a, 2), t.clone() - Scalar::one());
        // (t^3 + 1) / (t + 1)
        let direct = (t.powu(3) + Scalar::one()) * (t.clone() + Scalar::one()).inv().unwrap();
        assert_eq!(q_minus(&a, 3), direct);
    }

    #[test]
    fn alpha_one_is_anticommutator() {
        let a = generic();
        assert_eq!(alpha(&a, 1, 0), a.anticommutator(&a.e(), &a.f()));
        assert_eq!(big_z(&a, 1, 1, 1).unwrap(), alpha(&a, 1, 0));
        assert_eq!(big_z(&a, 3, 2, 0).unwrap(), a.one());
        assert!(big_z(&a, 1, 2, 2).is_err());
    }

    #[test]
    fn closed_reordering_matches_kernel() {
        let a = Algebra::new(Params::new(rat(2), rat(5)).unwrap());
        for p in 0..=4 {
            for q in 0..=4 {
                let naive = a.mul(&a.pow(&a.e(), p), &a.pow(&a.f(), q));
                assert_eq!(reorder_ep_fq(&a, p, q), naive, "p={p} q={q}");
            }
        }
        let closed = Algebra::with_strategy(Params::new(rat(2), rat(5)).unwrap(), Strategy::ClosedForm);
        let x = closed.mul(&closed.pow(&closed.e(), 3), &closed.pow(&closed.f(), 2));
        assert_eq!(x, a.mul(&a.pow(&a.e(), 3), &a.pow(&a.f(), 2)));
    }

    #[test]
    fn lemma22_and_product_small() {
        let a = generic();
        for m in 1..=3 {
            let (l, r) = lemma22_left(&a, m);
            assert_eq!(l, r);
            let (l, r) = lemma22_right(&a, m);
            assert_eq!(l, r);
            let (l, r) = prod_formula(&a, m);
            assert_eq!(l, r);
        }
    }

    #[test]
    fn rational_params_product_formula() {
        let a: Algebra<Rational> = Algebra::new(Params::new(rat(3), rat(2)).unwrap());
        let (l, r) = prod_formula(&a, 4);
        assert_eq!(l, r);
    }
}
