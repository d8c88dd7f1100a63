//! Checks over the generic parameter field.

use num_traits::One;
use ospkernel_core::algebra::{Algebra, AlgebraElement, Generator, PbwMonomial, Strategy};
use ospkernel_core::central::{
    alpha, casimir, epsilon, lemma22_left, lemma22_right, prod_formula, reorder_ep_fq, scasimir,
};
use ospkernel_core::dickson::{
    dickson_closed, dickson_even_odd_check, dickson_laurent_check, dickson_of_scasimir, dickson_rec,
    eval_in_algebra, gen_func_check_d, i_twist_check, r_series_check, t_poly, t_series_check,
};
use ospkernel_core::rep_oracle::{BMonomial, BPolynomial, RepOracle};
use ospkernel_core::sampling::{self, MonomialBounds};
use ospkernel_core::{Field, GenericAlgebra, GenericElement, Rational, Ring, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::check::{element_json, equal, resolve, vanishes, Check, Resolution};

pub fn generic_algebra() -> GenericAlgebra {
    Algebra::new(ospkernel_core::algebra::Params::generic())
}

type El = GenericElement;

fn conj(alg: &GenericAlgebra, g: &El, x: &El) -> El {
    let inv = alg.inverse(g).expect("Cartan generator is invertible");
    alg.mul(&alg.mul(g, x), &inv)
}

/// `ωω' = ω'ω` and `ω^{±1}`, `ω'^{±1}` are mutually inverse.
pub fn eq2_1(alg: &GenericAlgebra) -> Check {
    let (w, wp) = (alg.w(), alg.wp());
    let wi = alg.gen(Generator::WInv);
    let wpi = alg.gen(Generator::WpInv);
    let one = alg.one();
    Check::all([
        ("w*wp = wp*w".to_string(), vanishes(&alg.commutator(&w, &wp))),
        ("w*w^-1 = 1".to_string(), equal(&alg.mul(&w, &wi), &one)),
        ("w^-1*w = 1".to_string(), equal(&alg.mul(&wi, &w), &one)),
        ("wp*wp^-1 = 1".to_string(), equal(&alg.mul(&wp, &wpi), &one)),
        ("wp^-1*wp = 1".to_string(), equal(&alg.mul(&wpi, &wp), &one)),
    ])
}

/// `ω x ω^{-1} = q^{a} x`, `ω' x ω'^{-1} = q^{-a} x` with `a = 1` for `e`
/// and `a = -1` for `f`.
pub fn conjugation(alg: &GenericAlgebra, x: Generator) -> Check {
    let p = alg.params();
    let g = alg.gen(x);
    let (qa, qa_inv) = match x {
        Generator::E => (p.q.clone(), p.q_inv.clone()),
        _ => (p.q_inv.clone(), p.q.clone()),
    };
    Check::all([
        ("omega".to_string(), equal(&conj(alg, &alg.w(), &g), &g.scale(&qa))),
        ("omega'".to_string(), equal(&conj(alg, &alg.wp(), &g), &g.scale(&qa_inv))),
    ])
}

/// `ef + fe = (ω - ω') / (r - s)`.
pub fn eq2_4(alg: &GenericAlgebra) -> Check {
    let lhs = alg.anticommutator(&alg.e(), &alg.f());
    let rhs = (alg.w() - alg.wp()).scale(&alg.params().inv_r_minus_s);
    equal(&lhs, &rhs)
}

fn bpoly_json<K: Field + Serialize>(p: &BPolynomial<K>) -> serde_json::Value {
    json!(p
        .terms()
        .map(|(m, c)| json!({"x": m.a, "y": m.b, "z": m.c, "w": m.d, "coeff": c}))
        .collect::<Vec<_>>())
}

/// Defining relations for the operators on `count` random basis monomials.
pub fn rep_relations(count: usize, seed: u64) -> Check {
    let alg = generic_algebra();
    let o = RepOracle::new(alg.params().clone());
    let p = o.params().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let m = sampling::bmonomial(&mut rng);
        let v = BPolynomial::monomial(m, Scalar::one());
        let w = |x: &BPolynomial<Scalar>| o.act_omega(x);
        let wi = |x: &BPolynomial<Scalar>| o.act_omega_inv(x);
        let wp = |x: &BPolynomial<Scalar>| o.act_omega_prime(x);
        let wpi = |x: &BPolynomial<Scalar>| o.act_omega_prime_inv(x);
        let e = |x: &BPolynomial<Scalar>| o.act_e(x);
        let f = |x: &BPolynomial<Scalar>| o.act_f(x);
        let checks: [(&str, BPolynomial<Scalar>, BPolynomial<Scalar>); 8] = [
            ("omega omega' = omega' omega", w(&wp(&v)), wp(&w(&v))),
            ("omega omega^-1 = 1", w(&wi(&v)), v.clone()),
            ("omega' omega'^-1 = 1", wp(&wpi(&v)), v.clone()),
            ("omega E omega^-1 = qE", w(&e(&wi(&v))), e(&v).scale(&p.q)),
            ("omega' E omega'^-1 = q^-1 E", wp(&e(&wpi(&v))), e(&v).scale(&p.q_inv)),
            ("omega F omega^-1 = q^-1 F", w(&f(&wi(&v))), f(&v).scale(&p.q_inv)),
            ("omega' F omega'^-1 = q F", wp(&f(&wpi(&v))), f(&v).scale(&p.q)),
            (
                "EF + FE = (omega - omega')/(r - s)",
                e(&f(&v)) + f(&e(&v)),
                (w(&v) - wp(&v)).scale(&p.inv_r_minus_s),
            ),
        ];
        for (label, lhs, rhs) in checks {
            if lhs != rhs {
                return Check::fail(json!({
                    "relation": label,
                    "monomial": m.to_string(),
                    "difference": bpoly_json(&(lhs - rhs)),
                }));
            }
        }
    }
    Check::pass()
}

/// `(2.5)` for `left`, `(2.6)` otherwise.
pub fn lemma22(alg: &GenericAlgebra, m: u32, left: bool) -> Check {
    let (lhs, rhs) = if left { lemma22_left(alg, m) } else { lemma22_right(alg, m) };
    equal(&lhs, &rhs)
}

pub fn prop2_1(alg: &GenericAlgebra) -> Check {
    let c = scasimir(alg);
    Check::from_bool(alg.is_supercentral(&c), || {
        json!({
            "[sc, w]": element_json(&alg.commutator(&c, &alg.w())),
            "[sc, wp]": element_json(&alg.commutator(&c, &alg.wp())),
            "{sc, e}": element_json(&alg.anticommutator(&c, &alg.e())),
            "{sc, f}": element_json(&alg.anticommutator(&c, &alg.f())),
        })
    })
}

/// `fω = -q'ωf`, `fω' = -q'^{-1}ω'f`, `fc̃ = -c̃f`.
pub fn prop2_3_commutation(alg: &GenericAlgebra) -> Check {
    let p = alg.params();
    let (f, w, wp, c) = (alg.f(), alg.w(), alg.wp(), scasimir(alg));
    let qp = p.qp();
    let qp_inv = qp.inv().expect("nonzero");
    Check::all([
        (
            "f w = -q' w f".to_string(),
            equal(&alg.mul(&f, &w), &alg.mul(&w, &f).scale(&-qp)),
        ),
        (
            "f wp = -q'^-1 wp f".to_string(),
            equal(&alg.mul(&f, &wp), &alg.mul(&wp, &f).scale(&-qp_inv)),
        ),
        ("f sc = -sc f".to_string(), vanishes(&alg.anticommutator(&f, &c))),
    ])
}

pub fn prop2_3(alg: &GenericAlgebra, m: u32) -> Check {
    let (lhs, rhs) = prod_formula(alg, m);
    equal(&lhs, &rhs)
}

/// `(-1)^t ε(t) ε(t+1) = 1` for `t ≤ max_t`.
pub fn prop2_3_sign(max_t: u32) -> Check {
    let bad = (0..=u64::from(max_t)).find(|&t| {
        let sign = if t % 2 == 0 { 1 } else { -1 };
        sign * epsilon(t) * epsilon(t + 1) != 1
    });
    Check::from_bool(bad.is_none(), || json!({ "t": bad }))
}

/// A nonzero coefficient `c X^i Y^j` with `|i|, |j| ≤ 2`.
pub fn monomial_coeff<R: rand::Rng>(rng: &mut R) -> Scalar {
    let c = sampling::rational(rng);
    Scalar::monomial(c, rng.gen_range(-2..=2), rng.gen_range(-2..=2))
}

/// `φ(xy) = φ(x)φ(y)` on random triples with integer Cartan exponents.
pub fn prop2_4_homomorphism(samples: usize, seed: u64) -> Check {
    let alg = generic_algebra();
    let o = RepOracle::new(alg.params().clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bounds = MonomialBounds {
        max_fe: 2,
        max_cartan2: 4,
        half: false,
    };
    for i in 0..samples {
        let x: El = sampling::element(&mut rng, 3, &bounds, monomial_coeff);
        let y: El = sampling::element(&mut rng, 3, &bounds, monomial_coeff);
        let p = sampling::bpolynomial(&mut rng, monomial_coeff);
        let lhs = o.act_element(&alg.mul(&x, &y), &p).expect("integer exponents");
        let rhs = o
            .act_element(&x, &o.act_element(&y, &p).expect("integer exponents"))
            .expect("integer exponents");
        if lhs != rhs {
            return Check::fail(json!({
                "sample": i,
                "x": element_json(&x),
                "y": element_json(&y),
                "difference": bpoly_json(&(lhs - rhs)),
            }));
        }
    }
    Check::pass()
}

/// `f^a e^b ω^c ω'^d · 1 = X^a Y^b Z^c W^d` on the grid `a, b ≤ 3`,
/// `|c|, |d| ≤ 2`, so distinct monomials have distinct images.
pub fn prop2_4_independence() -> Check {
    let alg = generic_algebra();
    let o = RepOracle::new(alg.params().clone());
    let mut seen = std::collections::BTreeSet::new();
    for a in 0..=3u32 {
        for b in 0..=3u32 {
            for c in -2..=2i32 {
                for d in -2..=2i32 {
                    let m = PbwMonomial::new(a, b, 2 * c, 2 * d);
                    let img = o.act_monomial(&m, &BPolynomial::one()).expect("integer exponents");
                    let want = BPolynomial::monomial(BMonomial::new(a, b, c, d), Scalar::one());
                    if img != want || !seen.insert(BMonomial::new(a, b, c, d)) {
                        return Check::fail(json!({ "monomial": m.to_string(), "image": bpoly_json(&img) }));
                    }
                }
            }
        }
    }
    Check::pass()
}

/// Closed-form reordering against naive rewriting.
pub fn lemma3_1(p: u32, q: u32) -> Check {
    let naive = Algebra::with_strategy(ospkernel_core::algebra::Params::generic(), Strategy::Naive);
    let lhs = reorder_ep_fq(&naive, p, q);
    let rhs = naive.mul(
        &AlgebraElement::monomial(PbwMonomial::new(0, p, 0, 0)),
        &AlgebraElement::monomial(PbwMonomial::new(q, 0, 0, 0)),
    );
    equal(&lhs, &rhs)
}

/// `α_m(i)` is fixed by `ω ↔ ω'`, `r ↔ s`.
pub fn alpha_symmetry(alg: &GenericAlgebra, max_m: u32, max_i: u32) -> Check {
    let (x, y) = (Scalar::x(), Scalar::y());
    for m in 1..=max_m {
        for i in 0..=max_i {
            let a = alpha(alg, m, i);
            let swapped = a.swap_cartan().specialize(&y, &x).expect("monomial substitution");
            if swapped != a {
                return Check::fail(json!({ "m": m, "i": i, "difference": element_json(&(swapped - a)) }));
            }
        }
    }
    Check::pass()
}

/// Leading monomials of random products add componentwise.
pub fn leading_terms<K, C>(alg: &Algebra<K>, samples: usize, seed: u64, mut coeff: C) -> Check
where
    K: Field + Serialize,
    C: FnMut(&mut ChaCha8Rng) -> K,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bounds = MonomialBounds {
        max_fe: 2,
        max_cartan2: 3,
        half: true,
    };
    for i in 0..samples {
        let x = sampling::nonzero_element(&mut rng, 3, &bounds, &mut coeff);
        let y = sampling::nonzero_element(&mut rng, 3, &bounds, &mut coeff);
        let (mx, _) = x.leading().expect("nonzero");
        let (my, _) = y.leading().expect("nonzero");
        let want = PbwMonomial::new(mx.f + my.f, mx.e + my.e, mx.w2 + my.w2, mx.wp2 + my.wp2);
        let got = alg.mul(&x, &y).leading().ok().map(|(m, _)| m);
        if got != Some(want) {
            return Check::fail(json!({
                "sample": i,
                "x": element_json(&x),
                "y": element_json(&y),
                "expected": want.to_string(),
                "leading": got.map(|m| m.to_string()),
            }));
        }
    }
    Check::pass()
}

/// Central element names at generic parameters.
pub const GENERIC_CENTRAL: [&str; 3] = ["w*wp", "sc^2", "C"];

pub fn generic_central(alg: &GenericAlgebra, name: &str) -> Option<Check> {
    let x = match name {
        "w*wp" => alg.cartan(2, 2),
        "sc^2" => {
            let c = scasimir(alg);
            alg.mul(&c, &c)
        }
        "C" => casimir(alg),
        _ => return None,
    };
    Some(Check::from_bool(alg.is_central(&x), || json!({ "element": name })))
}

/// The Dickson parameter labelled `a`.
pub fn dickson_parameter(a: &str) -> Option<Scalar> {
    Some(match a {
        "1" => Scalar::one(),
        "-1" => -Scalar::one(),
        "r" => Scalar::xy(4, 0),
        "generic" => Scalar::xy(1, 1) + Scalar::from_i64(3) * Scalar::xy(0, -2),
        _ => return None,
    })
}

pub const DICKSON_PARAMETERS: [&str; 4] = ["1", "-1", "r", "generic"];

pub fn dickson_closed_rec(a: &Scalar, max_n: u32) -> Check {
    let bad = (0..=max_n).find(|&n| dickson_closed(n, a) != dickson_rec(n, a));
    Check::from_bool(bad.is_none(), || json!({ "n": bad }))
}

pub fn lemma4_2_genfunc(a: &Scalar, order: usize) -> Check {
    Check::from_bool(gen_func_check_d(a, order), || json!({ "order": order }))
}

pub fn t_series(order: usize) -> Check {
    Check::from_bool(t_series_check::<Rational>(order), || json!({ "order": order }))
}

pub fn r_series(order: usize) -> Check {
    Check::from_bool(r_series_check::<Rational>(order), || json!({ "order": order }))
}

pub fn dickson_laurent(max_n: u32) -> Check {
    let bad = (0..=max_n).find(|&n| !dickson_laurent_check::<Rational>(n));
    Check::from_bool(bad.is_none(), || json!({ "n": bad }))
}

pub fn dickson_even_odd(max_m: u32) -> Check {
    let bad = (0..=max_m).find(|&m| dickson_even_odd_check::<Rational>(m) != (true, true));
    Check::from_bool(bad.is_none(), || json!({ "m": bad }))
}

/// `D_m(iu, -1) = i T_m(u, 1)` and `T_m(iu, 1) = i D_m(u, -1)` as
/// printed; the variant uses `i^m`.
pub fn i_twist(m: u32) -> Resolution {
    let t = i_twist_check(m);
    let printed = Check::from_bool(t.factor_i && t.companion_factor_i, || {
        json!({ "factor_i": t.factor_i, "companion_factor_i": t.companion_factor_i })
    });
    resolve(
        printed,
        vec![(
            "factor i^m in place of i",
            Box::new(move || Check::from_bool(t.factor_i_pow_m && t.companion_factor_i_pow_m, || json!(null))),
        )],
    )
}

/// `D_2(b^{-1}vc̃, -1) = C`; the variant compares with `C + 2`.
pub fn dickson_casimir(alg: &GenericAlgebra) -> Resolution {
    let d2 = dickson_of_scasimir(alg, 2);
    let c = casimir(alg);
    let printed = equal(&d2, &c);
    resolve(
        printed,
        vec![(
            "C + 2 in place of C",
            Box::new(|| equal(&d2, &(c.clone() + AlgebraElement::scalar(Scalar::from_i64(2))))),
        )],
    )
}

/// `D_{2m}(b^{-1}vc̃, -1) = T_m(C, 1)`; the variant substitutes `C + 2`.
pub fn dickson_t_casimir(alg: &GenericAlgebra, m: u32) -> Resolution {
    let d = dickson_of_scasimir(alg, 2 * m);
    let c = casimir(alg);
    let t = t_poly::<Scalar>(m);
    let printed = equal(&d, &eval_in_algebra(&t, alg, &c));
    resolve(
        printed,
        vec![(
            "C + 2 in place of C",
            Box::new(|| {
                let c2 = c.clone() + AlgebraElement::scalar(Scalar::from_i64(2));
                let rhs = eval_in_algebra(&t, alg, &c2);
                let central = alg.is_central(&d);
                let eq = equal(&d, &rhs);
                if eq.holds && !central {
                    Check::fail(json!({ "central": false }))
                } else {
                    eq
                }
            }),
        )],
    )
}

