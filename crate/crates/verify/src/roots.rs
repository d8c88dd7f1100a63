//! Checks at root-of-unity specializations: centrality of distinguished
//! elements and the relations between the Scasimir, the Casimir and powers
//! of the generators.
//!
//! Notation: `A = ωω'^{-1}`, `W = b^{-1}vc̃ = (rs)^{-1/4}(ωω')^{-1/2}c̃`,
//! `β = bv = q^{1/2} ω^{1/2}ω'^{-1/2}`, `bv^{-1} = (rs)^{1/4}(ωω')^{1/2}`.

use num_traits::One;
use ospkernel_core::algebra::PbwMonomial;
use ospkernel_core::central::{casimir, epsilon, prod_factor, prod_formula, reduced_scasimir, scasimir};
use ospkernel_core::dickson::{
    dickson_laurent_check, dickson_of_scasimir, eval_in_algebra, r_poly, t_poly, UPolynomial,
};
use ospkernel_core::sampling;
use ospkernel_core::{CycloNumber, Field, Ring, RootOfUnityAlgebra, RootOfUnityElement};
use rand::Rng;
use serde_json::json;

use crate::check::{central_equal, equal, resolve, vanishes, Check, Resolution, Variant};
use crate::generic::leading_terms;
use crate::specialization::Specialization;

type K = CycloNumber;
type El = RootOfUnityElement;

fn term(w2: i32, wp2: i32, c: K) -> El {
    El::term(PbwMonomial::cartan(w2, wp2), c)
}

fn cartan(w2: i32, wp2: i32) -> El {
    El::monomial(PbwMonomial::cartan(w2, wp2))
}

fn fe(m: u32) -> El {
    El::monomial(PbwMonomial::new(m, m, 0, 0))
}

fn int(n: i64) -> K {
    K::from_i64(n)
}

fn sign(k: u32) -> K {
    if k.is_multiple_of(2) {
        K::one()
    } else {
        -K::one()
    }
}

/// The algebra at a specialization with its orders as `i32`.
pub struct RootContext {
    pub spec: Specialization,
    pub alg: RootOfUnityAlgebra,
    ell: i32,
    big_l: u32,
    ell_prime: u32,
}

impl RootContext {
    pub fn new(spec: Specialization) -> Self {
        RootContext {
            alg: spec.algebra(),
            ell: spec.orders.ell as i32,
            big_l: spec.orders.big_l,
            ell_prime: spec.orders.ell_prime,
            spec,
        }
    }

    fn mul(&self, x: &El, y: &El) -> El {
        self.alg.mul(x, y)
    }

    fn product(&self, xs: &[El]) -> El {
        self.alg.product(xs)
    }

    fn q_half_pow(&self, k: i64) -> K {
        self.alg.params().q_half_pow(k)
    }

    /// `s^{-k/4} = Y^{-k}`.
    fn s_quarter_inv(&self, k: i64) -> K {
        self.alg.params().y_pow(-k)
    }

    /// `(rs)^{-1/4}`.
    fn rs_quarter_inv(&self) -> K {
        let p = self.alg.params();
        (p.x.clone() * p.y.clone()).inv().expect("nonzero")
    }

    fn eta_pow(&self, k: u32) -> K {
        self.alg.params().eta.powu(k)
    }

    fn casimir_arg(&self, shifted: bool) -> El {
        let c = casimir(&self.alg);
        if shifted {
            c + El::scalar(int(2))
        } else {
            c
        }
    }

    fn t_of(&self, m: u32, c: &El) -> El {
        eval_in_algebra(&t_poly::<K>(m), &self.alg, c)
    }

    fn r_of(&self, m: u32, c: &El) -> El {
        eval_in_algebra(&r_poly::<K>(m), &self.alg, c)
    }
}

/// Elements listed as central at a root of unity.
pub const ROOT_CENTRAL: [&str; 8] = ["e^L", "f^L", "w^l", "w^-l", "wp^l", "wp^-l", "w*wp", "sc^2"];

pub fn root_central(ctx: &RootContext, name: &str) -> Option<Check> {
    let (l, big_l) = (ctx.ell, ctx.big_l);
    let x = match name {
        "e^L" => El::monomial(PbwMonomial::new(0, big_l, 0, 0)),
        "f^L" => El::monomial(PbwMonomial::new(big_l, 0, 0, 0)),
        "w^l" => cartan(2 * l, 0),
        "w^-l" => cartan(-2 * l, 0),
        "wp^l" => cartan(0, 2 * l),
        "wp^-l" => cartan(0, -2 * l),
        "w*wp" => cartan(2, 2),
        "sc^2" => {
            let c = scasimir(&ctx.alg);
            ctx.mul(&c, &c)
        }
        _ => return None,
    };
    Some(Check::from_bool(ctx.alg.is_central(&x), || {
        json!({
            "element": name,
            "[x, e]": crate::check::element_json(&ctx.alg.commutator(&x, &ctx.alg.e())),
            "[x, f]": crate::check::element_json(&ctx.alg.commutator(&x, &ctx.alg.f())),
        })
    }))
}

fn all_central(ctx: &RootContext, xs: &[(String, El)]) -> Check {
    Check::all(xs.iter().map(|(label, x)| {
        (
            label.clone(),
            Check::from_bool(ctx.alg.is_central(x), || json!({ "central": false })),
        )
    }))
}

/// `ω^{±1}`, `ω'^{±1}` central as listed in the center's generators; the
/// variant uses the `±ℓ`-th powers.
pub fn unit_cartan(ctx: &RootContext) -> Resolution {
    let powers = |k: i32| {
        vec![
            (format!("w^{k}"), cartan(2 * k, 0)),
            (format!("w^-{k}"), cartan(-2 * k, 0)),
            (format!("wp^{k}"), cartan(0, 2 * k)),
            (format!("wp^-{k}"), cartan(0, -2 * k)),
        ]
    };
    let printed = all_central(ctx, &powers(1));
    resolve(
        printed,
        vec![(
            "exponents +-l in place of +-1",
            Box::new(move || all_central(ctx, &powers(ctx.ell))),
        )],
    )
}

/// `f^L e - e f^L = 0` and `e^L f - f e^L = 0`.
pub fn power_commutation(ctx: &RootContext) -> Check {
    let big_l = ctx.big_l;
    let fl = El::monomial(PbwMonomial::new(big_l, 0, 0, 0));
    let el = El::monomial(PbwMonomial::new(0, big_l, 0, 0));
    Check::all([
        ("[f^L, e]".to_string(), vanishes(&ctx.alg.commutator(&fl, &ctx.alg.e()))),
        ("[e^L, f]".to_string(), vanishes(&ctx.alg.commutator(&el, &ctx.alg.f()))),
    ])
}

/// The module basis elements `ω^{1/2}c̃` (`prime = false`) or
/// `ω'^{1/2}c̃` at even `ℓ`; the variant uses the `ℓ/2`-th power.
pub fn basis_centrality(ctx: &RootContext, prime: bool) -> Resolution {
    let sc = scasimir(&ctx.alg);
    let elem = |k: i32| {
        let c = if prime { cartan(0, k) } else { cartan(k, 0) };
        ctx.mul(&c, &sc)
    };
    let printed_elem = elem(1);
    let printed = Check::from_bool(ctx.alg.is_central(&printed_elem), || {
        json!({
            "[x, e]": crate::check::element_json(&ctx.alg.commutator(&printed_elem, &ctx.alg.e())),
        })
    });
    resolve(
        printed,
        vec![(
            "Cartan exponent l/2 in place of 1/2",
            Box::new(move || {
                let x = elem(ctx.ell);
                Check::from_bool(ctx.alg.is_central(&x), || json!(null))
            }),
        )],
    )
}

/// Leading-term multiplicativity with coefficients `±k ζ^j`.
pub fn leading_terms_at(ctx: &RootContext, samples: usize, seed: u64) -> Check {
    let n = ctx.spec.conductor;
    leading_terms(&ctx.alg, samples, seed, |rng| {
        let j = rng.gen_range(0..n);
        CycloNumber::zeta_pow(n, i64::from(j)) * K::from_rational(&sampling::rational(rng))
    })
}

/// Product formula at `m = ℓ'`.
pub fn eq5_1(ctx: &RootContext) -> Check {
    let (lhs, rhs) = prod_formula(&ctx.alg, ctx.ell_prime);
    central_equal(&ctx.alg, &lhs, &rhs)
}

type Inner = UPolynomial<K>;
type Outer = UPolynomial<Inner>;

fn beta(k: i32) -> Inner {
    Inner::monomial(K::one(), k)
}

fn u_term(c: Inner, k: i32) -> Outer {
    Outer::monomial(c, k)
}

fn outer_product(xs: impl IntoIterator<Item = Outer>) -> Outer {
    xs.into_iter().fold(Outer::one(), |a, b| a * b)
}

/// The factorisation of the product at `m = ℓ'` step by step: the per-factor
/// rewriting in the algebra, the Laurent-ring steps in `u` over `K[β^{±1}]`,
/// and the assembled algebra identity.
pub fn eq5_1_chain(ctx: &RootContext) -> Check {
    let alg = &ctx.alg;
    let p = alg.params();
    let lp = ctx.ell_prime;
    let qp = p.qp();
    let qp_pow = |n: u32| qp.powu(n);
    let qp_inv_pow = |n: u32| qp.inv().expect("nonzero").powu(n);

    let w = reduced_scasimir(alg);
    let bv_inv = term(1, 1, p.x.clone() * p.y.clone());
    let beta_el = term(1, -1, p.q_half.clone());
    let beta_inv_el = term(-1, 1, p.q_half_inv.clone());

    let mut steps = Vec::new();

    let per_factor = (0..lp)
        .map(|n| {
            let inner = w.clone() - beta_el.scale(&qp_pow(n)) + beta_inv_el.scale(&qp_inv_pow(n));
            equal(&prod_factor(alg, n), &ctx.mul(&bv_inv, &inner))
        })
        .enumerate()
        .find(|(_, c)| !c.holds);
    steps.push((
        "factor = b v^-1 (W - q'^n bv + q'^-n b^-1 v^-1)".to_string(),
        match per_factor {
            Some((n, c)) => Check::fail(json!({ "n": n, "witness": c.witness })),
            None => Check::pass(),
        },
    ));

    let u = u_term(Inner::one(), 1);
    let u_inv = u_term(Inner::one(), -1);
    let b_k = |n: u32| u_term(beta(1).scale(&qp_pow(n)), 0);
    let b_inv_k = |n: u32| u_term(beta(-1).scale(&qp_inv_pow(n)), 0);
    let lhs = outer_product((0..lp).map(|n| u.clone() - u_inv.clone() - b_k(n) + b_inv_k(n)));
    let split = outer_product((0..lp).map(|n| u_inv.clone() * (u.clone() - b_k(n)) * (u.clone() + b_inv_k(n))));
    steps.push((
        "u - u^-1 - q'^n bv + q'^-n (bv)^-1 = u^-1 (u - q'^n bv)(u + q'^-n (bv)^-1)".to_string(),
        Check::from_bool(lhs == split, || json!({ "difference": format!("{:?}", lhs.clone() - split.clone()) })),
    ));

    let lp_i = lp as i32;
    let beta_lp = u_term(beta(lp_i), 0);
    let minus_beta_inv_lp = u_term(beta(-lp_i).scale(&sign(lp)), 0);
    let u_lp = u_term(Inner::one(), lp_i);
    let factored = u_term(Inner::one(), -lp_i) * (u_lp.clone() - beta_lp.clone()) * (u_lp.clone() - minus_beta_inv_lp.clone());
    steps.push((
        "product of linear factors = u^-l' (u^l' - (bv)^l')(u^l' - (-(bv)^-1)^l')".to_string(),
        Check::from_bool(split == factored, || json!({ "difference": format!("{:?}", split.clone() - factored.clone()) })),
    ));

    let expanded = u_lp + u_term(Inner::constant(sign(lp)), -lp_i) - beta_lp - minus_beta_inv_lp;
    steps.push((
        "expanded = u^l' + (-u^-1)^l' - (bv)^l' - (-(bv)^-1)^l'".to_string(),
        Check::from_bool(factored == expanded, || json!({ "difference": format!("{:?}", factored - expanded.clone()) })),
    ));

    steps.push((
        "D_l'(u - u^-1, -1) = u^l' + (-u^-1)^l'".to_string(),
        Check::from_bool(dickson_laurent_check::<K>(lp), || json!({ "n": lp })),
    ));

    let (prod, _) = prod_formula(alg, lp);
    let beta_pow = alg.pow(&beta_el, lp);
    let beta_inv_pow = alg.pow(&beta_inv_el, lp).scale(&sign(lp));
    let assembled = ctx.mul(
        &alg.pow(&bv_inv, lp),
        &(dickson_of_scasimir(alg, lp) - beta_pow - beta_inv_pow),
    );
    steps.push((
        "product = (b v^-1)^l' (D_l'(W, -1) - (bv)^l' - (-(bv)^-1)^l')".to_string(),
        equal(&prod, &assembled),
    ));

    Check::all(steps)
}

/// `D_{ℓ'}(W, -1) = q^{ℓ'/2}A^{ℓ'/2} + (-1)^{ℓ'}q^{-ℓ'/2}A^{-ℓ'/2}
/// + ε(ℓ')s^{-ℓ'/2}q^{-ℓ'/2}(-η)^{ℓ'}(ωω')^{-ℓ'/2}f^{ℓ'}e^{ℓ'}`.
pub fn eq5_1_dickson(ctx: &RootContext) -> Check {
    let lp = ctx.ell_prime;
    let lp_i = lp as i32;
    let lp_l = i64::from(lp);
    let p = ctx.alg.params();
    let lhs = dickson_of_scasimir(&ctx.alg, lp);
    let last = int(epsilon(lp_l as u64))
        * ctx.s_quarter_inv(2 * lp_l)
        * ctx.q_half_pow(-lp_l)
        * (-p.eta.clone()).powu(lp);
    let rhs = term(lp_i, -lp_i, ctx.q_half_pow(lp_l))
        + term(-lp_i, lp_i, sign(lp) * ctx.q_half_pow(-lp_l))
        + ctx.mul(&term(-lp_i, -lp_i, last), &fe(lp));
    equal(&lhs, &rhs)
}

struct Eq52Form {
    shifted: bool,
    sum_cartan: bool,
}

fn eq5_2_check(ctx: &RootContext, form: Eq52Form) -> Check {
    let big_l = ctx.big_l;
    let li = big_l as i32;
    let half = big_l / 2;
    let c = ctx.casimir_arg(form.shifted);
    let lhs = ctx.t_of(half, &c).scale(&sign(half));
    let coeff = -(sign(half) * ctx.s_quarter_inv(2 * i64::from(big_l)) * ctx.eta_pow(big_l));
    let factor = if form.sum_cartan { cartan(-li, -li) } else { cartan(-li, li) };
    let rhs = -cartan(li, -li) - cartan(-li, li) + ctx.mul(&factor, &fe(big_l)).scale(&coeff);
    central_equal(&ctx.alg, &lhs, &rhs)
}

/// `(-1)^{L/2} T_{L/2}(C,1) = -A^{L/2} - A^{-L/2}
/// - (-1)^{L/2} s^{-L/2} η^L A^{-L/2} f^L e^L`.
pub fn eq5_2(ctx: &RootContext) -> Resolution {
    let printed = eq5_2_check(ctx, Eq52Form { shifted: false, sum_cartan: false });
    let variants: Vec<Variant<'_>> = vec![
        (
            "C + 2 in place of C",
            Box::new(|| eq5_2_check(ctx, Eq52Form { shifted: true, sum_cartan: false })),
        ),
        (
            "(ww')^(-L/2) in place of (ww'^-1)^(-L/2)",
            Box::new(|| eq5_2_check(ctx, Eq52Form { shifted: false, sum_cartan: true })),
        ),
        (
            "C + 2 in place of C and (ww')^(-L/2) in place of (ww'^-1)^(-L/2)",
            Box::new(|| eq5_2_check(ctx, Eq52Form { shifted: true, sum_cartan: true })),
        ),
    ];
    resolve(printed, variants)
}

fn shift_variant<'a, F>(f: F) -> Vec<Variant<'a>>
where
    F: Fn(bool) -> Check + 'a,
{
    vec![("C + 2 in place of C", Box::new(move || f(true)))]
}

/// Shared last term `(-1)^{(L+2)/4} q^{-L/4} s^{-L/4} η^{L/2}`.
fn half_power_coeff(ctx: &RootContext) -> K {
    let big_l = ctx.big_l;
    sign((big_l + 2) / 4) * ctx.q_half_pow(-i64::from(big_l / 2)) * ctx.s_quarter_inv(i64::from(big_l)) * ctx.eta_pow(big_l / 2)
}

fn eq5_3_check(ctx: &RootContext, shifted: bool) -> Check {
    let big_l = ctx.big_l;
    let h = (big_l / 2) as i32;
    let c = ctx.casimir_arg(shifted);
    let lhs = ctx.mul(&reduced_scasimir(&ctx.alg), &ctx.r_of((big_l - 2) / 4, &c));
    let ql = ctx.q_half_pow(i64::from(big_l / 2));
    let ql_inv = ctx.q_half_pow(-i64::from(big_l / 2));
    let rhs = term(h, -h, ql) - term(-h, h, ql_inv)
        + ctx.mul(&cartan(-h, -h), &fe(big_l / 2)).scale(&half_power_coeff(ctx));
    central_equal(&ctx.alg, &lhs, &rhs)
}

/// `W R_{(L-2)/4}(C,1) = q^{L/4}A^{L/4} - q^{-L/4}A^{-L/4}
/// + (-1)^{(L+2)/4} q^{-L/4}s^{-L/4}η^{L/2}(ωω')^{-L/4} f^{L/2}e^{L/2}`.
pub fn eq5_3(ctx: &RootContext) -> Resolution {
    resolve(eq5_3_check(ctx, false), shift_variant(|s| eq5_3_check(ctx, s)))
}

fn eq5_4_check(ctx: &RootContext, shifted: bool) -> Check {
    let big_l = ctx.big_l;
    let li = big_l as i32;
    let h = li / 2;
    let c = ctx.casimir_arg(shifted);
    let lhs = ctx.product(&[
        term(li - 1, -1, ctx.rs_quarter_inv()),
        scasimir(&ctx.alg),
        ctx.r_of((big_l - 2) / 4, &c),
    ]);
    let ql = ctx.q_half_pow(i64::from(big_l / 2));
    let ql_inv = ctx.q_half_pow(-i64::from(big_l / 2));
    let rhs = term(3 * h, -h, ql) - term(h, h, ql_inv)
        + ctx.mul(&fe(big_l / 2), &cartan(h, -h)).scale(&half_power_coeff(ctx));
    central_equal(&ctx.alg, &lhs, &rhs)
}

/// ```text
/// (rs)^{-1/4}ω^{(L-1)/2}ω'^{-1/2}c̃ R_{(L-2)/4}(C,1)
///   = q^{L/4}ω^{3L/4}ω'^{-L/4} - q^{-L/4}ω^{L/4}ω'^{L/4}
///   + (-1)^{(L+2)/4}q^{-L/4}s^{-L/4}η^{L/2} f^{L/2}e^{L/2}ω^{L/4}ω'^{-L/4}
/// ```
pub fn eq5_4(ctx: &RootContext) -> Resolution {
    resolve(eq5_4_check(ctx, false), shift_variant(|s| eq5_4_check(ctx, s)))
}

fn eq5_5_check(ctx: &RootContext, shifted: bool, quarter_subscript: bool) -> Check {
    let big_l = ctx.big_l;
    let li = big_l as i32;
    let h = li / 2;
    let c = ctx.casimir_arg(shifted);
    let sub = if quarter_subscript { (big_l - 2) / 4 } else { (big_l - 2) / 2 };
    let lhs = ctx.product(&[
        term(-1, -(li + 1), ctx.rs_quarter_inv()),
        scasimir(&ctx.alg),
        ctx.r_of(sub, &c),
    ]);
    let ql = ctx.q_half_pow(i64::from(big_l / 2));
    let ql_inv = ctx.q_half_pow(-i64::from(big_l / 2));
    let rhs = term(h, -3 * h, ql) - term(-h, -h, ql_inv)
        + ctx.mul(&fe(big_l / 2), &cartan(-h, -3 * h)).scale(&half_power_coeff(ctx));
    central_equal(&ctx.alg, &lhs, &rhs)
}

/// ```text
/// (rs)^{-1/4}ω^{-1/2}ω'^{-(L+1)/2}c̃ R_{(L-2)/2}(C,1)
///   = q^{L/4}ω^{L/4}ω'^{-3L/4} - q^{-L/4}ω^{-L/4}ω'^{-L/4}
///   + (-1)^{(L+2)/4}q^{-L/4}s^{-L/4}η^{L/2} f^{L/2}e^{L/2}ω^{-L/4}ω'^{-3L/4}
/// ```
pub fn eq5_5(ctx: &RootContext) -> Resolution {
    let variants: Vec<Variant<'_>> = vec![
        ("C + 2 in place of C", Box::new(|| eq5_5_check(ctx, true, false))),
        ("subscript (L-2)/4 in place of (L-2)/2", Box::new(|| eq5_5_check(ctx, false, true))),
        (
            "C + 2 in place of C and subscript (L-2)/4 in place of (L-2)/2",
            Box::new(|| eq5_5_check(ctx, true, true)),
        ),
    ];
    resolve(eq5_5_check(ctx, false, false), variants)
}

/// `s^{-L/2}η^L f^L e^L (ωω')^{-L/2}`.
fn full_power_term(ctx: &RootContext) -> El {
    let big_l = ctx.big_l;
    let li = big_l as i32;
    let k = ctx.s_quarter_inv(2 * i64::from(big_l)) * ctx.eta_pow(big_l);
    ctx.mul(&fe(big_l), &cartan(-li, -li)).scale(&k)
}

fn eq5_6_check(ctx: &RootContext, shifted: bool) -> Check {
    let big_l = ctx.big_l;
    let li = big_l as i32;
    let c = ctx.casimir_arg(shifted);
    let lhs = ctx.t_of(big_l / 2, &c);
    let k = int(2) * sign((big_l + 2) / 4) * ctx.s_quarter_inv(i64::from(big_l)) * ctx.eta_pow(big_l / 2);
    let rhs = -cartan(li, -li) - cartan(-li, li)
        + full_power_term(ctx)
        + ctx.mul(&fe(big_l / 2), &(cartan(-li, 0) + cartan(0, -li))).scale(&k);
    central_equal(&ctx.alg, &lhs, &rhs)
}

/// `T_{L/2}(C,1) = -A^{L/2} - A^{-L/2} + s^{-L/2}η^L f^L e^L (ωω')^{-L/2}
/// + 2(-1)^{(L+2)/4}s^{-L/4}η^{L/2}f^{L/2}e^{L/2}(ω^{-L/2} + ω'^{-L/2})`.
pub fn eq5_6(ctx: &RootContext) -> Resolution {
    resolve(eq5_6_check(ctx, false), shift_variant(|s| eq5_6_check(ctx, s)))
}

fn eq5_7_check(ctx: &RootContext, shifted: bool) -> Check {
    let big_l = ctx.big_l;
    let li = big_l as i32;
    let h = li / 2;
    let c = ctx.casimir_arg(shifted);
    let lhs = ctx.t_of(big_l / 2, &c);
    let k = int(2) * ctx.rs_quarter_inv() * ctx.q_half_pow(i64::from(big_l / 2));
    let mixed = ctx.product(&[
        cartan(h, -h) + cartan(-h, h),
        cartan(-1, -1),
        scasimir(&ctx.alg),
        ctx.r_of((big_l - 2) / 4, &c),
    ]);
    let rhs = cartan(li, -li) + cartan(-li, li) + full_power_term(ctx) + mixed.scale(&k) + El::scalar(int(4));
    central_equal(&ctx.alg, &lhs, &rhs)
}

/// `T_{L/2}(C,1) = A^{L/2} + A^{-L/2} + s^{-L/2}η^L f^L e^L (ωω')^{-L/2}
/// + 2(rs)^{-1/4}q^{L/4}(A^{L/4} + A^{-L/4})(ωω')^{-1/2}c̃ R_{(L-2)/4}(C,1) + 4`.
pub fn eq5_7(ctx: &RootContext) -> Resolution {
    resolve(eq5_7_check(ctx, false), shift_variant(|s| eq5_7_check(ctx, s)))
}

