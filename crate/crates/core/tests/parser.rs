use std::path::PathBuf;

use ospkernel_core::algebra::{Algebra, AlgebraElement, Params};
use ospkernel_core::central::{casimir, prod_formula};
use ospkernel_core::parser::{parse_element, render};
use ospkernel_core::sampling::{self, MonomialBounds};
use ospkernel_core::{GenericAlgebra, GenericElement, RootOfUnityAlgebra, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const BLESS_ENV: &str = "OSPKERNEL_BLESS";

fn generic() -> GenericAlgebra {
    Algebra::new(Params::generic())
}

fn random_generic(seed: u64) -> GenericElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sampling::element(&mut rng, 4, &MonomialBounds::default(), sampling::scalar)
}

/// Compares against a stored rendering; rewrites it when the bless
/// variable is set.
fn check_fixture(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    if std::env::var_os(BLESS_ENV).is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, format!("{actual}\n")).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(expected.trim_end(), actual, "fixture {name} changed; set {BLESS_ENV}=1 to accept");
}

#[test]
fn ef_renders_in_canonical_form() {
    let alg = generic();
    let x = parse_element("e*f", &alg).unwrap();
    assert_eq!(x.to_string(), "- f*e + (r-s)^-1*w - (r-s)^-1*wp");
}

#[test]
fn operator_precedence() {
    let alg = generic();
    let p = |s: &str| parse_element(s, &alg).unwrap();
    assert_eq!(p("-f^2"), p("-(f*f)"));
    assert_eq!(p("e*f + f*e"), p("(w - wp)*(r - s)^-1"));
    assert_eq!(p("wh^2"), p("w"));
    assert_eq!(p("w^(1/2)"), p("wh"));
    assert_eq!(p("X^4"), p("r"));
    assert_eq!(p("3/4*e - e"), p("-1/4*e"));
}

#[test]
fn malformed_input_is_an_error() {
    let alg = generic();
    for src in ["", "e*", "(e", "e^", "e^(1/2)", "foo", "1/0", "e f", "w^x", ")"] {
        assert!(parse_element(src, &alg).is_err(), "{src:?} parsed");
    }
}

#[test]
fn casimir_expansion_is_stable() {
    check_fixture("casimir.txt", &casimir(&generic()).to_string());
}

#[test]
fn product_formula_at_three_is_stable() {
    let (lhs, rhs) = prod_formula(&generic(), 3);
    assert_eq!(lhs, rhs);
    check_fixture("prod_formula_m3.txt", &lhs.to_string());
}

#[test]
fn two_hundred_renderings_parse_back() {
    let alg = generic();
    for seed in 0..200 {
        let x = random_generic(seed);
        assert_eq!(parse_element(&render(&x), &alg).unwrap(), x, "seed {seed}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parser_never_panics(src in "[efwpXYCsqrth0-9 ()*^+/_-]{0,24}") {
        let _ = parse_element(&src, &generic());
    }

    #[test]
    fn element_json_round_trip(seed in any::<u64>()) {
        let x = random_generic(seed);
        let back: GenericElement = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn specialization_commutes_with_evaluation(seed in any::<u64>()) {
        let alg = generic();
        let root: RootOfUnityAlgebra = Algebra::new(Params::roots_of_unity(24, 0, 3).unwrap());
        let exprs = ["e*f", "sc^2", "w*e*wp^-1", "f^2*e + X*e", "C - 2*f*e"];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = exprs[rand::Rng::gen_range(&mut rng, 0..exprs.len())];
        let b = exprs[rand::Rng::gen_range(&mut rng, 0..exprs.len())];
        let src = format!("({a})*({b})");
        let p = root.params();
        let generic_then_specialize = parse_element(&src, &alg).unwrap().specialize(&p.x, &p.y).unwrap();
        prop_assert_eq!(generic_then_specialize, parse_element(&src, &root).unwrap());
    }
}

#[test]
fn scalar_identifiers_agree() {
    let alg = generic();
    let p = |s: &str| parse_element(s, &alg).unwrap();
    assert_eq!(p("sqrt_r^2"), p("r"));
    assert_eq!(p("q"), p("X^2*Y^-2"));
    assert_eq!(p("q"), AlgebraElement::scalar(Scalar::xy(2, -2)));
}
