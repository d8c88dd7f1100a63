use num_traits::{One, Zero};
use ospkernel_core::ring::{rat, rat2};
use ospkernel_core::sampling;
use ospkernel_core::{CycloNumber, Field, Gaussian, LaurentPoly, Rational, Ring, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scalars(seed: u64, n: usize) -> Vec<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| sampling::scalar(&mut rng)).collect()
}

fn cyclo(seed: u64, conductor: u32) -> CycloNumber {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (0..conductor).map(|_| sampling::rational(&mut rng)).collect();
    CycloNumber::from_coeffs(conductor, coeffs)
}

/// `Φ_n` over the integers, from `x^n - 1 = ∏_{d | n} Φ_d`.
fn cyclotomic_integer(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let q = cyclotomic_integer(d);
        let mut quotient = vec![0i64; p.len() - q.len() + 1];
        for k in (0..quotient.len()).rev() {
            let c = p[k + q.len() - 1];
            quotient[k] = c;
            for (j, qj) in q.iter().enumerate() {
                p[k + j] -= c * qj;
            }
        }
        p = quotient;
    }
    p
}

#[test]
fn primitive_root_is_a_root_of_its_cyclotomic_polynomial() {
    for n in [4u32, 6, 8, 12, 24] {
        let z = CycloNumber::zeta(n);
        let value = cyclotomic_integer(n as usize)
            .iter()
            .enumerate()
            .fold(CycloNumber::zero(), |acc, (k, c)| acc + CycloNumber::from_i64(*c) * z.powu(k as u32));
        assert!(value.is_zero(), "Phi_{n}(zeta_{n}) = {value}");
        assert_eq!(z.order(), Some(n));
    }
}

#[test]
fn integer_cyclotomic_polynomials_match_known_values() {
    assert_eq!(cyclotomic_integer(4), vec![1, 0, 1]);
    assert_eq!(cyclotomic_integer(6), vec![1, -1, 1]);
    assert_eq!(cyclotomic_integer(12), vec![1, 0, -1, 0, 1]);
}

#[test]
fn mixed_conductors_lift_to_the_lcm() {
    let i = CycloNumber::zeta(4);
    let w = CycloNumber::zeta(3);
    let prod = i.clone() * w.clone();
    assert_eq!(prod.order(), Some(12));
    assert_eq!(i.powu(2), CycloNumber::from_i64(-1));
}

#[test]
fn gaussian_unit_squares_to_minus_one() {
    let i = Gaussian::<Scalar>::i();
    assert_eq!(i.clone() * i, Gaussian::real(Scalar::from_i64(-1)));
}

#[test]
fn scalar_display_examples() {
    let x = Scalar::x();
    let y = Scalar::y();
    let s = (x.clone() * x.clone() - y.clone()) * (x - y.clone()).inv().unwrap();
    let back: Scalar = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(back, s);
    assert_eq!(Scalar::one().to_string(), "1");
}

fn check_field_axioms<K: Field>(a: &K, b: &K, c: &K) {
    assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
    assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
    assert_eq!(a.clone() - a.clone(), K::zero());
    if !a.is_zero() {
        assert_eq!(a.clone() * a.inv().unwrap(), K::one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_axioms(seed in any::<u64>()) {
        let v = scalars(seed, 3);
        check_field_axioms(&v[0], &v[1], &v[2]);
    }

    #[test]
    fn cyclotomic_field_axioms(seed in any::<u64>(), n in prop::sample::select(vec![4u32, 6, 8, 12, 24])) {
        check_field_axioms(&cyclo(seed, n), &cyclo(seed ^ 1, n), &cyclo(seed ^ 2, n));
    }

    #[test]
    fn canonical_form_is_idempotent(seed in any::<u64>()) {
        for s in scalars(seed, 3) {
            let c = s.canonicalize();
            let cc = c.canonicalize();
            prop_assert_eq!(cc.num(), c.num());
            prop_assert_eq!(cc.den(), c.den());
            prop_assert_eq!(&c, &s);
        }
    }

    #[test]
    fn equal_fractions_share_a_canonical_form(seed in any::<u64>()) {
        let v = scalars(seed, 2);
        let a = &v[0];
        let k = &v[1];
        let scaled = Scalar::new(a.num().mul(k.num()), a.den().mul(k.num())).unwrap();
        let (lhs, rhs) = (scaled.canonicalize(), a.canonicalize());
        prop_assert_eq!(lhs.num(), rhs.num());
        prop_assert_eq!(lhs.den(), rhs.den());
    }

    #[test]
    fn rational_specialization_is_a_ring_homomorphism(seed in any::<u64>(), xn in 1i64..7, yn in 1i64..7) {
        let v = scalars(seed, 2);
        let (x, y) = (rat2(xn, 3), rat2(yn + 7, 5));
        let sp = |s: &Scalar| s.specialize(&x, &y);
        if let (Ok(a), Ok(b)) = (sp(&v[0]), sp(&v[1])) {
            prop_assert_eq!(sp(&(v[0].clone() + v[1].clone())).unwrap(), a.clone() + b.clone());
            prop_assert_eq!(sp(&(v[0].clone() * v[1].clone())).unwrap(), a * b);
        }
    }

    #[test]
    fn cyclotomic_specialization_is_a_ring_homomorphism(seed in any::<u64>(), a in 0i64..24, b in 0i64..24) {
        let v = scalars(seed, 2);
        let (x, y) = (CycloNumber::zeta_pow(24, a), CycloNumber::zeta_pow(24, b));
        let sp = |s: &Scalar| s.specialize(&x, &y);
        if let (Ok(p), Ok(q), Ok(sum), Ok(prod)) =
            (sp(&v[0]), sp(&v[1]), sp(&(v[0].clone() + v[1].clone())), sp(&(v[0].clone() * v[1].clone())))
        {
            prop_assert_eq!(sum, p.clone() + q.clone());
            prop_assert_eq!(prod, p * q);
        }
    }

    #[test]
    fn scalar_json_round_trip(seed in any::<u64>()) {
        for s in scalars(seed, 2) {
            let back: Scalar = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
            prop_assert_eq!(back, s);
        }
    }

    #[test]
    fn cyclotomic_json_round_trip(seed in any::<u64>()) {
        let z = cyclo(seed, 24);
        let back: CycloNumber = serde_json::from_str(&serde_json::to_string(&z).unwrap()).unwrap();
        prop_assert_eq!(back, z);
    }

    #[test]
    fn laurent_product_evaluates_pointwise(seed in any::<u64>()) {
        let v = scalars(seed, 2);
        let (p, q) = (v[0].num(), v[1].num());
        let (x, y) = (rat2(2, 3), rat(5));
        let ev = |l: &LaurentPoly| l.eval::<Rational>(&x, &y).unwrap();
        prop_assert_eq!(ev(&p.mul(q)), ev(p) * ev(q));
    }
}
