use super::ast::{Expr, GenName, Named};
use crate::algebra::{Algebra, AlgebraElement, PbwMonomial};
use crate::central::{casimir, scasimir};
use crate::error::Result;
use crate::ring::Field;

/// Evaluates an expression to PBW normal form in `alg`.
pub fn evaluate<K: Field>(expr: &Expr, alg: &Algebra<K>) -> Result<AlgebraElement<K>> {
    let p = alg.params();
    Ok(match expr {
        Expr::Lit(v) => alg.scalar(K::from_rational(v)),
        Expr::Gen(g) => AlgebraElement::monomial(match g {
            GenName::E => PbwMonomial::new(0, 1, 0, 0),
            GenName::F => PbwMonomial::new(1, 0, 0, 0),
            GenName::W => PbwMonomial::cartan(2, 0),
            GenName::Wp => PbwMonomial::cartan(0, 2),
            GenName::Wh => PbwMonomial::cartan(1, 0),
            GenName::Wph => PbwMonomial::cartan(0, 1),
        }),
        Expr::Named(n) => match n {
            Named::Sc => scasimir(alg),
            Named::Casimir => casimir(alg),
            Named::Eta => alg.scalar(p.eta.clone()),
            Named::Q => alg.scalar(p.q.clone()),
            Named::Qp => alg.scalar(p.qp()),
            Named::R => alg.scalar(p.r.clone()),
            Named::S => alg.scalar(p.s.clone()),
            Named::SqrtR => alg.scalar(p.sqrt_r.clone()),
            Named::SqrtS => alg.scalar(p.sqrt_s.clone()),
            Named::X => alg.scalar(p.x.clone()),
            Named::Y => alg.scalar(p.y.clone()),
        },
        Expr::Power(base, exp) => match (base.as_ref(), exp.is_half()) {
            (Expr::Gen(GenName::W), true) => alg.cartan(exp.0 as i32, 0),
            (Expr::Gen(GenName::Wp), true) => alg.cartan(0, exp.0 as i32),
            _ => alg.powi(&evaluate(base, alg)?, exp.0 / 2)?,
        },
        Expr::Neg(x) => -evaluate(x, alg)?,
        Expr::Sum(xs) => {
            let mut acc = AlgebraElement::zero();
            for x in xs {
                acc = acc + evaluate(x, alg)?;
            }
            acc
        }
        Expr::Product(xs) => {
            let mut acc = alg.one();
            for x in xs {
                acc = alg.mul(&acc, &evaluate(x, alg)?);
            }
            acc
        }
    })
}
