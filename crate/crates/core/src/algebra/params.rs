use crate::error::{Error, Result};
use crate::ring::{Field, Rational};
use crate::scalars::{CycloNumber, Scalar};

/// Parameter values derived from the quarter roots `x = r^{1/4}`,
/// `y = s^{1/4}`. The deformation parameter is `q = r^{1/2} s^{-1/2}` with
/// square root `q^{1/2} = x / y`.
#[derive(Clone, Debug)]
pub struct Params<K> {
    pub x: K,
    pub y: K,
    pub r: K,
    pub s: K,
    pub sqrt_r: K,
    pub sqrt_s: K,
    pub q_half: K,
    pub q_half_inv: K,
    pub q: K,
    pub q_inv: K,
    /// `(r - s)^{-1}`.
    pub inv_r_minus_s: K,
    /// `(r^{1/2} + s^{1/2})(r - s)`.
    pub eta: K,
}

impl<K: Field> Params<K> {
    /// Fails when `x` or `y` is zero or `r = s`.
    pub fn new(x: K, y: K) -> Result<Self> {
        let bad = |m: &str| Error::InvalidParams(m.to_string());
        let x_inv = x.inv().ok_or_else(|| bad("r^{1/4} must be nonzero"))?;
        let y_inv = y.inv().ok_or_else(|| bad("s^{1/4} must be nonzero"))?;
        let sqrt_r = x.clone() * x.clone();
        let sqrt_s = y.clone() * y.clone();
        let r = sqrt_r.clone() * sqrt_r.clone();
        let s = sqrt_s.clone() * sqrt_s.clone();
        let inv_r_minus_s = (r.clone() - s.clone()).inv().ok_or_else(|| bad("r = s"))?;
        let q_half = x.clone() * y_inv;
        let q_half_inv = y.clone() * x_inv;
        let q = q_half.clone() * q_half.clone();
        let q_inv = q_half_inv.clone() * q_half_inv.clone();
        let eta = (sqrt_r.clone() + sqrt_s.clone()) * (r.clone() - s.clone());
        Ok(Params {
            x,
            y,
            r,
            s,
            sqrt_r,
            sqrt_s,
            q_half,
            q_half_inv,
            q,
            q_inv,
            inv_r_minus_s,
            eta,
        })
    }

    /// `q^{k/2}`.
    pub fn q_half_pow(&self, k: i64) -> K {
        if k >= 0 {
            self.q_half.powu(k as u32)
        } else {
            self.q_half_inv.powu((-k) as u32)
        }
    }

    pub fn qp(&self) -> K {
        -self.q.clone()
    }

    pub fn x_pow(&self, k: i64) -> K {
        self.x.powi(k).expect("x is invertible")
    }

    pub fn y_pow(&self, k: i64) -> K {
        self.y.powi(k).expect("y is invertible")
    }
}

impl Params<Scalar> {
    /// Indeterminate parameters over Q(X, Y).
    pub fn generic() -> Self {
        Self::new(Scalar::x(), Scalar::y()).expect("generic parameters are valid")
    }
}

impl Params<CycloNumber> {
    /// `X ↦ ζ_n^a`, `Y ↦ ζ_n^b`.
    pub fn roots_of_unity(n: u32, a: i64, b: i64) -> Result<Self> {
        Self::new(CycloNumber::zeta_pow(n, a), CycloNumber::zeta_pow(n, b))
    }
}

impl Params<Rational> {
    pub fn rational(x: Rational, y: Rational) -> Result<Self> {
        Self::new(x, y)
    }
}
